#pragma once

#include <iosfwd>
#include <string>

#include "sqwva/cli/run.hpp"
#include "sqwva/errors.hpp"

namespace sqwva::cli {

class IoError : public Error {
 public:
  using Error::Error;
};

// Numbers are written with 12 significant digits.
std::string format_number(double v);

// Table results as one header line plus rows; scalar-only results as
// `quantity,value` rows.
void emit_csv(const RunResult& r, std::ostream& out);
void emit_json(const RunResult& r, std::ostream& out);

std::string to_csv(const RunResult& r);
std::string to_json(const RunResult& r);
RunResult from_json(const std::string& text);

// Writes to `path` (throws IoError on failure).
void write_file(const std::string& path, const std::string& contents);

}  // namespace sqwva::cli
