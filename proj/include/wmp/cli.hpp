#pragma once

// Matrix file format and the wmpinv command line.
//
//   # comment
//   matrix 2 2
//   s + 1; 1/s
//   0; -2+s^4
//
// Entries are separated by ';' so that they may contain spaces.

#include "wmp/rf_matrix.hpp"

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace wmp {

/// Parses one entry:
///   expr   := term (('+'|'-') term)*
///   term   := factor (('*'|'/') factor)*
///   factor := atom ('^' unsigned-integer)?
///   atom   := 's' | unsigned-integer | '(' expr ')' | '-' factor
/// The Unicode minus sign is accepted for '-'. ParseError offsets are 0-based bytes.
RatFun parse_entry(std::string_view text);

/// ParseError carries the 1-based row/column of the offending entry.
RfMatrix parse_matrix_file(std::string_view text);

std::string format_matrix(const RfMatrix& a);

/// argv[0] is the program name. Exit codes: 0 ok, 1 verification or cross-path
/// failure, 2 input error, 3 singular or degenerate weights.
int run_command(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err);

} // namespace wmp
