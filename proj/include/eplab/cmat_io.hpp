#pragma once

// "CMAT v1" text matrices:
//
//   cmat 1 <rows> <cols>
//   <rows lines of <cols> fields, each `re` or `re:im`>
//
// Blank lines and `#` comments are ignored.

#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>

#include "eplab/linalg.hpp"

namespace eplab {

CMatrix parse_cmat(std::istream& in);
CMatrix parse_cmat(std::string_view text);
CMatrix read_cmat(const std::filesystem::path& path);

/// Shortest round-trip decimal form; imaginary parts omitted when zero.
void write_cmat(std::ostream& out, const CMatrix& m);
std::string format_cmat(const CMatrix& m);
void write_cmat(const std::filesystem::path& path, const CMatrix& m);

/// Shortest decimal string that parses back to the same double.
std::string format_double(double x);

}  // namespace eplab
