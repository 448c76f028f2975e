#include "eplab/cmat_io.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <vector>

namespace eplab {
namespace {

std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    const std::size_t start = i;
    while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    if (i > start) out.push_back(line.substr(start, i - start));
  }
  return out;
}

double parse_real(std::string_view tok, std::size_t line) {
  if (!tok.empty() && tok.front() == '+') tok.remove_prefix(1);
  double x = 0;
  const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), x);
  if (ec != std::errc() || ptr != tok.data() + tok.size() || tok.empty()) {
    throw ParseError("invalid number '" + std::string(tok) + "'", line);
  }
  if (!std::isfinite(x)) throw ParseError("non-finite value '" + std::string(tok) + "'", line);
  return x;
}

Complex parse_field(std::string_view tok, std::size_t line) {
  const auto colon = tok.find(':');
  if (colon == std::string_view::npos) return {parse_real(tok, line), 0.0};
  return {parse_real(tok.substr(0, colon), line), parse_real(tok.substr(colon + 1), line)};
}

Index parse_count(std::string_view tok, std::size_t line) {
  long long v = -1;
  const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc() || ptr != tok.data() + tok.size() || v < 0) {
    throw ParseError("invalid dimension '" + std::string(tok) + "'", line);
  }
  return static_cast<Index>(v);
}

}  // namespace

CMatrix parse_cmat(std::istream& in) {
  std::string raw;
  std::size_t line_no = 0;
  bool have_header = false;
  Index rows = 0, cols = 0, row = 0;
  CMatrix m;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string_view line(raw);
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    const auto fields = split_fields(line);
    if (fields.empty()) continue;

    if (!have_header) {
      if (fields.size() != 4 || fields[0] != "cmat") throw ParseError("expected header 'cmat 1 <rows> <cols>'", line_no);
      if (fields[1] != "1") throw ParseError("unsupported cmat version '" + std::string(fields[1]) + "'", line_no);
      rows = parse_count(fields[2], line_no);
      cols = parse_count(fields[3], line_no);
      m.resize(rows, cols);
      have_header = true;
      if (cols == 0) row = rows;
      continue;
    }
    if (row == rows) throw ParseError("more than " + std::to_string(rows) + " data rows", line_no);
    if (static_cast<Index>(fields.size()) != cols) {
      throw ParseError("expected " + std::to_string(cols) + " fields, found " + std::to_string(fields.size()),
                       line_no);
    }
    for (Index j = 0; j < cols; ++j) m(row, j) = parse_field(fields[static_cast<std::size_t>(j)], line_no);
    ++row;
  }
  if (!have_header) throw ParseError("missing 'cmat' header", line_no + 1);
  if (row != rows) {
    throw ParseError("expected " + std::to_string(rows) + " data rows, found " + std::to_string(row), line_no + 1);
  }
  return m;
}

CMatrix parse_cmat(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_cmat(in);
}

CMatrix read_cmat(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path.string() + "'");
  return parse_cmat(in);
}

std::string format_double(double x) {
  if (std::isnan(x)) return "nan";
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, ptr);
}

void write_cmat(std::ostream& out, const CMatrix& m) {
  out << "cmat 1 " << m.rows() << ' ' << m.cols() << '\n';
  for (Index i = 0; i < m.rows(); ++i) {
    for (Index j = 0; j < m.cols(); ++j) {
      if (j) out << ' ';
      const Complex z = m(i, j);
      out << format_double(z.real());
      if (z.imag() != 0.0) out << ':' << format_double(z.imag());
    }
    out << '\n';
  }
}

std::string format_cmat(const CMatrix& m) {
  std::ostringstream out;
  write_cmat(out, m);
  return out.str();
}

void write_cmat(const std::filesystem::path& path, const CMatrix& m) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot write '" + path.string() + "'");
  write_cmat(out, m);
}

}  // namespace eplab
