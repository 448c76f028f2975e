#include <gtest/gtest.h>

#include <filesystem>

#include "eplab/cmat_io.hpp"
#include "eplab/generators.hpp"
#include "test_support.hpp"

using namespace eplab;
using namespace eplab::testing;

namespace {

std::size_t parse_error_line(std::string_view text) {
  try {
    parse_cmat(text);
  } catch (const ParseError& e) {
    return e.line();
  }
  ADD_FAILURE() << "no ParseError for: " << text;
  return 0;
}

}  // namespace

TEST(Cmat, ParsesRealAndComplexEntries) {
  const CMatrix m = parse_cmat(
      "# comment\n"
      "cmat 1 2 2\n"
      "\n"
      "1 0:1   # trailing\n"
      "-2.5e1 +3:-4\n");
  EXPECT_EQ(m, mat({{1.0, 1i}, {-25.0, Complex(3.0, -4.0)}}));
}

TEST(Cmat, EmptyMatrix) {
  const CMatrix m = parse_cmat("cmat 1 0 3\n");
  EXPECT_EQ(m.rows(), 0);
  EXPECT_EQ(m.cols(), 3);
  EXPECT_EQ(parse_cmat("cmat 1 2 0\n").rows(), 2);
  EXPECT_EQ(parse_error_line("cmat 1 2 0\n1\n"), 2u);
}

TEST(Cmat, ErrorsCarryLineNumbers) {
  EXPECT_EQ(parse_error_line("cmat 2 1 1\n1\n"), 1u);
  EXPECT_EQ(parse_error_line("# x\nmat 1 1 1\n1\n"), 2u);
  EXPECT_EQ(parse_error_line("cmat 1 1 2\n1\n"), 2u);
  EXPECT_EQ(parse_error_line("cmat 1 2 1\n1\nabc\n"), 3u);
  EXPECT_EQ(parse_error_line("cmat 1 1 1\nnan\n"), 2u);
  EXPECT_EQ(parse_error_line("cmat 1 1 1\n1:inf\n"), 2u);
  EXPECT_EQ(parse_error_line("cmat 1 1 1\n1\n2\n"), 3u);
  EXPECT_EQ(parse_error_line("cmat 1 2 1\n1\n"), 3u);
  EXPECT_EQ(parse_error_line(""), 1u);
  EXPECT_EQ(parse_error_line("cmat 1 -1 2\n"), 1u);
}

TEST(Cmat, ErrorTypes) {
  EXPECT_THROW(parse_cmat("cmat 1 1 1\nx\n"), ParseError);
  EXPECT_THROW(read_cmat("/nonexistent/eplab.cmat"), InputError);
}

TEST(Cmat, RoundTripIsExact) {
  Rng rng(61);
  for (int t = 0; t < 50; ++t) {
    const CMatrix m = complex_gaussian(rng.uniform_index(0, 6), rng.uniform_index(0, 6), rng);
    EXPECT_EQ(parse_cmat(format_cmat(m)), m);
  }
}

TEST(Cmat, FileRoundTrip) {
  const auto path = std::filesystem::temp_directory_path() / "eplab_test_roundtrip.cmat";
  const CMatrix m = mat({{0.1, 1e-300}, {Complex(0, 1e300), -0.0}});
  write_cmat(path, m);
  EXPECT_EQ(read_cmat(path), m);
  std::filesystem::remove(path);
}

TEST(Cmat, FormatDouble) {
  EXPECT_EQ(format_double(0.1), "0.1");
  EXPECT_EQ(format_double(1.0), "1");
  EXPECT_EQ(format_double(std::nan("")), "nan");
}
