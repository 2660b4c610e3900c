#include <doctest.h>

#include <random>
#include <sstream>
#include <stdexcept>

#include "oracles.hpp"
#include "sdc/fixtures.hpp"
#include "sdc/matrix_io.hpp"

using namespace sdc;

namespace {

ParseError parse_error(std::string_view text) {
  try {
    parse_matrix(text);
  } catch (const ParseError& e) {
    return e;
  }
  FAIL("no ParseError for: " << text);
  return ParseError("", 0);
}

}  // namespace

TEST_CASE("a lone two-integer line is a data row") {
  const auto m = parse_matrix("1 1\n");
  CHECK(m.nrows() == 1);
  CHECK(m.ncols() == 2);
  CHECK(m.row(0) == BitVector::from_string("11"));
}

TEST_CASE("headers") {
  const auto m = parse_matrix("4 2\n1100\n0011\n");
  CHECK(m.nrows() == 2);
  CHECK(m.ncols() == 4);

  const auto spaced = parse_matrix("  4 2\n1 1 0 0\n0 0 1 1  \n\n\n");
  CHECK(spaced == m);

  const auto empty = parse_matrix("24 0\n");
  CHECK(empty.nrows() == 0);
  CHECK(empty.ncols() == 24);

  // Inconsistent with the rows that follow, so it is data.
  const auto two = parse_matrix("1 0\n1 1\n");
  CHECK(two.nrows() == 2);
  CHECK(two.ncols() == 2);
}

TEST_CASE("fixture text parses verbatim") {
  for (const auto& name : fixture_names()) {
    const auto m = parse_matrix(fixture_text(name));
    CHECK(m.nrows() == 12);
    CHECK(m.ncols() == 24);
    CHECK(m == fixture(name));
  }
  CHECK(fixture("G1").row(0).to_string() == "100000000001111111111001");
}

TEST_CASE("parse errors carry positions") {
  const auto ragged = parse_error("10\n1\n");
  CHECK(ragged.line() == 2);

  const auto bad = parse_error("0110\n01x0\n");
  CHECK(bad.line() == 2);
  CHECK(bad.column() == 3);

  CHECK_THROWS_AS(parse_matrix("4 3\n1100\n0011\n"), ParseError);
  CHECK_THROWS_AS(parse_matrix(""), ParseError);
  CHECK_THROWS_AS(parse_matrix("  \n\n"), ParseError);
  CHECK_THROWS_AS(parse_matrix("1100\n\n0011\n"), ParseError);
  CHECK_THROWS_AS(parse_matrix("4 x\n1100\n"), ParseError);
}

TEST_CASE("read_matrix from a stream") {
  std::istringstream in("3 1\n101\n");
  CHECK(read_matrix(in) == BitMatrix(3, {BitVector::from_string("101")}));
}

TEST_CASE("serialize then parse round-trips") {
  std::mt19937_64 rng(41);
  for (int t = 0; t < 200; ++t) {
    const std::size_t n = 1 + rng() % 100;
    const auto m = oracle::random_matrix(rng, rng() % 6, n);
    for (bool spaced : {false, true}) {
      const auto text = serialize_matrix(m, spaced);
      const auto back = parse_matrix(text);
      CHECK(back == m);
      CHECK(back.ncols() == n);
    }
  }
  CHECK(serialize_matrix(BitMatrix(3, {BitVector::from_string("101")})) == "3 1\n101\n");
  CHECK(serialize_matrix(BitMatrix(3, {BitVector::from_string("101")}), true) == "3 1\n1 0 1\n");
}
