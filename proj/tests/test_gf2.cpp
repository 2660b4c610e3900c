#include <doctest.h>

#include <random>
#include <stdexcept>

#include "oracles.hpp"
#include "sdc/fixtures.hpp"
#include "sdc/gf2.hpp"

using namespace sdc;

TEST_CASE("weight") {
  CHECK(weight(BitVector(24)) == 0);
  CHECK(weight(BitVector::ones(24)) == 24);
  CHECK(weight(BitVector::ones(130)) == 130);
  CHECK(weight(fixture("G1").row(0)) == 12);
  CHECK(fixture("G1").row(0).to_string() == "100000000001111111111001");
}

TEST_CASE("storage beyond the length stays zero") {
  const BitVector v = BitVector::ones(70);
  CHECK(v.words()[1] == 0x3Fu);
  CHECK(add(v, v).is_zero());
}

TEST_CASE("mu, add and dot") {
  const auto a = BitVector::from_string("110100");
  const auto b = BitVector::from_string("010110");
  CHECK(mu(a, BitVector(6)) == 0);
  CHECK(mu(a, a) == weight(a));
  CHECK(mu(a, b) == 2);

  CHECK(add(a, BitVector(6)) == a);
  CHECK(add(a, a).is_zero());
  const auto s = add(BitVector::from_string("1100"), BitVector::from_string("0110"));
  CHECK(s == BitVector::from_string("1010"));
  CHECK(weight(s) == 2);

  CHECK(dot(a, BitVector(6)) == 0);
  CHECK(dot(BitVector::from_string("1110"), BitVector::from_string("0111")) == 0);
  const auto c = BitVector::from_string("1011000");
  CHECK(dot(BitVector::ones(7), c) == static_cast<int>(weight(c) % 2));
}

TEST_CASE("length mismatches are rejected") {
  const BitVector a(4), b(5);
  CHECK_THROWS_AS(mu(a, b), std::invalid_argument);
  CHECK_THROWS_AS(add(a, b), std::invalid_argument);
  CHECK_THROWS_AS(dot(a, b), std::invalid_argument);
  CHECK_THROWS_AS(BitVector(0), std::invalid_argument);
  CHECK_THROWS_AS(BitVector(kMaxLength + 1), std::invalid_argument);
  BitMatrix m(4);
  CHECK_THROWS_AS(m.push_back(b), std::invalid_argument);
}

TEST_CASE("lex_less follows the text rendering") {
  CHECK(lex_less(BitVector::from_string("0110"), BitVector::from_string("1000")));
  CHECK_FALSE(lex_less(BitVector::from_string("1000"), BitVector::from_string("0110")));
  CHECK_FALSE(lex_less(BitVector::from_string("0110"), BitVector::from_string("0110")));
  auto a = BitVector(100), b = BitVector(100);
  a.set(99);
  b.set(70);
  CHECK(lex_less(a, b));
}

TEST_CASE("weight-sum formula and mu addition lemma on random vectors") {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 2000; ++t) {
    const std::size_t n = 8 + rng() % 121;
    const auto a = oracle::random_vector(rng, n), b = oracle::random_vector(rng, n), c = oracle::random_vector(rng, n);
    CHECK(weight(add(a, b)) + 2 * mu(a, b) == weight(a) + weight(b));
    CHECK(mu(add(a, b), c) + mu(a, b) == mu(b, c) + mu(a, add(b, c)));
  }
}

TEST_CASE("rref examples") {
  const auto id = BitMatrix::identity(12);
  const auto r = rref(id);
  CHECK(r.matrix == id);
  CHECK(r.rank == 12);

  const auto g1 = fixture("G1");
  CHECK(oracle::span_dimension(oracle::to_masks(g1)) == 12);
  CHECK(rref(g1).rank == 12);

  const auto row = BitVector::from_string("0110101");
  const auto dup = rref(BitMatrix(7, {row, row}));
  CHECK(dup.rank == 1);
  CHECK(dup.matrix.row(0) == row);
  CHECK(dup.pivots == std::vector<std::size_t>{1});
}

TEST_CASE("rref properties on random matrices") {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 200; ++t) {
    const std::size_t n = 1 + rng() % 14;
    const auto m = oracle::random_matrix(rng, rng() % 10, n);
    const auto r = rref(m);
    CHECK(rref(r.matrix).matrix == r.matrix);
    CHECK(oracle::span_set(oracle::to_masks(r.matrix)) == oracle::span_set(oracle::to_masks(m)));
    for (std::size_t i = 0; i + 1 < r.pivots.size(); ++i) CHECK(r.pivots[i] < r.pivots[i + 1]);
    for (std::size_t i = 0; i < r.rank; ++i)
      for (std::size_t j = 0; j < r.rank; ++j) CHECK(r.matrix.row(j).get(r.pivots[i]) == (i == j));
  }
}

TEST_CASE("kernel_basis examples") {
  CHECK(kernel_basis(BitMatrix(9, {BitVector(9)})).nrows() == 9);
  CHECK(kernel_basis(BitMatrix(9)).nrows() == 9);
  CHECK(kernel_basis(BitMatrix::identity(9)).empty());
  CHECK(kernel_basis(BitMatrix::identity(9)).ncols() == 9);

  const auto g1 = fixture("G1");
  CHECK(rref(kernel_basis(g1)).matrix == rref(g1).matrix);
}

TEST_CASE("kernel_basis properties on random matrices") {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 150; ++t) {
    const std::size_t n = 1 + rng() % 12;
    const auto m = oracle::random_matrix(rng, rng() % 8, n);
    const auto k = kernel_basis(m);
    CHECK(rref(m).rank + k.nrows() == n);
    for (const auto& x : k.rows())
      for (const auto& r : m.rows()) CHECK(dot(x, r) == 0);
    CHECK(oracle::span_set(oracle::to_masks(k)) == oracle::orthogonal_complement(oracle::to_masks(m), n));
  }
}

TEST_CASE("multiply_transpose") {
  const auto g1 = fixture("G1");
  const auto p = multiply_transpose(g1, g1);
  CHECK(p.nrows() == 12);
  for (const auto& r : p.rows()) CHECK(r.is_zero());
  const auto id = BitMatrix::identity(5);
  CHECK(multiply_transpose(id, id) == id);
}
