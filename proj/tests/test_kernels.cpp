// Parallel sweeps against the serial reference and the brute-force oracle.
#include <doctest.h>

#include <random>
#include <stdexcept>

#include "oracles.hpp"
#include "sdc/code.hpp"
#include "sdc/fixtures.hpp"
#include "sdc/kernels.hpp"
#include "sdc/reference.hpp"

using namespace sdc;

namespace {

std::vector<std::uint64_t> oracle_histogram(const BitMatrix& m) {
  std::vector<std::uint64_t> h(m.ncols() + 1, 0);
  for (auto w : oracle::span_words(oracle::to_masks(m))) ++h[static_cast<std::size_t>(std::popcount(w))];
  return h;
}

}  // namespace

TEST_CASE("every split width and thread count gives the serial answer") {
  std::mt19937_64 rng(17);
  for (int t = 0; t < 40; ++t) {
    const std::size_t n = 5 + rng() % 60;
    const auto g = LinearCode::from_generator(oracle::random_matrix(rng, 1 + rng() % 12, n)).generator();
    const auto rows = g.rows();
    const auto serial_hist = reference::gray_weight_histogram(rows, n);
    const auto serial_min = reference::gray_min_nonzero_weight(rows, n);
    CHECK(serial_hist == oracle_histogram(g));
    CHECK(serial_hist == reference::naive_weight_histogram(rows, n));
    CHECK(serial_min == reference::naive_min_nonzero_weight(rows, n));
    for (unsigned split = 0; split <= std::min<std::size_t>(rows.size(), 5); ++split)
      for (unsigned threads : {1u, 3u}) {
        const kernels::SweepConfig cfg{threads, split};
        CHECK(kernels::weight_histogram(rows, BitVector(n), cfg) == serial_hist);
        CHECK(kernels::min_nonzero_weight(rows, BitVector(n), cfg) == serial_min);
      }
  }
}

TEST_CASE("multi-word lengths") {
  std::mt19937_64 rng(23);
  for (std::size_t n : {64u, 65u, 128u, 129u, 200u}) {
    const auto g = LinearCode::from_generator(oracle::random_matrix(rng, 10, n)).generator();
    const auto serial = reference::naive_weight_histogram(g.rows(), n);
    CHECK(kernels::weight_histogram(g.rows(), BitVector(n), {4, 3}) == serial);
    CHECK(kernels::min_nonzero_weight(g.rows(), BitVector(n), {2, std::nullopt}) ==
          reference::naive_min_nonzero_weight(g.rows(), n));
  }
}

TEST_CASE("offset sweeps visit a coset") {
  const auto g3 = fixture("G3");
  const auto cmax = g3.slice_rows(0, 11);
  const auto gamma = g3.row(11);
  // The coset of C_max through the last row of G3 holds its weight-2 word.
  for (unsigned split : {0u, 4u}) {
    const kernels::SweepConfig cfg{2, split};
    const auto h = kernels::weight_histogram(cmax.rows(), gamma, cfg);
    std::uint64_t total = 0;
    for (auto c : h) total += c;
    CHECK(total == 2048);
    CHECK(h[0] == 0);
    CHECK(kernels::min_nonzero_weight(cmax.rows(), gamma, cfg) == 2);
    CHECK(kernels::min_weight_word(cmax.rows(), gamma, cfg) == gamma);
  }
}

TEST_CASE("min_weight_word breaks ties lexicographically") {
  // Span of 1100 and 0011 shifted by 1010: {1010, 0110, 1001, 0101}, all weight 2.
  const BitMatrix basis(4, {BitVector::from_string("1100"), BitVector::from_string("0011")});
  for (unsigned split : {0u, 1u, 2u})
    CHECK(kernels::min_weight_word(basis.rows(), BitVector::from_string("1010"), {2, split}) ==
          BitVector::from_string("0101"));
}

TEST_CASE("empty basis visits only the offset") {
  const std::vector<BitVector> none;
  const auto off = BitVector::from_string("0110");
  CHECK(kernels::weight_histogram(none, off, {}) == std::vector<std::uint64_t>{0, 0, 1, 0, 0});
  CHECK(kernels::min_nonzero_weight(none, BitVector(4), {}) == 0);
  CHECK_THROWS_AS(kernels::min_nonzero_weight(none, off, {1, 1u}), std::invalid_argument);
}
