// Gray-code sweeps over the words of an affine GF(2) subspace offset + span(basis).
//
// The 2^k coefficient vectors are split into 2^g chunks by fixing the top g
// coefficients; each chunk is swept independently with its own running word
// (one XOR per step), so chunks run in parallel under OpenMP. Results are
// merged by minimum or by elementwise sum and do not depend on thread count.
#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "sdc/gf2.hpp"

namespace sdc::kernels {

struct SweepConfig {
  unsigned threads = 1;
  /// Number of fixed top coefficients; std::nullopt picks one from `threads`.
  std::optional<unsigned> split_bits;
};

/// Smallest nonzero weight among the words of offset + span(basis).
/// Returns 0 when every word is zero. `offset` fixes the length n and may be
/// the zero vector; every basis row must have the same length.
std::size_t min_nonzero_weight(std::span<const BitVector> basis, const BitVector& offset, const SweepConfig& cfg);

/// histogram[w] = number of words of weight w, for w in [0, n].
std::vector<std::uint64_t> weight_histogram(std::span<const BitVector> basis, const BitVector& offset,
                                            const SweepConfig& cfg);

/// The minimum-weight word of offset + span(basis); ties go to the word that
/// is smallest under lex_less.
BitVector min_weight_word(std::span<const BitVector> basis, const BitVector& offset, const SweepConfig& cfg);

/// Split width used for a given dimension and thread count.
unsigned default_split_bits(std::size_t k, unsigned threads);

}  // namespace sdc::kernels
