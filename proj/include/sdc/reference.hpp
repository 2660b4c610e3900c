// Serial reference implementations used by the test suites and benchmarks.
//
// gray_* are the unpartitioned single-thread sweeps the parallel kernels are
// checked against. naive_* recompute every word from its coefficient vector
// with a binary counter and share no code with the Gray-code path.
#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "sdc/gf2.hpp"

namespace sdc::reference {

std::size_t gray_min_nonzero_weight(std::span<const BitVector> basis, std::size_t n);
std::vector<std::uint64_t> gray_weight_histogram(std::span<const BitVector> basis, std::size_t n);

std::size_t naive_min_nonzero_weight(std::span<const BitVector> basis, std::size_t n);
std::vector<std::uint64_t> naive_weight_histogram(std::span<const BitVector> basis, std::size_t n);

}  // namespace sdc::reference
