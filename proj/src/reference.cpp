#include "sdc/reference.hpp"

#include <limits>
#include <stdexcept>

#include "sweep.hpp"

namespace sdc::reference {

std::size_t gray_min_nonzero_weight(std::span<const BitVector> basis, std::size_t n) {
  const detail::Packed p = detail::pack(basis, BitVector(n));
  std::size_t best = std::numeric_limits<std::size_t>::max();
  detail::sweep_chunk<0>(p, p.k, 0, [&](const word_t* w) {
    const std::size_t wt = detail::popcount_words<0>(w, p.nw);
    if (wt != 0 && wt < best) best = wt;
  });
  return best == std::numeric_limits<std::size_t>::max() ? 0 : best;
}

std::vector<std::uint64_t> gray_weight_histogram(std::span<const BitVector> basis, std::size_t n) {
  const detail::Packed p = detail::pack(basis, BitVector(n));
  std::vector<std::uint64_t> hist(n + 1, 0);
  detail::sweep_chunk<0>(p, p.k, 0, [&](const word_t* w) { ++hist[detail::popcount_words<0>(w, p.nw)]; });
  return hist;
}

namespace {

template <class Visit>
void binary_counter(std::span<const BitVector> basis, std::size_t n, Visit&& visit) {
  if (basis.size() >= 63) throw std::invalid_argument("naive enumeration: dimension too large");
  const std::uint64_t count = std::uint64_t{1} << basis.size();
  for (std::uint64_t coeffs = 0; coeffs < count; ++coeffs) {
    BitVector word(n);
    for (std::size_t i = 0; i < basis.size(); ++i)
      if ((coeffs >> i) & 1u) word ^= basis[i];
    visit(word);
  }
}

}  // namespace

std::size_t naive_min_nonzero_weight(std::span<const BitVector> basis, std::size_t n) {
  std::size_t best = 0;
  binary_counter(basis, n, [&](const BitVector& w) {
    const std::size_t wt = w.weight();
    if (wt != 0 && (best == 0 || wt < best)) best = wt;
  });
  return best;
}

std::vector<std::uint64_t> naive_weight_histogram(std::span<const BitVector> basis, std::size_t n) {
  std::vector<std::uint64_t> hist(n + 1, 0);
  binary_counter(basis, n, [&](const BitVector& w) { ++hist[w.weight()]; });
  return hist;
}

}  // namespace sdc::reference
