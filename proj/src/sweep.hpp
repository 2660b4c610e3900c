// Internal Gray-code sweep shared by the parallel kernels and the serial reference.
#pragma once

#include <array>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <type_traits>
#include <vector>

#include "sdc/gf2.hpp"

namespace sdc::detail {

/// Basis rows and offset flattened into contiguous word arrays.
struct Packed {
  std::size_t n = 0;
  std::size_t nw = 0;
  std::size_t k = 0;
  std::vector<word_t> rows;  // k * nw
  std::vector<word_t> offset;
};

inline Packed pack(std::span<const BitVector> basis, const BitVector& offset) {
  if (offset.empty()) throw std::invalid_argument("sweep: offset must carry the word length");
  if (basis.size() >= 63) throw std::invalid_argument("sweep: basis dimension too large");
  Packed p;
  p.n = offset.size();
  p.nw = words_for(p.n);
  p.k = basis.size();
  p.offset.assign(offset.words().begin(), offset.words().end());
  p.rows.reserve(p.k * p.nw);
  for (const auto& r : basis) {
    if (r.size() != p.n) throw std::invalid_argument("sweep: basis row length differs from offset length");
    p.rows.insert(p.rows.end(), r.words().begin(), r.words().end());
  }
  return p;
}

/// NW > 0 fixes the word count at compile time; NW == 0 uses p.nw.
template <std::size_t NW>
using WordBuf = std::conditional_t<(NW > 0), std::array<word_t, NW>, std::vector<word_t>>;

template <std::size_t NW>
inline std::size_t popcount_words(const word_t* w, std::size_t nw) {
  std::size_t c = 0;
  if constexpr (NW > 0) {
    for (std::size_t i = 0; i < NW; ++i) c += static_cast<std::size_t>(std::popcount(w[i]));
  } else {
    for (std::size_t i = 0; i < nw; ++i) c += static_cast<std::size_t>(std::popcount(w[i]));
  }
  return c;
}

/// Visits offset + (top rows selected by `prefix`) + span(rows[0, low)), with
/// consecutive words differing by one basis row.
template <std::size_t NW, class Visit>
void sweep_chunk(const Packed& p, std::size_t low, std::uint64_t prefix, Visit&& visit) {
  const std::size_t nw = NW > 0 ? NW : p.nw;
  WordBuf<NW> cur{};
  if constexpr (NW == 0) cur.assign(nw, 0);
  for (std::size_t i = 0; i < nw; ++i) cur[i] = p.offset[i];
  for (std::size_t j = 0; prefix >> j; ++j) {
    if (!((prefix >> j) & 1u)) continue;
    const word_t* r = &p.rows[(low + j) * nw];
    for (std::size_t i = 0; i < nw; ++i) cur[i] ^= r[i];
  }
  visit(static_cast<const word_t*>(cur.data()));
  const std::uint64_t count = std::uint64_t{1} << low;
  for (std::uint64_t step = 1; step < count; ++step) {
    const word_t* r = &p.rows[static_cast<std::size_t>(std::countr_zero(step)) * nw];
    for (std::size_t i = 0; i < nw; ++i) cur[i] ^= r[i];
    visit(static_cast<const word_t*>(cur.data()));
  }
}

template <class Fn>
void dispatch_width(std::size_t nw, Fn&& fn) {
  switch (nw) {
    case 1:
      fn(std::integral_constant<std::size_t, 1>{});
      break;
    case 2:
      fn(std::integral_constant<std::size_t, 2>{});
      break;
    default:
      fn(std::integral_constant<std::size_t, 0>{});
      break;
  }
}

}  // namespace sdc::detail
