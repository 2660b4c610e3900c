// Brute-force oracles on machine-word bitmasks (n <= 64). Independent of the
// library's packed vectors, row reduction and Gray-code kernels.
#pragma once

#include <bit>
#include <cstdint>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "sdc/gf2.hpp"

namespace oracle {

using Mask = std::uint64_t;

inline Mask to_mask(const sdc::BitVector& v) {
  Mask m = 0;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v.get(i)) m |= Mask{1} << i;
  return m;
}

inline std::vector<Mask> to_masks(const sdc::BitMatrix& m) {
  std::vector<Mask> out;
  for (const auto& r : m.rows()) out.push_back(to_mask(r));
  return out;
}

inline sdc::BitVector from_mask(Mask m, std::size_t n) {
  sdc::BitVector v(n);
  for (std::size_t i = 0; i < n; ++i)
    if ((m >> i) & 1u) v.set(i);
  return v;
}

inline sdc::BitMatrix matrix_from_masks(const std::vector<Mask>& rows, std::size_t n) {
  sdc::BitMatrix m(n);
  for (Mask r : rows) m.push_back(from_mask(r, n));
  return m;
}

/// Every word of the span, by binary counter over the rows (duplicates kept).
inline std::vector<Mask> span_words(const std::vector<Mask>& rows) {
  std::vector<Mask> out;
  for (std::uint64_t c = 0; c < (std::uint64_t{1} << rows.size()); ++c) {
    Mask w = 0;
    for (std::size_t i = 0; i < rows.size(); ++i)
      if ((c >> i) & 1u) w ^= rows[i];
    out.push_back(w);
  }
  return out;
}

inline std::set<Mask> span_set(const std::vector<Mask>& rows) {
  const auto words = span_words(rows);
  return {words.begin(), words.end()};
}

/// Dimension from the size of the span.
inline std::size_t span_dimension(const std::vector<Mask>& rows) {
  return static_cast<std::size_t>(std::countr_zero(span_set(rows).size()));
}

/// {x : x.r = 0 for every row r}, by trying all 2^n vectors (n <= 20).
inline std::set<Mask> orthogonal_complement(const std::vector<Mask>& rows, std::size_t n) {
  std::set<Mask> out;
  for (Mask x = 0; x < (Mask{1} << n); ++x) {
    bool ok = true;
    for (Mask r : rows) ok = ok && (std::popcount(x & r) % 2 == 0);
    if (ok) out.insert(x);
  }
  return out;
}

inline std::map<std::size_t, std::uint64_t> weight_distribution(const std::vector<Mask>& rows) {
  std::map<std::size_t, std::uint64_t> d;
  for (Mask w : span_set(rows)) ++d[static_cast<std::size_t>(std::popcount(w))];
  return d;
}

inline std::size_t min_distance(const std::vector<Mask>& rows) {
  std::size_t best = 0;
  for (Mask w : span_set(rows))
    if (w && (best == 0 || static_cast<std::size_t>(std::popcount(w)) < best))
      best = static_cast<std::size_t>(std::popcount(w));
  return best;
}

inline sdc::BitVector random_vector(std::mt19937_64& rng, std::size_t n) {
  sdc::BitVector v(n);
  for (std::size_t i = 0; i < n; ++i)
    if (rng() & 1u) v.set(i);
  return v;
}

inline sdc::BitMatrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t n) {
  sdc::BitMatrix m(n);
  for (std::size_t i = 0; i < rows; ++i) m.push_back(random_vector(rng, n));
  return m;
}

}  // namespace oracle
