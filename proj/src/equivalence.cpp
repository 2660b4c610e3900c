#include "sdc/equivalence.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>
#include <string>
#include <tuple>

#include "sdc/errors.hpp"

namespace sdc {

CoordinatePermutation::CoordinatePermutation(std::vector<std::uint32_t> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (std::uint32_t img : images_) {
    if (img >= images_.size() || seen[img]) throw std::invalid_argument("CoordinatePermutation is not a bijection");
    seen[img] = true;
  }
}

CoordinatePermutation CoordinatePermutation::identity(std::size_t n) {
  std::vector<std::uint32_t> id(n);
  std::iota(id.begin(), id.end(), 0u);
  return CoordinatePermutation(std::move(id));
}

CoordinatePermutation CoordinatePermutation::inverse() const {
  std::vector<std::uint32_t> inv(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) inv[images_[i]] = static_cast<std::uint32_t>(i);
  return CoordinatePermutation(std::move(inv));
}

BitVector apply_permutation(const BitVector& v, const CoordinatePermutation& p) {
  if (p.size() != v.size()) throw std::invalid_argument("apply_permutation: permutation size does not match length");
  BitVector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v.get(i)) out.set(p(i));
  return out;
}

LinearCode apply_permutation(const LinearCode& c, const CoordinatePermutation& p) {
  if (p.size() != c.n()) throw std::invalid_argument("apply_permutation: permutation size does not match length");
  BitMatrix g(c.n());
  for (const auto& r : c.generator().rows()) g.push_back(apply_permutation(r, p));
  return LinearCode::from_generator(g);
}

namespace {

constexpr std::uint64_t kNodeBudget = 5'000'000;

std::uint64_t mix(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

/// Codewords used to distinguish coordinates, indexed per coordinate.
struct Incidence {
  std::size_t n = 0;
  std::vector<std::uint32_t> words;
  std::vector<std::vector<std::uint32_t>> by_coord;
};

std::vector<std::uint32_t> all_codewords(const LinearCode& c) {
  std::vector<std::uint32_t> rows;
  for (const auto& r : c.generator().rows()) rows.push_back(static_cast<std::uint32_t>(r.words()[0]));
  std::vector<std::uint32_t> out;
  out.reserve(std::size_t{1} << rows.size());
  std::uint32_t cur = 0;
  out.push_back(cur);
  for (std::uint64_t step = 1; step < (std::uint64_t{1} << rows.size()); ++step) {
    cur ^= rows[static_cast<std::size_t>(std::countr_zero(step))];
    out.push_back(cur);
  }
  return out;
}

/// Whole weight classes, lightest first, until at least 2n words are taken.
/// The all-ones word and the zero word carry no information and are skipped.
/// Depends only on the weight enumerator, so equivalent codes pick alike.
std::vector<std::size_t> test_weights(const WeightEnumerator& we) {
  const std::size_t n = we.n();
  std::vector<std::size_t> weights;
  std::uint64_t taken = 0;
  for (std::size_t w = 1; w < n && taken < 2 * n; ++w) {
    if (we.counts[w] == 0) continue;
    if (taken != 0 && taken + we.counts[w] > 4096) break;
    weights.push_back(w);
    taken += we.counts[w];
  }
  return weights;
}

Incidence build_incidence(const LinearCode& c, const std::vector<std::size_t>& weights) {
  Incidence inc;
  inc.n = c.n();
  inc.by_coord.resize(inc.n);
  for (std::uint32_t w : all_codewords(c)) {
    const auto wt = static_cast<std::size_t>(std::popcount(w));
    if (std::find(weights.begin(), weights.end(), wt) == weights.end()) continue;
    const auto idx = static_cast<std::uint32_t>(inc.words.size());
    inc.words.push_back(w);
    for (std::uint32_t m = w; m; m &= m - 1) inc.by_coord[static_cast<std::size_t>(std::countr_zero(m))].push_back(idx);
  }
  return inc;
}

struct Partition {
  std::vector<std::uint32_t> cell;  // coordinate -> cell id
  std::uint32_t ncells = 1;
};

std::vector<std::uint64_t> point_keys(const Incidence& inc, const Partition& p) {
  std::vector<std::uint64_t> word_hash(inc.words.size());
  for (std::size_t i = 0; i < inc.words.size(); ++i) {
    std::uint64_t h = static_cast<std::uint64_t>(std::popcount(inc.words[i])) << 40;
    for (std::uint32_t m = inc.words[i]; m; m &= m - 1) h += mix(p.cell[static_cast<std::size_t>(std::countr_zero(m))]);
    word_hash[i] = mix(h);
  }
  std::vector<std::uint64_t> keys(inc.n);
  for (std::size_t x = 0; x < inc.n; ++x) {
    std::uint64_t s = 0;
    for (std::uint32_t w : inc.by_coord[x]) s += word_hash[w];
    keys[x] = mix(s ^ (inc.by_coord[x].size() << 20));
  }
  return keys;
}

/// Splits cells by point keys until stable, identically on both sides.
/// Returns false as soon as the two sides' refinements disagree.
bool refine(const Incidence& ia, const Incidence& ib, Partition& pa, Partition& pb) {
  const std::size_t n = ia.n;
  for (;;) {
    const auto ka = point_keys(ia, pa);
    const auto kb = point_keys(ib, pb);
    using Tag = std::tuple<std::uint32_t, std::uint64_t, std::uint32_t>;
    std::vector<Tag> ta(n), tb(n);
    for (std::size_t x = 0; x < n; ++x) {
      ta[x] = {pa.cell[x], ka[x], static_cast<std::uint32_t>(x)};
      tb[x] = {pb.cell[x], kb[x], static_cast<std::uint32_t>(x)};
    }
    std::sort(ta.begin(), ta.end());
    std::sort(tb.begin(), tb.end());
    std::uint32_t next = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (std::get<0>(ta[i]) != std::get<0>(tb[i]) || std::get<1>(ta[i]) != std::get<1>(tb[i])) return false;
      if (i > 0 && (std::get<0>(ta[i]) != std::get<0>(ta[i - 1]) || std::get<1>(ta[i]) != std::get<1>(ta[i - 1])))
        ++next;
      pa.cell[std::get<2>(ta[i])] = next;
      pb.cell[std::get<2>(tb[i])] = next;
    }
    const std::uint32_t cells = next + 1;
    if (cells == pa.ncells) return true;
    pa.ncells = pb.ncells = cells;
  }
}

struct Search {
  const LinearCode& a;
  const LinearCode& b;
  const Incidence& ia;
  const Incidence& ib;
  std::uint64_t nodes = 0;

  std::optional<CoordinatePermutation> run(Partition pa, Partition pb) {
    if (++nodes > kNodeBudget)
      throw InstanceTooLarge("instance too large: equivalence search exceeded " + std::to_string(kNodeBudget) +
                             " nodes");
    if (!refine(ia, ib, pa, pb)) return std::nullopt;
    const std::size_t n = ia.n;

    if (pa.ncells == n) {
      std::vector<std::uint32_t> at_cell(n);
      for (std::size_t y = 0; y < n; ++y) at_cell[pb.cell[y]] = static_cast<std::uint32_t>(y);
      std::vector<std::uint32_t> images(n);
      for (std::size_t x = 0; x < n; ++x) images[x] = at_cell[pa.cell[x]];
      CoordinatePermutation p(std::move(images));
      if (apply_permutation(a, p) == b) return p;
      return std::nullopt;
    }

    // Smallest non-singleton cell, lowest id first.
    std::vector<std::uint32_t> size(pa.ncells, 0);
    for (std::uint32_t c : pa.cell) ++size[c];
    std::uint32_t target = 0;
    for (std::uint32_t c = 0; c < pa.ncells; ++c)
      if (size[c] > 1 && (size[target] <= 1 || size[c] < size[target])) target = c;

    std::size_t x = 0;
    while (pa.cell[x] != target) ++x;
    for (std::size_t y = 0; y < n; ++y) {
      if (pb.cell[y] != target) continue;
      Partition qa = pa, qb = pb;
      qa.cell[x] = qb.cell[y] = pa.ncells;
      qa.ncells = qb.ncells = pa.ncells + 1;
      if (auto found = run(std::move(qa), std::move(qb))) return found;
    }
    return std::nullopt;
  }
};

}  // namespace

EquivalenceResult are_permutation_equivalent(const LinearCode& a, const LinearCode& b) {
  if (a.n() != b.n()) throw std::invalid_argument("are_permutation_equivalent: codes have different lengths");
  if (a.n() > kEquivalenceMaxLength || a.k() > kEquivalenceMaxDimension || b.k() > kEquivalenceMaxDimension)
    throw InstanceTooLarge("instance too large: equivalence testing is limited to n <= 32 and k <= 16");

  EquivalenceResult result;
  const WeightEnumerator wa = weight_enumerator(a);
  if (!(wa == weight_enumerator(b))) {
    result.rejected_by_weight_enumerator = true;
    return result;
  }

  const auto weights = test_weights(wa);
  const Incidence ia = build_incidence(a, weights);
  const Incidence ib = build_incidence(b, weights);
  Partition start{std::vector<std::uint32_t>(a.n(), 0), 1};
  Search search{a, b, ia, ib};
  result.witness = search.run(start, start);
  result.search_nodes = search.nodes;
  if (result.witness && !(apply_permutation(a, *result.witness) == b))
    throw InternalInconsistency("equivalence witness failed verification");
  return result;
}

}  // namespace sdc
