#include "sdc/neighborhood.hpp"

#include <algorithm>
#include <exception>
#include <stdexcept>
#include <string>

#include "sdc/errors.hpp"
#include "sdc/kernels.hpp"

namespace sdc {

namespace {

BitMatrix with_row(const BitMatrix& m, const BitVector& extra) {
  BitMatrix out = m;
  out.push_back(extra);
  return out;
}

void require_enumerable_dim(std::size_t k, const EnumerationOptions& opts) {
  if (k > opts.cap || k >= 63)
    throw InstanceTooLarge("instance too large: dimension " + std::to_string(k) + " exceeds the enumeration cap of " +
                           std::to_string(opts.cap));
}

}  // namespace

bool Neighborhood::contains_member(const LinearCode& c) const {
  return std::any_of(members.begin(), members.end(), [&](const NeighborhoodMember& m) { return m.code == c; });
}

bool Neighborhood::same_codes(const Neighborhood& other) const {
  if (!(c_max == other.c_max) || members.size() != other.members.size()) return false;
  return std::all_of(members.begin(), members.end(),
                     [&](const NeighborhoodMember& m) { return other.contains_member(m.code); });
}

LinearCode max_doubly_even_subcode(const LinearCode& c) {
  if (classify(c) != CodeType::TypeI)
    throw std::invalid_argument("maximal doubly-even subcode defined for Type I codes only");
  // On a self-orthogonal code v -> weight(v)/2 mod 2 is linear; keep its kernel.
  const auto rows = c.generator().rows();
  std::size_t odd = rows.size();
  for (std::size_t i = 0; i < rows.size(); ++i)
    if (rows[i].weight() % 4 == 2) {
      odd = i;
      break;
    }
  BitMatrix g(c.n());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (i == odd) continue;
    g.push_back(rows[i].weight() % 4 == 2 ? add(rows[i], rows[odd]) : rows[i]);
  }
  return LinearCode::from_generator(g);
}

Neighborhood neighborhood_containing(const LinearCode& c_max, const EnumerationOptions& opts) {
  const std::size_t n = c_max.n();
  if (n % 8 != 0) throw std::invalid_argument("neighborhood construction requires 8 | n");
  if (c_max.k() + 1 != n / 2)
    throw std::invalid_argument("C_max must have dimension n/2 - 1 = " + std::to_string(n / 2 - 1) + ", got " +
                                std::to_string(c_max.k()));
  if (!is_self_orthogonal(c_max)) throw std::invalid_argument("C_max must be self-orthogonal");
  if (!has_doubly_even_generator(c_max)) throw std::invalid_argument("C_max must be doubly-even");
  if (!contains(c_max, BitVector::ones(n)))
    throw std::invalid_argument("C_max must contain the all-ones word (otherwise only one self-dual code contains it)");
  require_enumerable_dim(n / 2, opts);

  const LinearCode d = dual(c_max);
  if (d.k() != n / 2 + 1) throw InternalInconsistency("dual of C_max has unexpected dimension");

  // Two coset offsets spanning C_max^perp / C_max.
  std::vector<BitVector> offsets;
  LinearCode span = c_max;
  for (const auto& row : d.generator().rows()) {
    if (contains(span, row)) continue;
    offsets.push_back(row);
    span = LinearCode::from_generator(with_row(span.generator(), row));
    if (offsets.size() == 2) break;
  }
  if (offsets.size() != 2) throw InternalInconsistency("quotient C_max^perp / C_max is not two-dimensional");
  offsets.push_back(add(offsets[0], offsets[1]));

  Neighborhood nb{c_max, {}};
  const auto basis = c_max.generator().rows();
  for (const auto& off : offsets) {
    BitVector rep = kernels::min_weight_word(basis, off, {opts.threads, std::nullopt});
    LinearCode ext = LinearCode::from_generator(with_row(c_max.generator(), rep));
    if (!is_self_dual(ext))
      throw InternalInconsistency("coset extension <C_max, " + rep.to_string() + "> is not self-dual");
    const CodeType type = classify(ext);
    const std::size_t dist = minimum_distance(ext, opts);
    nb.members.push_back({std::move(ext), type, dist, std::move(rep)});
  }
  std::sort(nb.members.begin(), nb.members.end(), [](const NeighborhoodMember& a, const NeighborhoodMember& b) {
    const bool a1 = a.type == CodeType::TypeI;
    const bool b1 = b.type == CodeType::TypeI;
    if (a1 != b1) return a1;
    return canonical_less(a.code, b.code);
  });
  for (std::size_t i = 0; i + 1 < nb.members.size(); ++i)
    for (std::size_t j = i + 1; j < nb.members.size(); ++j)
      if (nb.members[i].code == nb.members[j].code) throw InternalInconsistency("neighborhood members coincide");
  return nb;
}

Neighborhood neighborhood_of(const LinearCode& c, const EnumerationOptions& opts) {
  if (!is_self_dual(c)) throw std::invalid_argument("neighborhood_of requires a self-dual code");
  if (c.n() % 8 != 0) throw std::invalid_argument("neighborhood construction requires 8 | n");
  if (classify(c) == CodeType::TypeII)
    throw std::invalid_argument(
        "neighborhood_of requires a Type I code; a Type II code lies in one neighborhood per Type I neighbor "
        "(use neighborhood_containing with an explicit C_max)");
  Neighborhood nb = neighborhood_containing(max_doubly_even_subcode(c), opts);
  if (!nb.contains_member(c)) throw InternalInconsistency("input code is missing from its own neighborhood");
  return nb;
}

bool are_neighbors(const LinearCode& a, const LinearCode& b) {
  if (a.n() != b.n()) throw std::invalid_argument("are_neighbors: codes have different lengths");
  if (!is_self_dual(a) || !is_self_dual(b)) throw std::invalid_argument("are_neighbors requires self-dual codes");
  return intersection(a, b).k() + 1 == a.n() / 2;
}

LinearCode neighbor_step(const LinearCode& c, const BitVector& x) {
  if (!is_self_dual(c)) throw std::invalid_argument("neighbor_step requires a self-dual code");
  if (x.size() != c.n()) throw std::invalid_argument("neighbor_step: vector length does not match code length");
  if (x.weight() % 2 != 0) throw std::invalid_argument("neighbor_step: x must have even weight");
  if (contains(c, x)) throw std::invalid_argument("neighbor_step: x must lie outside the code");

  const auto rows = c.generator().rows();
  std::size_t pick = rows.size();
  for (std::size_t i = 0; i < rows.size(); ++i)
    if (dot(rows[i], x)) {
      pick = i;
      break;
    }
  if (pick == rows.size()) throw InternalInconsistency("vector outside a self-dual code is orthogonal to it");

  BitMatrix g(c.n());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (i == pick) continue;
    g.push_back(dot(rows[i], x) ? add(rows[i], rows[pick]) : rows[i]);
  }
  g.push_back(x);
  return LinearCode::from_generator(g);
}

NeighborWalk::NeighborWalk(std::size_t n, std::uint64_t seed) : NeighborWalk(pair_repetition_code(n), seed) {}

NeighborWalk::NeighborWalk(LinearCode start, std::uint64_t seed) : current_(std::move(start)), rng_(seed) {
  if (!is_self_dual(current_)) throw std::invalid_argument("NeighborWalk must start at a self-dual code");
}

BitVector NeighborWalk::draw_step_vector() {
  const std::size_t n = current_.n();
  if (current_.k() + 1 >= n) throw std::invalid_argument("no even-weight vector lies outside the code (n = 2)");
  for (;;) {
    BitVector x(n);
    auto words = x.words();
    for (auto& w : words) w = rng_();
    // Coordinates 0..n-2 are uniform; the last one fixes even parity.
    const std::size_t last = n - 1;
    if (const std::size_t tail = n % kWordBits; tail != 0) words.back() &= (word_t{1} << tail) - 1;
    x.set(last, false);
    if (x.weight() % 2 != 0) x.set(last);
    if (!contains(current_, x)) return x;
  }
}

BitVector NeighborWalk::draw_weight(std::size_t w) {
  const std::size_t n = current_.n();
  if (w > n) throw std::invalid_argument("draw_weight: weight exceeds length");
  std::vector<std::size_t> idx(n);
  for (std::size_t i = 0; i < n; ++i) idx[i] = i;
  // Partial Fisher-Yates with rejection sampling on raw generator output.
  auto below = [this](std::uint64_t bound) {
    const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
    std::uint64_t r;
    do r = rng_();
    while (r >= limit);
    return r % bound;
  };
  BitVector x(n);
  for (std::size_t i = 0; i < w; ++i) {
    const std::size_t j = i + static_cast<std::size_t>(below(n - i));
    std::swap(idx[i], idx[j]);
    x.set(idx[i]);
  }
  return x;
}

const LinearCode& NeighborWalk::step() {
  last_x_ = draw_step_vector();
  current_ = neighbor_step(current_, last_x_);
  return current_;
}

void NeighborWalk::advance(std::size_t steps) {
  for (std::size_t i = 0; i < steps; ++i) step();
}

LinearCode random_self_dual(std::size_t n, std::size_t steps, std::uint64_t seed) {
  if (n == 0 || n % 2 != 0) throw std::invalid_argument("random_self_dual requires an even length");
  NeighborWalk walk(n, seed);
  walk.advance(steps);
  return walk.current();
}

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::Pass:
      return "pass";
    case Verdict::Fail:
      return "fail";
    case Verdict::NotApplicable:
      return "not-applicable";
  }
  return "?";
}

namespace {

struct Composition {
  const NeighborhoodMember* type1;
  const NeighborhoodMember* type2[2];
};

Composition split_members(const Neighborhood& nb) {
  if (nb.n() % 8 != 0) throw std::invalid_argument("theorem verification requires 8 | n");
  Composition comp{nullptr, {nullptr, nullptr}};
  std::size_t n1 = 0, n2 = 0;
  for (const auto& m : nb.members) {
    if (m.type == CodeType::TypeI) {
      comp.type1 = &m;
      ++n1;
    } else if (m.type == CodeType::TypeII) {
      if (n2 < 2) comp.type2[n2] = &m;
      ++n2;
    }
  }
  if (nb.members.size() != 3 || n1 != 1 || n2 != 2)
    throw InternalInconsistency("neighborhood lacks the one Type I / two Type II composition");
  return comp;
}

}  // namespace

TheoremVerdict verify_theorem_no_better_type1(const Neighborhood& nb) {
  const Composition comp = split_members(nb);
  TheoremVerdict v{Verdict::Fail, comp.type1->distance, {comp.type2[0]->distance, comp.type2[1]->distance}};
  if (v.type1_distance <= std::max(v.type2_distances[0], v.type2_distances[1])) v.verdict = Verdict::Pass;
  return v;
}

TheoremVerdict verify_theorem_d2_coincide(const Neighborhood& nb) {
  const Composition comp = split_members(nb);
  TheoremVerdict v{Verdict::NotApplicable, comp.type1->distance, {comp.type2[0]->distance, comp.type2[1]->distance}};
  if (v.type1_distance == 2)
    v.verdict = v.type2_distances[0] == v.type2_distances[1] ? Verdict::Pass : Verdict::Fail;
  return v;
}

ShadowRangeVerdict verify_shadow_weight_range(const Neighborhood& nb, const EnumerationOptions& opts) {
  const Composition comp = split_members(nb);
  const LinearCode d = dual(nb.c_max);
  require_enumerable_dim(d.k(), opts);
  const auto hist = kernels::weight_histogram(d.generator().rows(), BitVector(d.n()), {opts.threads, std::nullopt});

  ShadowRangeVerdict v{Verdict::Pass, comp.type1->distance, 0, std::nullopt, std::nullopt};
  const std::size_t n = nb.n();
  for (std::size_t w = 2; w <= n; w += 4) {
    if (hist[w] == 0) continue;
    v.singly_even_count += hist[w];
    if (!v.min_weight) v.min_weight = w;
    v.max_weight = w;
    if (w < v.d || w + v.d > n) v.verdict = Verdict::Fail;
  }
  return v;
}

std::vector<Neighborhood> sample_neighborhoods(std::size_t n, std::size_t count, std::uint64_t seed,
                                               std::size_t warmup, const EnumerationOptions& opts) {
  std::vector<std::optional<Neighborhood>> slots(count);
  std::vector<std::exception_ptr> errors(count);
  EnumerationOptions inner = opts;
  inner.threads = 1;
  const long long total = static_cast<long long>(count);

#pragma omp parallel for num_threads(static_cast<int>(std::max(1u, opts.threads))) schedule(dynamic, 1)
  for (long long i = 0; i < total; ++i) {
    const auto idx = static_cast<std::size_t>(i);
    try {
      NeighborWalk walk(n, seed + 0x9E3779B97F4A7C15ULL * (static_cast<std::uint64_t>(i) + 1));
      walk.advance(warmup);
      std::size_t extra = 0;
      while (classify(walk.current()) != CodeType::TypeI) {
        if (++extra > 10000) throw InternalInconsistency("random walk never reached a Type I code");
        walk.step();
      }
      slots[idx] = neighborhood_of(walk.current(), inner);
    } catch (...) {
      errors[idx] = std::current_exception();
    }
  }

  std::vector<Neighborhood> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    if (errors[i]) std::rethrow_exception(errors[i]);
    out.push_back(std::move(*slots[i]));
  }
  return out;
}

}  // namespace sdc
