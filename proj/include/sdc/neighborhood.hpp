// Neighbors and neighborhoods of binary self-dual codes.
//
// A neighborhood is the set of the three self-dual codes containing a common
// doubly-even self-orthogonal code C_max of dimension n/2 - 1. With 8 | n and
// the all-ones word in C_max, the quotient C_max^perp / C_max has three nonzero
// cosets and each one extends C_max to a self-dual code: one Type I code and
// two Type II codes.
#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <string_view>
#include <vector>

#include "sdc/code.hpp"

namespace sdc {

struct NeighborhoodMember {
  LinearCode code;
  CodeType type;
  std::size_t distance;
  /// Minimum-weight word of the coset of C_max extending it to `code`
  /// (lexicographically smallest among ties).
  BitVector representative;
};

struct Neighborhood {
  LinearCode c_max;
  /// Exactly three; the Type I member first, then Type II members in
  /// canonical_less order.
  std::vector<NeighborhoodMember> members;

  std::size_t n() const { return c_max.n(); }
  bool contains_member(const LinearCode& c) const;
  /// Same c_max and the same member codes, irrespective of order.
  bool same_codes(const Neighborhood& other) const;
};

/// {v in c : weight(v) = 0 mod 4}, of dimension k - 1. Requires a Type I code.
LinearCode max_doubly_even_subcode(const LinearCode& c);

/// The neighborhood of a Type I code (the input is one of the members).
/// Requires 8 | n. Type II input is rejected since a Type II code lies in one
/// neighborhood per Type I neighbor.
Neighborhood neighborhood_of(const LinearCode& c, const EnumerationOptions& opts = {});

/// The neighborhood of an explicit C_max: self-orthogonal, doubly-even, of
/// dimension n/2 - 1, containing the all-ones word, with 8 | n.
Neighborhood neighborhood_containing(const LinearCode& c_max, const EnumerationOptions& opts = {});

/// Both codes self-dual of equal length, intersecting in dimension n/2 - 1.
bool are_neighbors(const LinearCode& a, const LinearCode& b);

/// <{v in c : v.x = 0}, x> for a self-dual c and an even-weight x outside c.
LinearCode neighbor_step(const LinearCode& c, const BitVector& x);

/// Seeded random walk on self-dual codes by neighbor steps. Each step draws x
/// uniformly from the even-weight vectors outside the current code, using raw
/// 64-bit outputs of std::mt19937_64 (whose output sequence is fixed by the
/// C++ standard), so walks are reproducible across platforms.
class NeighborWalk {
 public:
  /// Starts at pair_repetition_code(n).
  NeighborWalk(std::size_t n, std::uint64_t seed);
  NeighborWalk(LinearCode start, std::uint64_t seed);

  const LinearCode& current() const { return current_; }
  const BitVector& last_step_vector() const { return last_x_; }

  const LinearCode& step();
  void advance(std::size_t steps);

  /// Uniform even-weight vector outside the current code.
  BitVector draw_step_vector();
  /// Uniform vector of the given weight; may lie inside the current code.
  BitVector draw_weight(std::size_t w);

 private:
  LinearCode current_;
  std::mt19937_64 rng_;
  BitVector last_x_;
};

LinearCode random_self_dual(std::size_t n, std::size_t steps, std::uint64_t seed);

enum class Verdict { Pass, Fail, NotApplicable };

std::string_view to_string(Verdict v);

struct TheoremVerdict {
  Verdict verdict;
  std::size_t type1_distance;
  std::size_t type2_distances[2];
};

struct ShadowRangeVerdict {
  Verdict verdict;
  std::size_t d;  ///< minimum distance of the Type I member
  std::uint64_t singly_even_count;
  std::optional<std::size_t> min_weight;
  std::optional<std::size_t> max_weight;
};

/// d(Type I member) <= max of the two Type II distances.
TheoremVerdict verify_theorem_no_better_type1(const Neighborhood& nb);

/// If the Type I member has d = 2, the two Type II distances coincide;
/// otherwise NotApplicable.
TheoremVerdict verify_theorem_d2_coincide(const Neighborhood& nb);

/// Every word of C_max^perp with weight = 2 mod 4 has weight in [d, n - d],
/// d being the Type I member's minimum distance.
ShadowRangeVerdict verify_shadow_weight_range(const Neighborhood& nb, const EnumerationOptions& opts = {});

/// Random-walk neighborhoods: each sample starts from pair_repetition_code(n),
/// takes `warmup` neighbor steps and continues until the walk sits on a Type I
/// code, whose neighborhood is returned.
std::vector<Neighborhood> sample_neighborhoods(std::size_t n, std::size_t count, std::uint64_t seed,
                                               std::size_t warmup, const EnumerationOptions& opts = {});

}  // namespace sdc
