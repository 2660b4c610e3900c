// Permutation equivalence of binary codes at desk scale.
#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "sdc/code.hpp"

namespace sdc {

inline constexpr std::size_t kEquivalenceMaxLength = 32;
inline constexpr std::size_t kEquivalenceMaxDimension = 16;

/// images[i] is the coordinate that coordinate i is sent to (0-based).
class CoordinatePermutation {
 public:
  explicit CoordinatePermutation(std::vector<std::uint32_t> images);
  static CoordinatePermutation identity(std::size_t n);

  std::size_t size() const { return images_.size(); }
  std::uint32_t operator()(std::size_t i) const { return images_[i]; }
  const std::vector<std::uint32_t>& images() const { return images_; }

  CoordinatePermutation inverse() const;

  friend bool operator==(const CoordinatePermutation&, const CoordinatePermutation&) = default;

 private:
  std::vector<std::uint32_t> images_;
};

BitVector apply_permutation(const BitVector& v, const CoordinatePermutation& p);
LinearCode apply_permutation(const LinearCode& c, const CoordinatePermutation& p);

struct EquivalenceResult {
  std::optional<CoordinatePermutation> witness;  ///< set iff equivalent
  bool rejected_by_weight_enumerator = false;
  std::uint64_t search_nodes = 0;
};

/// Finds p with apply_permutation(a, p) == b, or proves none exists.
///
/// Codes with different weight enumerators are rejected outright. Otherwise a
/// backtracking search individualizes one coordinate at a time and refines
/// both codes' coordinate partitions by how the low-weight codewords meet the
/// current cells (starting from per-coordinate coverage counts of those
/// words); branches whose refinements disagree are pruned. A complete
/// assignment is accepted only after exact verification. Requires n <= 32 and
/// k <= 16; larger inputs raise InstanceTooLarge.
EquivalenceResult are_permutation_equivalent(const LinearCode& a, const LinearCode& b);

}  // namespace sdc
