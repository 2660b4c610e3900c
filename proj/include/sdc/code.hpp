// Binary linear codes in canonical (RREF generator) form.
#pragma once

#include <cstddef>
#include <cstdint>
#include <string_view>
#include <vector>

#include "sdc/gf2.hpp"

namespace sdc {

inline constexpr unsigned kDefaultEnumerationCap = 30;

/// Controls exhaustive codeword enumeration. Dimensions above `cap` raise
/// InstanceTooLarge rather than being approximated.
struct EnumerationOptions {
  unsigned cap = kDefaultEnumerationCap;
  unsigned threads = 1;
};

/// A binary (n, k) code. The generator is kept in reduced row echelon form,
/// so two codes are equal exactly when their generators are identical.
class LinearCode {
 public:
  /// The zero code of length n.
  explicit LinearCode(std::size_t n = 1);

  static LinearCode from_generator(const BitMatrix& m);
  static LinearCode full_space(std::size_t n);

  std::size_t n() const { return generator_.ncols(); }
  std::size_t k() const { return generator_.nrows(); }
  const BitMatrix& generator() const { return generator_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  friend bool operator==(const LinearCode& a, const LinearCode& b) { return a.generator_ == b.generator_; }

 private:
  BitMatrix generator_;
  std::vector<std::size_t> pivots_;
};

/// Total order on codes of the same length (by generator rows, then dimension),
/// used to list codes deterministically.
bool canonical_less(const LinearCode& a, const LinearCode& b);

enum class CodeType { TypeI, TypeII, SelfOrthogonalOnly, NotSelfOrthogonal };

std::string_view to_string(CodeType t);

/// counts[w] is the number of codewords of weight w, w in [0, n].
struct WeightEnumerator {
  std::vector<std::uint64_t> counts;

  std::size_t n() const { return counts.empty() ? 0 : counts.size() - 1; }
  std::uint64_t total() const;
  /// Least w > 0 with counts[w] > 0, or 0 for the zero code.
  std::size_t min_nonzero_weight() const;
  bool is_symmetric() const;

  friend bool operator==(const WeightEnumerator&, const WeightEnumerator&) = default;
};

LinearCode dual(const LinearCode& c);

bool is_self_orthogonal(const LinearCode& c);
bool is_self_dual(const LinearCode& c);
/// Every generator row has weight divisible by 4 (meaningful for self-orthogonal codes).
bool has_doubly_even_generator(const LinearCode& c);

bool contains(const LinearCode& c, const BitVector& v);

/// Reduces v against the generator; the result is zero iff v is in the code.
BitVector reduce(const LinearCode& c, BitVector v);

LinearCode intersection(const LinearCode& a, const LinearCode& b);

/// Smallest nonzero codeword weight, by exhaustive Gray-code enumeration.
/// Throws std::invalid_argument for k == 0 and InstanceTooLarge for k > cap.
std::size_t minimum_distance(const LinearCode& c, const EnumerationOptions& opts = {});

WeightEnumerator weight_enumerator(const LinearCode& c, const EnumerationOptions& opts = {});

/// Type from self-orthogonality and generator-row weights; no enumeration.
CodeType classify(const LinearCode& c);

/// Upper bound on d for a self-dual code of the given type and length:
/// 2*floor(n/8) + 2 for Type I, 4*floor(n/24) + 4 for Type II (needs 8 | n).
std::size_t extremal_bound(std::size_t n, CodeType t);

/// The code spanned by a direct sum of n/2 copies of {00, 11}.
LinearCode pair_repetition_code(std::size_t n);

}  // namespace sdc
