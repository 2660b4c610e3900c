#include "sdc/code.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

#include "sdc/errors.hpp"
#include "sdc/kernels.hpp"

namespace sdc {

LinearCode::LinearCode(std::size_t n) : generator_(n) {
  if (n == 0 || n > kMaxLength) throw std::invalid_argument("code length must be in [1, 65536]");
}

LinearCode LinearCode::from_generator(const BitMatrix& m) {
  LinearCode c(m.ncols());
  RrefResult r = rref(m);
  c.generator_ = std::move(r.matrix);
  c.pivots_ = std::move(r.pivots);
  return c;
}

LinearCode LinearCode::full_space(std::size_t n) { return from_generator(BitMatrix::identity(n)); }

bool canonical_less(const LinearCode& a, const LinearCode& b) {
  const auto ar = a.generator().rows();
  const auto br = b.generator().rows();
  const std::size_t common = std::min(ar.size(), br.size());
  for (std::size_t i = 0; i < common; ++i) {
    if (lex_less(ar[i], br[i])) return true;
    if (lex_less(br[i], ar[i])) return false;
  }
  return ar.size() < br.size();
}

std::string_view to_string(CodeType t) {
  switch (t) {
    case CodeType::TypeI:
      return "TypeI";
    case CodeType::TypeII:
      return "TypeII";
    case CodeType::SelfOrthogonalOnly:
      return "SelfOrthogonalOnly";
    case CodeType::NotSelfOrthogonal:
      return "NotSelfOrthogonal";
  }
  return "?";
}

std::uint64_t WeightEnumerator::total() const { return std::accumulate(counts.begin(), counts.end(), std::uint64_t{0}); }

std::size_t WeightEnumerator::min_nonzero_weight() const {
  for (std::size_t w = 1; w < counts.size(); ++w)
    if (counts[w] != 0) return w;
  return 0;
}

bool WeightEnumerator::is_symmetric() const { return std::equal(counts.begin(), counts.end(), counts.rbegin()); }

LinearCode dual(const LinearCode& c) { return LinearCode::from_generator(kernel_basis(c.generator())); }

bool is_self_orthogonal(const LinearCode& c) {
  const auto rows = c.generator().rows();
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = i; j < rows.size(); ++j)
      if (dot(rows[i], rows[j])) return false;
  return true;
}

bool is_self_dual(const LinearCode& c) { return 2 * c.k() == c.n() && is_self_orthogonal(c); }

bool has_doubly_even_generator(const LinearCode& c) {
  const auto rows = c.generator().rows();
  return std::all_of(rows.begin(), rows.end(), [](const BitVector& r) { return r.weight() % 4 == 0; });
}

BitVector reduce(const LinearCode& c, BitVector v) {
  if (v.size() != c.n())
    throw std::invalid_argument("vector length " + std::to_string(v.size()) + " does not match code length " +
                                std::to_string(c.n()));
  const auto& piv = c.pivots();
  for (std::size_t i = 0; i < piv.size(); ++i)
    if (v.get(piv[i])) v ^= c.generator().row(i);
  return v;
}

bool contains(const LinearCode& c, const BitVector& v) { return reduce(c, v).is_zero(); }

LinearCode intersection(const LinearCode& a, const LinearCode& b) {
  if (a.n() != b.n()) throw std::invalid_argument("intersection: codes have different lengths");
  const BitMatrix checks = kernel_basis(a.generator()).stacked(kernel_basis(b.generator()));
  return LinearCode::from_generator(kernel_basis(checks));
}

namespace {

void require_enumerable(const LinearCode& c, const EnumerationOptions& opts) {
  if (c.k() > opts.cap || c.k() >= 63)
    throw InstanceTooLarge("instance too large: dimension " + std::to_string(c.k()) +
                           " exceeds the enumeration cap of " + std::to_string(opts.cap));
}

}  // namespace

std::size_t minimum_distance(const LinearCode& c, const EnumerationOptions& opts) {
  if (c.k() == 0) throw std::invalid_argument("the zero-dimensional code has no minimum distance");
  require_enumerable(c, opts);
  return kernels::min_nonzero_weight(c.generator().rows(), BitVector(c.n()), {opts.threads, std::nullopt});
}

WeightEnumerator weight_enumerator(const LinearCode& c, const EnumerationOptions& opts) {
  require_enumerable(c, opts);
  return WeightEnumerator{kernels::weight_histogram(c.generator().rows(), BitVector(c.n()), {opts.threads, std::nullopt})};
}

CodeType classify(const LinearCode& c) {
  if (!is_self_orthogonal(c)) return CodeType::NotSelfOrthogonal;
  if (2 * c.k() != c.n()) return CodeType::SelfOrthogonalOnly;
  // On a self-orthogonal code w(a+b) = w(a) + w(b) - 2 mu(a,b) with mu even,
  // so the generator rows decide doubly-evenness.
  return has_doubly_even_generator(c) ? CodeType::TypeII : CodeType::TypeI;
}

std::size_t extremal_bound(std::size_t n, CodeType t) {
  switch (t) {
    case CodeType::TypeI:
      return 2 * (n / 8) + 2;
    case CodeType::TypeII:
      if (n % 8 != 0) throw std::invalid_argument("Type II codes exist only for lengths divisible by 8");
      return 4 * (n / 24) + 4;
    default:
      throw std::invalid_argument("extremal_bound is defined for Type I and Type II only");
  }
}

LinearCode pair_repetition_code(std::size_t n) {
  if (n == 0 || n % 2 != 0) throw std::invalid_argument("pair_repetition_code: n must be even and positive");
  BitMatrix g(n);
  for (std::size_t i = 0; i < n / 2; ++i) {
    BitVector r(n);
    r.set(2 * i);
    r.set(2 * i + 1);
    g.push_back(std::move(r));
  }
  return LinearCode::from_generator(g);
}

}  // namespace sdc
