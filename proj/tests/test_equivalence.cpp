#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <stdexcept>

#include "sdc/equivalence.hpp"
#include "sdc/errors.hpp"
#include "sdc/fixtures.hpp"
#include "sdc/neighborhood.hpp"

using namespace sdc;

namespace {

LinearCode fx(const char* name) { return LinearCode::from_generator(fixture(name)); }

CoordinatePermutation random_permutation(std::mt19937_64& rng, std::size_t n) {
  std::vector<std::uint32_t> images(n);
  std::iota(images.begin(), images.end(), 0u);
  std::shuffle(images.begin(), images.end(), rng);
  return CoordinatePermutation(images);
}

void check_witness(const LinearCode& a, const LinearCode& b) {
  const auto r = are_permutation_equivalent(a, b);
  REQUIRE(r.witness.has_value());
  CHECK(apply_permutation(a, *r.witness) == b);
}

// Direct sum of two codes on disjoint coordinate blocks.
LinearCode direct_sum(const LinearCode& x, const LinearCode& y) {
  const std::size_t n = x.n() + y.n();
  BitMatrix g(n);
  for (const auto& r : x.generator().rows()) {
    BitVector v(n);
    for (std::size_t i = 0; i < x.n(); ++i)
      if (r.get(i)) v.set(i);
    g.push_back(v);
  }
  for (const auto& r : y.generator().rows()) {
    BitVector v(n);
    for (std::size_t i = 0; i < y.n(); ++i)
      if (r.get(i)) v.set(x.n() + i);
    g.push_back(v);
  }
  return LinearCode::from_generator(g);
}

LinearCode e8() {
  return LinearCode::from_generator(BitMatrix(8, {BitVector::from_string("11110000"), BitVector::from_string("00111100"),
                                                  BitVector::from_string("00001111"), BitVector::from_string("01010101")}));
}

}  // namespace

TEST_CASE("coordinate permutations") {
  CHECK_THROWS_AS(CoordinatePermutation({0, 0, 1}), std::invalid_argument);
  CHECK_THROWS_AS(CoordinatePermutation({0, 3, 1}), std::invalid_argument);

  const CoordinatePermutation swap({1, 0, 2, 3});
  CHECK(apply_permutation(BitVector::from_string("1000"), swap) == BitVector::from_string("0100"));
  CHECK(apply_permutation(BitVector::from_string("1011"), CoordinatePermutation::identity(4)) ==
        BitVector::from_string("1011"));
  const CoordinatePermutation cyc({1, 2, 3, 0});
  CHECK(apply_permutation(BitVector::from_string("1100"), cyc) == BitVector::from_string("0110"));
  CHECK(apply_permutation(apply_permutation(BitVector::from_string("1101"), cyc), cyc.inverse()) ==
        BitVector::from_string("1101"));
  CHECK_THROWS_AS(apply_permutation(BitVector(5), cyc), std::invalid_argument);
}

TEST_CASE("the two extremal Type II members of the first neighborhood are equivalent") {
  const auto r = are_permutation_equivalent(fx("G1"), fx("G2"));
  REQUIRE(r.witness.has_value());
  CHECK_FALSE(r.rejected_by_weight_enumerator);
  CHECK(apply_permutation(fx("G1"), *r.witness) == fx("G2"));
  check_witness(fx("G2"), fx("G1"));
  check_witness(fx("G1"), fx("G6"));
}

TEST_CASE("different weight enumerators are rejected") {
  const auto r = are_permutation_equivalent(fx("G1"), fx("G3"));
  CHECK_FALSE(r.witness.has_value());
  CHECK(r.rejected_by_weight_enumerator);
  CHECK_FALSE(are_permutation_equivalent(fx("G4"), fx("G5")).witness.has_value());
  CHECK_FALSE(are_permutation_equivalent(fx("G1"), LinearCode::from_generator(fixture("G1").slice_rows(0, 11)))
                  .witness.has_value());
}

TEST_CASE("reflexive") {
  for (const auto& name : fixture_names()) {
    const auto c = LinearCode::from_generator(fixture(name));
    const auto r = are_permutation_equivalent(c, c);
    REQUIRE(r.witness.has_value());
    CHECK(apply_permutation(c, *r.witness) == c);
  }
}

TEST_CASE("same weight enumerator but inequivalent") {
  // e8 + e8 and d16+ share a weight enumerator.
  const auto e8e8 = direct_sum(e8(), e8());
  NeighborWalk walk(16, 77);
  std::optional<LinearCode> other;
  for (int s = 0; s < 400 && !other; ++s) {
    walk.step();
    const auto& c = walk.current();
    if (classify(c) == CodeType::TypeII && weight_enumerator(c) == weight_enumerator(e8e8) &&
        !(are_permutation_equivalent(c, e8e8).witness))
      other = c;
  }
  REQUIRE(other.has_value());
  const auto r = are_permutation_equivalent(*other, e8e8);
  CHECK_FALSE(r.witness.has_value());
  CHECK_FALSE(r.rejected_by_weight_enumerator);
  CHECK_FALSE(are_permutation_equivalent(e8e8, *other).witness.has_value());
}

TEST_CASE("randomly permuted codes are recognized") {
  std::mt19937_64 rng(53);
  for (int t = 0; t < 30; ++t) {
    const std::size_t n = 8 * (1 + t % 4);
    const auto c = random_self_dual(n, 20, 1000 + t);
    const auto p = random_permutation(rng, n);
    const auto pc = apply_permutation(c, p);
    check_witness(c, pc);
    check_witness(pc, c);
  }
  for (int t = 0; t < 5; ++t) check_witness(fx("G4"), apply_permutation(fx("G4"), random_permutation(rng, 24)));
}

TEST_CASE("size limits") {
  const auto big = pair_repetition_code(40);
  CHECK_THROWS_AS(are_permutation_equivalent(big, big), InstanceTooLarge);
  CHECK_THROWS_AS(are_permutation_equivalent(fx("G1"), pair_repetition_code(8)), std::invalid_argument);
}
