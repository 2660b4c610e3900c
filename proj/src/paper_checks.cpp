#include "sdc/paper_checks.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <sstream>

#include "sdc/equivalence.hpp"
#include "sdc/matrix_io.hpp"
#include "sdc/neighborhood.hpp"
#include "sdc/reference.hpp"
#include "sdc/search.hpp"

namespace sdc {

namespace {

struct Outcome {
  bool passed = true;
  std::ostringstream detail;

  void fail(const std::string& why) {
    if (passed) detail.str("");
    if (!passed) detail << "; ";
    passed = false;
    detail << why;
  }
};

struct SelfDualRecord {
  LinearCode code;
  std::size_t distance;
  std::string origin;
};

class Suite {
 public:
  explicit Suite(const PaperCheckOptions& opts) : opts_(opts), rng_(opts.seed) {}

  std::vector<CheckResult> run() {
    add(1, "fixture self-duality", [this](Outcome& o) { fixture_self_duality(o); });
    add(2, "fixture minimum distances", [this](Outcome& o) { fixture_distances(o); });
    add(3, "neighborhood reconstruction", [this](Outcome& o) { reconstruction(o); });
    add(4, "neighborhood composition", [this](Outcome& o) { composition(o); });
    add(5, "no better Type I theorem", [this](Outcome& o) { no_better_type1(o); });
    add(6, "d=2 coincidence theorem", [this](Outcome& o) { d2_coincide(o); });
    add(7, "mu addition lemma", [this](Outcome& o) { mu_lemma(o); });
    add(8, "weight-sum formula", [this](Outcome& o) { weight_sum(o); });
    add(11, "uniqueness of C_max and neighborhood", [this](Outcome& o) { uniqueness(o); });
    add(12, "Golay equivalence", [this](Outcome& o) { equivalence(o); });
    add(13, "Golay weight enumerator", [this](Outcome& o) { golay_enumerator(o); });
    add(14, "Gray-code distance vs naive oracle", [this](Outcome& o) { oracle_agreement(o); });
    add(15, "matrix file round-trip", [this](Outcome& o) { round_trip(o); });
    add(16, "search determinism", [this](Outcome& o) { search_determinism(o); });
    // These two audit every self-dual code registered by the checks above.
    add(9, "all-ones membership", [this](Outcome& o) { all_ones(o); });
    add(10, "extremal bounds", [this](Outcome& o) { extremal(o); });
    std::sort(results_.begin(), results_.end(), [](const CheckResult& a, const CheckResult& b) { return a.id < b.id; });
    return results_;
  }

 private:
  void add(int id, std::string name, const std::function<void(Outcome&)>& body) {
    Outcome o;
    try {
      body(o);
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    results_.push_back({id, std::move(name), o.passed, o.detail.str()});
  }

  std::optional<LinearCode> code(const std::string& name) const {
    const auto it = opts_.fixtures.find(name);
    if (it == opts_.fixtures.end()) return std::nullopt;
    return LinearCode::from_generator(it->second);
  }

  LinearCode require_code(const std::string& name) const {
    auto c = code(name);
    if (!c) throw std::invalid_argument("fixture " + name + " is missing");
    return *c;
  }

  void remember(const LinearCode& c, std::size_t d, const std::string& origin) { registry_.push_back({c, d, origin}); }

  void remember(const Neighborhood& nb, const std::string& origin) {
    for (const auto& m : nb.members) remember(m.code, m.distance, origin);
  }

  // 1
  void fixture_self_duality(Outcome& o) {
    for (const auto& name : fixture_names()) {
      const auto c = code(name);
      if (!c) {
        o.fail(name + " missing");
        continue;
      }
      if (c->n() != 24 || c->k() != 12 || !is_self_dual(*c))
        o.fail(name + ": n=" + std::to_string(c->n()) + " k=" + std::to_string(c->k()) +
               " self_dual=" + (is_self_dual(*c) ? "yes" : "no"));
    }
    if (o.passed) o.detail << "G1..G6 each span a self-dual (24,12) code";
  }

  // 2
  void fixture_distances(Outcome& o) {
    const std::array<std::pair<const char*, std::size_t>, 6> expected{
        {{"G1", 8}, {"G2", 8}, {"G3", 2}, {"G4", 6}, {"G5", 4}, {"G6", 8}}};
    for (const auto& [name, want] : expected) {
      const LinearCode c = require_code(name);
      const std::size_t d = minimum_distance(c, opts_.enumeration);
      if (is_self_dual(c)) remember(c, d, name);
      o.detail << (o.detail.tellp() > 0 ? " " : "") << "d(" << name << ")=" << d;
      if (d != want) o.fail(std::string("d(") + name + ")=" + std::to_string(d) + ", expected " + std::to_string(want));
    }
  }

  static bool same_set(const Neighborhood& nb, const std::vector<LinearCode>& codes) {
    if (nb.members.size() != codes.size()) return false;
    return std::all_of(codes.begin(), codes.end(), [&](const LinearCode& c) { return nb.contains_member(c); });
  }

  // 3
  void reconstruction(Outcome& o) {
    n1_ = neighborhood_of(require_code("G3"), opts_.enumeration);
    n2_ = neighborhood_of(require_code("G4"), opts_.enumeration);
    remember(*n1_, "N1");
    remember(*n2_, "N2");
    if (!same_set(*n1_, {require_code("G1"), require_code("G2"), require_code("G3")}))
      o.fail("neighborhood_of(C3) differs from {C1, C2, C3}");
    if (!same_set(*n2_, {require_code("G4"), require_code("G5"), require_code("G6")}))
      o.fail("neighborhood_of(C4) differs from {C4, C5, C6}");
    if (o.passed) o.detail << "N(C3) = {C1,C2,C3}; N(C4) = {C4,C5,C6}";
  }

  static bool composition_ok(const Neighborhood& nb) {
    const auto n1 = std::count_if(nb.members.begin(), nb.members.end(),
                                  [](const NeighborhoodMember& m) { return m.type == CodeType::TypeI; });
    const auto n2 = std::count_if(nb.members.begin(), nb.members.end(),
                                  [](const NeighborhoodMember& m) { return m.type == CodeType::TypeII; });
    return nb.members.size() == 3 && n1 == 1 && n2 == 2;
  }

  // 4
  void composition(Outcome& o) {
    if (!n1_ || !n2_) throw std::runtime_error("fixture neighborhoods unavailable");
    if (!composition_ok(*n1_)) o.fail("N1 composition is not 1 Type I + 2 Type II");
    if (!composition_ok(*n2_)) o.fail("N2 composition is not 1 Type I + 2 Type II");
    for (std::size_t n : {8u, 16u, 24u}) {
      auto batch = sample_neighborhoods(n, opts_.random_neighborhoods_per_length, opts_.seed + n, opts_.walk_warmup,
                                        opts_.enumeration);
      std::size_t bad = 0;
      for (const auto& nb : batch) {
        bad += !composition_ok(nb);
        remember(nb, "random n=" + std::to_string(n));
        random_.push_back(nb);
      }
      if (bad) o.fail(std::to_string(bad) + " random neighborhoods at n=" + std::to_string(n) + " violate composition");
      if (batch.size() < 100) o.fail("fewer than 100 random neighborhoods at n=" + std::to_string(n));
    }
    if (o.passed) o.detail << "N1, N2 and " << random_.size() << " random neighborhoods (n=8,16,24): 1 TypeI + 2 TypeII";
  }

  // 5
  void no_better_type1(Outcome& o) {
    if (!n1_ || !n2_ || random_.empty()) throw std::runtime_error("neighborhoods unavailable");
    auto expect = [&](const Neighborhood& nb, const char* label, std::size_t d1, std::size_t dmax) {
      const TheoremVerdict v = verify_theorem_no_better_type1(nb);
      const std::size_t got_max = std::max(v.type2_distances[0], v.type2_distances[1]);
      o.detail << label << ": " << v.type1_distance << " <= " << got_max << "; ";
      if (v.verdict != Verdict::Pass) o.fail(std::string(label) + " violates d(TypeI) <= max d(TypeII)");
      if (v.type1_distance != d1 || got_max != dmax) o.fail(std::string(label) + " distances differ from expected");
    };
    expect(*n1_, "N1", 2, 8);
    expect(*n2_, "N2", 6, 8);
    std::size_t bad = 0;
    for (const auto& nb : random_) bad += verify_theorem_no_better_type1(nb).verdict != Verdict::Pass;
    if (bad) o.fail(std::to_string(bad) + " random neighborhoods violate the theorem");
    if (o.passed) o.detail << random_.size() << " random neighborhoods pass";
  }

  // 6
  void d2_coincide(Outcome& o) {
    if (!n1_) throw std::runtime_error("N1 unavailable");
    const TheoremVerdict v1 = verify_theorem_d2_coincide(*n1_);
    if (v1.verdict != Verdict::Pass || v1.type2_distances[0] != 8 || v1.type2_distances[1] != 8)
      o.fail("N1: Type II distances " + std::to_string(v1.type2_distances[0]) + ", " +
             std::to_string(v1.type2_distances[1]));

    std::size_t applicable = 0, bad = 0;
    auto check = [&](const Neighborhood& nb) {
      const TheoremVerdict v = verify_theorem_d2_coincide(nb);
      if (v.verdict == Verdict::NotApplicable) return;
      ++applicable;
      bad += v.verdict != Verdict::Pass;
    };
    for (const auto& nb : random_) check(nb);

    // Neighbors through a weight-2 vector are Type I with d = 2.
    std::size_t built = 0;
    for (std::size_t n : {8u, 16u, 24u}) {
      NeighborWalk walk(n, opts_.seed ^ (0xD2ULL << 32) ^ n);
      for (std::size_t i = 0; i < opts_.d2_neighborhoods_per_length; ++i) {
        walk.advance(3);
        BitVector x = walk.draw_weight(2);
        while (contains(walk.current(), x)) x = walk.draw_weight(2);
        const Neighborhood nb = neighborhood_of(neighbor_step(walk.current(), x), opts_.enumeration);
        remember(nb, "weight-2 neighbor n=" + std::to_string(n));
        if (nb.members.front().distance != 2) o.fail("weight-2 neighbor does not have d = 2");
        check(nb);
        ++built;
      }
    }
    if (bad) o.fail(std::to_string(bad) + " d=2 neighborhoods have unequal Type II distances");
    if (o.passed)
      o.detail << "N1: 8 = 8; " << applicable << " further d=2 neighborhoods (" << built
               << " built via weight-2 steps) pass";
  }

  BitVector random_vector(std::size_t n) {
    BitVector v(n);
    for (std::size_t i = 0; i < n; ++i)
      if (rng_() & 1u) v.set(i);
    return v;
  }

  template <class Check>
  void triples(Outcome& o, const char* what, Check&& check) {
    std::size_t exhaustive = 0;
    for (std::size_t len = 1; len <= 6; ++len) {
      const std::uint64_t count = std::uint64_t{1} << len;
      auto make = [len](std::uint64_t bits) {
        BitVector v(len);
        for (std::size_t i = 0; i < len; ++i)
          if ((bits >> i) & 1u) v.set(i);
        return v;
      };
      for (std::uint64_t x = 0; x < count; ++x)
        for (std::uint64_t y = 0; y < count; ++y)
          for (std::uint64_t z = 0; z < count; ++z) {
            ++exhaustive;
            if (!check(make(x), make(y), make(z))) {
              o.fail(std::string(what) + " fails at length " + std::to_string(len));
              return;
            }
          }
    }
    std::uniform_int_distribution<std::size_t> length(8, 128);
    for (std::size_t t = 0; t < opts_.random_triples; ++t) {
      const std::size_t len = length(rng_);
      const BitVector a = random_vector(len), b = random_vector(len), c = random_vector(len);
      if (!check(a, b, c)) {
        o.fail(std::string(what) + " fails on a random triple of length " + std::to_string(len));
        return;
      }
    }
    o.detail << exhaustive << " exhaustive triples (length <= 6) and " << opts_.random_triples
             << " random triples (length 8..128)";
  }

  // 7
  void mu_lemma(Outcome& o) {
    triples(o, "mu(a+b,c) = mu(b,c) + mu(a,b+c) - mu(a,b)", [](const BitVector& a, const BitVector& b, const BitVector& c) {
      const auto lhs = static_cast<long long>(mu(sdc::add(a, b), c));
      const auto rhs = static_cast<long long>(mu(b, c)) + static_cast<long long>(mu(a, sdc::add(b, c))) -
                       static_cast<long long>(mu(a, b));
      return lhs == rhs;
    });
  }

  // 8
  void weight_sum(Outcome& o) {
    triples(o, "w(a+b) = w(a) + w(b) - 2 mu(a,b)", [](const BitVector& a, const BitVector& b, const BitVector& c) {
      auto formula = [](const BitVector& x, const BitVector& y) {
        return static_cast<long long>(weight(sdc::add(x, y))) ==
               static_cast<long long>(weight(x) + weight(y)) - 2 * static_cast<long long>(mu(x, y));
      };
      return formula(a, b) && formula(b, c) && formula(a, c);
    });
  }

  // 9
  void all_ones(Outcome& o) {
    if (registry_.empty()) throw std::runtime_error("no self-dual codes were registered");
    std::size_t bad = 0;
    for (const auto& r : registry_) {
      if (!is_self_dual(r.code)) {
        o.fail(r.origin + ": registered code is not self-dual");
        continue;
      }
      if (!contains(r.code, BitVector::ones(r.code.n()))) {
        ++bad;
        o.fail(r.origin + ": all-ones word missing");
      }
    }
    if (o.passed) o.detail << "all-ones word lies in all " << registry_.size() << " self-dual codes constructed";
  }

  // 10
  void extremal(Outcome& o) {
    if (registry_.empty()) throw std::runtime_error("no self-dual codes were registered");
    std::size_t checked = 0;
    for (const auto& r : registry_) {
      const CodeType t = classify(r.code);
      if (t != CodeType::TypeI && t != CodeType::TypeII) continue;
      ++checked;
      const std::size_t bound = extremal_bound(r.code.n(), t);
      if (r.distance > bound)
        o.fail(r.origin + ": d=" + std::to_string(r.distance) + " exceeds the " + std::string(to_string(t)) +
               " bound " + std::to_string(bound));
    }
    for (const char* golay : {"G1", "G2", "G6"}) {
      const LinearCode c = require_code(golay);
      const std::size_t d = minimum_distance(c, opts_.enumeration);
      if (d != extremal_bound(24, CodeType::TypeII) || d != extremal_bound(24, CodeType::TypeI))
        o.fail(std::string(golay) + " does not meet the n=24 bounds with equality");
    }
    if (o.passed) o.detail << checked << " codes within bounds; Golay members meet 8 = 8 at n=24";
  }

  // 11
  void uniqueness(Outcome& o) {
    const LinearCode c1 = require_code("G1"), c2 = require_code("G2"), c3 = require_code("G3");
    const LinearCode cmax = max_doubly_even_subcode(c3);
    const LinearCode top = LinearCode::from_generator(opts_.fixtures.at("G3").slice_rows(0, 11));
    if (!(cmax == top)) o.fail("C_max(C3) differs from the span of rows 1-11 of G3");
    if (!(cmax == intersection(c1, intersection(c2, c3)))) o.fail("C_max(C3) differs from C1 ∩ C2 ∩ C3");

    std::size_t repeats = 0;
    auto repeat = [&](const Neighborhood& nb, const std::string& label) {
      for (const auto& m : nb.members) {
        if (m.type != CodeType::TypeI) continue;
        ++repeats;
        if (!neighborhood_of(m.code, opts_.enumeration).same_codes(nb)) o.fail(label + ": neighborhood not unique");
      }
      if (!neighborhood_containing(nb.c_max, opts_.enumeration).same_codes(nb))
        o.fail(label + ": neighborhood_containing(C_max) differs");
    };
    if (!n1_ || !n2_) throw std::runtime_error("fixture neighborhoods unavailable");
    repeat(*n1_, "N1");
    repeat(*n2_, "N2");
    for (const auto& nb : random_) repeat(nb, "random n=" + std::to_string(nb.n()));
    if (o.passed)
      o.detail << "C_max(C3) = <G3 rows 1-11> = C1 ∩ C2 ∩ C3; " << repeats << " repeated constructions agree";
  }

  // 12
  void equivalence(Outcome& o) {
    const LinearCode c1 = require_code("G1"), c2 = require_code("G2"), c3 = require_code("G3");
    const EquivalenceResult r12 = are_permutation_equivalent(c1, c2);
    if (!r12.witness)
      o.fail("no permutation maps C1 to C2");
    else if (!(apply_permutation(c1, *r12.witness) == c2))
      o.fail("witness permutation does not map C1 to C2");
    const EquivalenceResult r13 = are_permutation_equivalent(c1, c3);
    if (r13.witness || !r13.rejected_by_weight_enumerator) o.fail("C1, C3 not rejected by weight enumerator");
    if (o.passed)
      o.detail << "C1 ~ C2 via verified witness (" << r12.search_nodes
               << " search nodes); C1 !~ C3 by weight enumerator";
  }

  // 13
  void golay_enumerator(Outcome& o) {
    std::vector<std::uint64_t> expected(25, 0);
    expected[0] = 1;
    expected[8] = 759;
    expected[12] = 2576;
    expected[16] = 759;
    expected[24] = 1;
    const WeightEnumerator we = weight_enumerator(require_code("G1"), opts_.enumeration);
    if (we.counts != expected) o.fail("weight enumerator of C1 differs from {0:1, 8:759, 12:2576, 16:759, 24:1}");
    if (o.passed) o.detail << "{0:1, 8:759, 12:2576, 16:759, 24:1}";
  }

  // 14
  void oracle_agreement(Outcome& o) {
    std::uniform_int_distribution<std::size_t> length(8, 40), rows(1, 12);
    std::size_t done = 0;
    while (done < opts_.oracle_codes) {
      const std::size_t n = length(rng_);
      BitMatrix m(n);
      const std::size_t r = rows(rng_);
      for (std::size_t i = 0; i < r; ++i) m.push_back(random_vector(n));
      const LinearCode c = LinearCode::from_generator(m);
      if (c.k() == 0) continue;
      ++done;
      const std::size_t gray = minimum_distance(c, opts_.enumeration);
      const std::size_t naive = reference::naive_min_nonzero_weight(c.generator().rows(), n);
      if (gray != naive)
        o.fail("(" + std::to_string(n) + "," + std::to_string(c.k()) + ") code: Gray " + std::to_string(gray) +
               " vs naive " + std::to_string(naive));
    }
    if (o.passed) o.detail << done << " random codes with k <= 12 agree";
  }

  // 15
  void round_trip(Outcome& o) {
    std::size_t count = 0;
    for (const auto& name : fixture_names()) {
      const auto it = opts_.fixtures.find(name);
      if (it == opts_.fixtures.end()) {
        o.fail(name + " missing");
        continue;
      }
      for (bool spaced : {false, true}) {
        if (!(parse_matrix(serialize_matrix(it->second, spaced)) == it->second)) o.fail(name + " round-trip differs");
        ++count;
      }
      if (!(parse_matrix(fixture_text(name)) == fixture(name))) o.fail(name + " embedded text does not parse back");
    }
    std::uniform_int_distribution<std::size_t> cols(1, 80), rows(0, 20);
    for (std::size_t t = 0; t < opts_.roundtrip_matrices; ++t) {
      const std::size_t n = cols(rng_);
      BitMatrix m(n);
      const std::size_t r = rows(rng_);
      for (std::size_t i = 0; i < r; ++i) m.push_back(random_vector(n));
      const bool spaced = (t % 2) == 1;
      if (!(parse_matrix(serialize_matrix(m, spaced)) == m))
        o.fail("random " + std::to_string(r) + "x" + std::to_string(n) + " matrix round-trip differs");
      ++count;
    }
    if (o.passed) o.detail << count << " matrices round-trip bit-exactly";
  }

  // 16
  void search_determinism(Outcome& o) {
    SearchOptions s;
    s.n = 16;
    s.steps = 200;
    s.seed = 7;
    s.enumeration = opts_.enumeration;
    const std::string first = search_json(run_search(s), true);
    const std::string second = search_json(run_search(s), true);
    if (first != second) o.fail("two identical search runs produced different output");
    if (o.passed) o.detail << "search --n 16 --steps 200 --seed 7: identical output (" << first.size() << " bytes)";
  }

  const PaperCheckOptions& opts_;
  std::mt19937_64 rng_;
  std::vector<CheckResult> results_;
  std::vector<SelfDualRecord> registry_;
  std::optional<Neighborhood> n1_, n2_;
  std::vector<Neighborhood> random_;
};

}  // namespace

std::vector<CheckResult> run_paper_checks(const PaperCheckOptions& opts) { return Suite(opts).run(); }

}  // namespace sdc
