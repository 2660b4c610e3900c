// End-to-end reproduction checks for the length-24 neighborhoods and the
// neighborhood theorems. Shared by `sdcode verify-paper` and the acceptance
// test binary.
#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "sdc/code.hpp"
#include "sdc/fixtures.hpp"

namespace sdc {

struct CheckResult {
  int id;
  std::string name;
  bool passed;
  std::string detail;
};

struct PaperCheckOptions {
  FixtureSet fixtures = default_fixtures();
  EnumerationOptions enumeration;
  std::uint64_t seed = 20240607;
  std::size_t random_neighborhoods_per_length = 100;  ///< at each of n = 8, 16, 24
  std::size_t walk_warmup = 24;
  std::size_t d2_neighborhoods_per_length = 20;
  std::size_t random_triples = 10000;
  std::size_t oracle_codes = 50;
  std::size_t roundtrip_matrices = 100;
};

/// Runs all sixteen checks; results are ordered by id. Exceptions inside a
/// check turn into a failed result.
std::vector<CheckResult> run_paper_checks(const PaperCheckOptions& opts = {});

}  // namespace sdc
