// Seeded neighbor-walk search for self-dual codes with large minimum distance.
#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>

#include "sdc/code.hpp"

namespace sdc {

struct SearchOptions {
  std::size_t n = 16;
  std::size_t steps = 100;
  std::uint64_t seed = 1;
  /// Stop as soon as a code with d >= min_distance is seen.
  std::optional<std::size_t> min_distance;
  /// When false, distances are not computed and only types are tracked.
  bool compute_distance = true;
  EnumerationOptions enumeration;
};

struct SearchBest {
  std::size_t distance = 0;  ///< 0 when distances are not computed
  std::size_t step = 0;      ///< walk step at which the code was first seen
  LinearCode code;
};

struct SearchResult {
  SearchOptions options;
  std::size_t steps_taken = 0;
  bool stopped_early = false;
  std::size_t type1_seen = 0;
  std::size_t type2_seen = 0;
  std::optional<SearchBest> best_type1;
  std::optional<SearchBest> best_type2;
};

/// Walks from pair_repetition_code(n) (step 0) through `steps` neighbor steps,
/// keeping the first code reaching the best distance of each type.
/// Requires 8 | n, and n/2 <= cap unless compute_distance is false.
SearchResult run_search(const SearchOptions& opts);

/// One-line JSON record; byte-identical for identical options.
std::string search_json(const SearchResult& r, bool include_generators);

}  // namespace sdc
