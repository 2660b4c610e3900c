#include "sdc/search.hpp"

#include <stdexcept>

#include <json.hpp>

#include "sdc/errors.hpp"
#include "sdc/neighborhood.hpp"

namespace sdc {

namespace {

void consider(std::optional<SearchBest>& best, const LinearCode& c, std::size_t d, std::size_t step) {
  if (!best || d > best->distance) best = SearchBest{d, step, c};
}

nlohmann::json best_json(const std::optional<SearchBest>& b, std::size_t n, CodeType t, bool with_distance,
                         bool include_generators) {
  nlohmann::json j;
  j["bound"] = extremal_bound(n, t);
  if (!b) {
    j["found"] = false;
    return j;
  }
  j["found"] = true;
  j["d"] = with_distance ? nlohmann::json(b->distance) : nlohmann::json(nullptr);
  j["step"] = b->step;
  if (include_generators) {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& r : b->code.generator().rows()) rows.push_back(r.to_string());
    j["generator"] = std::move(rows);
  }
  return j;
}

}  // namespace

SearchResult run_search(const SearchOptions& opts) {
  if (opts.n == 0 || opts.n % 8 != 0) throw std::invalid_argument("search requires 8 | n");
  if (opts.compute_distance && opts.n / 2 > opts.enumeration.cap)
    throw InstanceTooLarge("instance too large: dimension " + std::to_string(opts.n / 2) +
                           " exceeds the enumeration cap of " + std::to_string(opts.enumeration.cap) +
                           " (use --no-distance to skip distance computation)");

  SearchResult r;
  r.options = opts;
  NeighborWalk walk(opts.n, opts.seed);

  auto visit = [&](std::size_t step) {
    const LinearCode& c = walk.current();
    const CodeType t = classify(c);
    const std::size_t d = opts.compute_distance ? minimum_distance(c, opts.enumeration) : 0;
    if (t == CodeType::TypeI) {
      ++r.type1_seen;
      consider(r.best_type1, c, d, step);
    } else {
      ++r.type2_seen;
      consider(r.best_type2, c, d, step);
    }
    return opts.compute_distance && opts.min_distance && d >= *opts.min_distance;
  };

  if (visit(0)) {
    r.stopped_early = true;
    return r;
  }
  for (std::size_t s = 1; s <= opts.steps; ++s) {
    walk.step();
    r.steps_taken = s;
    if (visit(s)) {
      r.stopped_early = true;
      break;
    }
  }
  return r;
}

std::string search_json(const SearchResult& r, bool include_generators) {
  const auto& o = r.options;
  nlohmann::json j;
  j["command"] = "search";
  j["n"] = o.n;
  j["steps"] = o.steps;
  j["seed"] = o.seed;
  j["min_d"] = o.min_distance ? nlohmann::json(*o.min_distance) : nlohmann::json(nullptr);
  j["distance_computed"] = o.compute_distance;
  j["steps_taken"] = r.steps_taken;
  j["stopped_early"] = r.stopped_early;
  j["type1_seen"] = r.type1_seen;
  j["type2_seen"] = r.type2_seen;
  j["best_type1"] = best_json(r.best_type1, o.n, CodeType::TypeI, o.compute_distance, include_generators);
  j["best_type2"] = best_json(r.best_type2, o.n, CodeType::TypeII, o.compute_distance, include_generators);
  return j.dump();
}

}  // namespace sdc
