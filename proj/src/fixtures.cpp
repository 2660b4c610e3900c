#include "sdc/fixtures.hpp"

#include <array>
#include <stdexcept>
#include <string>
#include <utility>

#include "sdc/matrix_io.hpp"

namespace sdc {

namespace {

// Generator matrices of six self-dual (24,12) codes forming two neighborhoods:
// G1, G2, G3 share rows 1-11, as do G4, G5, G6.
constexpr std::string_view kG1 =
    "1 0 0 0 0 0 0 0 0 0 0 1 1 1 1 1 1 1 1 1 1 0 0 1\n"
    "0 1 0 0 0 0 0 0 0 0 0 0 1 1 1 1 1 1 0 0 0 1 0 0\n"
    "0 0 1 0 0 0 0 0 0 0 0 0 1 1 1 0 0 0 1 1 1 1 0 0\n"
    "0 0 0 1 0 0 0 0 0 0 0 0 1 0 1 1 1 0 1 0 1 0 1 0\n"
    "0 0 0 0 1 0 0 0 0 0 0 0 0 1 1 1 0 1 0 1 1 0 1 0\n"
    "0 0 0 0 0 1 0 0 0 0 0 1 1 0 1 0 0 0 0 1 1 0 1 1\n"
    "0 0 0 0 0 0 1 0 0 0 0 1 0 1 1 0 0 1 0 0 1 1 0 1\n"
    "0 0 0 0 0 0 0 1 0 0 0 1 1 1 0 0 1 0 0 1 0 1 0 1\n"
    "0 0 0 0 0 0 0 0 1 0 0 1 0 0 0 1 0 1 1 0 1 0 1 1\n"
    "0 0 0 0 0 0 0 0 0 1 0 1 1 0 1 1 0 0 1 0 0 1 0 1\n"
    "0 0 0 0 0 0 0 0 0 0 1 1 0 1 1 1 1 0 0 0 0 0 1 1\n"
    "0 0 0 0 0 0 0 0 0 0 0 0 0 0 1 0 1 1 1 1 0 1 1 1\n";

constexpr std::string_view kG2 =
    "1 0 0 0 0 0 0 0 0 0 0 1 1 1 1 1 1 1 1 1 1 0 0 1\n"
    "0 1 0 0 0 0 0 0 0 0 0 0 1 1 1 1 1 1 0 0 0 1 0 0\n"
    "0 0 1 0 0 0 0 0 0 0 0 0 1 1 1 0 0 0 1 1 1 1 0 0\n"
    "0 0 0 1 0 0 0 0 0 0 0 0 1 0 1 1 1 0 1 0 1 0 1 0\n"
    "0 0 0 0 1 0 0 0 0 0 0 0 0 1 1 1 0 1 0 1 1 0 1 0\n"
    "0 0 0 0 0 1 0 0 0 0 0 1 1 0 1 0 0 0 0 1 1 0 1 1\n"
    "0 0 0 0 0 0 1 0 0 0 0 1 0 1 1 0 0 1 0 0 1 1 0 1\n"
    "0 0 0 0 0 0 0 1 0 0 0 1 1 1 0 0 1 0 0 1 0 1 0 1\n"
    "0 0 0 0 0 0 0 0 1 0 0 1 0 0 0 1 0 1 1 0 1 0 1 1\n"
    "0 0 0 0 0 0 0 0 0 1 0 1 1 0 1 1 0 0 1 0 0 1 0 1\n"
    "0 0 0 0 0 0 0 0 0 0 1 1 0 1 1 1 1 0 0 0 0 0 1 1\n"
    "0 0 0 0 0 0 0 0 0 0 0 1 0 0 1 0 1 1 1 1 0 1 1 0\n";

constexpr std::string_view kG3 =
    "1 0 0 0 0 0 0 0 0 0 0 1 1 1 1 1 1 1 1 1 1 0 0 1\n"
    "0 1 0 0 0 0 0 0 0 0 0 0 1 1 1 1 1 1 0 0 0 1 0 0\n"
    "0 0 1 0 0 0 0 0 0 0 0 0 1 1 1 0 0 0 1 1 1 1 0 0\n"
    "0 0 0 1 0 0 0 0 0 0 0 0 1 0 1 1 1 0 1 0 1 0 1 0\n"
    "0 0 0 0 1 0 0 0 0 0 0 0 0 1 1 1 0 1 0 1 1 0 1 0\n"
    "0 0 0 0 0 1 0 0 0 0 0 1 1 0 1 0 0 0 0 1 1 0 1 1\n"
    "0 0 0 0 0 0 1 0 0 0 0 1 0 1 1 0 0 1 0 0 1 1 0 1\n"
    "0 0 0 0 0 0 0 1 0 0 0 1 1 1 0 0 1 0 0 1 0 1 0 1\n"
    "0 0 0 0 0 0 0 0 1 0 0 1 0 0 0 1 0 1 1 0 1 0 1 1\n"
    "0 0 0 0 0 0 0 0 0 1 0 1 1 0 1 1 0 0 1 0 0 1 0 1\n"
    "0 0 0 0 0 0 0 0 0 0 1 1 0 1 1 1 1 0 0 0 0 0 1 1\n"
    "0 0 0 0 0 0 0 0 0 0 0 1 0 0 0 0 0 0 0 0 0 0 0 1\n";

constexpr std::string_view kG4 =
    "1 0 0 0 0 0 0 0 0 0 0 0 1 1 1 1 1 1 1 1 1 1 1 0\n"
    "0 1 0 0 0 0 0 0 0 0 0 1 0 1 0 1 1 0 1 1 1 0 0 0\n"
    "0 0 1 0 0 0 0 0 0 0 0 1 0 1 0 1 1 1 0 0 0 1 1 0\n"
    "0 0 0 1 0 0 0 0 0 0 0 1 0 0 1 0 1 0 1 1 0 1 1 0\n"
    "0 0 0 0 1 0 0 0 0 0 0 0 0 1 1 1 1 0 0 1 0 0 1 1\n"
    "0 0 0 0 0 1 0 0 0 0 0 0 0 1 0 0 1 1 1 1 0 1 0 1\n"
    "0 0 0 0 0 0 1 0 0 0 0 0 0 0 1 0 1 1 0 0 1 1 1 1\n"
    "0 0 0 0 0 0 0 1 0 0 0 1 1 1 1 0 1 0 0 0 1 0 1 0\n"
    "0 0 0 0 0 0 0 0 1 0 0 1 0 1 1 0 0 1 1 0 1 1 0 0\n"
    "0 0 0 0 0 0 0 0 0 1 0 1 1 0 0 0 1 1 0 1 1 1 0 0\n"
    "0 0 0 0 0 0 0 0 0 0 1 1 0 0 1 1 0 1 0 1 1 0 1 0\n"
    "0 0 0 0 0 0 0 0 0 0 0 1 1 0 1 0 0 1 0 0 1 0 0 1\n";

constexpr std::string_view kG5 =
    "1 0 0 0 0 0 0 0 0 0 0 0 1 1 1 1 1 1 1 1 1 1 1 0\n"
    "0 1 0 0 0 0 0 0 0 0 0 1 0 1 0 1 1 0 1 1 1 0 0 0\n"
    "0 0 1 0 0 0 0 0 0 0 0 1 0 1 0 1 1 1 0 0 0 1 1 0\n"
    "0 0 0 1 0 0 0 0 0 0 0 1 0 0 1 0 1 0 1 1 0 1 1 0\n"
    "0 0 0 0 1 0 0 0 0 0 0 0 0 1 1 1 1 0 0 1 0 0 1 1\n"
    "0 0 0 0 0 1 0 0 0 0 0 0 0 1 0 0 1 1 1 1 0 1 0 1\n"
    "0 0 0 0 0 0 1 0 0 0 0 0 0 0 1 0 1 1 0 0 1 1 1 1\n"
    "0 0 0 0 0 0 0 1 0 0 0 1 1 1 1 0 1 0 0 0 1 0 1 0\n"
    "0 0 0 0 0 0 0 0 1 0 0 1 0 1 1 0 0 1 1 0 1 1 0 0\n"
    "0 0 0 0 0 0 0 0 0 1 0 1 1 0 0 0 1 1 0 1 1 1 0 0\n"
    "0 0 0 0 0 0 0 0 0 0 1 1 0 0 1 1 0 1 0 1 1 0 1 0\n"
    "0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 1 1 0 1 0 1 0 0 0\n";

constexpr std::string_view kG6 =
    "1 0 0 0 0 0 0 0 0 0 0 0 1 1 1 1 1 1 1 1 1 1 1 0\n"
    "0 1 0 0 0 0 0 0 0 0 0 1 0 1 0 1 1 0 1 1 1 0 0 0\n"
    "0 0 1 0 0 0 0 0 0 0 0 1 0 1 0 1 1 1 0 0 0 1 1 0\n"
    "0 0 0 1 0 0 0 0 0 0 0 1 0 0 1 0 1 0 1 1 0 1 1 0\n"
    "0 0 0 0 1 0 0 0 0 0 0 0 0 1 1 1 1 0 0 1 0 0 1 1\n"
    "0 0 0 0 0 1 0 0 0 0 0 0 0 1 0 0 1 1 1 1 0 1 0 1\n"
    "0 0 0 0 0 0 1 0 0 0 0 0 0 0 1 0 1 1 0 0 1 1 1 1\n"
    "0 0 0 0 0 0 0 1 0 0 0 1 1 1 1 0 1 0 0 0 1 0 1 0\n"
    "0 0 0 0 0 0 0 0 1 0 0 1 0 1 1 0 0 1 1 0 1 1 0 0\n"
    "0 0 0 0 0 0 0 0 0 1 0 1 1 0 0 0 1 1 0 1 1 1 0 0\n"
    "0 0 0 0 0 0 0 0 0 0 1 1 0 0 1 1 0 1 0 1 1 0 1 0\n"
    "0 0 0 0 0 0 0 0 0 0 0 1 1 0 1 1 1 1 1 0 0 0 0 1\n";

constexpr std::array<std::pair<std::string_view, std::string_view>, 6> kFixtures{{
    {"G1", kG1}, {"G2", kG2}, {"G3", kG3}, {"G4", kG4}, {"G5", kG5}, {"G6", kG6},
}};

}  // namespace

std::vector<std::string> fixture_names() {
  std::vector<std::string> names;
  for (const auto& [name, text] : kFixtures) names.emplace_back(name);
  return names;
}

std::string_view fixture_text(std::string_view name) {
  for (const auto& [fname, text] : kFixtures)
    if (fname == name) return text;
  throw std::invalid_argument("unknown fixture '" + std::string(name) + "' (expected one of G1..G6)");
}

BitMatrix fixture(std::string_view name) { return parse_matrix(fixture_text(name)); }

FixtureSet default_fixtures() {
  FixtureSet set;
  for (const auto& [name, text] : kFixtures) set.emplace(std::string(name), parse_matrix(text));
  return set;
}

}  // namespace sdc
