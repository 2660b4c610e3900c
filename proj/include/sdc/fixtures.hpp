// Embedded generator matrices G1..G6 of the two length-24 neighborhoods
// {C1, C2, C3} and {C4, C5, C6}.
#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "sdc/gf2.hpp"

namespace sdc {

using FixtureSet = std::map<std::string, BitMatrix>;

std::vector<std::string> fixture_names();
/// The embedded text, spaced rows without a header. Throws on unknown names.
std::string_view fixture_text(std::string_view name);
BitMatrix fixture(std::string_view name);
FixtureSet default_fixtures();

}  // namespace sdc
