#pragma once

#include <map>
#include <string>
#include <vector>

#include "json.hpp"
#include "polya/polya.hpp"

namespace polya {

void to_json(nlohmann::json& j, const PolyaReport& r);
void from_json(const nlohmann::json& j, PolyaReport& r);

// [{"splitting_type": "1+2", "density": "1/2"}, ...]
nlohmann::json densities_to_json(const std::map<SplittingType, Rational>& densities);

std::string census_csv(const std::vector<CensusRow>& rows);
nlohmann::json census_to_json(const std::vector<CensusRow>& rows);

}  // namespace polya
