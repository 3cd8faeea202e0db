#pragma once

#include <string>

#include "u5slopes/dims.hpp"
#include "u5slopes/slopes.hpp"
#include "u5slopes/verify.hpp"

namespace u5s {

std::string to_json(const SlopeReport& rep);
std::string to_json(const SerreReport& rep, const std::string& char_name);
std::string to_json(const ValTableReport& rep);
std::string to_json(const ClassifyReport& rep);
std::string to_json(const ClassicalSlopeList& rep);
std::string to_csv(const ValTableReport& rep);
std::string slopes_csv(const SlopeReport& rep);

}  // namespace u5s
