#pragma once

#include <json.hpp>

#include "prismdom/sweep.hpp"
#include "prismdom/verifier.hpp"

namespace prismdom {

nlohmann::json edges_json(const Graph& g);
nlohmann::json to_json(const SweepMode& mode);
nlohmann::json to_json(const SweepResult& r, Classification c);
nlohmann::json to_json(const Certificate& cert);
nlohmann::json to_json(const VerificationReport& rep);

}  // namespace prismdom
