#pragma once

#include <cstdint>
#include <string>

#include <json.hpp>

namespace tiltrich::cli {

// Property catalogue at level "fast" or "full"; one entry per property with a counterexample on failure.
nlohmann::ordered_json run_verify(const std::string& level, int n, std::uint64_t seed, unsigned workers);

}  // namespace tiltrich::cli
