#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

namespace thetapos {

/// Runs every invariant suite with generators seeded from `seed`; `scale`
/// multiplies the trial counts. The report lists each suite with its pass
/// count and, on failure, the first counterexample (trial index plus inputs).
nlohmann::json run_selftest(std::uint64_t seed, std::size_t scale = 1);

std::vector<std::string> selftest_suite_names();

}  // namespace thetapos
