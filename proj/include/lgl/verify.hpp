#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

namespace lgl::verify {

/// One failed case: the serialized instance plus what went wrong.  Feeding
/// (suite, seed, case_index) back through replay_case reproduces it exactly.
struct Violation {
    std::uint64_t case_index = 0;
    std::uint64_t case_seed = 0;
    nlohmann::json input;
    std::string detail;
};

struct Report {
    std::string suite_id;
    std::uint64_t seed = 0;
    std::uint64_t cases_run = 0;
    std::vector<Violation> violations;  // sorted by case_index
    bool complete = true;
    std::uint64_t elapsed_ms = 0;

    bool passed() const { return violations.empty() && complete; }
};

/// {"schema": 1, "suite_id", "seed", "cases_run", "violations", "budget_status",
///  "elapsed_ms"}.
nlohmann::json report_to_json(const Report& r);

struct SuiteInfo {
    std::string id;
    std::string result;       ///< law tag, e.g. "thm:nil_max"
    std::string description;
    std::vector<std::string> covers;  ///< behavior tags, each unique across the registry
};

/// The full registry in a fixed order.
const std::vector<SuiteInfo>& suites();
const SuiteInfo* find_suite(const std::string& id);

/// Runs `cases` seeded cases of one suite.  A positive `budget` caps how many
/// cases actually execute; hitting the cap yields a partial report.  `threads`
/// only splits the work: the report is identical for every thread count.
/// Unknown ids raise errc::unknown_suite.
Report run_suite(const std::string& id, std::uint64_t seed, std::uint64_t cases,
                 std::uint64_t budget = 0, std::size_t threads = 1);

/// Re-runs exactly one case and returns its violation, if any — the replay
/// path for reported violations.
std::optional<Violation> replay_case(const std::string& id, std::uint64_t seed,
                                     std::uint64_t case_index);

} // namespace lgl::verify
