#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "dessin/report.hpp"
#include "dessin/virasoro/correlators.hpp"

namespace dessin::harness {

/// Shared state for a run: an optional correlator table (e.g. loaded from
/// the cache; the table is internally synchronized) and the seed for the
/// randomized suites.
struct SuiteContext {
    virasoro::CorrelatorTable* table = nullptr;
    std::uint64_t seed = 0;
};

/// Optional overrides of a suite's default parameters.
struct SuiteParams {
    std::optional<int> order;
    std::optional<int> g;
    std::optional<int> n;
    std::optional<std::string> key;
    std::optional<int> cases;
};

struct SuiteInfo {
    std::string name;
    std::string description;
    /// Smallest order budget under which suite_all runs this suite.
    int budget = 0;
    bool randomized = false;
    std::function<std::vector<VerificationReport>(const SuiteContext&, const SuiteParams&)> run;
};

const std::vector<SuiteInfo>& suite_registry();
const SuiteInfo* find_suite(const std::string& name);
std::vector<std::string> suite_names();

inline constexpr int kDefaultBudget = 25;

/// Every registered suite; suites above `budget` are reported as skipped,
/// randomized ones are left out when `include_randomized` is false.
/// `jobs` > 1 runs suites concurrently; report order is the registry order.
std::vector<VerificationReport> suite_all(int budget, const SuiteContext& ctx, bool include_randomized, int jobs = 1);

struct Summary {
    int passed = 0;
    int failed = 0;
    int skipped = 0;
};
Summary summarize(const std::vector<VerificationReport>& reports);

}  // namespace dessin::harness
