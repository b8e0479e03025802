#pragma once

// Exhaustive small-rank verification suites.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "mvlab/lagrangian.hpp"

namespace mvlab {

/// All Lusztig data of rank n with entry sum <= max_height.
struct Slice {
    int n = 1;
    int max_height = 0;
};

struct SuiteOptions {
    std::vector<Slice> slices;  // empty: the suite's default slices
    unsigned jobs = 1;
    std::vector<std::uint64_t> primes{kDefaultPrime, kSecondPrime};
    std::vector<std::uint64_t> seeds{1, 2, 3};
    int resamples = 3;
    double min_mutation_detection = 0.95;
    int max_adapted_rank = 6;
    int max_braid_replay_rank = 4;
};

struct Violation {
    std::string key;
    std::string detail;
};

struct VerifyReport {
    std::string suite;
    std::size_t instances = 0;
    std::vector<Violation> violations;     // sorted by key
    std::map<std::string, double> metrics;
    double wall_seconds = 0;

    bool passed() const { return violations.empty(); }
};

/// Suite names accepted by run_suite, excluding "all".
const std::vector<std::string>& suite_names();

/// Default slices for a suite.
std::vector<Slice> default_slices(const std::string& suite);

/// Slices from optional --n / --max-height overrides.
std::vector<Slice> resolve_slices(const std::string& suite, std::optional<int> n, std::optional<int> max_height);

/// Throws Error for an unknown suite name.
VerifyReport run_suite(const std::string& suite, const SuiteOptions& options);

/// Runs every suite in suite_names() order.
std::vector<VerifyReport> run_all(const SuiteOptions& options);

/// Report as JSON; wall time is included only when timing is set, so that
/// reports are otherwise bit-identical across runs.
nlohmann::json report_json(const VerifyReport& report, bool timing, std::size_t max_listed = 200);

}  // namespace mvlab
