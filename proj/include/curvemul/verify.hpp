#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "curvemul/scene.hpp"

// Exhaustive, bounded checks of the algebraic and topological properties of
// the multiplication. Failures are data: every suite returns a report, never
// throws for a violated property.
namespace curvemul::verify {

struct Failure {
    std::string clause;
    std::string inputs;
    std::string lhs;
    std::string rhs;
    std::string rerun;  // CLI invocation that reproduces the values
};

struct SuiteReport {
    static constexpr std::size_t kMaxWitnesses = 50;

    std::string suite;
    nlohmann::json params = nlohmann::json::object();
    std::int64_t cases = 0;
    std::map<std::string, std::int64_t> clause_cases;
    std::vector<Failure> failures;  // first kMaxWitnesses witnesses
    std::int64_t failure_count = 0;
    /// Set when the property is unbounded and only a finite window was searched.
    bool bounded_evidence = false;
    double millis = 0.0;

    bool passed() const { return failure_count == 0; }

    /// Counts one case of `clause`; on failure stores the witness built by `make`.
    template <typename MakeFailure>
    void expect(std::string_view clause, bool ok, MakeFailure&& make) {
        ++cases;
        ++clause_cases[std::string(clause)];
        if (ok) return;
        ++failure_count;
        if (failures.size() < kMaxWitnesses) {
            Failure f = make();
            f.clause = std::string(clause);
            failures.push_back(std::move(f));
        }
    }

    /// `millis` is left out when include_timing is false so reports can be compared byte for byte.
    nlohmann::json to_json(bool include_timing = true) const;
};

SuiteReport suite_theorem1(std::int64_t bound);
SuiteReport suite_convexity(std::int64_t bound, std::int64_t n_min, std::int64_t n_max);
SuiteReport suite_theorem6(std::int64_t bound, std::int64_t gamma_bound);
SuiteReport suite_prop7(std::int64_t bound, std::int64_t m_max);
SuiteReport suite_lemma4_and_oracle(std::int64_t bound,
                                    scene::SmoothingConvention convention = scene::SmoothingConvention::Standard,
                                    const std::optional<std::filesystem::path>& corpus_dir = std::nullopt);
SuiteReport suite_dt(std::int64_t trials, std::uint64_t seed);

struct Config {
    std::int64_t theorem1_bound = 4;
    std::int64_t convexity_bound = 3;
    std::int64_t n_min = -6;
    std::int64_t n_max = 6;
    std::int64_t theorem6_bound = 4;
    std::int64_t gamma_bound = 6;
    std::int64_t prop7_bound = 3;
    std::int64_t m_max = 3;
    std::int64_t lemma4_bound = 4;
    std::int64_t dt_trials = 1000;
    std::uint64_t seed = 7;
    scene::SmoothingConvention smoothing = scene::SmoothingConvention::Standard;
    std::optional<std::filesystem::path> corpus_dir;
    std::vector<std::string> suites;  // empty: all
};

/// theorem1, convexity, theorem6, prop7, lemma4, dt
const std::vector<std::string>& suite_names();

struct OverallReport {
    std::vector<SuiteReport> suites;

    bool passed() const;
    nlohmann::json to_json(bool include_timing = true) const;
};

/// Throws InvalidBound for an unknown suite name or a bound below 1.
OverallReport run_all(const Config& config);

/// Throws Io when the file cannot be written.
void write_report(const OverallReport& report, const std::filesystem::path& path);

}  // namespace curvemul::verify
