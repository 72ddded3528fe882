#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

#include "kabminor/minors.hpp"

namespace kabminor {

enum class CheckStatus { Pass, Fail, Inconclusive };
std::string_view to_string(CheckStatus s);

struct CheckOutcome {
    std::string id;
    /// Parameter ranges, grids and seeds that reproduce the check.
    nlohmann::json scope = nlohmann::json::object();
    CheckStatus status = CheckStatus::Pass;
    /// Worst signed slack; positive means satisfied with room.
    std::optional<double> margin;
    /// graph6 of offending instances.
    std::vector<std::string> artifacts;
    nlohmann::json details = nlohmann::json::object();

    nlohmann::json to_json() const;
};

struct VerifyConfig {
    /// Replaces the per-b default grid when set.
    std::optional<std::vector<double>> alphas;
    /// Overrides the b sweep of checks that take one.
    std::optional<std::pair<std::size_t, std::size_t>> b_range;
    std::uint64_t budget = kDefaultMinorBudget;
    std::size_t jobs = 1;
    std::uint64_t seed = 20240917;

    nlohmann::json to_json() const;
};

/// {0, 0.1, ..., 0.9} together with 2/(b+1), ascending, duplicates removed.
std::vector<double> default_alpha_grid(std::size_t b);

// Spectral identities.
CheckOutcome check_quotient_equality(const VerifyConfig& cfg);
CheckOutcome check_lemma_updown(const VerifyConfig& cfg);
CheckOutcome check_polynomial_identities(const VerifyConfig& cfg);

// Perron-vector bounds around a clique dominating set.
CheckOutcome check_mm_bounds(const VerifyConfig& cfg);
CheckOutcome check_degree_ordering_claim(const VerifyConfig& cfg);

// Exhaustive combinatorics.
CheckOutcome check_edge_lemmas(const VerifyConfig& cfg);
CheckOutcome check_petersen_block(const VerifyConfig& cfg);
CheckOutcome check_ab_blocks(const VerifyConfig& cfg);
/// Star-minor theorem regimes on the enumerator corpus.
CheckOutcome check_theorem_small_n(const VerifyConfig& cfg);
/// Generic form: a = 1 is asserted inside the theorem's regime, a >= 2 is reported as data.
CheckOutcome check_theorem_small_n(std::size_t a, std::size_t b, const std::vector<std::size_t>& ns,
                                   const std::vector<double>& alphas, const VerifyConfig& cfg);
/// Candidate orderings inside K_{a-1} v (...) for (a, b) = (2, 3), n = 8..12, plus (2, 5) at n = 17. Report only.
CheckOutcome check_candidates(const VerifyConfig& cfg);

// Randomised property suites (seeded).
CheckOutcome check_monotonicity(const VerifyConfig& cfg);
CheckOutcome check_rewiring(const VerifyConfig& cfg);
CheckOutcome check_xy_identity(const VerifyConfig& cfg);
CheckOutcome check_majorization(const VerifyConfig& cfg);
CheckOutcome check_degree_bounds(const VerifyConfig& cfg);
CheckOutcome check_eigen_residuals(const VerifyConfig& cfg);

/// Suite names accepted by run_check, in the order `all` runs them.
const std::vector<std::string>& suite_names();
/// Throws std::invalid_argument for an unknown name.
CheckOutcome run_check(const std::string& name, const VerifyConfig& cfg);
/// "all" expands to every suite. Checks run in parallel; output order follows `names`.
std::vector<CheckOutcome> run_suite(const std::vector<std::string>& names, const VerifyConfig& cfg);

}  // namespace kabminor
