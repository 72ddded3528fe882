#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "kabminor/families.hpp"
#include "kabminor/graph.hpp"
#include "kabminor/minors.hpp"
#include "kabminor/spectral.hpp"

namespace kabminor {

/// Two radii are treated as equal when they differ by at most this much.
inline constexpr double kTieTolerance = 1e-9;

struct ExtremalPrediction {
    FamilyParams params;
    double alpha = 0.0;
    Clause clause = Clause::OutsideTheorem;
    /// Present iff clause != OutsideTheorem.
    std::optional<Graph> graph;
    std::string caveat;
    /// Minor-freeness of `graph`, decided before the prediction is returned.
    std::optional<MinorVerdict> verified;
};

/// Needs 1 <= a <= b <= n. a = 1 selects among the star-minor clauses,
/// a >= 2 among the K_{a,b} clauses via (t, tau).
ExtremalPrediction predict(std::size_t a, std::size_t b, std::size_t n, AlphaParam alpha,
                           std::uint64_t budget = kDefaultMinorBudget);

struct Constraint {
    enum class Kind { StarMinorFree, KabMinorFree, AbProperty };
    Kind kind = Kind::StarMinorFree;
    std::size_t a = 1;
    std::size_t b = 1;

    /// "star-minor-free:b", "kab-minor-free:a,b" or "ab-property:a,b".
    static Constraint parse(const std::string& text);
    std::string describe() const;
};

struct Corpus {
    std::string source;
    std::vector<Graph> graphs;
};

/// Internal enumerator corpus ("enumerator:n=6,connected").
Corpus enumerator_corpus(std::size_t n, bool connected_only);
/// graph6 file corpus; malformed records raise Graph6Error with the line number.
Corpus graph6_corpus(const std::string& path, bool connected_only);

/// A constraint decision ran out of budget on `graph6`.
class SearchAborted : public std::runtime_error {
public:
    SearchAborted(const std::string& graph6, std::uint64_t budget);
    const std::string& graph6() const noexcept { return graph6_; }

private:
    std::string graph6_;
};

struct SearchOptions {
    std::size_t jobs = 1;
    std::uint64_t budget = kDefaultMinorBudget;
};

struct SearchReport {
    std::string constraint;
    double alpha = 0.0;
    std::string corpus_source;
    std::size_t corpus_count = 0;
    std::size_t admitted = 0;
    double lambda_max = 0.0;
    /// Canonical graph6 of every admitted graph within kTieTolerance of lambda_max, sorted.
    std::vector<std::string> maximizers;
    /// Present when the corpus has a single order and the constraint is a minor test.
    std::optional<ExtremalPrediction> prediction;
    std::optional<std::string> prediction_graph6;
    /// The maximizer is unique and isomorphic to the predicted graph.
    std::optional<bool> agrees;

    nlohmann::json to_json() const;
};

/// Graphs of `corpus` satisfying `c`, in corpus order. Throws SearchAborted.
std::vector<Graph> admit(const Corpus& corpus, const Constraint& c, const SearchOptions& opts = {});

/// One report per alpha; the constraint is decided once for all of them.
std::vector<SearchReport> search_max(const Corpus& corpus, const Constraint& c, std::span<const double> alphas,
                                     const SearchOptions& opts = {});
SearchReport search_max(const Corpus& corpus, const Constraint& c, AlphaParam alpha, const SearchOptions& opts = {});

struct CandidateRow {
    std::string id;
    std::string graph6;
    std::size_t order = 0;
    std::size_t size = 0;
    double lambda = 0.0;
    /// lambda exceeds the next row's by more than kTieTolerance (false on the last row).
    bool strictly_above_next = false;
};

struct CandidateTable {
    double alpha = 0.0;
    /// Sorted by lambda descending; exact ties keep their input order.
    std::vector<CandidateRow> rows;
    nlohmann::json to_json() const;
};

/// Throws std::invalid_argument unless all candidates have the same order.
CandidateTable compare_candidates(std::span<const std::pair<std::string, Graph>> candidates, AlphaParam alpha,
                                  std::size_t jobs = 1);

/// canonical_form when the order allows it, plain graph6 otherwise.
std::string report_form(const Graph& g);

}  // namespace kabminor
