#include "kabminor/extremal.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "kabminor/canonical.hpp"
#include "kabminor/graph6.hpp"
#include "kabminor/parallel.hpp"

namespace kabminor {

namespace {

MinorVerdict verify_prediction(const Graph& g, std::size_t a, std::size_t b, std::uint64_t budget) {
    if (a == 1) return star_minor_free(g, b) ? MinorVerdict::Free : MinorVerdict::Contains;
    const auto apex = find_clique_dominating_set(g, a - 1);
    if (!apex) return has_minor(g, complete_bipartite(a, b), budget).verdict;
    return minor_free_given_apex(g, *apex, a, b, budget);
}

}  // namespace

ExtremalPrediction predict(std::size_t a, std::size_t b, std::size_t n, AlphaParam alpha, std::uint64_t budget) {
    if (a < 1 || b < a || n < b) throw std::invalid_argument("predict needs 1 <= a <= b <= n");
    ExtremalPrediction out;
    out.params = FamilyParams::make(a, b, n);
    out.alpha = alpha;
    const auto& p = out.params;

    if (a == 1) {
        if (b < 3) {
            out.caveat = "the star-minor theorem needs b >= 3";
        } else if (n == b + 1) {
            out.clause = Clause::T13_i;
        } else if (b == 3 || double(alpha) >= 2.0 / double(b + 1)) {
            out.clause = Clause::T13_ii;
        } else {
            out.caveat = "alpha below 2/(b+1) is open for b >= 4";
        }
    } else {
        out.caveat = "theorem requires large n";
        const std::size_t tau = p.tau();
        Clause c;
        bool fits;
        if (p.t + 2 <= 2 * tau) {
            c = (p.t == 2 && tau == 2) ? Clause::T14_i_special : Clause::T14_i;
            fits = c == Clause::T14_i_special ? p.k >= 1 : p.k >= p.t;
        } else {
            c = (p.t == 2 && tau == 1 && b == 8) ? Clause::T14_ii_special : Clause::T14_ii;
            fits = c == Clause::T14_ii_special ? p.k >= 1 : true;
        }
        if (fits) {
            out.clause = c;
        } else {
            out.caveat = "n too small for the construction of clause " + std::string(to_string(c));
        }
    }
    if (out.clause != Clause::OutsideTheorem) {
        out.graph = extremal_family(p, out.clause);
        out.verified = verify_prediction(*out.graph, a, b, budget);
    }
    return out;
}

Constraint Constraint::parse(const std::string& text) {
    const auto colon = text.find(':');
    if (colon == std::string::npos) throw std::invalid_argument("constraint needs the form name:params");
    const std::string name = text.substr(0, colon);
    std::vector<std::size_t> nums;
    std::stringstream ss(text.substr(colon + 1));
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t used = 0;
        unsigned long v = 0;
        try {
            v = std::stoul(item, &used);
        } catch (...) {
            used = 0;
        }
        if (used == 0 || used != item.size()) throw std::invalid_argument("bad constraint parameter '" + item + "'");
        nums.push_back(v);
    }
    Constraint c;
    if (name == "star-minor-free" && nums.size() == 1) {
        c.kind = Kind::StarMinorFree;
        c.a = 1;
        c.b = nums[0];
    } else if ((name == "kab-minor-free" || name == "ab-property") && nums.size() == 2) {
        c.kind = name == "ab-property" ? Kind::AbProperty : Kind::KabMinorFree;
        c.a = nums[0];
        c.b = nums[1];
    } else {
        throw std::invalid_argument("unknown constraint '" + text + "'");
    }
    if (c.a < 1 || c.b < c.a) throw std::invalid_argument("constraint needs 1 <= a <= b");
    return c;
}

std::string Constraint::describe() const {
    switch (kind) {
        case Kind::StarMinorFree:
            return "star-minor-free:" + std::to_string(b);
        case Kind::KabMinorFree:
            return "kab-minor-free:" + std::to_string(a) + "," + std::to_string(b);
        case Kind::AbProperty:
            return "ab-property:" + std::to_string(a) + "," + std::to_string(b);
    }
    return "?";
}

Corpus enumerator_corpus(std::size_t n, bool connected_only) {
    Corpus c;
    c.source = "enumerator:n=" + std::to_string(n) + (connected_only ? ",connected" : ",all");
    c.graphs = enumerate_graphs(n, connected_only);
    return c;
}

Corpus graph6_corpus(const std::string& path, bool connected_only) {
    Corpus c;
    c.source = "graph6:" + path + (connected_only ? ",connected" : ",all");
    for (auto& g : read_graph6_file(path)) {
        if (!connected_only || g.is_connected()) c.graphs.push_back(std::move(g));
    }
    return c;
}

SearchAborted::SearchAborted(const std::string& graph6, std::uint64_t budget)
    : std::runtime_error("minor budget of " + std::to_string(budget) + " exhausted on candidate " + graph6),
      graph6_(graph6) {}

namespace {

/// Throws SearchAborted when the minor search runs out of budget.
bool satisfies(const Graph& g, const Constraint& c, std::uint64_t budget) {
    switch (c.kind) {
        case Constraint::Kind::StarMinorFree:
            return star_minor_free(g, c.b);
        case Constraint::Kind::KabMinorFree: {
            const auto w = has_minor(g, complete_bipartite(c.a, c.b), budget);
            if (w.exhausted()) throw SearchAborted(to_graph6(g), budget);
            return w.free();
        }
        case Constraint::Kind::AbProperty: {
            const auto rep = ab_property(g, c.a, c.b, budget);
            if (rep.inconclusive) throw SearchAborted(to_graph6(g), budget);
            return rep.overall;
        }
    }
    return false;
}

/// Post-hoc re-check through the generic minor search (and the apex route when it applies).
void reverify(const Graph& g, const Constraint& c, std::uint64_t budget) {
    bool ok = true;
    switch (c.kind) {
        case Constraint::Kind::StarMinorFree: {
            const auto w = has_minor(g, star(c.b), budget);
            if (w.exhausted()) throw SearchAborted(to_graph6(g), budget);
            ok = w.free();
            break;
        }
        case Constraint::Kind::KabMinorFree: {
            if (c.a >= 2) {
                if (const auto apex = find_clique_dominating_set(g, c.a - 1)) {
                    const auto v = minor_free_given_apex(g, *apex, c.a, c.b, budget);
                    if (v == MinorVerdict::BudgetExhausted) throw SearchAborted(to_graph6(g), budget);
                    ok = v == MinorVerdict::Free;
                    break;
                }
            }
            ok = satisfies(g, c, budget);
            break;
        }
        case Constraint::Kind::AbProperty:
            ok = satisfies(g, c, budget);
            break;
    }
    if (!ok) throw std::logic_error("maximizer " + to_graph6(g) + " fails re-verification of " + c.describe());
}

std::optional<std::size_t> uniform_order(const std::vector<Graph>& gs) {
    if (gs.empty()) return std::nullopt;
    for (const auto& g : gs) {
        if (g.order() != gs.front().order()) return std::nullopt;
    }
    return gs.front().order();
}

}  // namespace

std::string report_form(const Graph& g) {
    return g.order() <= kCanonicalMaxOrder ? canonical_form(g) : to_graph6(g);
}

std::vector<Graph> admit(const Corpus& corpus, const Constraint& c, const SearchOptions& opts) {
    std::vector<char> keep(corpus.graphs.size(), 0);
    parallel_for(corpus.graphs.size(), opts.jobs,
                 [&](std::size_t i) { keep[i] = satisfies(corpus.graphs[i], c, opts.budget) ? 1 : 0; });
    std::vector<Graph> out;
    for (std::size_t i = 0; i < keep.size(); ++i) {
        if (keep[i]) out.push_back(corpus.graphs[i]);
    }
    return out;
}

std::vector<SearchReport> search_max(const Corpus& corpus, const Constraint& c, std::span<const double> alphas,
                                     const SearchOptions& opts) {
    for (double a : alphas) (void)AlphaParam(a);
    const auto admitted = admit(corpus, c, opts);
    const auto order = uniform_order(corpus.graphs);

    // radii[i * |alphas| + j]
    std::vector<double> radii(admitted.size() * alphas.size());
    parallel_for(admitted.size(), opts.jobs, [&](std::size_t i) {
        for (std::size_t j = 0; j < alphas.size(); ++j) {
            radii[i * alphas.size() + j] = spectral_radius(admitted[i], AlphaParam(alphas[j])).lambda;
        }
    });

    std::vector<SearchReport> reports;
    std::vector<std::string> forms(admitted.size());
    std::vector<char> have_form(admitted.size(), 0);
    std::vector<char> reverified(admitted.size(), 0);
    for (std::size_t j = 0; j < alphas.size(); ++j) {
        SearchReport r;
        r.constraint = c.describe();
        r.alpha = alphas[j];
        r.corpus_source = corpus.source;
        r.corpus_count = corpus.graphs.size();
        r.admitted = admitted.size();
        if (!admitted.empty()) {
            double best = radii[j];
            for (std::size_t i = 0; i < admitted.size(); ++i) best = std::max(best, radii[i * alphas.size() + j]);
            r.lambda_max = best;
            for (std::size_t i = 0; i < admitted.size(); ++i) {
                if (best - radii[i * alphas.size() + j] > kTieTolerance) continue;
                if (!reverified[i]) {
                    reverify(admitted[i], c, opts.budget);
                    reverified[i] = 1;
                }
                if (!have_form[i]) {
                    forms[i] = report_form(admitted[i]);
                    have_form[i] = 1;
                }
                r.maximizers.push_back(forms[i]);
            }
            std::sort(r.maximizers.begin(), r.maximizers.end());
        }
        if (order && c.kind != Constraint::Kind::AbProperty && *order >= c.b) {
            r.prediction = predict(c.a, c.b, *order, AlphaParam(alphas[j]), opts.budget);
            if (r.prediction->graph) {
                r.prediction_graph6 = report_form(*r.prediction->graph);
                r.agrees = r.maximizers.size() == 1 && r.maximizers.front() == *r.prediction_graph6;
            }
        }
        reports.push_back(std::move(r));
    }
    return reports;
}

SearchReport search_max(const Corpus& corpus, const Constraint& c, AlphaParam alpha, const SearchOptions& opts) {
    const double a = alpha;
    return search_max(corpus, c, std::span<const double>(&a, 1), opts).front();
}

nlohmann::json SearchReport::to_json() const {
    nlohmann::json j;
    j["constraint"] = constraint;
    j["alpha"] = alpha;
    j["corpus"] = {{"source", corpus_source}, {"count", corpus_count}, {"admitted", admitted}};
    j["lambda_max"] = maximizers.empty() ? nlohmann::json(nullptr) : nlohmann::json(lambda_max);
    j["maximizers"] = maximizers;
    if (prediction) {
        nlohmann::json p;
        p["clause"] = std::string(to_string(prediction->clause));
        p["graph6"] = prediction_graph6 ? nlohmann::json(*prediction_graph6) : nlohmann::json(nullptr);
        p["agrees"] = agrees ? nlohmann::json(*agrees) : nlohmann::json("not-applicable");
        if (!prediction->caveat.empty()) p["caveat"] = prediction->caveat;
        j["prediction"] = p;
    } else {
        j["prediction"] = {{"clause", nullptr}, {"graph6", nullptr}, {"agrees", "not-applicable"}};
    }
    return j;
}

CandidateTable compare_candidates(std::span<const std::pair<std::string, Graph>> candidates, AlphaParam alpha,
                                  std::size_t jobs) {
    for (const auto& [id, g] : candidates) {
        if (g.order() != candidates.front().second.order()) {
            throw std::invalid_argument("compare_candidates: candidate '" + id + "' has a different order");
        }
    }
    CandidateTable t;
    t.alpha = alpha;
    t.rows.resize(candidates.size());
    parallel_for(candidates.size(), jobs, [&](std::size_t i) {
        const Graph& g = candidates[i].second;
        auto& row = t.rows[i];
        row.id = candidates[i].first;
        row.graph6 = to_graph6(g);
        row.order = g.order();
        row.size = g.size();
        row.lambda = spectral_radius(g, alpha).lambda;
    });
    std::stable_sort(t.rows.begin(), t.rows.end(),
                     [](const CandidateRow& x, const CandidateRow& y) { return x.lambda > y.lambda; });
    for (std::size_t i = 0; i + 1 < t.rows.size(); ++i) {
        t.rows[i].strictly_above_next = t.rows[i].lambda - t.rows[i + 1].lambda > kTieTolerance;
    }
    return t;
}

nlohmann::json CandidateTable::to_json() const {
    nlohmann::json rows_json = nlohmann::json::array();
    for (const auto& r : rows) {
        rows_json.push_back({{"id", r.id},
                             {"graph6", r.graph6},
                             {"order", r.order},
                             {"size", r.size},
                             {"lambda", r.lambda},
                             {"strictly_above_next", r.strictly_above_next}});
    }
    return {{"alpha", alpha}, {"rows", rows_json}};
}

}  // namespace kabminor
