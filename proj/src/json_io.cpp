#include "kabminor/json_io.hpp"

#include "kabminor/graph6.hpp"

namespace kabminor {

using nlohmann::json;

json graph_summary(const Graph& g) {
    return {{"graph6", to_graph6(g)},
            {"order", g.order()},
            {"size", g.size()},
            {"degree_sequence", g.degree_sequence()},
            {"connected", g.is_connected()}};
}

json to_json(const DenseMatrix& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.dim(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.dim(); ++j) row.push_back(m(i, j));
        rows.push_back(std::move(row));
    }
    return rows;
}

json to_json(const SpectralResult& r, bool with_vector) {
    json j{{"lambda", r.lambda},
           {"residual", r.residual},
           {"iterations", r.iterations},
           {"method", std::string(to_string(r.method))},
           {"is_perron", r.is_perron}};
    if (with_vector) j["vector"] = r.perron;
    return j;
}

json to_json(const QuotientMatrix& q) {
    return {{"partition", q.partition}, {"entries", to_json(q.entries)}, {"equitable", q.equitable}};
}

json to_json(const MinorWitness& w) {
    json j{{"verdict", std::string(to_string(w.verdict))}, {"expansions", w.expansions}, {"budget", w.budget}};
    j["branch_sets"] = w.contains() ? json(w.branch_sets) : json(nullptr);
    return j;
}

json to_json(const AbPropertyReport& r) {
    json pairs = json::array();
    for (const auto& p : r.pairs) pairs.push_back({{"r", p.r}, {"s", p.s}, {"witness", to_json(p.witness)}});
    return {{"a", r.a},         {"b", r.b},
            {"omega", r.omega}, {"pairs", pairs},
            {"overall", r.overall}, {"inconclusive", r.inconclusive}};
}

json to_json(const ExtremalPrediction& p) {
    json j{{"a", p.params.a},
           {"b", p.params.b},
           {"n", p.params.n},
           {"k", p.params.k},
           {"t", p.params.t},
           {"tau", p.params.tau()},
           {"omega", p.params.omega()},
           {"alpha", p.alpha},
           {"clause", std::string(to_string(p.clause))},
           {"caveat", p.caveat}};
    j["graph"] = p.graph ? graph_summary(*p.graph) : json(nullptr);
    j["verified"] = p.verified ? json(std::string(to_string(*p.verified))) : json(nullptr);
    return j;
}

json to_json(const PerronStats& s) {
    json j{{"clique", s.clique},
           {"scope", s.scope},
           {"lambda", s.lambda},
           {"x_s", s.x_s},
           {"x_max", s.x_max},
           {"x_min", s.x_min},
           {"c", s.c},
           {"lower_bound", s.lower_bound},
           {"lower_margin", s.lower_margin},
           {"lower_holds", s.lower_holds},
           {"upper_holds", s.upper_holds}};
    j["upper_bound"] = s.upper_bound ? json(*s.upper_bound) : json(nullptr);
    j["upper_margin"] = s.upper_margin ? json(*s.upper_margin) : json(nullptr);
    return j;
}

}  // namespace kabminor
