// kabminor command-line tool.
#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "kabminor/canonical.hpp"
#include "kabminor/extremal.hpp"
#include "kabminor/families.hpp"
#include "kabminor/family_spec.hpp"
#include "kabminor/graph6.hpp"
#include "kabminor/json_io.hpp"
#include "kabminor/minors.hpp"
#include "kabminor/parallel.hpp"
#include "kabminor/spectral.hpp"
#include "kabminor/verify.hpp"

using namespace kabminor;
using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Common {
    std::string format = "table";
    std::size_t jobs = 0;
    std::uint64_t budget = kDefaultMinorBudget;
    std::uint64_t seed = 20240917;
    std::string alpha;
    std::string b_range;
};

std::string fmt12(double x) {
    std::ostringstream os;
    os << std::setprecision(12) << x;
    return os.str();
}

std::vector<double> parse_alphas(const std::string& text) {
    std::vector<double> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t used = 0;
            const double v = std::stod(item, &used);
            if (used != item.size()) throw std::invalid_argument(item);
            out.push_back(AlphaParam(v).value());
        } catch (const std::exception&) {
            throw UsageError("bad alpha value '" + item + "' (need numbers in [0, 1))");
        }
    }
    if (out.empty()) throw UsageError("empty alpha list");
    return out;
}

std::pair<std::size_t, std::size_t> parse_b_range(const std::string& text) {
    const auto dots = text.find("..");
    try {
        if (dots == std::string::npos) {
            const std::size_t b = std::stoul(text);
            return {b, b};
        }
        const std::size_t lo = std::stoul(text.substr(0, dots)), hi = std::stoul(text.substr(dots + 2));
        if (lo > hi) throw std::invalid_argument(text);
        return {lo, hi};
    } catch (const std::exception&) {
        throw UsageError("bad b range '" + text + "' (expected lo..hi)");
    }
}

/// Family spec, "-" for the first graph6 record on stdin, or @path for a graph6 file's first record.
Graph parse_graph(const std::string& arg) {
    if (arg == "-" || (!arg.empty() && arg[0] == '@')) {
        std::vector<Graph> gs;
        if (arg == "-") {
            gs = read_graph6_stream(std::cin);
        } else {
            gs = read_graph6_file(arg.substr(1));
        }
        if (gs.empty()) throw UsageError("no graph6 record in " + (arg == "-" ? std::string("stdin") : arg.substr(1)));
        return gs.front();
    }
    return parse_family(arg);
}

/// "K_{r,s}", "K_r", or any family spec.
Graph parse_pattern(const std::string& arg) {
    if (arg.size() > 2 && arg[0] == 'K' && arg[1] == '_') {
        std::string body = arg.substr(2);
        if (!body.empty() && body.front() == '{' && body.back() == '}') body = body.substr(1, body.size() - 2);
        const auto comma = body.find(',');
        try {
            if (comma == std::string::npos) return complete(std::stoul(body));
            return complete_bipartite(std::stoul(body.substr(0, comma)), std::stoul(body.substr(comma + 1)));
        } catch (const std::exception&) {
            throw UsageError("bad pattern '" + arg + "'");
        }
    }
    return parse_graph(arg);
}

json envelope(const std::string& command, const json& config, const json& result) {
    return {{"tool", "kabminor"}, {"version", KABMINOR_VERSION}, {"command", command}, {"config", config}, {"result", result}};
}

void emit_json(const json& j) { std::cout << j.dump(2) << '\n'; }

std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

void emit_rows(const std::string& format, const std::vector<std::string>& header,
               const std::vector<std::vector<std::string>>& rows) {
    if (format == "csv") {
        for (std::size_t i = 0; i < header.size(); ++i) std::cout << (i ? "," : "") << csv_escape(header[i]);
        std::cout << '\n';
        for (const auto& r : rows) {
            for (std::size_t i = 0; i < r.size(); ++i) std::cout << (i ? "," : "") << csv_escape(r[i]);
            std::cout << '\n';
        }
        return;
    }
    std::vector<std::size_t> width(header.size());
    for (std::size_t i = 0; i < header.size(); ++i) width[i] = header[i].size();
    for (const auto& r : rows) {
        for (std::size_t i = 0; i < r.size(); ++i) width[i] = std::max(width[i], r[i].size());
    }
    auto line = [&](const std::vector<std::string>& r) {
        for (std::size_t i = 0; i < r.size(); ++i) {
            std::cout << (i ? "  " : "") << std::left << std::setw(static_cast<int>(width[i])) << r[i];
        }
        std::cout << '\n';
    };
    line(header);
    std::vector<std::string> rule;
    for (auto w : width) rule.push_back(std::string(w, '-'));
    line(rule);
    for (const auto& r : rows) line(r);
}

std::string join_ints(const std::vector<std::size_t>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? " " : "") + std::to_string(v[i]);
    return s;
}

std::string opt_str(const std::optional<double>& v) { return v ? fmt12(*v) : "-"; }

// ---------------------------------------------------------------------------

struct ConstructArgs {
    std::string family;
    std::optional<std::size_t> a, b, n, k, u2;
    double alpha = 0.5;
    bool dot = false;
};

std::string shortcut_spec(const ConstructArgs& c) {
    auto need = [&](const std::optional<std::size_t>& v, const char* flag) {
        if (!v) throw UsageError(c.family + " needs --" + flag);
        return std::to_string(*v);
    };
    if (c.family == "subdivided-clique") return "S:" + need(c.b, "b") + "," + need(c.k, "k");
    if (c.family == "clique-with-pendants") return "Kbe:" + need(c.b, "b");
    if (c.family == "star-forest") return "fab:" + need(c.a, "a") + "," + need(c.b, "b");
    if (c.family == "star-forest-complement") return "fab-complement:" + need(c.a, "a") + "," + need(c.b, "b");
    if (c.family == "dominated-matching") return "dominated-matching:" + need(c.b, "b") + "," + need(c.u2, "u2");
    return c.family;
}

int cmd_construct(const Common& common, const ConstructArgs& args) {
    Graph g(0);
    json config{{"family", args.family}};
    std::optional<ExtremalPrediction> pred;
    if (args.family == "extremal") {
        if (!args.a || !args.b || !args.n) throw UsageError("extremal needs --a, --b and --n");
        pred = predict(*args.a, *args.b, *args.n, AlphaParam(args.alpha), common.budget);
        if (!pred->graph) throw UsageError("no construction: " + pred->caveat);
        g = *pred->graph;
        config.update({{"a", *args.a}, {"b", *args.b}, {"n", *args.n}, {"alpha", args.alpha}});
    } else {
        const std::string spec = shortcut_spec(args);
        config["spec"] = spec;
        g = parse_family(spec);
    }
    if (args.dot) {
        std::cout << to_dot(g);
        return kExitOk;
    }
    json result = graph_summary(g);
    if (pred) result["clause"] = std::string(to_string(pred->clause));
    if (common.format == "json") {
        emit_json(envelope("construct", config, result));
    } else {
        std::vector<std::string> header{"graph6", "order", "size", "degree_sequence", "connected"};
        std::vector<std::string> row{result["graph6"], std::to_string(g.order()), std::to_string(g.size()),
                                     join_ints(g.degree_sequence()), g.is_connected() ? "yes" : "no"};
        if (pred) {
            header.push_back("clause");
            row.push_back(result["clause"]);
        }
        emit_rows(common.format, header, {row});
    }
    return kExitOk;
}

int cmd_lambda(const Common& common, const std::string& input, bool with_vector, bool dense) {
    const auto alphas = parse_alphas(common.alpha.empty() ? "0.5" : common.alpha);
    std::vector<Graph> graphs;
    if (input == "-") {
        graphs = read_graph6_stream(std::cin);
    } else {
        graphs.push_back(parse_graph(input));
    }
    SpectralOptions opts;
    opts.force_dense = dense;
    json results = json::array();
    std::vector<std::vector<std::string>> rows;
    for (const auto& g : graphs) {
        for (double alpha : alphas) {
            const auto r = spectral_radius(g, AlphaParam(alpha), opts);
            json j = to_json(r, with_vector);
            j["graph6"] = to_graph6(g);
            j["alpha"] = alpha;
            results.push_back(j);
            std::vector<std::string> row{to_graph6(g), fmt12(alpha), fmt12(r.lambda), fmt12(r.residual),
                                         std::string(to_string(r.method))};
            if (with_vector) {
                std::string v;
                for (std::size_t i = 0; i < r.perron.size(); ++i) v += (i ? " " : "") + fmt12(r.perron[i]);
                row.push_back(v);
            }
            rows.push_back(row);
        }
    }
    if (common.format == "json") {
        emit_json(envelope("lambda", {{"input", input}, {"alphas", alphas}, {"dense", dense}}, results));
    } else {
        std::vector<std::string> header{"graph6", "alpha", "lambda", "residual", "method"};
        if (with_vector) header.push_back("perron_vector");
        emit_rows(common.format, header, rows);
    }
    return kExitOk;
}

int cmd_minor(const Common& common, const std::string& input, const std::string& pattern) {
    const Graph g = parse_graph(input);
    const Graph h = parse_pattern(pattern);
    const auto w = has_minor(g, h, common.budget);
    if (common.format == "json") {
        emit_json(envelope("minor",
                           {{"graph", input}, {"pattern", pattern}, {"budget", common.budget}},
                           {{"graph6", to_graph6(g)}, {"pattern_graph6", to_graph6(h)}, {"witness", to_json(w)}}));
    } else {
        std::string sets = "-";
        if (w.contains()) {
            sets.clear();
            for (std::size_t i = 0; i < w.branch_sets.size(); ++i) sets += (i ? " | " : "") + join_ints(w.branch_sets[i]);
        }
        emit_rows(common.format, {"verdict", "expansions", "branch_sets"},
                  {{std::string(to_string(w.verdict)), std::to_string(w.expansions), sets}});
    }
    if (w.exhausted()) return kExitBudget;
    return w.contains() ? kExitFail : kExitOk;
}

int cmd_search(const Common& common, const std::string& constraint, std::optional<std::size_t> n,
               const std::string& corpus_path, bool all_graphs) {
    const Constraint c = [&] {
        try {
            return Constraint::parse(constraint);
        } catch (const std::invalid_argument& e) {
            throw UsageError(e.what());
        }
    }();
    if (n.has_value() == !corpus_path.empty()) throw UsageError("give exactly one of --n or --corpus");
    if (n && *n > kEnumeratorMaxOrder) {
        throw UsageError("the enumerator stops at n = " + std::to_string(kEnumeratorMaxOrder) + "; use --corpus");
    }
    const Corpus corpus = n ? enumerator_corpus(*n, !all_graphs) : graph6_corpus(corpus_path, !all_graphs);
    const auto alphas = common.alpha.empty() ? default_alpha_grid(c.b) : parse_alphas(common.alpha);
    std::vector<SearchReport> reports;
    try {
        reports = search_max(corpus, c, alphas, {common.jobs, common.budget});
    } catch (const SearchAborted& e) {
        std::cerr << "search aborted: " << e.what() << '\n';
        return kExitBudget;
    }
    if (common.format == "json") {
        json arr = json::array();
        for (const auto& r : reports) arr.push_back(r.to_json());
        emit_json(envelope("search",
                           {{"constraint", c.describe()}, {"corpus", corpus.source}, {"alphas", alphas},
                            {"budget", common.budget}},
                           arr));
    } else {
        std::vector<std::vector<std::string>> rows;
        for (const auto& r : reports) {
            std::string ms;
            for (std::size_t i = 0; i < r.maximizers.size(); ++i) ms += (i ? " " : "") + r.maximizers[i];
            rows.push_back({fmt12(r.alpha), std::to_string(r.admitted), fmt12(r.lambda_max), ms,
                            r.prediction ? std::string(to_string(r.prediction->clause)) : "-",
                            r.agrees ? (*r.agrees ? "yes" : "no") : "n/a"});
        }
        emit_rows(common.format, {"alpha", "admitted", "lambda_max", "maximizers", "clause", "agrees"}, rows);
    }
    return kExitOk;
}

int cmd_predict(const Common& common, std::size_t a, std::size_t b, std::size_t n) {
    const auto alphas = parse_alphas(common.alpha.empty() ? "0.5" : common.alpha);
    json arr = json::array();
    std::vector<std::vector<std::string>> rows;
    bool exhausted = false;
    for (double alpha : alphas) {
        const auto p = predict(a, b, n, AlphaParam(alpha), common.budget);
        arr.push_back(to_json(p));
        exhausted = exhausted || p.verified == MinorVerdict::BudgetExhausted;
        rows.push_back({fmt12(alpha), std::string(to_string(p.clause)), p.graph ? to_graph6(*p.graph) : "-",
                        p.verified ? std::string(to_string(*p.verified)) : "-", p.caveat});
    }
    if (common.format == "json") {
        emit_json(envelope("predict", {{"a", a}, {"b", b}, {"n", n}, {"alphas", alphas}, {"budget", common.budget}}, arr));
    } else {
        emit_rows(common.format, {"alpha", "clause", "graph6", "verified", "caveat"}, rows);
    }
    return exhausted ? kExitBudget : kExitOk;
}

int cmd_compare(const Common& common, const std::vector<std::string>& specs) {
    const auto alphas = parse_alphas(common.alpha.empty() ? "0.5" : common.alpha);
    std::vector<std::pair<std::string, Graph>> cands;
    for (const auto& s : specs) {
        const auto eq = s.find('=');
        if (eq == std::string::npos) {
            cands.emplace_back(s, parse_graph(s));
        } else {
            cands.emplace_back(s.substr(0, eq), parse_graph(s.substr(eq + 1)));
        }
    }
    json arr = json::array();
    std::vector<std::vector<std::string>> rows;
    for (double alpha : alphas) {
        const auto t = compare_candidates(cands, AlphaParam(alpha), common.jobs);
        arr.push_back(t.to_json());
        for (const auto& r : t.rows) {
            rows.push_back({fmt12(alpha), r.id, r.graph6, std::to_string(r.size), fmt12(r.lambda),
                            r.strictly_above_next ? ">" : "="});
        }
    }
    if (common.format == "json") {
        emit_json(envelope("compare", {{"candidates", specs}, {"alphas", alphas}}, arr));
    } else {
        emit_rows(common.format, {"alpha", "id", "graph6", "size", "lambda", "vs_next"}, rows);
    }
    return kExitOk;
}

int cmd_verify(const Common& common, std::vector<std::string> names) {
    if (names.empty()) names.push_back("all");
    VerifyConfig cfg;
    if (!common.alpha.empty()) cfg.alphas = parse_alphas(common.alpha);
    if (!common.b_range.empty()) cfg.b_range = parse_b_range(common.b_range);
    cfg.budget = common.budget;
    cfg.jobs = common.jobs;
    cfg.seed = common.seed;
    std::vector<CheckOutcome> outs;
    try {
        outs = run_suite(names, cfg);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    bool failed = false, inconclusive = false;
    for (const auto& o : outs) {
        failed = failed || o.status == CheckStatus::Fail;
        inconclusive = inconclusive || o.status == CheckStatus::Inconclusive;
    }
    if (common.format == "json") {
        json arr = json::array();
        for (const auto& o : outs) arr.push_back(o.to_json());
        emit_json(envelope("verify", {{"checks", names}, {"settings", cfg.to_json()}}, arr));
    } else {
        std::vector<std::vector<std::string>> rows;
        for (const auto& o : outs) {
            std::string arts;
            for (std::size_t i = 0; i < o.artifacts.size(); ++i) arts += (i ? " " : "") + o.artifacts[i];
            rows.push_back({o.id, std::string(to_string(o.status)), opt_str(o.margin), arts.empty() ? "-" : arts});
        }
        emit_rows(common.format, {"check", "status", "margin", "artifacts"}, rows);
    }
    if (inconclusive) std::cerr << "note: some checks were inconclusive; see their details\n";
    return failed ? kExitFail : kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Spectral extremal graphs without K_{a,b} minors: construction, spectra, minors, search, verification"};
    app.set_version_flag("--version", std::string("kabminor ") + KABMINOR_VERSION);
    app.require_subcommand(1);

    Common common;
    common.jobs = default_jobs();
    auto add_common = [&](CLI::App* sub, bool alpha, bool b_range) {
        sub->add_option("--format", common.format, "Output format")->check(CLI::IsMember({"json", "csv", "table"}));
        sub->add_option("--jobs", common.jobs, "Worker threads (default: KAB_JOBS or hardware)")->check(CLI::PositiveNumber);
        sub->add_option("--budget", common.budget, "Minor-search node budget")->check(CLI::PositiveNumber);
        if (alpha) sub->add_option("--alpha", common.alpha, "Alpha value or comma-separated list");
        if (b_range) sub->add_option("--b", common.b_range, "b sweep as lo..hi");
    };

    ConstructArgs cargs;
    auto* construct = app.add_subcommand("construct", "Build a graph from a family spec or named family");
    construct->add_option("family", cargs.family,
                          "Family spec, e.g. 'join(K:1,union(K:3*2,K:1))', or a name: extremal, subdivided-clique, "
                          "clique-with-pendants, star-forest, star-forest-complement, dominated-matching, petersen, "
                          "petersen-complement")
        ->required();
    construct->add_option("--a", cargs.a);
    construct->add_option("--b", cargs.b);
    construct->add_option("--n", cargs.n);
    construct->add_option("--k", cargs.k);
    construct->add_option("--u2", cargs.u2);
    construct->add_option("--alpha", cargs.alpha, "Alpha used to choose the extremal clause");
    construct->add_flag("--dot", cargs.dot, "Print Graphviz instead of the summary");
    add_common(construct, false, false);

    std::string lambda_input;
    bool with_vector = false, dense = false;
    auto* lambda = app.add_subcommand("lambda", "A_alpha spectral radius and Perron vector");
    lambda->add_option("graph", lambda_input, "Family spec, g6:<record>, @file or - for graph6 on stdin")->required();
    lambda->add_flag("--vector", with_vector, "Include the Perron vector");
    lambda->add_flag("--dense", dense, "Use the dense Jacobi solver only");
    add_common(lambda, true, false);

    std::string minor_input, minor_pattern;
    auto* minor = app.add_subcommand("minor", "Decide H-minor containment; exit 0 free, 1 contains, 3 budget");
    minor->add_option("graph", minor_input, "Host graph")->required();
    minor->add_option("pattern", minor_pattern, "K_{r,s}, K_r or a family spec")->required();
    add_common(minor, false, false);

    std::string constraint, corpus_path;
    std::optional<std::size_t> search_n;
    bool all_graphs = false;
    auto* search = app.add_subcommand("search", "Maximise lambda over a corpus under a minor constraint");
    search->add_option("--constraint", constraint, "star-minor-free:b, kab-minor-free:a,b or ab-property:a,b")->required();
    search->add_option("--n", search_n, "Use the internal enumerator at this order");
    search->add_option("--corpus", corpus_path, "graph6 file corpus");
    search->add_flag("--all-graphs", all_graphs, "Keep disconnected graphs");
    add_common(search, true, false);

    std::size_t pa = 0, pb = 0, pn = 0;
    auto* pred = app.add_subcommand("predict", "Theorem clause and construction for (a, b, n, alpha)");
    pred->add_option("--a", pa)->required();
    pred->add_option("--b", pb)->required();
    pred->add_option("--n", pn)->required();
    add_common(pred, true, false);

    std::vector<std::string> cand_specs;
    auto* compare = app.add_subcommand("compare", "Rank candidate graphs of equal order by lambda");
    compare->add_option("candidates", cand_specs, "id=spec pairs")->required();
    add_common(compare, true, false);

    std::vector<std::string> checks;
    auto* verify = app.add_subcommand("verify", "Run verification suites; exit 1 iff a check fails");
    verify->add_option("checks", checks, "Suite names or 'all'");
    verify->add_option("--seed", common.seed, "Seed for randomised suites");
    add_common(verify, true, true);

    auto* list = app.add_subcommand("list-checks", "Print the suite names");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    const auto start = std::chrono::steady_clock::now();
    int code = kExitOk;
    try {
        if (*construct) code = cmd_construct(common, cargs);
        else if (*lambda) code = cmd_lambda(common, lambda_input, with_vector, dense);
        else if (*minor) code = cmd_minor(common, minor_input, minor_pattern);
        else if (*search) code = cmd_search(common, constraint, search_n, corpus_path, all_graphs);
        else if (*pred) code = cmd_predict(common, pa, pb, pn);
        else if (*compare) code = cmd_compare(common, cand_specs);
        else if (*verify) code = cmd_verify(common, checks);
        else if (*list) {
            for (const auto& n : suite_names()) std::cout << n << '\n';
        }
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const FamilySpecError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const Graph6Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitFail;
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::cerr << "[kabminor] done in " << std::fixed << std::setprecision(2) << secs << " s\n";
    return code;
}
