#include "kabminor/family_spec.hpp"

#include <cctype>
#include <map>
#include <vector>

#include "kabminor/extremal.hpp"
#include "kabminor/families.hpp"
#include "kabminor/graph6.hpp"

namespace kabminor {

FamilySpecError::FamilySpecError(const std::string& what, std::size_t pos)
    : std::invalid_argument(what + " at position " + std::to_string(pos)), pos_(pos) {}

namespace {

const std::map<std::string, std::size_t, std::less<>>& atom_arity() {
    static const std::map<std::string, std::size_t, std::less<>> table{
        {"K", 1},     {"C", 1},        {"P", 1},
        {"star", 1},  {"empty", 1},    {"Kab", 2},
        {"S", 2},     {"Kbe", 1},      {"F", 4},
        {"fab", 2},   {"fab-complement", 2}, {"dominated-matching", 2},
        {"extremal", 3}, {"petersen", 0}, {"petersen-complement", 0},
    };
    return table;
}

class Parser {
public:
    explicit Parser(std::string_view s) : s_(s) {}

    Graph parse() {
        Graph g = term();
        skip_ws();
        if (pos_ != s_.size()) fail("unexpected trailing input");
        return g;
    }

private:
    [[noreturn]] void fail(const std::string& what) const { throw FamilySpecError(what, pos_); }

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    bool eat(char c) {
        skip_ws();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    void expect(char c) {
        if (!eat(c)) fail(std::string("expected '") + c + "'");
    }

    std::string name() {
        skip_ws();
        const std::size_t start = pos_;
        while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '-')) ++pos_;
        if (start == pos_) fail("expected a family name");
        return std::string(s_.substr(start, pos_ - start));
    }

    std::size_t number() {
        skip_ws();
        const std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (start == pos_) fail("expected an integer");
        return std::stoul(std::string(s_.substr(start, pos_ - start)));
    }

    Graph term() {
        Graph g = primary();
        if (eat('*')) g = repeat_union(g, number());
        return g;
    }

    std::vector<Graph> arguments() {
        std::vector<Graph> args;
        expect('(');
        if (eat(')')) return args;
        do {
            args.push_back(term());
        } while (eat(','));
        expect(')');
        return args;
    }

    Graph primary() {
        skip_ws();
        const std::size_t at = pos_;
        const std::string n = name();
        if (n == "join" || n == "union" || n == "complement") {
            auto args = arguments();
            if (n == "complement") {
                if (args.size() != 1) fail("complement takes one argument");
                return complement(args[0]);
            }
            if (n == "union") return disjoint_union(args);
            if (args.empty()) return Graph(0);
            Graph g = args[0];
            for (std::size_t i = 1; i < args.size(); ++i) g = join(g, args[i]);
            return g;
        }
        if (n == "g6") {
            expect(':');
            skip_ws();
            const std::size_t start = pos_;
            while (pos_ < s_.size() && s_[pos_] >= 63 && s_[pos_] <= 126) ++pos_;
            try {
                return from_graph6(s_.substr(start, pos_ - start));
            } catch (const std::exception& e) {
                pos_ = start;
                fail(e.what());
            }
        }
        const auto it = atom_arity().find(n);
        if (it == atom_arity().end()) {
            pos_ = at;
            fail("unknown family '" + n + "'");
        }
        std::vector<std::size_t> p;
        if (it->second > 0) {
            expect(':');
            p.push_back(number());
            while (p.size() < it->second) {
                expect(',');
                p.push_back(number());
            }
        }
        try {
            return atom(n, p);
        } catch (const FamilySpecError&) {
            throw;
        } catch (const std::exception& e) {
            pos_ = at;
            fail(e.what());
        }
    }

    static Graph atom(const std::string& n, const std::vector<std::size_t>& p) {
        if (n == "K") return complete(p[0]);
        if (n == "C") return cycle(p[0]);
        if (n == "P") return path(p[0]);
        if (n == "star") return star(p[0]);
        if (n == "empty") return Graph(p[0]);
        if (n == "Kab") return complete_bipartite(p[0], p[1]);
        if (n == "S") return subdivided_clique(p[0], p[1]);
        if (n == "Kbe") return clique_with_pendants(p[0]);
        if (n == "F") return f_graph(p[0], p[1], p[2], p[3]);
        if (n == "fab") return star_forest(p[0], p[1]);
        if (n == "fab-complement") return star_forest_complement(p[0], p[1]);
        if (n == "dominated-matching") return dominated_matching_graph(p[0], p[1]);
        if (n == "petersen") return petersen();
        if (n == "petersen-complement") return petersen_complement();
        // extremal
        const auto pred = predict(p[0], p[1], p[2], AlphaParam(0.5));
        if (!pred.graph) throw std::invalid_argument("no theorem construction for these parameters: " + pred.caveat);
        return *pred.graph;
    }

    std::string_view s_;
    std::size_t pos_ = 0;
};

}  // namespace

Graph parse_family(std::string_view spec) { return Parser(spec).parse(); }

}  // namespace kabminor
