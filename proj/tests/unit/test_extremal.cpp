#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <stdexcept>

#include "kabminor/canonical.hpp"
#include "kabminor/extremal.hpp"
#include "kabminor/graph6.hpp"

using namespace kabminor;

TEST_SUITE("extremal") {
    TEST_CASE("star-minor clauses") {
        CHECK(predict(1, 3, 7, AlphaParam(0.1)).clause == Clause::T13_ii);
        CHECK(predict(1, 4, 5, AlphaParam(0.1)).clause == Clause::T13_i);
        CHECK(predict(1, 4, 7, AlphaParam(0.4)).clause == Clause::T13_ii);
        const auto open = predict(1, 4, 7, AlphaParam(0.3));
        CHECK(open.clause == Clause::OutsideTheorem);
        CHECK_FALSE(open.graph.has_value());
        CHECK_FALSE(open.caveat.empty());
        CHECK(predict(1, 2, 5, AlphaParam(0.5)).clause == Clause::OutsideTheorem);
    }

    TEST_CASE("star-minor constructions") {
        const auto c = predict(1, 3, 6, AlphaParam(0.2));
        REQUIRE(c.graph);
        CHECK(canonical_form(*c.graph) == canonical_form(cycle(6)));
        CHECK(c.verified == MinorVerdict::Free);
        const auto k = predict(1, 5, 6, AlphaParam(0.2));
        REQUIRE(k.graph);
        CHECK(canonical_form(*k.graph) == canonical_form(star_forest_complement(1, 5)));
    }

    TEST_CASE("K_{a,b} clauses") {
        // n - a + 1 = k b + t.
        CHECK(predict(2, 3, 8, AlphaParam(0.5)).clause == Clause::T14_ii);      // t = 1, tau = 1
        CHECK(predict(2, 5, 13, AlphaParam(0.5)).clause == Clause::T14_i_special);  // t = tau = 2
        CHECK(predict(2, 5, 12, AlphaParam(0.5)).clause == Clause::T14_i);      // t = 1
        CHECK(predict(2, 5, 14, AlphaParam(0.5)).clause == Clause::T14_ii);     // t = 3 = 2 tau - 1
        CHECK(predict(4, 8, 21, AlphaParam(0.5)).clause == Clause::T14_ii_special);
        CHECK(predict(3, 8, 20, AlphaParam(0.5)).clause == Clause::T14_i_special);  // tau = 2, t = 2
        CHECK(predict(2, 8, 15, AlphaParam(0.5)).clause == Clause::T14_ii);         // tau = 3, t = 6
        CHECK(predict(2, 8, 37, AlphaParam(0.5)).clause == Clause::T14_i);          // tau = 3, t = 4, k = 4
    }

    TEST_CASE("K_{a,b} constructions are verified minor free and carry the apex") {
        for (auto [a, b, n] : {std::tuple<std::size_t, std::size_t, std::size_t>{2, 3, 8}, {2, 5, 13}, {2, 5, 12},
                               {4, 8, 21}, {3, 4, 11}}) {
            const auto p = predict(a, b, n, AlphaParam(0.5));
            REQUIRE(p.graph);
            CHECK(p.graph->order() == n);
            CHECK(p.verified == MinorVerdict::Free);
            CHECK(find_clique_dominating_set(*p.graph, a - 1).has_value());
        }
    }

    TEST_CASE("infeasible parameters") {
        CHECK_THROWS_AS(predict(3, 2, 10, AlphaParam(0.5)), std::invalid_argument);
        CHECK_THROWS_AS(predict(2, 5, 4, AlphaParam(0.5)), std::invalid_argument);
        // n - 1 = 8 + 3: three complement blocks need k >= 3.
        const auto small = predict(2, 8, 12, AlphaParam(0.5));
        CHECK(small.clause == Clause::OutsideTheorem);
        CHECK(small.caveat.find("too small") != std::string::npos);
    }

    TEST_CASE("constraint parsing") {
        CHECK(Constraint::parse("star-minor-free:3").kind == Constraint::Kind::StarMinorFree);
        const auto c = Constraint::parse("kab-minor-free:2,5");
        CHECK(c.a == 2);
        CHECK(c.b == 5);
        CHECK(Constraint::parse(c.describe()).b == 5);
        CHECK(Constraint::parse("ab-property:3,8").kind == Constraint::Kind::AbProperty);
        CHECK_THROWS_AS(Constraint::parse("kab-minor-free:5,2"), std::invalid_argument);
        CHECK_THROWS_AS(Constraint::parse("bogus:1"), std::invalid_argument);
        CHECK_THROWS_AS(Constraint::parse("star-minor-free:x"), std::invalid_argument);
    }

    TEST_CASE("search finds the cycle under the star-minor constraint") {
        const auto r = search_max(enumerator_corpus(6, true), Constraint::parse("star-minor-free:3"), AlphaParam(0.5));
        REQUIRE(r.maximizers.size() == 1);
        CHECK(r.maximizers[0] == canonical_form(cycle(6)));
        CHECK(r.lambda_max == doctest::Approx(2.0));
        CHECK(r.agrees == true);
        CHECK(r.corpus_count == 112);
        const auto j = r.to_json();
        for (const char* key : {"constraint", "alpha", "corpus", "lambda_max", "maximizers", "prediction"}) {
            CHECK(j.contains(key));
        }
        CHECK(j["corpus"]["count"] == 112);
        CHECK(j["prediction"]["agrees"] == true);
    }

    TEST_CASE("search over a graph6 corpus file") {
        const std::string path = "kabminor_unit_corpus.g6";
        {
            std::ofstream out(path);
            out << to_graph6(cycle(5)) << '\n' << to_graph6(complete(5)) << '\n' << to_graph6(kabminor::path(5)) << '\n';
        }
        const auto corpus = graph6_corpus(path, true);
        CHECK(corpus.graphs.size() == 3);
        const auto r = search_max(corpus, Constraint::parse("star-minor-free:3"), AlphaParam(0.0));
        REQUIRE(r.maximizers.size() == 1);
        CHECK(r.maximizers[0] == canonical_form(cycle(5)));
        CHECK(r.admitted == 2);
        std::remove(path.c_str());
    }

    TEST_CASE("candidate comparison ranks by radius") {
        const std::vector<std::pair<std::string, Graph>> c{{"path", path(5)}, {"cycle", cycle(5)}, {"k5", complete(5)}};
        const auto t = compare_candidates(c, AlphaParam(0.3));
        REQUIRE(t.rows.size() == 3);
        CHECK(t.rows[0].id == "k5");
        CHECK(t.rows[1].id == "cycle");
        CHECK(t.rows[0].strictly_above_next);
        CHECK_FALSE(t.rows[2].strictly_above_next);
        const std::vector<std::pair<std::string, Graph>> mixed{{"a", path(4)}, {"b", cycle(5)}};
        CHECK_THROWS_AS(compare_candidates(mixed, AlphaParam(0.3)), std::invalid_argument);
    }

    TEST_CASE("parallel search gives identical reports") {
        const std::vector<double> alphas{0.0, 0.4, 0.8};
        const auto c = Constraint::parse("kab-minor-free:2,3");
        const auto one = search_max(enumerator_corpus(7, true), c, alphas, {1, kDefaultMinorBudget});
        const auto many = search_max(enumerator_corpus(7, true), c, alphas, {8, kDefaultMinorBudget});
        REQUIRE(one.size() == many.size());
        for (std::size_t i = 0; i < one.size(); ++i) CHECK(one[i].to_json().dump() == many[i].to_json().dump());
    }
}
