#include <doctest.h>

#include <stdexcept>

#include <algorithm>
#include <cmath>

#include "kabminor/verify.hpp"

using namespace kabminor;

TEST_SUITE("verify") {
    TEST_CASE("default alpha grid") {
        const auto g = default_alpha_grid(5);
        CHECK(g.size() == 11);
        CHECK(std::is_sorted(g.begin(), g.end()));
        CHECK(std::find_if(g.begin(), g.end(), [](double x) { return std::abs(x - 1.0 / 3) < 1e-15; }) != g.end());
        // 2/(b+1) already on the tenth grid for b = 3 and b = 4.
        CHECK(default_alpha_grid(3).size() == 10);
        CHECK(default_alpha_grid(4).size() == 10);
    }

    TEST_CASE("updown check with the spec examples") {
        VerifyConfig cfg;
        cfg.b_range = {3, 5};
        cfg.alphas = std::vector<double>{0.0, 0.4};
        const auto o = check_lemma_updown(cfg);
        CHECK(o.status == CheckStatus::Pass);
        REQUIRE(o.margin.has_value());
        CHECK(*o.margin > 0);
        CHECK(o.details["max_chain_error"].get<double>() <= 1e-12);
    }

    TEST_CASE("quotient and polynomial checks pass") {
        VerifyConfig cfg;
        CHECK(check_quotient_equality(cfg).status == CheckStatus::Pass);
        CHECK(check_polynomial_identities(cfg).status == CheckStatus::Pass);
    }

    TEST_CASE("degree ordering claim") {
        VerifyConfig cfg;
        cfg.b_range = {6, 6};
        cfg.alphas = std::vector<double>{0.2};
        const auto o = check_degree_ordering_claim(cfg);
        CHECK(o.status == CheckStatus::Pass);
        CHECK(o.details["max_symmetric_difference"].get<double>() <= 1e-10);
    }

    TEST_CASE("outcome serialisation") {
        CheckOutcome o;
        o.id = "x";
        o.status = CheckStatus::Inconclusive;
        const auto j = o.to_json();
        CHECK(j["status"] == "inconclusive");
        CHECK(j["margin"].is_null());
        CHECK(j["artifacts"].empty());
    }

    TEST_CASE("suite runner") {
        CHECK(suite_names().size() == 16);
        CHECK_THROWS_AS(run_check("nope", {}), std::invalid_argument);
        CHECK_THROWS_AS(run_suite({"nope"}, {}), std::invalid_argument);
        VerifyConfig cfg;
        cfg.jobs = 4;
        const auto outs = run_suite({"xy-identity", "majorization"}, cfg);
        REQUIRE(outs.size() == 2);
        CHECK(outs[0].id == "xy-identity");
        CHECK(outs[1].id == "majorization");
        for (const auto& o : outs) CHECK(o.status == CheckStatus::Pass);
    }

    TEST_CASE("random suites are reproducible from the seed") {
        VerifyConfig cfg;
        cfg.seed = 99;
        CHECK(check_rewiring(cfg).to_json() == check_rewiring(cfg).to_json());
        CHECK(check_monotonicity(cfg).status == CheckStatus::Pass);
    }
}
