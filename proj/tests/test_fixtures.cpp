#include <stdexcept>

#include "doctest.h"
#include "tempra/constraints.hpp"
#include "tempra/fixtures.hpp"
#include "tempra/model_io.hpp"
#include "tempra/parser.hpp"
#include "tempra/semantics.hpp"

using namespace tempra;

TEST_CASE("three worked examples ship with the library") {
    const auto& all = fixtures();
    REQUIRE(all.size() == 3);
    CHECK(all[0].name == "coin");
    CHECK(all[1].name == "car");
    CHECK(all[2].name == "carry");
    for (const Fixture& fx : all) {
        CHECK_FALSE(fx.title.empty());
        CHECK_FALSE(fx.story.empty());
        CHECK(fx.premises.size() == 3);
        CHECK_FALSE(fx.checks.empty());
        CHECK(&fixture(fx.name) == &fx);
    }
    CHECK_THROWS_AS(fixture("dice"), std::out_of_range);
    CHECK_THROWS_AS(fixture(""), std::out_of_range);
}

TEST_CASE("fixture models build cleanly and the premises are valid") {
    for (const Fixture& fx : fixtures()) {
        CAPTURE(fx.name);
        Model m = parse_model(fx.model_json);
        CHECK(check_constraints(m).clean());
        for (const std::string& prem : fx.premises) {
            CAPTURE(prem);
            CHECK(valid_in_model(m, parse_formula(prem)));
        }
    }
}

TEST_CASE("every fixture check passes against its own model") {
    for (const Fixture& fx : fixtures()) {
        Model m = parse_model(fx.model_json);
        auto results = run_fixture_checks(fx, m);
        REQUIRE(results.size() == fx.checks.size());
        for (const FixtureCheckResult& res : results) {
            CAPTURE(fx.name);
            CAPTURE(res.check->label);
            CAPTURE(res.computed);
            CHECK(res.ok);
            CHECK_FALSE(res.computed.empty());
        }
    }
}

TEST_CASE("checks notice when the model stops backing them") {
    // halve w6 and give the slack to w4: the co-carry chance drops and the
    // exact-value checks must start failing
    const Fixture& fx = fixture("carry");
    Model m = parse_model(fx.model_json);
    auto& root = m.pr[0][m.world_index("w1")].mass;
    root[m.world_index("w6")] = Rational(1, 8);
    root[m.world_index("w4")] = Rational(3, 8);
    int failed = 0;
    for (const FixtureCheckResult& res : run_fixture_checks(fx, m)) {
        if (!res.ok) ++failed;
    }
    CHECK(failed > 0);
}
