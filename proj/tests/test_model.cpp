#include "doctest.h"
#include "tempra/model.hpp"
#include "tempra/model_io.hpp"
#include "tempra/parser.hpp"

using namespace tempra;

namespace {

// Two worlds, two times, one settled fact in world a.
const char* kMinimal = R"({
  "worlds": ["a", "b"],
  "times": {"t0": "0", "t1": "1"},
  "facts": {"wet": [["a", "1", "1"]]},
  "events": {},
  "R": {"mode": "explicit",
        "classes": {"t0": [["a", "b"]], "t1": [["a"], ["b"]]}},
  "prob": {
    "t0": [{"class": ["a", "b"], "dist": {"a": "1/2", "b": "1/2"}}],
    "t1": [{"class": ["a"], "dist": {"a": 1}},
           {"class": ["b"], "dist": {"b": 1}}]}
})";

Model minimal() { return parse_model(kMinimal); }

}  // namespace

TEST_SUITE("model") {

TEST_CASE("assembly and lookups") {
    Model m = minimal();
    CHECK(m.worlds == std::vector<std::string>{"a", "b"});
    CHECK(m.grid == std::vector<Rational>{Rational(0), Rational(1)});
    CHECK(m.world_index("b") == 1);
    CHECK_THROWS_AS(m.world_index("zz"), EvalError);
    CHECK(m.time_index(Rational(1)) == 1);
    CHECK_THROWS_AS(m.time_index(Rational(1, 2)), EvalError);
    CHECK(m.has_time(Rational(0)));
    CHECK_FALSE(m.has_time(Rational(2)));
    CHECK(m.denote("t1") == Rational(1));
    CHECK_THROWS_AS(m.denote("never"), EvalError);
    CHECK(m.fact_at("wet", Rational(1), Rational(1), 0));
    CHECK_FALSE(m.fact_at("wet", Rational(1), Rational(1), 1));
    CHECK_FALSE(m.fact_at("dry", Rational(1), Rational(1), 0));
    CHECK(m.class_of(0, 0) == std::vector<int>{0, 1});
    CHECK(m.class_of(1, 0) == std::vector<int>{0});
    CHECK(accessible(m, Rational(0), "a") ==
          std::vector<std::string>{"a", "b"});
}

TEST_CASE("distributions expand per world") {
    Model m = minimal();
    CHECK(m.pr[0][0].at(1) == Rational(1, 2));
    CHECK(m.pr[0][0] == m.pr[0][1]);
    CHECK(m.pr[1][0].at(0) == Rational(1));
    CHECK(m.pr[1][0].at(1) == Rational(0));
}

TEST_CASE("extent endpoints and table keys all enter the grid") {
    Model m = parse_model(R"({
      "worlds": ["a"],
      "times": {"t0": "0"},
      "facts": {"f": [["a", "1/2", "1/2"]]},
      "events": {},
      "R": {"mode": "derived"},
      "prob": {"t0": [{"class": ["a"], "dist": {"a": 1}}],
               "1/2": [{"class": ["a"], "dist": {"a": 1}}],
               "3/4": [{"class": ["a"], "dist": {"a": 1}}]}
    })");
    CHECK(m.grid == std::vector<Rational>{Rational(0), Rational(1, 2),
                                          Rational(3, 4)});
}

TEST_CASE("derived accessibility splits when settled extents diverge") {
    Model m = parse_model(R"({
      "worlds": ["a", "b"],
      "times": {"t0": "0", "t1": "1"},
      "facts": {},
      "events": {"e": [["a", "0", "1"]]},
      "R": {"mode": "derived"},
      "prob": {
        "t0": [{"class": ["a", "b"], "dist": {"a": "1/3", "b": "2/3"}}],
        "t1": [{"class": ["a"], "dist": {"a": 1}},
               {"class": ["b"], "dist": {"b": 1}}]}
    })");
    CHECK(m.rel[0][0][1]);       // nothing settled yet at time 0
    CHECK_FALSE(m.rel[1][0][1]); // e has happened in a, not in b
    CHECK(m.rel[1][0][0]);
}

TEST_CASE("reference errors are rejected at assembly") {
    auto build = [](const char* text) { return parse_model(text); };

    CHECK_THROWS_WITH_AS(
        build(R"({"worlds": ["a", "a"], "R": {"mode": "derived"},
                  "prob": {"0": [{"class": ["a"], "dist": {"a": 1}}]}})"),
        "duplicate world 'a'", BuildError);

    CHECK_THROWS_AS(
        build(R"({"worlds": ["a"],
                  "facts": {"f": [["zz", "0", "0"]]},
                  "R": {"mode": "derived"},
                  "prob": {"0": [{"class": ["a"], "dist": {"a": 1}}]}})"),
        BuildError);

    // reversed interval
    CHECK_THROWS_AS(
        build(R"({"worlds": ["a"],
                  "facts": {"f": [["a", "1", "0"]]},
                  "R": {"mode": "derived"},
                  "prob": {"0": [{"class": ["a"], "dist": {"a": 1}}],
                           "1": [{"class": ["a"], "dist": {"a": 1}}]}})"),
        BuildError);

    // explicit mode must cover every grid time
    CHECK_THROWS_AS(
        build(R"({"worlds": ["a"], "times": {"t0": "0", "t1": "1"},
                  "R": {"mode": "explicit", "classes": {"t0": [["a"]]}},
                  "prob": {"t0": [{"class": ["a"], "dist": {"a": 1}}],
                           "t1": [{"class": ["a"], "dist": {"a": 1}}]}})"),
        BuildError);

    // every world appears in exactly one class
    CHECK_THROWS_AS(
        build(R"({"worlds": ["a", "b"], "times": {"t0": "0"},
                  "R": {"mode": "explicit", "classes": {"t0": [["a", "a"]]}},
                  "prob": {"t0": [{"class": ["a"], "dist": {"a": 1}}]}})"),
        BuildError);
    CHECK_THROWS_AS(
        build(R"({"worlds": ["a", "b"], "times": {"t0": "0"},
                  "R": {"mode": "explicit", "classes": {"t0": [["a"]]}},
                  "prob": {"t0": [{"class": ["a"], "dist": {"a": 1}}]}})"),
        BuildError);

    // distribution classes must be accessibility classes
    CHECK_THROWS_AS(
        build(R"({"worlds": ["a", "b"], "times": {"t0": "0"},
                  "R": {"mode": "explicit", "classes": {"t0": [["a", "b"]]}},
                  "prob": {"t0": [{"class": ["a"], "dist": {"a": 1}}]}})"),
        BuildError);

    // a world with no distribution
    CHECK_THROWS_AS(
        build(R"({"worlds": ["a", "b"], "times": {"t0": "0"},
                  "R": {"mode": "explicit", "classes": {"t0": [["a"], ["b"]]}},
                  "prob": {"t0": [{"class": ["a"], "dist": {"a": 1}}]}})"),
        BuildError);

    // negative mass
    CHECK_THROWS_AS(
        build(R"({"worlds": ["a", "b"], "times": {"t0": "0"},
                  "R": {"mode": "explicit", "classes": {"t0": [["a", "b"]]}},
                  "prob": {"t0": [{"class": ["a", "b"],
                                   "dist": {"a": "3/2", "b": "-1/2"}}]}})"),
        BuildError);

    // derived mode with explicit classes
    CHECK_THROWS_AS(
        build(R"({"worlds": ["a"], "times": {"t0": "0"},
                  "R": {"mode": "derived", "classes": {"t0": [["a"]]}},
                  "prob": {"t0": [{"class": ["a"], "dist": {"a": 1}}]}})"),
        ParseError);
}

TEST_CASE("constraint breaches surface as a report on the build error") {
    // Coarser accessibility at the later time: C1.
    try {
        parse_model(R"({
          "worlds": ["a", "b"],
          "times": {"t0": "0", "t1": "1"},
          "R": {"mode": "explicit",
                "classes": {"t0": [["a"], ["b"]], "t1": [["a", "b"]]}},
          "prob": {
            "t0": [{"class": ["a"], "dist": {"a": 1}},
                   {"class": ["b"], "dist": {"b": 1}}],
            "t1": [{"class": ["a", "b"], "dist": {"a": "1/2", "b": "1/2"}}]}
        })");
        FAIL("expected a build error");
    } catch (const BuildError& e) {
        REQUIRE_FALSE(e.report.clean());
        bool has_c1 = false;
        for (const Violation& v : e.report.entries) {
            has_c1 = has_c1 || v.constraint == 1;
        }
        CHECK(has_c1);
    }
}

}
