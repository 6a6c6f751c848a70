#pragma once

#include <string>
#include <vector>

#include "tempra/formula.hpp"
#include "tempra/model.hpp"

namespace tempra {

// One verifiable claim about a fixture.  `kind` selects how it is checked:
//   Probability      probability(model, time, world, formula) cmp expected
//   CondProbability  P(formula & given)/P(given) cmp expected
//   Truth            eval_formula(model, world, formula) is `truth`
//   Valid            formula true at every world
//   Expected         expected_future_probability(time -> later_time) cmp expected
struct FixtureCheck {
    enum class Kind { Probability, CondProbability, Truth, Valid, Expected };
    Kind kind;
    std::string label;
    std::string formula;
    std::string given;
    std::string time;
    std::string later_time;
    std::string world;
    Cmp cmp = Cmp::Eq;
    Rational expected;
    bool truth = true;
};

struct Fixture {
    std::string name;
    std::string title;
    std::string story;
    std::vector<std::string> premises;  // concrete-syntax sentences
    std::string model_json;
    std::vector<FixtureCheck> checks;
};

const std::vector<Fixture>& fixtures();

// Throws std::out_of_range for unknown names.
const Fixture& fixture(const std::string& name);

struct FixtureCheckResult {
    const FixtureCheck* check;
    bool ok;
    std::string computed;  // display form of the evaluated side
};

// Evaluates every check of the fixture against a model (normally the
// fixture's own, but mutated copies are fair game in tests).
std::vector<FixtureCheckResult> run_fixture_checks(const Fixture& fx,
                                                   const Model& m);

}  // namespace tempra
