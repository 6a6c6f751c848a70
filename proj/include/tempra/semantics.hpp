#pragma once

#include <functional>
#include <string>

#include "tempra/formula.hpp"
#include "tempra/model.hpp"

namespace tempra {

// Truth of a formula at a world.  Sugar is rewritten first, so all kinds are
// accepted.  Throws EvalError for unbound time symbols, or when INEV or a
// probability term is indexed by a time outside the model's grid.
bool eval_formula(const Model& m, const std::string& world, const Formula& f);
bool eval_formula(const Model& m, int world, const Formula& f);

// The chance of f from the standpoint of (world, t): the measure the world
// assigns at t to the members of its accessibility class where f is true.
Rational probability(const Model& m, const Rational& t, int world,
                     const Formula& f);
Rational probability(const Model& m, const Rational& t, const std::string& world,
                     const Formula& f);

// Same measure applied to an arbitrary world predicate.
Rational probability_of(const Model& m, const Rational& t, int world,
                        const std::function<bool(int)>& sat);

// True at every world of the model.
bool valid_in_model(const Model& m, const Formula& f);

// Every world satisfying the premise satisfies the conclusion.
bool entails_in_model(const Model& m, const Formula& premise,
                      const Formula& conclusion);

}  // namespace tempra
