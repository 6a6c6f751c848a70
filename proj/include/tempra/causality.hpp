#pragma once

#include <string>

#include "tempra/model.hpp"

namespace tempra {

// An event token over a closed interval; both endpoints must be grid times.
struct EventOccurrence {
    std::string event;
    Rational lo, hi;
};

// The three prima-facie conditions, judged from the start of the cause
// interval (tA), plus the exact probabilities behind condition 3.
struct CausalReport {
    bool cond1 = false;        // cause does not outlive the effect: tA < tE'
    bool cond2 = false;        // the cause is live at tA: p_cause > 0
    bool cond3 = false;        // positive influence: p_joint > p_effect*p_cause
    bool prima_facie = false;  // cond1 && cond2 && cond3
    bool actual = false;       // prima facie and the effect occurs at w
    Rational p_cause, p_effect, p_joint;  // all measured at tA from w
};

// Throws EvalError for unknown event symbols, interval endpoints outside the
// grid, or inverted intervals.  Probabilities are exact; condition 3 uses the
// product form, never division.
CausalReport analyze_cause(const Model& m, int world,
                           const EventOccurrence& cause,
                           const EventOccurrence& effect);
CausalReport analyze_cause(const Model& m, const std::string& world,
                           const EventOccurrence& cause,
                           const EventOccurrence& effect);

}  // namespace tempra
