#include "tempra/causality.hpp"

#include "tempra/semantics.hpp"

namespace tempra {

namespace {

void validate(const Model& m, const EventOccurrence& occ) {
    if (!m.events.count(occ.event)) {
        throw EvalError("unknown event \"" + occ.event + "\"");
    }
    if (occ.lo > occ.hi) {
        throw EvalError("event interval for \"" + occ.event +
                        "\" runs backwards");
    }
    m.time_index(occ.lo);
    m.time_index(occ.hi);
}

}  // namespace

CausalReport analyze_cause(const Model& m, int world,
                           const EventOccurrence& cause,
                           const EventOccurrence& effect) {
    validate(m, cause);
    validate(m, effect);

    const Rational& ta = cause.lo;
    auto occurs = [&](const EventOccurrence& occ) {
        return [&m, &occ](int v) {
            return m.event_at(occ.event, occ.lo, occ.hi, v);
        };
    };

    CausalReport r;
    r.p_cause = probability_of(m, ta, world, occurs(cause));
    r.p_effect = probability_of(m, ta, world, occurs(effect));
    r.p_joint = probability_of(m, ta, world, [&](int v) {
        return m.event_at(cause.event, cause.lo, cause.hi, v) &&
               m.event_at(effect.event, effect.lo, effect.hi, v);
    });

    r.cond1 = ta < effect.hi;
    r.cond2 = r.p_cause > Rational(0);
    r.cond3 = r.p_joint > r.p_effect * r.p_cause;
    r.prima_facie = r.cond1 && r.cond2 && r.cond3;
    r.actual = r.prima_facie &&
               m.event_at(effect.event, effect.lo, effect.hi, world);
    return r;
}

CausalReport analyze_cause(const Model& m, const std::string& world,
                           const EventOccurrence& cause,
                           const EventOccurrence& effect) {
    return analyze_cause(m, m.world_index(world), cause, effect);
}

}  // namespace tempra
