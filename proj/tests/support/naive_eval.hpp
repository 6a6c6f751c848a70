#pragma once

// A second, deliberately naive evaluator used as an oracle.  It never calls
// desugar() or the library's polynomial machinery: every connective,
// including the sugar forms, is handled by direct case analysis, and chances
// are computed by a linear scan over worlds.  Agreement with the real
// evaluator is meaningful only because the code paths are disjoint.

#include "tempra/formula.hpp"
#include "tempra/model.hpp"

namespace naive {

using tempra::Cmp;
using tempra::Formula;
using tempra::FormulaKind;
using tempra::Model;
using tempra::Rational;

inline bool eval(const Model& m, int w, const Formula& f);

// Sum of mu_t^w over the accessible worlds where f is true.
inline Rational prob(const Model& m, const Rational& t, int w, const Formula& f) {
    int ti = m.time_index(t);
    Rational sum;
    for (int v = 0; v < static_cast<int>(m.worlds.size()); ++v) {
        if (m.rel[ti][w][v] && eval(m, v, f)) sum += m.pr[ti][w].at(v);
    }
    return sum;
}

inline bool compare(Cmp c, const Rational& a, const Rational& b) {
    switch (c) {
        case Cmp::Ge: return a >= b;
        case Cmp::Le: return a <= b;
        case Cmp::Eq: return a == b;
        case Cmp::Gt: return a > b;
        case Cmp::Lt: return a < b;
    }
    return false;
}

inline bool eval(const Model& m, int w, const Formula& f) {
    switch (f.kind()) {
        case FormulaKind::TimeEq:
            return m.denote(f.time1()) == m.denote(f.time2());
        case FormulaKind::TimeLe:
            return m.denote(f.time1()) <= m.denote(f.time2());
        case FormulaKind::TimeLt:
            return m.denote(f.time1()) < m.denote(f.time2());
        case FormulaKind::Holds:
            return m.fact_at(f.symbol(), m.denote(f.time1()),
                             m.denote(f.time2()), w);
        case FormulaKind::Occ:
            return m.event_at(f.symbol(), m.denote(f.time1()),
                              m.denote(f.time2()), w);
        case FormulaKind::Not:
            return !eval(m, w, f.child(0));
        case FormulaKind::And:
            return eval(m, w, f.child(0)) && eval(m, w, f.child(1));
        case FormulaKind::Or:
            return eval(m, w, f.child(0)) || eval(m, w, f.child(1));
        case FormulaKind::Implies:
            return !eval(m, w, f.child(0)) || eval(m, w, f.child(1));
        case FormulaKind::Inev: {
            int ti = m.time_index(m.denote(f.time1()));
            for (int v = 0; v < static_cast<int>(m.worlds.size()); ++v) {
                if (m.rel[ti][w][v] && !eval(m, v, f.child(0))) return false;
            }
            return true;
        }
        case FormulaKind::Poss: {
            int ti = m.time_index(m.denote(f.time1()));
            for (int v = 0; v < static_cast<int>(m.worlds.size()); ++v) {
                if (m.rel[ti][w][v] && eval(m, v, f.child(0))) return true;
            }
            return false;
        }
        case FormulaKind::ProbCmp: {
            Rational t = m.denote(f.time1());
            Rational value;
            for (const tempra::Monomial& mono : f.poly()) {
                Rational term = mono.coef;
                for (const Formula& factor : mono.factors) {
                    term *= prob(m, t, w, factor);
                }
                value += term;
            }
            return compare(f.cmp(), value, Rational(0));
        }
        case FormulaKind::CondProbCmp: {
            // P(target | given) cmp bound, multiplied through by P(given):
            // P(target & given) cmp bound * P(given).
            Rational t = m.denote(f.time1());
            Rational joint =
                prob(m, t, w, Formula::conj(f.child(0), f.child(1)));
            Rational given = prob(m, t, w, f.child(1));
            return compare(f.cmp(), joint, f.bound() * given);
        }
    }
    return false;
}

inline bool eval(const Model& m, const std::string& world, const Formula& f) {
    return eval(m, m.world_index(world), f);
}

}  // namespace naive
