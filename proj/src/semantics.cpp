#include "tempra/semantics.hpp"

#include <stdexcept>

namespace tempra {

namespace {

bool eval_core(const Model& m, int w, const Formula& f);

Rational prob_core(const Model& m, int ti, int w, const Formula& f) {
    Rational sum;
    const int n = static_cast<int>(m.worlds.size());
    for (int v = 0; v < n; ++v) {
        if (m.rel[ti][w][v] && eval_core(m, v, f)) sum += m.pr[ti][w].at(v);
    }
    return sum;
}

bool eval_core(const Model& m, int w, const Formula& f) {
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
            return !eval_core(m, w, f.child(0));
        case FormulaKind::And:
            return eval_core(m, w, f.child(0)) && eval_core(m, w, f.child(1));
        case FormulaKind::Or:
            return eval_core(m, w, f.child(0)) || eval_core(m, w, f.child(1));
        case FormulaKind::Inev: {
            int ti = m.time_index(m.denote(f.time1()));
            const int n = static_cast<int>(m.worlds.size());
            for (int v = 0; v < n; ++v) {
                if (m.rel[ti][w][v] && !eval_core(m, v, f.child(0))) return false;
            }
            return true;
        }
        case FormulaKind::ProbCmp: {
            int ti = m.time_index(m.denote(f.time1()));
            Rational value;
            for (const Monomial& mo : f.poly()) {
                Rational term = mo.coef;
                for (const Formula& factor : mo.factors) {
                    term *= prob_core(m, ti, w, factor);
                }
                value += term;
            }
            return cmp_holds(f.cmp(), value, Rational(0));
        }
        default:
            throw std::logic_error("eval_core: sugar survived desugar");
    }
}

}  // namespace

bool eval_formula(const Model& m, int world, const Formula& f) {
    return eval_core(m, world, desugar(f));
}

bool eval_formula(const Model& m, const std::string& world, const Formula& f) {
    return eval_formula(m, m.world_index(world), f);
}

Rational probability(const Model& m, const Rational& t, int world,
                     const Formula& f) {
    return prob_core(m, m.time_index(t), world, desugar(f));
}

Rational probability(const Model& m, const Rational& t, const std::string& world,
                     const Formula& f) {
    return probability(m, t, m.world_index(world), f);
}

Rational probability_of(const Model& m, const Rational& t, int world,
                        const std::function<bool(int)>& sat) {
    int ti = m.time_index(t);
    Rational sum;
    const int n = static_cast<int>(m.worlds.size());
    for (int v = 0; v < n; ++v) {
        if (m.rel[ti][world][v] && sat(v)) sum += m.pr[ti][world].at(v);
    }
    return sum;
}

bool valid_in_model(const Model& m, const Formula& f) {
    Formula core = desugar(f);
    for (int w = 0; w < static_cast<int>(m.worlds.size()); ++w) {
        if (!eval_core(m, w, core)) return false;
    }
    return true;
}

bool entails_in_model(const Model& m, const Formula& premise,
                      const Formula& conclusion) {
    Formula p = desugar(premise);
    Formula c = desugar(conclusion);
    for (int w = 0; w < static_cast<int>(m.worlds.size()); ++w) {
        if (eval_core(m, w, p) && !eval_core(m, w, c)) return false;
    }
    return true;
}

}  // namespace tempra
