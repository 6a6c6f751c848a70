#include "tempra/formula.hpp"

#include <stdexcept>

namespace tempra {

std::string_view cmp_text(Cmp c) {
    switch (c) {
        case Cmp::Ge: return ">=";
        case Cmp::Le: return "<=";
        case Cmp::Eq: return "=";
        case Cmp::Gt: return ">";
        case Cmp::Lt: return "<";
    }
    throw std::logic_error("bad comparator");
}

bool cmp_holds(Cmp c, const Rational& lhs, const Rational& rhs) {
    switch (c) {
        case Cmp::Ge: return lhs >= rhs;
        case Cmp::Le: return lhs <= rhs;
        case Cmp::Eq: return lhs == rhs;
        case Cmp::Gt: return lhs > rhs;
        case Cmp::Lt: return lhs < rhs;
    }
    throw std::logic_error("bad comparator");
}

struct Formula::Node {
    FormulaKind kind;
    std::string t1{}, t2{};
    std::string sym{};
    std::vector<Formula> kids{};
    Polynomial poly{};
    Cmp cmp = Cmp::Ge;
    Rational bound{};
};

bool Monomial::operator==(const Monomial& o) const {
    return coef == o.coef && factors == o.factors;
}

FormulaKind Formula::kind() const { return node_->kind; }

const std::string& Formula::time1() const { return node_->t1; }
const std::string& Formula::time2() const { return node_->t2; }
const std::string& Formula::symbol() const { return node_->sym; }

std::size_t Formula::arity() const { return node_->kids.size(); }

const Formula& Formula::child(std::size_t i) const {
    if (i >= node_->kids.size()) throw std::logic_error("formula child out of range");
    return node_->kids[i];
}

const Polynomial& Formula::poly() const { return node_->poly; }
Cmp Formula::cmp() const { return node_->cmp; }
const Rational& Formula::bound() const { return node_->bound; }

bool Formula::operator==(const Formula& o) const {
    if (node_ == o.node_) return true;
    const Node& a = *node_;
    const Node& b = *o.node_;
    return a.kind == b.kind && a.t1 == b.t1 && a.t2 == b.t2 && a.sym == b.sym &&
           a.kids == b.kids && a.poly == b.poly && a.cmp == b.cmp && a.bound == b.bound;
}

Formula Formula::make(Node n) {
    return Formula(std::make_shared<const Node>(std::move(n)));
}

Formula Formula::time_eq(std::string t1, std::string t2) {
    return make({.kind = FormulaKind::TimeEq, .t1 = std::move(t1), .t2 = std::move(t2)});
}

Formula Formula::time_le(std::string t1, std::string t2) {
    return make({.kind = FormulaKind::TimeLe, .t1 = std::move(t1), .t2 = std::move(t2)});
}

Formula Formula::time_lt(std::string t1, std::string t2) {
    return make({.kind = FormulaKind::TimeLt, .t1 = std::move(t1), .t2 = std::move(t2)});
}

Formula Formula::holds(std::string t1, std::string t2, std::string fact) {
    return make({.kind = FormulaKind::Holds,
                 .t1 = std::move(t1),
                 .t2 = std::move(t2),
                 .sym = std::move(fact)});
}

Formula Formula::occ(std::string t1, std::string t2, std::string event) {
    return make({.kind = FormulaKind::Occ,
                 .t1 = std::move(t1),
                 .t2 = std::move(t2),
                 .sym = std::move(event)});
}

Formula Formula::negate(Formula f) {
    return make({.kind = FormulaKind::Not, .kids = {std::move(f)}});
}

Formula Formula::conj(Formula a, Formula b) {
    return make({.kind = FormulaKind::And, .kids = {std::move(a), std::move(b)}});
}

Formula Formula::disj(Formula a, Formula b) {
    return make({.kind = FormulaKind::Or, .kids = {std::move(a), std::move(b)}});
}

Formula Formula::implies(Formula a, Formula b) {
    return make({.kind = FormulaKind::Implies, .kids = {std::move(a), std::move(b)}});
}

Formula Formula::inev(std::string t, Formula f) {
    return make({.kind = FormulaKind::Inev, .t1 = std::move(t), .kids = {std::move(f)}});
}

Formula Formula::poss(std::string t, Formula f) {
    return make({.kind = FormulaKind::Poss, .t1 = std::move(t), .kids = {std::move(f)}});
}

Formula Formula::prob_cmp(std::string t, Polynomial poly, Cmp cmp) {
    if (poly.empty()) throw std::invalid_argument("probability comparison with empty polynomial");
    bool has_pterm = false;
    for (const Monomial& m : poly) has_pterm = has_pterm || !m.factors.empty();
    if (!has_pterm) {
        throw std::invalid_argument("probability comparison needs at least one P-term");
    }
    return make({.kind = FormulaKind::ProbCmp,
                 .t1 = std::move(t),
                 .poly = std::move(poly),
                 .cmp = cmp});
}

Formula Formula::cond_prob_cmp(std::string t, Formula target, Formula given, Cmp cmp,
                               Rational bound) {
    return make({.kind = FormulaKind::CondProbCmp,
                 .t1 = std::move(t),
                 .kids = {std::move(target), std::move(given)},
                 .cmp = cmp,
                 .bound = std::move(bound)});
}

Formula desugar(const Formula& f) {
    switch (f.kind()) {
        case FormulaKind::TimeEq:
        case FormulaKind::TimeLe:
        case FormulaKind::TimeLt:
        case FormulaKind::Holds:
        case FormulaKind::Occ:
            return f;
        case FormulaKind::Not:
            return Formula::negate(desugar(f.child(0)));
        case FormulaKind::And:
            return Formula::conj(desugar(f.child(0)), desugar(f.child(1)));
        case FormulaKind::Or:
            return Formula::disj(desugar(f.child(0)), desugar(f.child(1)));
        case FormulaKind::Implies:
            return Formula::disj(Formula::negate(desugar(f.child(0))), desugar(f.child(1)));
        case FormulaKind::Inev:
            return Formula::inev(f.time1(), desugar(f.child(0)));
        case FormulaKind::Poss:
            return Formula::negate(
                Formula::inev(f.time1(), Formula::negate(desugar(f.child(0)))));
        case FormulaKind::ProbCmp: {
            Polynomial poly;
            poly.reserve(f.poly().size());
            for (const Monomial& m : f.poly()) {
                Monomial d{m.coef, {}};
                d.factors.reserve(m.factors.size());
                for (const Formula& g : m.factors) d.factors.push_back(desugar(g));
                poly.push_back(std::move(d));
            }
            return Formula::prob_cmp(f.time1(), std::move(poly), f.cmp());
        }
        case FormulaKind::CondProbCmp: {
            Formula target = desugar(f.child(0));
            Formula given = desugar(f.child(1));
            Polynomial poly;
            poly.push_back({Rational(1), {Formula::conj(target, given)}});
            poly.push_back({-f.bound(), {given}});
            return Formula::prob_cmp(f.time1(), std::move(poly), f.cmp());
        }
    }
    throw std::logic_error("bad formula kind");
}

bool is_core(const Formula& f) {
    switch (f.kind()) {
        case FormulaKind::Implies:
        case FormulaKind::Poss:
        case FormulaKind::CondProbCmp:
            return false;
        case FormulaKind::ProbCmp:
            for (const Monomial& m : f.poly())
                for (const Formula& g : m.factors)
                    if (!is_core(g)) return false;
            return true;
        default:
            for (std::size_t i = 0; i < f.arity(); ++i)
                if (!is_core(f.child(i))) return false;
            return true;
    }
}

namespace {

void collect_times(const Formula& f, std::vector<std::string>& out) {
    switch (f.kind()) {
        case FormulaKind::TimeEq:
        case FormulaKind::TimeLe:
        case FormulaKind::TimeLt:
        case FormulaKind::Holds:
        case FormulaKind::Occ:
            out.push_back(f.time1());
            out.push_back(f.time2());
            break;
        case FormulaKind::Not:
        case FormulaKind::And:
        case FormulaKind::Or:
        case FormulaKind::Implies:
            for (std::size_t i = 0; i < f.arity(); ++i) collect_times(f.child(i), out);
            break;
        case FormulaKind::Inev:
        case FormulaKind::Poss:
            out.push_back(f.time1());
            collect_times(f.child(0), out);
            break;
        case FormulaKind::ProbCmp:
            out.push_back(f.time1());
            for (const Monomial& m : f.poly())
                for (const Formula& g : m.factors) collect_times(g, out);
            break;
        case FormulaKind::CondProbCmp:
            out.push_back(f.time1());
            collect_times(f.child(0), out);
            collect_times(f.child(1), out);
            break;
    }
}

}  // namespace

std::set<std::string> time_symbols(const Formula& f) {
    std::vector<std::string> all;
    collect_times(f, all);
    return {all.begin(), all.end()};
}

std::vector<std::string> time_symbols_ordered(const Formula& f) {
    std::vector<std::string> all;
    collect_times(f, all);
    std::vector<std::string> out;
    std::set<std::string> seen;
    for (auto& s : all)
        if (seen.insert(s).second) out.push_back(s);
    return out;
}

void atom_symbols(const Formula& f, std::set<std::string>& facts,
                  std::set<std::string>& events) {
    switch (f.kind()) {
        case FormulaKind::Holds:
            facts.insert(f.symbol());
            break;
        case FormulaKind::Occ:
            events.insert(f.symbol());
            break;
        case FormulaKind::ProbCmp:
            for (const Monomial& m : f.poly())
                for (const Formula& g : m.factors) atom_symbols(g, facts, events);
            break;
        default:
            for (std::size_t i = 0; i < f.arity(); ++i)
                atom_symbols(f.child(i), facts, events);
            break;
    }
}

}  // namespace tempra
