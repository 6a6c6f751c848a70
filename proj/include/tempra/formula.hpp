#pragma once

#include <memory>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "tempra/rational.hpp"

namespace tempra {

enum class Cmp { Ge, Le, Eq, Gt, Lt };

std::string_view cmp_text(Cmp c);
bool cmp_holds(Cmp c, const Rational& lhs, const Rational& rhs);

enum class FormulaKind {
    // core
    TimeEq,
    TimeLe,
    TimeLt,
    Holds,
    Occ,
    Not,
    And,
    Or,
    Inev,
    ProbCmp,
    // sugar, removed by desugar()
    Implies,
    Poss,
    CondProbCmp,
};

class Formula;

// One product term of a probability polynomial: coef * P_t(f1) * ... * P_t(fk).
// An empty factor list is a plain rational constant.
struct Monomial {
    Rational coef;
    std::vector<Formula> factors;
    bool operator==(const Monomial& o) const;
};

// Sum of monomials, always compared against zero.
using Polynomial = std::vector<Monomial>;

// Immutable formula handle with structural equality.  Field meanings by kind:
//   TimeEq/TimeLe/TimeLt   time1, time2
//   Holds/Occ              time1, time2, symbol
//   Not                    child(0)
//   And/Or/Implies         child(0), child(1)
//   Inev/Poss              time1, child(0)
//   ProbCmp                time1 (shared P-term time), poly, cmp
//   CondProbCmp            time1, child(0)=target, child(1)=given, cmp, bound
class Formula {
public:
    FormulaKind kind() const;
    const std::string& time1() const;
    const std::string& time2() const;
    const std::string& symbol() const;
    std::size_t arity() const;
    const Formula& child(std::size_t i) const;
    const Polynomial& poly() const;
    Cmp cmp() const;
    const Rational& bound() const;

    bool operator==(const Formula& o) const;

    static Formula time_eq(std::string t1, std::string t2);
    static Formula time_le(std::string t1, std::string t2);
    static Formula time_lt(std::string t1, std::string t2);
    static Formula holds(std::string t1, std::string t2, std::string fact);
    static Formula occ(std::string t1, std::string t2, std::string event);
    static Formula negate(Formula f);
    static Formula conj(Formula a, Formula b);
    static Formula disj(Formula a, Formula b);
    static Formula implies(Formula a, Formula b);
    static Formula inev(std::string t, Formula f);
    static Formula poss(std::string t, Formula f);
    // Rejects polynomials without a single P-term factor: with no P-term there
    // is no time index to attach and no way to print the formula back.
    static Formula prob_cmp(std::string t, Polynomial poly, Cmp cmp);
    static Formula cond_prob_cmp(std::string t, Formula target, Formula given,
                                 Cmp cmp, Rational bound);

private:
    struct Node;
    static Formula make(Node n);
    explicit Formula(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
    std::shared_ptr<const Node> node_;
};

// Rewrites Implies, Poss and CondProbCmp into the core connectives:
//   a -> b            becomes  ~a | b
//   POSS[t](f)        becomes  ~INEV[t](~f)
//   P[t](f|g) cmp a   becomes  P[t](f & g) - a*P[t](g) cmp 0
// Idempotent; core formulas come back structurally identical.
Formula desugar(const Formula& f);

bool is_core(const Formula& f);

// Every time symbol mentioned anywhere in the formula, including the indices
// of INEV/POSS/P operators and symbols inside P-term factors.
std::set<std::string> time_symbols(const Formula& f);

// Same symbols in depth-first first-appearance order (used for binding biases).
std::vector<std::string> time_symbols_ordered(const Formula& f);

// Fact and event symbols mentioned in HOLDS/OCC atoms anywhere in the formula.
void atom_symbols(const Formula& f, std::set<std::string>& facts,
                  std::set<std::string>& events);

}  // namespace tempra
