#include <sstream>

#include "tempra/parser.hpp"

namespace tempra {

namespace {

void print(std::ostream& os, const Formula& f);

// Children of ~, & and | get parentheses unless they bind at least as
// tightly themselves; atoms and the bracketed operators never need them.
bool needs_parens(const Formula& f) {
    switch (f.kind()) {
        case FormulaKind::And:
        case FormulaKind::Or:
        case FormulaKind::Implies:
            return true;
        default:
            return false;
    }
}

void print_operand(std::ostream& os, const Formula& f) {
    if (needs_parens(f)) {
        os << '(';
        print(os, f);
        os << ')';
    } else {
        print(os, f);
    }
}

// Directly inside P[t](...) a top-level '|' reads as the conditional bar, so
// a disjunction body must keep its parentheses.
void print_pterm_body(std::ostream& os, const Formula& f) {
    if (f.kind() == FormulaKind::Or) {
        os << '(';
        print(os, f);
        os << ')';
    } else {
        print(os, f);
    }
}

void print(std::ostream& os, const Formula& f) {
    switch (f.kind()) {
        case FormulaKind::TimeEq:
            os << f.time1() << " = " << f.time2();
            break;
        case FormulaKind::TimeLe:
            os << f.time1() << " <= " << f.time2();
            break;
        case FormulaKind::TimeLt:
            os << f.time1() << " < " << f.time2();
            break;
        case FormulaKind::Holds:
            os << "HOLDS(" << f.time1() << "," << f.time2() << "," << f.symbol() << ")";
            break;
        case FormulaKind::Occ:
            os << "OCC(" << f.time1() << "," << f.time2() << "," << f.symbol() << ")";
            break;
        case FormulaKind::Not:
            os << '~';
            print_operand(os, f.child(0));
            break;
        case FormulaKind::And:
            print_operand(os, f.child(0));
            os << " & ";
            print_operand(os, f.child(1));
            break;
        case FormulaKind::Or:
            print_operand(os, f.child(0));
            os << " | ";
            print_operand(os, f.child(1));
            break;
        case FormulaKind::Implies:
            print_operand(os, f.child(0));
            os << " -> ";
            print_operand(os, f.child(1));
            break;
        case FormulaKind::Inev:
            os << "INEV[" << f.time1() << "](";
            print(os, f.child(0));
            os << ')';
            break;
        case FormulaKind::Poss:
            os << "POSS[" << f.time1() << "](";
            print(os, f.child(0));
            os << ')';
            break;
        case FormulaKind::ProbCmp: {
            const Polynomial& poly = f.poly();
            for (std::size_t i = 0; i < poly.size(); ++i) {
                const Monomial& m = poly[i];
                Rational coef = m.coef;
                if (i == 0) {
                    if (coef < Rational(0)) {
                        os << '-';
                        coef = -coef;
                    }
                } else if (coef < Rational(0)) {
                    os << " - ";
                    coef = -coef;
                } else {
                    os << " + ";
                }
                bool wrote_coef = false;
                if (m.factors.empty() || coef != Rational(1)) {
                    os << coef.str();
                    wrote_coef = true;
                }
                for (std::size_t k = 0; k < m.factors.size(); ++k) {
                    if (wrote_coef || k > 0) os << '*';
                    os << "P[" << f.time1() << "](";
                    print_pterm_body(os, m.factors[k]);
                    os << ')';
                }
            }
            os << ' ' << cmp_text(f.cmp()) << " 0";
            break;
        }
        case FormulaKind::CondProbCmp:
            os << "P[" << f.time1() << "](";
            print_pterm_body(os, f.child(0));
            os << " | ";
            print_pterm_body(os, f.child(1));
            os << ") " << cmp_text(f.cmp()) << ' ' << f.bound().str();
            break;
    }
}

}  // namespace

std::string print_formula(const Formula& f) {
    std::ostringstream os;
    print(os, f);
    return os.str();
}

}  // namespace tempra
