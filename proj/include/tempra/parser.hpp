#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "tempra/formula.hpp"

namespace tempra {

struct ParseError : std::runtime_error {
    int line;    // 1-based
    int column;  // 1-based
    std::vector<std::string> expected;

    ParseError(int line, int column, const std::string& message,
               std::vector<std::string> expected = {});
};

// Parses the concrete syntax:
//   ~  &  |  ->                    connectives, loosest to tightest: ->, |, &, ~
//   t1 = t2, t1 <= t2, t1 < t2     time comparisons
//   HOLDS(t1,t2,fact)  OCC(t1,t2,event)
//   INEV[t](f)  POSS[t](f)
//   poly cmp poly                  cmp in {>=, <=, =, >, <}; terms are
//                                  [rational *] P[t](f) chains or rationals
//   P[t](f | g) cmp rational       conditional form; the bar term must stand
//                                  alone against a constant
// Identifiers may contain '-' ("below-freezing"), so polynomial subtraction
// needs surrounding whitespace or adjacent punctuation.  Inside P[t](...) a
// single top-level '|' is the conditional bar; write disjunction there with
// explicit parentheses.  Throws ParseError with a 1-based position.
Formula parse_formula(std::string_view text);

// Canonical text form: nested binary connectives parenthesized (the
// outermost is not), probability polynomials printed against 0.
// parse_formula(print_formula(f)) == f.
std::string print_formula(const Formula& f);

}  // namespace tempra
