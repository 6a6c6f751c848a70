#pragma once

#include "tempra/model.hpp"

namespace tempra {

// How to read the fact-subinterval constraint (C3).  Literal keeps the side
// conditions as stated (the two end-point point-intervals of a token are
// exempt); AllSubintervals demands every grid subinterval, point intervals
// included.
enum class SubintervalRule { Literal, AllSubintervals };

// Exhaustive audit of the six model constraints over the finite grid:
//   C1  accessibility only refines as time grows
//   C2  accessibility is an equivalence (a partition) at each time
//   C3  facts hold on the grid subintervals of any interval they hold on
//   C4  worlds related at t agree on all extents ending at or before t
//   C5  each mu_t^w puts total mass one on the R-class of w
//   C6  worlds sharing a class at t share the distribution
// Each entry names the constraint and carries a concrete witness.
ViolationReport check_constraints(const Model& m,
                                  SubintervalRule rule = SubintervalRule::Literal);

}  // namespace tempra
