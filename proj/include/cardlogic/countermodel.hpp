#pragma once

#include <string>
#include <vector>

#include "cardlogic/model.hpp"
#include "cardlogic/modelbuild.hpp"
#include "cardlogic/prover.hpp"
#include "cardlogic/syntax.hpp"

namespace cardlogic {

// A countermodel for gamma |- phi: a model of gamma falsifying phi, plus the
// construction route taken.
//   strategy    — the mechanism that falsified phi:
//                   "cardinal-gap"          phi fails on a size comparison,
//                   "equal-cardinals"       phi (strict) fails on a tie,
//                   "added-point"           a fresh point breaks a subset goal,
//                   "disjoint-completion"   the completion keeps two nouns apart,
//                   "relocation"            one noun is moved inside another's
//                                           complement without changing sizes,
//                   "empty-interpretation"  a noun is kept empty;
//   enrichment  — harmless sentences added to steer the construction (each is
//                 consistent with gamma and does not make phi derivable); the
//                 model satisfies gamma and the enrichment both.
struct CountermodelReport {
    SymbolicModel model;
    std::string strategy;
    Theory enrichment;
};

// Builds a countermodel showing gamma does not prove phi.
// Preconditions (precondition_error): gamma is consistent, and phi is not
// derivable from gamma.  The result is re-verified internally; a failure of
// that check is an internal_error.
CountermodelReport countermodel(const Theory& gamma, const Sentence& phi);

// Independent check that m witnesses gamma not proving phi.
struct CountermodelCheck {
    bool ok = false;                      // model of gamma, phi false
    std::vector<Sentence> failing_gamma;  // gamma sentences m falsifies
    bool phi_satisfied = false;           // true when m fails to falsify phi
};

CountermodelCheck verify_countermodel(const SymbolicModel& m, const Theory& gamma,
                                      const Sentence& phi);

}  // namespace cardlogic
