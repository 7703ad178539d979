#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "cardlogic/countermodel.hpp"
#include "cardlogic/model.hpp"
#include "cardlogic/syntax.hpp"

namespace cardlogic {

// Bounded brute-force semantic reasoner.  Models are enumerated over the
// Boolean atoms of the base-noun algebra: any model's sentence truth values
// depend only on the cardinalities of those atoms, so one Cardinal choice per
// atom covers every model shape up to isomorphism at the given sizes.
struct OracleBounds {
    int max_aleph = 2;                         // atoms may take aleph_0..aleph_max
    std::vector<int> finite_sizes = {0, 1, 2};  // allowed finite atom sizes
    std::vector<std::string> base_nouns;        // guard: at most 4
};

// Enumerates every assignment of an allowed size to each of the 2^k Boolean
// atoms, in ascending lexicographic order (atom 0 = all-complements is the
// most significant digit; sizes ascend finite-then-aleph).  Size-0 atoms are
// omitted from the blocks.  In Infinite mode only assignments with infinite
// total are visited.  `visit` returns false to stop early.
// Throws precondition_error when more than 4 base nouns are given.
void enumerate_models(const OracleBounds& bounds, Mode mode,
                      const std::function<bool(const SymbolicModel&)>& visit);

// Convenience collector for small bounds.
std::vector<SymbolicModel> enumerate_models(const OracleBounds& bounds, Mode mode);

struct OracleResult {
    bool entailed_up_to_bound = false;
    std::optional<SymbolicModel> model;  // first model of gamma falsifying phi
    long models_scanned = 0;             // enumerated models (all assignments visited)
    long gamma_models = 0;               // how many of them satisfied gamma
};

// Scans the enumeration and returns the first model of gamma falsifying phi,
// or entailed_up_to_bound when none exists within the bounds.  All nouns of
// gamma and phi must be over bounds.base_nouns.
OracleResult oracle_entails(const Theory& gamma, const Sentence& phi, const OracleBounds& bounds,
                            Mode mode = Mode::Infinite);

// Prover/oracle agreement probe.
//  - prover entails: agreement iff the oracle finds no bounded countermodel;
//  - prover does not entail: agreement via a bounded oracle countermodel, or,
//    when the bounded scan is exhausted, via the constructive countermodel
//    module (whose cardinals may exceed the bounds); its output is attached.
// Disagreement (or a constructive failure) is reported, never thrown.
struct CrossCheckReport {
    bool prover_entails = false;
    OracleResult oracle;
    bool agreement = false;
    std::optional<CountermodelReport> attached;
    std::string note;
};

CrossCheckReport cross_check(const Theory& gamma, const Sentence& phi, const OracleBounds& bounds);

}  // namespace cardlogic
