#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "cardlogic/cardinal.hpp"
#include "cardlogic/model.hpp"
#include "cardlogic/partition.hpp"
#include "cardlogic/prover.hpp"

namespace cardlogic {

// ---------------------------------------------------------------------------
// Build plans
// ---------------------------------------------------------------------------

// Steering knobs for the half completion, used when a caller needs a model
// with a particular shape (typically to falsify a goal sentence):
//   wish   — when a block may freely pick either side of a complement pair,
//            prefer these nouns;
//   avoid  — keep these nouns empty: no block may pick them, and nothing
//            may force them (callers must ensure the theory does not prove
//            them nonempty);
//   apart  — keep these two nouns' interpretations disjoint where the block
//            structure does not already force them together: a block that
//            carries one of the pair prefers the complement of the other
//            (callers must ensure the theory does not prove "some x y").
struct CompletionHints {
    std::set<Noun> wish;
    std::set<Noun> avoid;
    std::optional<std::pair<Noun, Noun>> apart;
};

// A build plan fixes the construction's free choices: the partition, the
// listing of the nonempty small ==_c classes, which positions are forced to
// take a strictly larger size (overrides only ever add demands), and the
// completion hints.  Positions are 1-based; listing.classes.size()+1 denotes
// the half step.
struct BuildPlan {
    Partition partition;
    Listing listing;
    std::set<std::size_t> demand_overrides;
    CompletionHints hints;
};

// The canonical plan: standard partition, proper listing of Q/==_c, no
// overrides, no hints.
BuildPlan default_plan(const SaturationResult& sat, const DerivedRelations& rels);
BuildPlan default_plan(const Theory& gamma);

// ---------------------------------------------------------------------------
// Per-class canonical structures
// ---------------------------------------------------------------------------

// A finite structure realizing a set of universal/existential sentences with
// intersections exactly where derivable: one point per derivable unordered
// pair {p,q} with "some p q", and the point lies in x iff p <= x or q <= x
// (derivably).  Points are identified by their sorted tag pair.
struct CanonicalStructure {
    std::vector<std::pair<Noun, Noun>> points;     // sorted unordered pairs
    std::vector<Noun> atoms;                       // noun universe used
    std::map<Noun, std::set<std::size_t>> interp;  // noun -> point indices
};

// Preconditions: delta contains only all/some sentences.  extra_atoms extends
// the noun universe (complement-closed) beyond delta's own nouns.
// Postconditions (asserted): the structure satisfies delta, and for all
// nouns p,q of the universe, the interpretations of p and q intersect iff
// delta derives "some p q".
CanonicalStructure canonical_base_model(const Theory& delta,
                                        const std::vector<Noun>& extra_atoms = {});

// Each point becomes one block of size kappa named "<prefix>(p,q)" after its
// tag pair.  kappa must be infinite (a finite kappa would break the exact-
// cardinality properties and is rejected with precondition_error).
Structure inflate(const CanonicalStructure& base, Cardinal kappa, const std::string& id_prefix);

// ---------------------------------------------------------------------------
// The size ladder
// ---------------------------------------------------------------------------

struct KappaLadder {
    std::vector<Cardinal> kappas;  // kappas[i-1] = size of step i; size n+1
};

// Whether listing position i (2 <= i <= n+1, 1-based; n+1 is the half step)
// demands a size strictly larger than position i-1's:
//   i <= n : some earlier class sits strictly below [p_i] in <_more while
//            already holding the current size;
//   i = n+1: the same with any half noun (a) or any large noun (b) as the
//            upper end, or n = 0 (c).
// Positions in `overrides` always demand.
bool demands_larger(std::size_t i, const Listing& listing, const DerivedRelations& rels,
                    const Partition& partition, const std::vector<Cardinal>& kappas_so_far,
                    const std::set<std::size_t>& overrides);

// The full ladder kappa_1 ... kappa_{n+1}: aleph_0 at the bottom, stepping to
// the successor aleph exactly where a position demands it.  Nondecreasing
// (asserted).
KappaLadder kappa_ladder(const Listing& listing, const DerivedRelations& rels,
                         const Partition& partition, const std::set<std::size_t>& overrides);

// ---------------------------------------------------------------------------
// Half completion
// ---------------------------------------------------------------------------

// For every block, the set of half nouns containing it: extends the seed
// sets (which must be complement-disjoint and <=-monotone per block) to a
// full complement-pair transversal, keeping <=-monotonicity, never touching
// `avoid` nouns or anything the theory sizes below them.  `carriers` lists,
// per block, small nouns the block is already known to belong to (via its
// tag); the `apart` hint consults it in addition to the block's own picks.
struct HalfAssignment {
    std::map<std::string, std::set<Noun>> chosen;  // block id -> half nouns
};

HalfAssignment half_completion(const std::vector<Block>& blocks,
                               const std::vector<Noun>& half_nouns,
                               const std::map<std::string, std::set<Noun>>& seeds,
                               const DerivedRelations& rels, const SaturationResult& sat,
                               const CompletionHints& hints,
                               const std::map<std::string, std::set<Noun>>& carriers = {});

// ---------------------------------------------------------------------------
// The construction
// ---------------------------------------------------------------------------

struct BuildTrace {
    std::vector<std::string> lines;
    void add(std::string line) { lines.push_back(std::move(line)); }
    std::string str() const;
};

// Builds a model of a consistent theory along the plan: canonical structures
// per listed class inflated to the ladder sizes, a structure for the half
// nouns, unit witness blocks for the theory's existential sentences, a
// filler block guaranteeing a largest block, the half completion, and
// complements for the large nouns.  The result is validated, satisfies
// gamma, and its structural properties (empty unlisted smalls, monotone
// inclusions, exact class cardinalities, witnessed small intersections,
// full-size large nouns, the universe size, and the aleph bound) are
// asserted on every build.  Throws precondition_error for an inconsistent
// theory.
SymbolicModel build_model(const Theory& gamma, const BuildPlan& plan,
                          BuildTrace* trace = nullptr);
SymbolicModel build_model(const Theory& gamma, BuildTrace* trace = nullptr);

}  // namespace cardlogic
