#pragma once

#include <map>
#include <vector>

#include "cardlogic/prover.hpp"
#include "cardlogic/syntax.hpp"

namespace cardlogic {

// ---------------------------------------------------------------------------
// The small / half / large partition
// ---------------------------------------------------------------------------

enum class SizeClass { Small, Half, Large };

std::string to_string(SizeClass c);

struct Partition {
    std::map<Noun, SizeClass> assignment;

    SizeClass at(const Noun& x) const;
    std::vector<Noun> in_class(SizeClass c) const;  // sorted
    bool is(const Noun& x, SizeClass c) const { return at(x) == c; }
};

// Standard partition of the atoms of a consistent theory:
//   1. p ==_c ~p            puts p and ~p into half;
//   2. p <_more q (some q)  puts p into small and ~p into large;
//   3. everything else goes to half.
// The two assigning steps provably never conflict for a consistent theory;
// a conflict is reported as an internal error.  The structural properties of
// the partition (complement duality, downward closure of small under <=_c,
// and so on) are asserted before returning.
Partition standard_partition(const DerivedRelations& rels);

// Refined partition around a designated noun p*: additionally puts every
// p <=_c p* into small (hence p* itself).  Preconditions (violations raise
// precondition_error): not(~p* <=_c p*), and no x with ~p* <_more x.
Partition refined_partition(const DerivedRelations& rels, const Noun& pstar);

// Text table: one line per size class, members sorted.
std::string render_partition(const Partition& p);

// Q: the small nouns whose interpretation the theory forces to be nonempty.
// Closed under ==_c; sorted.
std::vector<Noun> compute_Q(const SaturationResult& sat, const Partition& partition);

// ---------------------------------------------------------------------------
// Listings of ==_c classes
// ---------------------------------------------------------------------------

using NounClass = std::vector<Noun>;  // one ==_c class, sorted

struct Listing {
    std::vector<NounClass> classes;

    // Index of the class containing x, or -1.
    int position_of(const Noun& x) const;
};

// Partitions `among` into ==_c classes; classes sorted by least element.
std::vector<NounClass> equivc_classes(const DerivedRelations& rels,
                                      const std::vector<Noun>& among);

// Topological sort of the classes along <_c (predecessors first).
// Deterministic: ties go to the class with the least representative.
Listing proper_listing(std::vector<NounClass> classes, const DerivedRelations& rels);

// Proper listing that defers the class of y as long as possible: every class
// X with not(y <=_c X) comes before [y].
Listing listing_placing_late(std::vector<NounClass> classes, const DerivedRelations& rels,
                             const Noun& y);

// Rewrites a proper listing so that [y] is immediately followed by the
// classes strictly between [y] and [x] and then by [x] itself, preserving
// relative order elsewhere; used to force equal sizes onto [x] and [y].
// Precondition: x and y listed, not(y <_more x) — i.e. the theory does not
// derive that x is strictly bigger than y (violation raises
// precondition_error).
Listing reorder_for_equal_size(const Listing& listing, const DerivedRelations& rels,
                               const Noun& x, const Noun& y);

// Text table: one line per class, 1-based positions.
std::string render_listing(const Listing& l);

}  // namespace cardlogic
