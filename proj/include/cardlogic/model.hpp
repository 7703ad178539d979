#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "cardlogic/cardinal.hpp"
#include "cardlogic/syntax.hpp"

namespace cardlogic {

// Models are kept symbolically as finitely many disjoint blocks of points,
// each with a cardinal size.  A noun's extension is a union of blocks, so
// cardinalities and intersections are computed exactly on block sets and the
// same machinery covers finite and infinite universes.
struct Block {
    std::string id;
    Cardinal size;  // >= 1: empty blocks are never stored

    friend bool operator==(const Block&, const Block&) = default;
};

enum class Mode {
    Infinite,      // the intended semantics: universes must be infinite
    Unrestricted,  // any universe, including finite ones (used for the
                   // bounded oracle and for unsoundness fixtures)
};

using BlockSet = std::set<std::string>;

// A structure interprets some nouns as block sets.  It need not interpret
// every noun, and it need not be closed under complement; it is the raw
// material the model builder works with.
struct Structure {
    std::vector<Block> blocks;          // unique ids
    std::map<Noun, BlockSet> interp;    // noun -> ids of blocks it contains
    Mode mode = Mode::Infinite;

    bool has(const Noun& x) const { return interp.count(x) > 0; }
};

// A full model: every mentioned noun is interpreted in both polarities and
// [[~p]] is exactly the complement of [[p]].  Obtained from a Structure via
// validate_model, which enforces those invariants.
struct SymbolicModel : Structure {};

// Checks the model invariants and stamps the structure as a model:
//  - block ids unique, block sizes >= 1,
//  - interpretations mention only existing blocks,
//  - nouns come in complement pairs partitioning the blocks,
//  - in Infinite mode, the universe has infinite cardinality.
SymbolicModel validate_model(Structure s);

// Total size of the universe (sum of all block sizes).
Cardinal universe_card(const Structure& m);

// Cardinality of a noun's extension.  Precondition: the noun is interpreted.
Cardinal card_of(const Structure& m, const Noun& x);

// Truth of one sentence.  Precondition: both nouns are interpreted.
bool satisfies(const Structure& m, const Sentence& phi);

struct SatisfactionReport {
    bool ok = true;
    std::vector<Sentence> failing;
};

SatisfactionReport satisfies_all(const Structure& m, const Theory& gamma);

// Disjoint union: blocks of part k are relabeled "k:<id>" (k is 1-based) and
// interpretations are transported blockwise and unioned across parts.
Structure disjoint_sum(const std::vector<Structure>& parts);

// Text rendering: the block table with sizes, then one line per interpreted
// noun giving its block union and cardinality.  Deterministic.
std::string render_model(const Structure& m);

}  // namespace cardlogic
