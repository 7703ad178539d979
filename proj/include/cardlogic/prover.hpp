#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cardlogic/syntax.hpp"

namespace cardlogic {

// ---------------------------------------------------------------------------
// Rule table
// ---------------------------------------------------------------------------

// A rule schema over at most three noun variables.  A schema atom refers to a
// variable, optionally complemented; a premise or conclusion is a sentence
// form over two schema atoms.  The two refutation rules ("x", "x-card")
// conclude an arbitrary sentence, encoded as a missing conclusion.
struct SchemaAtom {
    int var = 0;      // 0..2
    bool bar = false;
};

struct SchemaSentence {
    Form form = Form::All;
    SchemaAtom left, right;
};

struct RuleSchema {
    std::string name;
    bool extension = false;  // true for the sound strengthenings beyond the core table
    std::vector<SchemaSentence> premises;       // 0, 1 or 2
    std::optional<SchemaSentence> conclusion;   // nullopt: refutation rule (any conclusion)
    int nvars = 0;
    std::string display;  // human-readable schema, e.g. "some p n, all n q => some p q"
};

// The full table: 21 core rules followed by 3 extension rules.  The
// extensions are sound for the same semantics and close derivability gaps
// the core table leaves open (each has a two-noun witness); they are flagged
// so callers can tell the two groups apart.
const std::vector<RuleSchema>& rule_schemas();

// ---------------------------------------------------------------------------
// Saturation
// ---------------------------------------------------------------------------

// One provenance step: how a sentence was obtained.
struct ProofStep {
    std::string rule;                 // rule name, or "hypothesis"
    std::vector<Sentence> premises;   // empty for hypotheses and axioms
};

class SaturationResult {
public:
    const std::vector<Noun>& atoms() const { return atoms_; }
    bool consistent() const { return consistent_; }

    // Membership in the derivable set.  When the theory is inconsistent this
    // answers true for every sentence over the atom table (ex falso); the
    // sentence's nouns must be drawn from the atom table.
    bool derived(const Sentence& phi) const;

    // The explicitly derived sentences (without the ex-falso completion),
    // in a deterministic order.
    std::vector<Sentence> derived_sentences() const;

    // Provenance of an explicitly derived sentence, if any.
    std::optional<ProofStep> provenance(const Sentence& phi) const;

    // When inconsistent: the refutation rule application that fired first.
    std::optional<ProofStep> falsum_provenance() const;

private:
    friend SaturationResult saturate(const Theory&, const std::vector<Noun>&);

    struct Prov {
        std::int32_t rule = -1;  // -1 absent, -2 hypothesis, else rule index
        std::int32_t p1 = -1, p2 = -1;  // fact ids of premises
        std::int32_t round = -1;
    };

    int index_of(const Noun& x) const;          // -1 if unknown
    std::size_t fact_id(Form f, int l, int r) const;
    Sentence sentence_of(std::size_t fact) const;

    std::vector<Noun> atoms_;
    std::vector<Prov> facts_;       // dense: 4 * A * A entries
    bool consistent_ = true;
    std::int32_t falsum_rule_ = -1;
    std::int32_t falsum_p1_ = -1, falsum_p2_ = -1;
};

// Computes the closure of gamma under the rule table over the atoms of gamma
// plus extra_atoms (closed under complement).  Saturation stops as soon as a
// refutation rule fires; consistency and provenance are recorded either way.
SaturationResult saturate(const Theory& gamma, const std::vector<Noun>& extra_atoms = {});

bool entails(const Theory& gamma, const Sentence& phi);
bool is_consistent(const Theory& gamma);

// ---------------------------------------------------------------------------
// Proof trees
// ---------------------------------------------------------------------------

// A derivation tree.  Leaves are hypotheses or axiom instances; inner nodes
// apply a rule to their children's conclusions.  A missing conclusion marks
// the root of a refutation ("falsum"), used when reporting inconsistency.
struct ProofTree {
    std::optional<Sentence> conclusion;
    std::string rule;  // "hypothesis" or a rule name
    std::vector<ProofTree> children;
};

// A derivation of phi from gamma, if one exists.  For an inconsistent theory
// every sentence over the atoms is derivable; the returned tree then roots a
// refutation rule at phi itself.
std::optional<ProofTree> proof_of(const Theory& gamma, const Sentence& phi);

// A refutation tree (falsum root) when gamma is inconsistent.
std::optional<ProofTree> inconsistency_proof(const Theory& gamma);

// Independent replay validation: checks leaves against gamma, every inner
// node against the rule table, and the root's conclusion.  Used to guard
// proof_of's output and to reject tampered trees.
bool check_proof(const ProofTree& tree, const Theory& gamma);

std::string render_proof(const ProofTree& tree);  // indented text

// ---------------------------------------------------------------------------
// Derived relations
// ---------------------------------------------------------------------------

// The derivability relations between nouns:
//   leq     x <= y      iff  all x y     is derivable  (inclusion)
//   leqc    x <=_c y    iff  atleast y x is derivable  (size comparison)
//   ltc     x <_c y     iff  leqc(x,y) and not leqc(y,x)
//   ltmore  x <_more y  iff  more y x    is derivable  (strict, witnessed)
//   equiv   x == y      iff  leq both ways
//   equivc  x ==_c y    iff  leqc both ways
struct DerivedRelations {
    std::vector<Noun> atoms;

    bool leq(const Noun& x, const Noun& y) const;
    bool leqc(const Noun& x, const Noun& y) const;
    bool ltc(const Noun& x, const Noun& y) const;
    bool ltmore(const Noun& x, const Noun& y) const;
    bool equiv(const Noun& x, const Noun& y) const;
    bool equivc(const Noun& x, const Noun& y) const;

    std::vector<std::pair<Noun, Noun>> pairs_leq() const;
    std::vector<std::pair<Noun, Noun>> pairs_leqc() const;
    std::vector<std::pair<Noun, Noun>> pairs_ltc() const;
    std::vector<std::pair<Noun, Noun>> pairs_ltmore() const;

    // implementation data (dense boolean matrices over atoms)
    std::vector<char> leq_m, leqc_m, ltmore_m;
    int index_of(const Noun& x) const;
};

// Precondition: gamma is consistent (all relations would be degenerate
// otherwise); throws precondition_error if not.
DerivedRelations relations(const Theory& gamma);
DerivedRelations relations(const SaturationResult& sat);

}  // namespace cardlogic
