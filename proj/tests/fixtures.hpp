#pragma once

// Shared test fixtures: the seventeen-sentence worked theory, its reference
// model, witness models justifying the corrected relation tables, and the
// nine worked derivation problems with their hand-encoded proof trees.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cardlogic/model.hpp"
#include "cardlogic/prover.hpp"
#include "cardlogic/syntax.hpp"

namespace fixtures {

using namespace cardlogic;

inline Noun N(const std::string& text) { return parse_noun(text); }
inline Sentence S(const std::string& text) { return parse_sentence(text); }
inline Theory T(const std::string& text) { return parse(text).sentences(); }

inline const char* worked_text() {
    return "all a ~a\n"
           "more c b\n"
           "atleast c d\n"
           "atleast d c\n"
           "more e c\n"
           "atleast e ~e\n"
           "atleast ~e e\n"
           "atleast f e\n"
           "atleast e f\n"
           "atleast g b\n"
           "all c d\n"
           "some d ~c\n"
           "some c f\n"
           "all e f\n"
           "some ~e f\n"
           "some ~e ~f\n"
           "some c e\n";
}

inline Theory worked_theory() { return T(worked_text()); }

// Builds a model from a block table and the positive nouns' interpretations;
// complements are filled in as exact complements.
inline SymbolicModel from_positive(Mode mode, const std::vector<Block>& blocks,
                                   const std::map<std::string, BlockSet>& positive) {
    Structure s;
    s.mode = mode;
    s.blocks = blocks;
    for (const auto& [base, ids] : positive) {
        BlockSet rest;
        for (const Block& b : blocks)
            if (!ids.count(b.id)) rest.insert(b.id);
        s.interp[Noun{base, false}] = ids;
        s.interp[Noun{base, true}] = std::move(rest);
    }
    return validate_model(std::move(s));
}

// The worked theory's reference model: two countable sets A1, A2; three sets
// B1, B2, B3 of size aleph_1; and one unit point per existential sentence
// (x1 for "some d ~c", x2 for "some ~e f", x3 for "some ~e ~f", x4 for
// "some c e", x5 for "some c f").
inline SymbolicModel reference_model() {
    const std::vector<Block> blocks = {
        {"A1", Cardinal::aleph(0)}, {"A2", Cardinal::aleph(0)}, {"B1", Cardinal::aleph(1)},
        {"B2", Cardinal::aleph(1)}, {"B3", Cardinal::aleph(1)}, {"x1", Cardinal::finite(1)},
        {"x2", Cardinal::finite(1)}, {"x3", Cardinal::finite(1)}, {"x4", Cardinal::finite(1)},
        {"x5", Cardinal::finite(1)},
    };
    return from_positive(Mode::Infinite, blocks,
                         {{"a", {}},
                          {"b", {}},
                          {"c", {"A1", "x4", "x5"}},
                          {"d", {"A1", "A2", "x1", "x4", "x5"}},
                          {"e", {"B1", "x4"}},
                          {"f", {"B1", "B2", "x2", "x4", "x5"}},
                          {"g", {"B3", "x1", "x2", "x3", "x4", "x5"}}});
}

// A model of the worked theory in which ~f has exactly one point while b and
// g have two: it falsifies every "x is at most as big as ~f" comparison for
// nonempty x, so those pairs cannot be derivable.
inline SymbolicModel small_fbar_model() {
    const std::vector<Block> blocks = {
        {"A1", Cardinal::aleph(0)}, {"w1", Cardinal::finite(1)}, {"B1", Cardinal::aleph(1)},
        {"B2", Cardinal::aleph(1)}, {"x1", Cardinal::finite(1)}, {"y1", Cardinal::finite(1)},
        {"y2", Cardinal::finite(1)},
    };
    return from_positive(Mode::Infinite, blocks,
                         {{"a", {}},
                          {"b", {"y1", "y2"}},
                          {"c", {"A1"}},
                          {"d", {"A1", "w1"}},
                          {"e", {"A1", "B1"}},
                          {"f", {"A1", "w1", "B1", "B2", "y1", "y2"}},
                          {"g", {"y1", "y2"}}});
}

// A model of the worked theory in which g is the whole universe, so ~g is
// empty: nothing can be strictly smaller than ~g.
inline SymbolicModel full_g_model() {
    const std::vector<Block> blocks = {
        {"A1", Cardinal::aleph(0)}, {"w1", Cardinal::finite(1)}, {"B1", Cardinal::aleph(1)},
        {"B2", Cardinal::aleph(1)}, {"x1", Cardinal::finite(1)},
    };
    return from_positive(Mode::Infinite, blocks,
                         {{"a", {}},
                          {"b", {}},
                          {"c", {"A1"}},
                          {"d", {"A1", "w1"}},
                          {"e", {"A1", "B1"}},
                          {"f", {"A1", "w1", "B1", "B2"}},
                          {"g", {"A1", "w1", "B1", "B2", "x1"}}});
}

// ---------------------------------------------------------------------------
// The nine worked derivation problems
// ---------------------------------------------------------------------------

struct WorkedExample {
    std::string name;
    Theory gamma;
    // The derived sentence; for the two inconsistency examples the goal is
    // unrestricted, so any sentence must become derivable.
    std::optional<Sentence> goal;
    std::vector<ProofTree> trees;  // hand-encoded derivations
};

inline ProofTree leaf(const Sentence& s) { return ProofTree{s, "hypothesis", {}}; }
inline ProofTree node(std::optional<Sentence> s, std::string rule, std::vector<ProofTree> kids) {
    return ProofTree{std::move(s), std::move(rule), std::move(kids)};
}
inline ProofTree axiom(const Noun& x) {
    return node(Sentence{Form::All, x, x}, "axiom", {});
}
// atleast x x, by subset-size over the axiom.
inline ProofTree self_size(const Noun& x) {
    return node(Sentence{Form::AtLeast, x, x}, "subset-size", {axiom(x)});
}

inline std::vector<WorkedExample> worked_examples() {
    std::vector<WorkedExample> out;

    // 1. all ~x x |- some x x, two different derivations.
    out.push_back({"example 1",
                   T("all ~x x"),
                   S("some x x"),
                   {node(S("some x x"), "non-empty",
                         {node(S("atleast x ~x"), "subset-size", {leaf(S("all ~x x"))})}),
                    node(S("some x x"), "more-some",
                         {node(S("more x ~x"), "non-empty-more", {leaf(S("all ~x x"))})})}});

    // 2. atleast p ~p |- atleast p q: p's share is at least half, hence full.
    const ProofTree half_up = node(S("atleast p q"), "up",
                                   {leaf(S("atleast p ~p")), self_size(N("p"))});
    out.push_back({"example 2", T("atleast p ~p"), S("atleast p q"), {half_up}});

    // 3. atleast p ~p, atleast q p |- atleast q x.
    out.push_back({"example 3",
                   T("atleast p ~p\natleast q p"),
                   S("atleast q x"),
                   {node(S("atleast q x"), "card-trans",
                         {leaf(S("atleast q p")),
                          node(S("atleast p x"), "up",
                               {leaf(S("atleast p ~p")), self_size(N("p"))})})}});

    // 4. atleast p ~p, more x q |- more p q.
    out.push_back({"example 4",
                   T("atleast p ~p\nmore x q"),
                   S("more p q"),
                   {node(S("more p q"), "more-right",
                         {node(S("atleast p x"), "up",
                               {leaf(S("atleast p ~p")), self_size(N("p"))}),
                          leaf(S("more x q"))})}});

    // 5. more p ~p, atleast ~p ~q |- more q ~q.
    {
        const ProofTree t3 = node(S("more p ~q"), "more-left",
                                  {leaf(S("more p ~p")), leaf(S("atleast ~p ~q"))});
        const ProofTree t4 = node(S("atleast q p"), "weak-more-anti", {t3});
        out.push_back({"example 5",
                       T("more p ~p\natleast ~p ~q"),
                       S("more q ~q"),
                       {node(S("more q ~q"), "more-right", {t4, t3})}});
    }

    // 6. atleast p ~p, more q ~q |- some p q.
    out.push_back({"example 6",
                   T("atleast p ~p\nmore q ~q"),
                   S("some p q"),
                   {node(S("some p q"), "more-some",
                         {node(S("more p ~q"), "more-right",
                               {node(S("atleast p q"), "up",
                                     {leaf(S("atleast p ~p")), self_size(N("p"))}),
                                leaf(S("more q ~q"))})})}});

    // 7. some p p, more q ~q |- some q q: the derived two-premise pattern.
    out.push_back(
        {"example 7",
         T("some p p\nmore q ~q"),
         S("some q q"),
         {node(S("some q q"), "card-\xE2\x88\x83",
               {leaf(S("some p p")),
                node(S("atleast q p"), "up",
                     {node(S("atleast q ~q"), "more-at-least", {leaf(S("more q ~q"))}),
                      self_size(N("q"))})})}});

    // 8. more p x, more q ~x |- anything (refutation).
    out.push_back(
        {"example 8",
         T("more p x\nmore q ~x"),
         std::nullopt,
         {node(std::nullopt, "x-card",
               {node(S("more q q"), "more-left",
                     {leaf(S("more q ~x")),
                      node(S("atleast ~x q"), "weak-more-anti", {leaf(S("more p x"))})}),
                self_size(N("q"))})}});

    // 9. atleast p ~p, more q p |- anything (refutation).
    out.push_back(
        {"example 9",
         T("atleast p ~p\nmore q p"),
         std::nullopt,
         {node(std::nullopt, "x-card",
               {node(S("more q q"), "more-left",
                     {leaf(S("more q p")),
                      node(S("atleast p q"), "card-trans",
                           {leaf(S("atleast p ~p")),
                            node(S("atleast ~p q"), "weak-more-anti",
                                 {leaf(S("more q p"))})})}),
                self_size(N("q"))})}});

    return out;
}

}  // namespace fixtures
