#pragma once

#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "cardlogic/error.hpp"

namespace cardlogic {

// A noun is a base name with a polarity.  The complement operation flips the
// polarity, so taking a complement twice is the identity by construction;
// parsing normalizes any stack of '~' markers down to a single bit.
struct Noun {
    std::string base;
    bool negated = false;

    friend bool operator==(const Noun&, const Noun&) = default;
    // Positive nouns sort directly before their complements.
    friend auto operator<=>(const Noun&, const Noun&) = default;
};

inline Noun complement(Noun x) {
    x.negated = !x.negated;
    return x;
}

std::string to_string(const Noun& x);  // "p" or "~p"

// The four sentence forms:
//   All     — every left is a right            (inclusion)
//   Some    — some left is a right             (nonempty intersection)
//   AtLeast — there are at least as many lefts as rights
//   More    — there are strictly more lefts than rights
enum class Form { All, Some, AtLeast, More };

std::string form_keyword(Form f);  // "all" / "some" / "atleast" / "more"

struct Sentence {
    Form form = Form::All;
    Noun left;
    Noun right;

    friend bool operator==(const Sentence&, const Sentence&) = default;
    friend auto operator<=>(const Sentence&, const Sentence&) = default;
};

// The semantic negation: for every model, exactly one of phi and negate(phi)
// holds.  All(p,q) <-> Some(p,~q) and AtLeast(p,q) <-> More(q,p) (swapped).
Sentence negate(const Sentence& phi);

std::string to_string(const Sentence& phi);  // canonical keyword form

// A theory is an ordered list of sentences.
using Theory = std::vector<Sentence>;

struct SourceLocation {
    int line = 0;    // 1-based
    int column = 0;  // 1-based
};

struct ParsedSentence {
    Sentence sentence;
    SourceLocation where;
};

// Result of parsing a theory text.  Sentences keep their input order; exact
// duplicates (after '~~' normalization) are dropped with a warning rather
// than an error.
struct TheoryFile {
    std::vector<ParsedSentence> items;
    std::vector<std::string> warnings;

    Theory sentences() const {
        Theory out;
        out.reserve(items.size());
        for (const auto& it : items) out.push_back(it.sentence);
        return out;
    }
};

// Parses theory text.  Grammar, one sentence per line:
//   all <noun> <noun> | some <noun> <noun> | atleast <noun> <noun> | more <noun> <noun>
// with the long aliases
//   All p are q / Some p are q /
//   There are at least as many p as q / There are more p than q
// '#' starts a comment, '~' prefixes complement a noun, and the keywords
// all/some/atleast/more are reserved and cannot name a noun.  A line
// consisting of (or containing) an ellipsis is rejected: a theory must be a
// finite list, and this logic has no finite stand-in for an infinite one.
TheoryFile parse(const std::string& text);

// Parses a single sentence (same grammar, one line).  Used for goal
// arguments on the command line.
Sentence parse_sentence(const std::string& text);

// Parses a single noun ("p" or "~p", complement stacks normalized).  Used
// for noun arguments on the command line and for map keys in serialized
// structures.
Noun parse_noun(const std::string& text);

// All nouns occurring in gamma (and phi, if given), closed under complement,
// sorted, and deduplicated.  Positive nouns appear immediately before their
// complements, so atoms come in adjacent pairs.
std::vector<Noun> atoms_of(const Theory& gamma, const Sentence* phi = nullptr);

// Canonical text for a theory; parse(render(g)).sentences() == g.
std::string render(const Theory& gamma);

}  // namespace cardlogic
