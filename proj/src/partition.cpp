#include "cardlogic/partition.hpp"

#include <algorithm>

#include "cardlogic/error.hpp"

namespace cardlogic {

std::string to_string(SizeClass c) {
    switch (c) {
        case SizeClass::Small: return "small";
        case SizeClass::Half: return "half";
        case SizeClass::Large: return "large";
    }
    throw internal_error("unknown size class");
}

SizeClass Partition::at(const Noun& x) const {
    auto it = assignment.find(x);
    if (it == assignment.end())
        throw precondition_error("noun '" + to_string(x) + "' is not covered by the partition");
    return it->second;
}

std::vector<Noun> Partition::in_class(SizeClass c) const {
    std::vector<Noun> out;
    for (const auto& [noun, cls] : assignment)
        if (cls == c) out.push_back(noun);
    return out;  // map iteration is already sorted
}

namespace {

// Assigns x to c; the construction steps must never disagree about a noun.
void assign(Partition& part, const Noun& x, SizeClass c) {
    auto [it, inserted] = part.assignment.emplace(x, c);
    if (!inserted)
        CARDLOGIC_CHECK(it->second == c, "P-no-conflict: partition steps agree on every noun");
}

// `standard` guards the one property that only the standard construction
// enjoys: its large nouns all come from a strict size fact, hence are
// provably at-least-as-big as everything (weak-more-anti).  A refinement
// also makes complements of merely <=_c-bounded nouns large, and those can
// sit strictly below a half noun (take "atleast p ~q" and refine at q).
void check_partition_properties(const Partition& part, const DerivedRelations& rels,
                                bool standard) {
    const std::vector<Noun>& atoms = rels.atoms;
    auto cls = [&](const Noun& x) { return part.at(x); };
    for (const Noun& p : atoms) {
        const Noun pb = complement(p);
        CARDLOGIC_CHECK(part.assignment.count(p) == 1, "P-total: every atom is classified");
        if (rels.equivc(p, pb))
            CARDLOGIC_CHECK(cls(p) == SizeClass::Half, "P-i: p ==_c ~p forces half");
        bool has_bigger = false;
        for (const Noun& q : atoms) has_bigger = has_bigger || rels.ltmore(p, q);
        if (has_bigger)
            CARDLOGIC_CHECK(cls(p) == SizeClass::Small, "P-ii: p <_more q forces p small");
        CARDLOGIC_CHECK((cls(p) == SizeClass::Large) == (cls(pb) == SizeClass::Small),
                        "P-iii: large and small are complement-dual");
        if (cls(p) == SizeClass::Small)
            for (const Noun& q : atoms)
                if (rels.leqc(q, p))
                    CARDLOGIC_CHECK(cls(q) == SizeClass::Small,
                                    "P-iv: small is downward closed under <=_c");
        if (rels.leqc(p, pb))
            CARDLOGIC_CHECK((cls(p) == SizeClass::Small && cls(pb) == SizeClass::Large) ||
                                (cls(p) == SizeClass::Half && cls(pb) == SizeClass::Half),
                            "P-v: p <=_c ~p puts the pair in small/large or half/half");
        if (standard && cls(p) == SizeClass::Half)
            for (const Noun& q : atoms)
                if (rels.ltc(q, p))
                    CARDLOGIC_CHECK(cls(q) != SizeClass::Large,
                                    "P-vi: nothing large sits strictly below a half noun");
        if (rels.leq(pb, p))
            CARDLOGIC_CHECK(cls(pb) == SizeClass::Small && cls(p) == SizeClass::Large,
                            "P-vii: ~p <= p forces ~p small and p large");
    }
}

void run_standard_steps(Partition& part, const DerivedRelations& rels) {
    const std::vector<Noun>& atoms = rels.atoms;
    for (const Noun& p : atoms)
        if (rels.equivc(p, complement(p))) {
            assign(part, p, SizeClass::Half);
            assign(part, complement(p), SizeClass::Half);
        }
    for (const Noun& p : atoms)
        for (const Noun& q : atoms)
            if (rels.ltmore(p, q)) {
                assign(part, p, SizeClass::Small);
                assign(part, complement(p), SizeClass::Large);
            }
    for (const Noun& p : atoms)
        if (part.assignment.find(p) == part.assignment.end()) assign(part, p, SizeClass::Half);
}

}  // namespace

Partition standard_partition(const DerivedRelations& rels) {
    Partition part;
    run_standard_steps(part, rels);
    check_partition_properties(part, rels, /*standard=*/true);
    // Any large noun q comes from q' <_more z, so by (weak-more-anti) the
    // theory proves "atleast q x" for every x: large nouns are <=_c-tops.
    for (const Noun& q : rels.atoms)
        if (part.at(q) == SizeClass::Large)
            for (const Noun& x : rels.atoms)
                CARDLOGIC_CHECK(rels.leqc(x, q), "P-large-top: large nouns are <=_c maximal");
    return part;
}

Partition refined_partition(const DerivedRelations& rels, const Noun& pstar) {
    const Noun pstar_bar = complement(pstar);
    if (rels.leqc(pstar_bar, pstar))
        throw precondition_error("cannot refine the partition around '" + to_string(pstar) +
                                 "': the theory derives that its complement is no bigger");
    for (const Noun& x : rels.atoms)
        if (rels.ltmore(pstar_bar, x))
            throw precondition_error("cannot refine the partition around '" + to_string(pstar) +
                                     "': the theory derives that something is strictly bigger "
                                     "than its complement");
    Partition part;
    for (const Noun& p : rels.atoms)
        if (rels.leqc(p, pstar)) {
            assign(part, p, SizeClass::Small);
            assign(part, complement(p), SizeClass::Large);
        }
    run_standard_steps(part, rels);
    CARDLOGIC_CHECK(part.at(pstar) == SizeClass::Small,
                    "P-refined: the designated noun lands in small");
    check_partition_properties(part, rels, /*standard=*/false);
    return part;
}

std::vector<Noun> compute_Q(const SaturationResult& sat, const Partition& partition) {
    std::vector<Noun> q;
    for (const auto& [noun, cls] : partition.assignment)
        if (cls == SizeClass::Small && sat.derived(Sentence{Form::Some, noun, noun}))
            q.push_back(noun);
    // Nonemptiness respects ==_c on small nouns, so Q is a union of classes.
    for (const Noun& p : q)
        for (const auto& [other, cls] : partition.assignment)
            if (cls == SizeClass::Small &&
                sat.derived(Sentence{Form::AtLeast, other, p}) &&
                sat.derived(Sentence{Form::AtLeast, p, other}))
                CARDLOGIC_CHECK(std::find(q.begin(), q.end(), other) != q.end(),
                                "Q-equivc-closed: Q is closed under ==_c");
    return q;  // sorted: partition.assignment iterates in noun order
}

// ---------------------------------------------------------------------------
// Listings
// ---------------------------------------------------------------------------

int Listing::position_of(const Noun& x) const {
    for (std::size_t i = 0; i < classes.size(); ++i)
        if (std::find(classes[i].begin(), classes[i].end(), x) != classes[i].end())
            return static_cast<int>(i);
    return -1;
}

std::vector<NounClass> equivc_classes(const DerivedRelations& rels,
                                      const std::vector<Noun>& among) {
    std::vector<NounClass> classes;
    for (const Noun& x : among) {
        bool placed = false;
        for (NounClass& cls : classes)
            if (rels.equivc(cls.front(), x)) {
                cls.push_back(x);
                placed = true;
                break;
            }
        if (!placed) classes.push_back({x});
    }
    for (NounClass& cls : classes) std::sort(cls.begin(), cls.end());
    std::sort(classes.begin(), classes.end());
    return classes;
}

namespace {

// Kahn's algorithm over the class-level <_c order.  `defer` (when listed)
// is chosen only when it is the sole remaining candidate.
Listing kahn(std::vector<NounClass> classes, const DerivedRelations& rels,
             const NounClass* defer) {
    Listing out;
    std::vector<bool> placed(classes.size(), false);
    auto lt = [&](std::size_t i, std::size_t j) {
        return rels.ltc(classes[i].front(), classes[j].front());
    };
    for (std::size_t step = 0; step < classes.size(); ++step) {
        int best = -1;
        for (std::size_t i = 0; i < classes.size(); ++i) {
            if (placed[i]) continue;
            bool ready = true;
            for (std::size_t j = 0; j < classes.size(); ++j)
                if (!placed[j] && j != i && lt(j, i)) ready = false;
            if (!ready) continue;
            const bool deferred = defer != nullptr && classes[i] == *defer;
            if (deferred) {
                if (best < 0) best = static_cast<int>(i);  // keep only as a fallback
                continue;
            }
            if (best < 0 || (defer != nullptr && classes[static_cast<std::size_t>(best)] == *defer) ||
                classes[i].front() < classes[static_cast<std::size_t>(best)].front())
                best = static_cast<int>(i);
        }
        CARDLOGIC_CHECK(best >= 0, "L-acyclic: the class order <_c admits a topological sort");
        placed[static_cast<std::size_t>(best)] = true;
        out.classes.push_back(classes[static_cast<std::size_t>(best)]);
    }
    // Properness: no later class is <_c-below an earlier one.
    for (std::size_t i = 0; i < out.classes.size(); ++i)
        for (std::size_t j = i + 1; j < out.classes.size(); ++j)
            CARDLOGIC_CHECK(!rels.ltc(out.classes[j].front(), out.classes[i].front()),
                            "L-proper: listing respects <_c");
    return out;
}

}  // namespace

Listing proper_listing(std::vector<NounClass> classes, const DerivedRelations& rels) {
    return kahn(std::move(classes), rels, nullptr);
}

Listing listing_placing_late(std::vector<NounClass> classes, const DerivedRelations& rels,
                             const Noun& y) {
    NounClass yclass;
    for (const NounClass& cls : classes)
        if (std::find(cls.begin(), cls.end(), y) != cls.end()) yclass = cls;
    CARDLOGIC_CHECK(!yclass.empty(), "L-late: the deferred noun is listed");
    Listing out = kahn(std::move(classes), rels, &yclass);
    // Everything after [y] sits above it in <=_c.
    bool seen = false;
    for (const NounClass& cls : out.classes) {
        if (cls == yclass) {
            seen = true;
            continue;
        }
        if (seen)
            CARDLOGIC_CHECK(rels.leqc(y, cls.front()),
                            "L-late: only classes above [y] may follow it");
    }
    return out;
}

Listing reorder_for_equal_size(const Listing& listing, const DerivedRelations& rels,
                               const Noun& x, const Noun& y) {
    if (rels.ltmore(y, x))
        throw precondition_error("cannot give '" + to_string(x) + "' and '" + to_string(y) +
                                 "' equal sizes: the theory derives that the former is strictly "
                                 "bigger");
    if (!rels.ltc(y, x))
        throw precondition_error("reordering for equal sizes applies only when '" + to_string(y) +
                                 "' sits strictly below '" + to_string(x) + "' in <=_c");
    const int xi = listing.position_of(x);
    const int yi = listing.position_of(y);
    if (xi < 0 || yi < 0) throw precondition_error("both nouns must appear in the listing");
    if (xi == yi) return listing;
    const NounClass xclass = listing.classes[static_cast<std::size_t>(xi)];
    const NounClass yclass = listing.classes[static_cast<std::size_t>(yi)];

    // Everything not forced above [y] stays in front; the classes pinched
    // between [y] and [x] follow [y]; [x] comes right after them; classes
    // above [y] but not below [x] close the listing.  Relative order within
    // each piece is preserved, so properness is inherited piecewise.
    Listing out;
    std::vector<NounClass> middle, tail;
    for (const NounClass& cls : listing.classes) {
        if (cls == xclass || cls == yclass) continue;
        const Noun& c = cls.front();
        if (!rels.ltc(y, c))
            out.classes.push_back(cls);
        else if (rels.ltc(c, x))
            middle.push_back(cls);
        else
            tail.push_back(cls);
    }
    out.classes.push_back(yclass);
    out.classes.insert(out.classes.end(), middle.begin(), middle.end());
    out.classes.push_back(xclass);
    out.classes.insert(out.classes.end(), tail.begin(), tail.end());
    for (std::size_t i = 0; i < out.classes.size(); ++i)
        for (std::size_t j = i + 1; j < out.classes.size(); ++j)
            CARDLOGIC_CHECK(!rels.ltc(out.classes[j].front(), out.classes[i].front()),
                            "L-reorder-proper: reordered listing respects <_c");
    return out;
}

std::string render_partition(const Partition& p) {
    std::string out;
    for (SizeClass c : {SizeClass::Small, SizeClass::Half, SizeClass::Large}) {
        std::string row = to_string(c) + ":";
        for (const Noun& x : p.in_class(c)) row += " " + to_string(x);
        out += row + "\n";
    }
    return out;
}

std::string render_listing(const Listing& l) {
    std::string out;
    for (std::size_t i = 0; i < l.classes.size(); ++i) {
        std::string row = std::to_string(i + 1) + ": [";
        std::string sep;
        for (const Noun& x : l.classes[i]) {
            row += sep + to_string(x);
            sep = " ";
        }
        out += row + "]\n";
    }
    return out;
}

}  // namespace cardlogic
