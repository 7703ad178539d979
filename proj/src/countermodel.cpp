#include "cardlogic/countermodel.hpp"

#include <algorithm>
#include <optional>
#include <set>
#include <sstream>
#include <string>

#include "cardlogic/error.hpp"
#include "cardlogic/partition.hpp"

namespace cardlogic {

namespace {

// ---------------------------------------------------------------------------
// Shared machinery
// ---------------------------------------------------------------------------

struct Ctx {
    SaturationResult sat;
    DerivedRelations rels;
};

Ctx make_ctx(const Theory& gamma, const std::vector<Noun>& extra) {
    SaturationResult sat = saturate(gamma, extra);
    CARDLOGIC_CHECK(sat.consistent(),
                    "CM-consistent: the dispatcher only sees consistent theories");
    DerivedRelations rels = relations(sat);
    return {std::move(sat), std::move(rels)};
}

bool anchored(const Ctx& c, const Noun& t) {
    return c.sat.derived(Sentence{Form::Some, t, t});
}

// Adds "some t t" to gamma.  Such enrichments are always harmless where the
// dispatcher uses them: they cannot contradict the theory and cannot make
// the goal derivable (both asserted).
Ctx enrich_nonempty(Theory& gamma, const Noun& t, const Sentence& phi, Theory& enrichment,
                    const std::vector<Noun>& extra) {
    const Sentence s{Form::Some, t, t};
    gamma.push_back(s);
    enrichment.push_back(s);
    Ctx c = make_ctx(gamma, extra);
    CARDLOGIC_CHECK(!c.sat.derived(phi),
                    "CM-enrich-conservative: nonemptiness enrichments never make the goal derivable");
    return c;
}

// A canonical plan over a caller-chosen partition (standard or refined).
BuildPlan plan_for(const Ctx& c, Partition part) {
    std::vector<Noun> q = compute_Q(c.sat, part);
    Listing listing = proper_listing(equivc_classes(c.rels, q), c.rels);
    return BuildPlan{std::move(part), std::move(listing), {}, {}};
}

// The refinement at x exists whenever the goal at hand is underivable; both
// blocking conditions would let the goal be derived (see the dispatch legs).
void check_refinable(const Ctx& c, const Noun& x, const char* label) {
    CARDLOGIC_CHECK(!c.rels.leqc(complement(x), x), label);
    for (const Noun& z : c.rels.atoms) CARDLOGIC_CHECK(!c.rels.ltmore(complement(x), z), label);
}

std::string gap_or_tie(const SymbolicModel& m, const Noun& x, const Noun& y) {
    return card_of(m, x) == card_of(m, y) ? "equal-cardinals" : "cardinal-gap";
}

CountermodelReport dispatch(const Theory& gamma, const Sentence& phi);

// ---------------------------------------------------------------------------
// Goals "atleast x y": make y strictly bigger than x
// ---------------------------------------------------------------------------

CountermodelReport for_atleast(Theory gamma, const Sentence& phi) {
    const Noun x = phi.left, y = phi.right;
    const std::vector<Noun> extra{x, y};
    Theory enrichment;

    // Refine at x so x is small; if either blocking condition held, the goal
    // would be derivable (up, resp. weak-more-anti, gives "atleast x v" for
    // every v, hence for y).
    Ctx c = make_ctx(gamma, extra);
    check_refinable(c, x, "CM-atleast-refinable: a blocked refinement means the goal is derivable");
    Partition part = refined_partition(c.rels, x);

    if ((part.at(y) == SizeClass::Small || part.at(y) == SizeClass::Half) && !anchored(c, y)) {
        c = enrich_nonempty(gamma, y, phi, enrichment, extra);
        check_refinable(c, x, "CM-atleast-refinable: a blocked refinement means the goal is derivable");
        part = refined_partition(c.rels, x);
    }

    BuildPlan plan;
    if (part.at(y) == SizeClass::Small) {
        std::vector<Noun> q = compute_Q(c.sat, part);
        Listing listing = listing_placing_late(equivc_classes(c.rels, q), c.rels, y);
        const int ypos = listing.position_of(y);
        CARDLOGIC_CHECK(ypos >= 0, "CM-atleast-y-listed: the enriched y appears in the listing");
        // x precedes y (or is unlisted): y <=_c x would derive the goal.
        CARDLOGIC_CHECK(listing.position_of(x) < ypos,
                        "CM-atleast-x-first: x never sits at or after y in the listing");
        plan = BuildPlan{std::move(part), std::move(listing),
                         {static_cast<std::size_t>(ypos) + 1}, {}};
    } else {
        // y takes the top size; the override makes the top step strict.
        plan = plan_for(c, std::move(part));
        plan.demand_overrides.insert(plan.listing.classes.size() + 1);
    }

    SymbolicModel m = build_model(gamma, plan);
    return CountermodelReport{std::move(m), "cardinal-gap", std::move(enrichment)};
}

// ---------------------------------------------------------------------------
// Goals "more x y": keep x at most as big as y
// ---------------------------------------------------------------------------

CountermodelReport for_more(Theory gamma, const Sentence& phi) {
    const Noun x = phi.left, y = phi.right;
    const std::vector<Noun> extra{x, y};
    Theory enrichment;

    Ctx c = make_ctx(gamma, extra);
    if (x == y) {
        SymbolicModel m = build_model(gamma, plan_for(c, standard_partition(c.rels)));
        return CountermodelReport{std::move(m), "equal-cardinals", std::move(enrichment)};
    }

    bool use_refined = false;
    Partition part;
    for (int round = 0;; ++round) {
        CARDLOGIC_CHECK(round <= 4, "CM-more-dispatch-terminates: classification settles quickly");
        if (use_refined) {
            check_refinable(c, x, "CM-more-refinable: a blocked refinement means the goal is derivable");
            part = refined_partition(c.rels, x);
            CARDLOGIC_CHECK(part.at(y) == SizeClass::Small,
                            "CM-more-refined-y-small: refining at x keeps y small");
        } else {
            part = standard_partition(c.rels);
        }
        const SizeClass cx = part.at(x), cy = part.at(y);

        if (cx == SizeClass::Half && cy == SizeClass::Small && !use_refined) {
            // With y small, both blocking conditions of the refinement would
            // chain through "more _ y" to derive the goal.
            use_refined = true;
            continue;
        }
        CARDLOGIC_CHECK(!(cx == SizeClass::Large && cy == SizeClass::Small),
                        "CM-more-large-small: a large x over a small y derives the goal");

        // Only y ever needs weight: its top-size classes reach it by
        // themselves, half floats and small nouns get it by enrichment.
        const bool need_y = !anchored(c, y) &&
                            ((cy == SizeClass::Half) ||
                             (cy == SizeClass::Small && cx == SizeClass::Small && anchored(c, x)));
        if (need_y) {
            c = enrich_nonempty(gamma, y, phi, enrichment, extra);
            continue;
        }

        BuildPlan plan;
        if (cx == SizeClass::Small && cy == SizeClass::Small && anchored(c, x)) {
            if (c.rels.equivc(x, y)) {
                plan = plan_for(c, std::move(part));  // same class, same size
            } else if (!c.rels.leqc(y, x)) {
                std::vector<Noun> q = compute_Q(c.sat, part);
                Listing listing =
                    listing_placing_late(equivc_classes(c.rels, q), c.rels, y);
                CARDLOGIC_CHECK(listing.position_of(x) < listing.position_of(y),
                                "CM-more-x-first: x precedes y when y is not provably below x");
                plan = BuildPlan{std::move(part), std::move(listing), {}, {}};
            } else {
                // y provably (weakly) below x but not strictly fewer: line the
                // classes up and force a fresh size at y, equalizing through x.
                CARDLOGIC_CHECK(!c.rels.ltmore(y, x),
                                "CM-more-underivable: strictly-fewer y would derive the goal");
                std::vector<Noun> q = compute_Q(c.sat, part);
                Listing base = proper_listing(equivc_classes(c.rels, q), c.rels);
                Listing listing = reorder_for_equal_size(base, c.rels, x, y);
                const int ypos = listing.position_of(y);
                CARDLOGIC_CHECK(ypos >= 0, "CM-more-y-listed: y appears in the listing");
                plan = BuildPlan{std::move(part), std::move(listing),
                                 {static_cast<std::size_t>(ypos) + 1}, {}};
            }
        } else {
            plan = plan_for(c, std::move(part));
        }

        SymbolicModel m = build_model(gamma, plan);
        CARDLOGIC_CHECK(!(card_of(m, y) < card_of(m, x)),
                        "CM-more-capped: the plan keeps x within y's size");
        std::string strategy = gap_or_tie(m, x, y);
        return CountermodelReport{std::move(m), std::move(strategy), std::move(enrichment)};
    }
}

// ---------------------------------------------------------------------------
// Goals "all x y": a separating point in x outside y
// ---------------------------------------------------------------------------

CountermodelReport for_all(Theory gamma, const Sentence& phi) {
    const Noun x = phi.left, y = phi.right;
    const std::vector<Noun> extra{x, y};

    Ctx c = make_ctx(gamma, extra);
    SymbolicModel m = build_model(gamma, plan_for(c, standard_partition(c.rels)));
    if (!satisfies(m, phi))  // the size ladder already separates x from y
        return CountermodelReport{std::move(m), "cardinal-gap", {}};

    const std::vector<Noun>& atoms = c.rels.atoms;
    Structure s = m;
    int points = 0;
    const int point_budget = static_cast<int>(atoms.size() * gamma.size()) + 4;

    // One unit point whose memberships form an inclusion-closed transversal
    // of the complement pairs: everything above a root is in, and untouched
    // pairs default to their complement side (negated nouns denote
    // complements, so a point not placed in h falls into h-bar).  `shun`
    // steers repair points away from the side they are meant to balance.
    // Returns false when no such point exists; the caller then rebuilds.
    auto add_point = [&](const std::vector<Noun>& roots, const std::optional<Noun>& shun) {
        std::set<Noun> chosen;
        for (const Noun& r : roots)
            for (const Noun& g : atoms)
                if (c.rels.leq(r, g)) chosen.insert(g);
        for (const Noun& t : chosen)
            if (chosen.count(complement(t))) return false;  // forced memberships clash
        auto allowed = [&](const Noun& t) {
            if (c.rels.leq(t, complement(t))) return false;  // provably empty
            for (const Noun& g : atoms)
                if (c.rels.leq(t, g) && chosen.count(complement(g))) return false;
            return true;
        };
        for (const Noun& h : atoms) {
            if (h.negated) continue;
            const Noun hb = complement(h);
            if (chosen.count(h) || chosen.count(hb)) continue;
            const bool ok_h = allowed(h), ok_hb = allowed(hb);
            if (!ok_h && !ok_hb) return false;  // no side admits the point
            Noun pick = hb;
            if (ok_h != ok_hb)
                pick = ok_h ? h : hb;
            else if (shun && (*shun == h || *shun == hb))
                pick = complement(*shun);
            for (const Noun& g : atoms)
                if (c.rels.leq(pick, g)) chosen.insert(g);
        }
        if (++points > point_budget) return false;  // repairs are not converging
        const std::string pid = "*" + std::to_string(points);
        s.blocks.push_back(Block{pid, Cardinal::finite(1)});
        for (const Noun& t : chosen) s.interp[t].insert(pid);
        return true;
    };

    // The separating point lies in x and in the complement of y.  A unit
    // point can still break "atleast p q" when both sides were empty and
    // only q received it; repair with a point in p, steered away from q.
    bool stalled = !add_point({x, complement(y)}, std::nullopt);
    while (!stalled) {
        const Sentence* broken = nullptr;
        for (const Sentence& g : gamma)
            if ((g.form == Form::AtLeast || g.form == Form::More) && !satisfies(s, g)) {
                broken = &g;
                break;
            }
        if (!broken) break;
        CARDLOGIC_CHECK(broken->form == Form::AtLeast,
                        "CM-point-more-stable: unit points never break strict comparisons");
        stalled = !add_point({broken->left}, broken->right);
    }

    if (!stalled) {
        CARDLOGIC_CHECK(!satisfies(s, phi),
                        "CM-point-goal-stays-false: added points never land in y alone");
        m = validate_model(std::move(s));
        return CountermodelReport{std::move(m), "added-point", {}};
    }

    // Point surgery cannot fix every size deficit: when the theory proves
    // both "all l r" and "atleast l r" for nouns the base model left empty,
    // every point entering r drags in l (or vice versa) and the deficit is
    // structural -- the interpretations must be infinite.  Rebuild instead
    // over the theory extended with the goal's exact exception; the builder
    // then supplies the separating unit witness itself.
    const Sentence exception{Form::Some, x, complement(y)};
    Theory gamma2 = gamma;
    gamma2.push_back(exception);
    CARDLOGIC_CHECK(is_consistent(gamma2),
                    "CM-negation-consistent: an underivable universal has a consistent exception");
    Ctx c2 = make_ctx(gamma2, extra);
    SymbolicModel m2 = build_model(gamma2, plan_for(c2, standard_partition(c2.rels)));
    return CountermodelReport{std::move(m2), "added-point", Theory{exception}};
}

// ---------------------------------------------------------------------------
// Goals "some x y": keep x and y apart
// ---------------------------------------------------------------------------

CountermodelReport for_some(Theory gamma, const Sentence& phi) {
    const Noun x = phi.left, y = phi.right;
    const std::vector<Noun> extra{x, y};

    Ctx c = make_ctx(gamma, extra);
    Partition part = standard_partition(c.rels);

    if (!anchored(c, x) || !anchored(c, y)) {
        // Keep the possibly-empty noun actually empty.
        const Noun t = !anchored(c, x) ? x : y;
        CARDLOGIC_CHECK(part.at(t) != SizeClass::Large,
                        "CM-some-large-anchored: large nouns are provably inhabited");
        BuildPlan plan = plan_for(c, std::move(part));
        if (plan.partition.at(t) == SizeClass::Half) plan.hints.avoid = {t};
        SymbolicModel m = build_model(gamma, plan);
        return CountermodelReport{std::move(m), "empty-interpretation", {}};
    }

    if (part.at(x) == SizeClass::Large || part.at(y) == SizeClass::Large) {
        CARDLOGIC_CHECK(!(part.at(x) == SizeClass::Large && part.at(y) == SizeClass::Large),
                        "CM-some-two-large: two large nouns provably intersect");
        const Noun mover = part.at(y) == SizeClass::Large ? x : y;  // small or half
        const Noun big = part.at(y) == SizeClass::Large ? y : x;
        const Noun room = complement(big);

        // If "more mover room" were derivable, more-some would derive the
        // goal.  Underivable, so a model keeps the mover within room's size;
        // then the mover relocates inside room without changing any size.
        const Sentence psi{Form::More, mover, room};
        CARDLOGIC_CHECK(!c.sat.derived(psi),
                        "CM-some-relocatable: the mover is not provably bigger than its room");
        CountermodelReport sub = dispatch(gamma, psi);

        Theory gamma2 = gamma;
        gamma2.insert(gamma2.end(), sub.enrichment.begin(), sub.enrichment.end());
        Ctx c2 = make_ctx(gamma2, extra);

        Structure s = sub.model;
        const BlockSet moved = s.interp.at(mover);
        for (const Noun& p : c2.rels.atoms) {
            if (p.negated) continue;
            const Noun pb = complement(p);
            const bool grow_p = c2.rels.leq(room, p);
            const bool grow_pb = c2.rels.leq(room, pb);
            CARDLOGIC_CHECK(!(grow_p && grow_pb),
                            "CM-relocation-one-side: room never sits below both sides of a pair");
            if (!grow_p && !grow_pb) continue;
            const Noun& gr = grow_p ? p : pb;
            const Noun& sh = grow_p ? pb : p;
            BlockSet& grown = s.interp[gr];
            grown.insert(moved.begin(), moved.end());
            BlockSet& shrunk = s.interp[sh];
            for (const std::string& id : moved) shrunk.erase(id);
        }
        for (const Noun& p : c2.rels.atoms)
            CARDLOGIC_CHECK(card_of(s, p) == card_of(sub.model, p),
                            "CM-relocation-size: relocation preserves every cardinality");

        SymbolicModel m = validate_model(std::move(s));
        return CountermodelReport{std::move(m), "relocation", std::move(sub.enrichment)};
    }

    // Both anchored, neither large: complete the halves keeping x and y apart.
    BuildPlan plan = plan_for(c, std::move(part));
    plan.hints.apart = std::make_pair(x, y);
    SymbolicModel m = build_model(gamma, plan);
    return CountermodelReport{std::move(m), "disjoint-completion", {}};
}

// ---------------------------------------------------------------------------
// Entry points
// ---------------------------------------------------------------------------

CountermodelReport dispatch(const Theory& gamma, const Sentence& phi) {
    CountermodelReport rep;
    switch (phi.form) {
        case Form::All: rep = for_all(gamma, phi); break;
        case Form::Some: rep = for_some(gamma, phi); break;
        case Form::AtLeast: rep = for_atleast(gamma, phi); break;
        case Form::More: rep = for_more(gamma, phi); break;
    }
    const CountermodelCheck chk = verify_countermodel(rep.model, gamma, phi);
    if (!chk.ok) {
        std::ostringstream os;
        os << "countermodel construction for \"" << to_string(phi) << "\" went wrong:";
        if (chk.phi_satisfied) os << " the goal holds in the result;";
        for (const Sentence& g : chk.failing_gamma) os << " premise \"" << to_string(g) << "\" fails;";
        os << " (" << rep.strategy << ")";
        throw internal_error(os.str());
    }
    return rep;
}

}  // namespace

CountermodelReport countermodel(const Theory& gamma, const Sentence& phi) {
    if (!is_consistent(gamma))
        throw precondition_error("an inconsistent theory proves everything; no countermodel exists");
    if (entails(gamma, phi))
        throw precondition_error("the theory proves \"" + to_string(phi) +
                                 "\"; no countermodel exists");
    return dispatch(gamma, phi);
}

CountermodelCheck verify_countermodel(const SymbolicModel& m, const Theory& gamma,
                                      const Sentence& phi) {
    CountermodelCheck out;
    SatisfactionReport r = satisfies_all(m, gamma);
    out.failing_gamma = std::move(r.failing);
    out.phi_satisfied = satisfies(m, phi);
    out.ok = r.ok && !out.phi_satisfied;
    return out;
}

}  // namespace cardlogic
