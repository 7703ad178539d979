#include "cardlogic/modelbuild.hpp"

#include <algorithm>
#include <sstream>

#include "cardlogic/error.hpp"

namespace cardlogic {

std::string BuildTrace::str() const {
    std::ostringstream os;
    for (const std::string& line : lines) os << line << "\n";
    return os.str();
}

BuildPlan default_plan(const SaturationResult& sat, const DerivedRelations& rels) {
    BuildPlan plan;
    plan.partition = standard_partition(rels);
    std::vector<Noun> q = compute_Q(sat, plan.partition);
    plan.listing = proper_listing(equivc_classes(rels, q), rels);
    return plan;
}

BuildPlan default_plan(const Theory& gamma) {
    SaturationResult sat = saturate(gamma);
    if (!sat.consistent())
        throw precondition_error("an inconsistent theory has no model, so no build plan");
    DerivedRelations rels = relations(sat);
    return default_plan(sat, rels);
}

// ---------------------------------------------------------------------------
// Canonical structures and inflation
// ---------------------------------------------------------------------------

CanonicalStructure canonical_base_model(const Theory& delta,
                                        const std::vector<Noun>& extra_atoms) {
    for (const Sentence& s : delta)
        if (s.form != Form::All && s.form != Form::Some)
            throw precondition_error(
                "canonical structures are defined for universal/existential sentences only, got "
                "'" + to_string(s) + "'");
    SaturationResult sat = saturate(delta, extra_atoms);
    if (!sat.consistent())
        throw precondition_error("the given universal/existential sentences are inconsistent");

    CanonicalStructure out;
    out.atoms = sat.atoms();
    const std::size_t a = out.atoms.size();
    for (std::size_t i = 0; i < a; ++i)
        for (std::size_t j = i; j < a; ++j)
            if (sat.derived(Sentence{Form::Some, out.atoms[i], out.atoms[j]}))
                out.points.emplace_back(out.atoms[i], out.atoms[j]);
    auto leq = [&](const Noun& x, const Noun& y) {
        return sat.derived(Sentence{Form::All, x, y});
    };
    for (const Noun& x : out.atoms) {
        std::set<std::size_t>& members = out.interp[x];
        for (std::size_t pi = 0; pi < out.points.size(); ++pi)
            if (leq(out.points[pi].first, x) || leq(out.points[pi].second, x)) members.insert(pi);
    }

    // The structure realizes delta with intersections exactly where derivable.
    auto intersects = [&](const Noun& x, const Noun& y) {
        const auto& mx = out.interp.at(x);
        const auto& my = out.interp.at(y);
        return std::any_of(mx.begin(), mx.end(),
                           [&](std::size_t p) { return my.count(p) != 0; });
    };
    for (const Sentence& s : delta) {
        if (s.form == Form::All) {
            const auto& ml = out.interp.at(s.left);
            const auto& mr = out.interp.at(s.right);
            CARDLOGIC_CHECK(std::includes(mr.begin(), mr.end(), ml.begin(), ml.end()),
                            "CB-satisfies-delta (universal)");
        } else {
            CARDLOGIC_CHECK(intersects(s.left, s.right), "CB-satisfies-delta (existential)");
        }
    }
    for (const Noun& x : out.atoms)
        for (const Noun& y : out.atoms)
            CARDLOGIC_CHECK(intersects(x, y) ==
                                sat.derived(Sentence{Form::Some, x, y}),
                            "CB-exact-intersections");
    return out;
}

Structure inflate(const CanonicalStructure& base, Cardinal kappa, const std::string& id_prefix) {
    if (kappa.is_finite())
        throw precondition_error("inflation requires an infinite cardinal, got " +
                                 kappa.to_string());
    Structure out;
    std::vector<std::string> ids;
    for (const auto& [p, q] : base.points) {
        std::string id = id_prefix + "(" + to_string(p) + "," + to_string(q) + ")";
        ids.push_back(id);
        out.blocks.push_back(Block{id, kappa});
    }
    for (const auto& [noun, points] : base.interp) {
        BlockSet& members = out.interp[noun];
        for (std::size_t pi : points) members.insert(ids[pi]);
    }
    // Inflation preserves the base's inclusion and intersection patterns.
    for (const auto& [x, mx] : base.interp)
        for (const auto& [y, my] : base.interp) {
            bool base_subset = std::includes(my.begin(), my.end(), mx.begin(), mx.end());
            bool base_meets = std::any_of(mx.begin(), mx.end(),
                                          [&](std::size_t p) { return my.count(p) != 0; });
            const BlockSet& ix = out.interp.at(x);
            const BlockSet& iy = out.interp.at(y);
            bool infl_subset = std::includes(iy.begin(), iy.end(), ix.begin(), ix.end());
            bool infl_meets = std::any_of(ix.begin(), ix.end(),
                                          [&](const std::string& b) { return iy.count(b) != 0; });
            CARDLOGIC_CHECK(base_subset == infl_subset && base_meets == infl_meets,
                            "I-agreement: inflation preserves inclusion/intersection patterns");
        }
    return out;
}

// ---------------------------------------------------------------------------
// The size ladder
// ---------------------------------------------------------------------------

bool demands_larger(std::size_t i, const Listing& listing, const DerivedRelations& rels,
                    const Partition& partition, const std::vector<Cardinal>& kappas_so_far,
                    const std::set<std::size_t>& overrides) {
    const std::size_t n = listing.classes.size();
    if (i < 2 || i > n + 1) throw internal_error("demands_larger: position out of range");
    if (overrides.count(i)) return true;
    auto rep = [&](std::size_t j) { return listing.classes[j - 1].front(); };
    if (i <= n) {
        for (std::size_t j = 1; j < i; ++j)
            if (rels.ltmore(rep(j), rep(i)) && kappas_so_far[j - 1] == kappas_so_far[i - 2])
                return true;
        return false;
    }
    // The half step.
    if (n == 0) return true;  // nothing below: start the half layer at aleph_0
    const Cardinal kn = kappas_so_far[n - 1];
    std::vector<Noun> uppers = partition.in_class(SizeClass::Half);
    std::vector<Noun> large = partition.in_class(SizeClass::Large);
    uppers.insert(uppers.end(), large.begin(), large.end());
    for (const Noun& x : uppers)
        for (std::size_t j = 1; j <= n; ++j)
            if (rels.ltmore(rep(j), x) && kappas_so_far[j - 1] == kn) return true;
    return false;
}

KappaLadder kappa_ladder(const Listing& listing, const DerivedRelations& rels,
                         const Partition& partition, const std::set<std::size_t>& overrides) {
    const std::size_t n = listing.classes.size();
    KappaLadder ladder;
    for (std::size_t i = 1; i <= n; ++i) {
        if (i == 1)
            ladder.kappas.push_back(Cardinal::aleph(0));
        else if (demands_larger(i, listing, rels, partition, ladder.kappas, overrides))
            ladder.kappas.push_back(ladder.kappas.back().next_aleph());
        else
            ladder.kappas.push_back(ladder.kappas.back());
    }
    if (n == 0)
        ladder.kappas.push_back(Cardinal::aleph(0));
    else if (demands_larger(n + 1, listing, rels, partition, ladder.kappas, overrides))
        ladder.kappas.push_back(ladder.kappas.back().next_aleph());
    else
        ladder.kappas.push_back(ladder.kappas.back());

    for (std::size_t i = 0; i + 1 < ladder.kappas.size(); ++i)
        CARDLOGIC_CHECK(!(ladder.kappas[i + 1] < ladder.kappas[i]),
                        "K-monotone: the size ladder never descends");
    if (n >= 1)
        CARDLOGIC_CHECK(ladder.kappas[0] == Cardinal::aleph(0),
                        "K-base: the ladder starts at aleph_0");
    return ladder;
}

// ---------------------------------------------------------------------------
// Half completion
// ---------------------------------------------------------------------------

HalfAssignment half_completion(const std::vector<Block>& blocks,
                               const std::vector<Noun>& half_nouns,
                               const std::map<std::string, std::set<Noun>>& seeds,
                               const DerivedRelations& rels, const SaturationResult& sat,
                               const CompletionHints& hints,
                               const std::map<std::string, std::set<Noun>>& carriers) {
    const std::set<Noun> half(half_nouns.begin(), half_nouns.end());
    for (const Noun& h : half_nouns)
        CARDLOGIC_CHECK(half.count(complement(h)) != 0,
                        "HC-half-complement-closed: the half nouns pair up");
    auto anchored = [&](const Noun& h) { return sat.derived(Sentence{Form::Some, h, h}); };

    // The kept-empty set: everything the theory sizes at-or-below an avoided
    // noun must stay empty too.
    std::set<Noun> tau0;
    for (const Noun& a : hints.avoid) {
        if (half.count(a) == 0) continue;  // non-half avoids are handled by the caller
        CARDLOGIC_CHECK(!anchored(a), "HC-avoid-unanchored: avoided half nouns are unanchored");
        for (const Noun& g : half_nouns)
            if (!anchored(g) && rels.leqc(g, a)) tau0.insert(g);
    }
    for (const Noun& h : half_nouns)
        if (!h.negated)
            CARDLOGIC_CHECK(!(tau0.count(h) && tau0.count(complement(h))),
                            "HC-avoid-feasible: no complement pair is forced empty on both sides");

    HalfAssignment out;
    for (const Block& b : blocks) {
        std::set<Noun> chosen;
        auto seed_it = seeds.find(b.id);
        if (seed_it != seeds.end()) {
            chosen = seed_it->second;
            for (const Noun& s : chosen) CARDLOGIC_CHECK(half.count(s) != 0, "HC-seeds-in-half");
            bool grew = true;  // close the seeds upward along <=
            while (grew) {
                grew = false;
                for (const Noun& s : std::set<Noun>(chosen))
                    for (const Noun& g : half_nouns)
                        if (rels.leq(s, g) && chosen.insert(g).second) grew = true;
            }
        }
        for (const Noun& s : chosen) {
            CARDLOGIC_CHECK(chosen.count(complement(s)) == 0,
                            "HC-seed-pair-disjoint: seeds never contain a complement pair");
            CARDLOGIC_CHECK(tau0.count(s) == 0,
                            "HC-seed-avoid-disjoint: seeds never touch kept-empty nouns");
        }

        auto allowed = [&](const Noun& t) {
            for (const Noun& g : half_nouns) {
                if (rels.leq(t, g) && chosen.count(complement(g))) return false;
                if (tau0.count(g) && rels.leq(t, g)) return false;
            }
            return true;
        };
        for (const Noun& h : half_nouns) {
            if (h.negated) continue;
            const Noun hb = complement(h);
            if (chosen.count(h) || chosen.count(hb)) continue;
            const bool ok_h = allowed(h), ok_hb = allowed(hb);
            CARDLOGIC_CHECK(ok_h || ok_hb,
                            "HC-pick-exists: some side of every untouched pair is available");
            // The apart hint: steer away from a side whose <=-up-closure
            // would land the block in one of the kept-apart nouns while it
            // already carries the other.
            std::optional<Noun> shun;
            if (hints.apart) {
                auto carries = [&](const Noun& t) {
                    if (chosen.count(t)) return true;
                    auto c = carriers.find(b.id);
                    return c != carriers.end() && c->second.count(t) != 0;
                };
                const Noun& ax = hints.apart->first;
                const Noun& ay = hints.apart->second;
                auto lands_in = [&](const Noun& t, const Noun& g) {
                    return t == g || rels.leq(t, g);
                };
                auto entangles = [&](const Noun& t) {
                    return (lands_in(t, ax) && carries(ay)) || (lands_in(t, ay) && carries(ax));
                };
                const bool bad_h = entangles(h), bad_hb = entangles(hb);
                if (bad_h != bad_hb) shun = bad_h ? h : hb;
            }
            Noun pick = h;
            if (ok_h != ok_hb) {
                pick = ok_h ? h : hb;
            } else if (shun) {
                pick = complement(*shun);
            } else if (hints.wish.count(h) != hints.wish.count(hb)) {
                pick = hints.wish.count(h) ? h : hb;
            } else {
                // Prefer the side that already carries weight (an anchored
                // noun keeps the unanchored complement lean).
                const bool heavy_h = anchored(h), heavy_hb = anchored(hb);
                if (heavy_h != heavy_hb) pick = heavy_h ? h : hb;
            }
            chosen.insert(pick);
        }

        for (const Noun& h : half_nouns) {
            if (!h.negated)
                CARDLOGIC_CHECK(chosen.count(h) + chosen.count(complement(h)) == 1,
                                "HC-transversal: exactly one side of each pair per block");
            if (chosen.count(h))
                for (const Noun& g : half_nouns)
                    if (rels.leq(h, g))
                        CARDLOGIC_CHECK(chosen.count(g) != 0,
                                        "HC-up-closed: choices are closed under <=");
            CARDLOGIC_CHECK(!(chosen.count(h) && tau0.count(h)),
                            "HC-avoid-respected: kept-empty nouns are never chosen");
        }
        out.chosen[b.id] = std::move(chosen);
    }
    return out;
}

// ---------------------------------------------------------------------------
// The construction
// ---------------------------------------------------------------------------

namespace {

struct TaggedBlock {
    Block block;
    std::optional<std::pair<Noun, Noun>> tag;
};

std::string render_nouns(const std::vector<Noun>& nouns) {
    std::string out;
    for (const Noun& x : nouns) {
        if (!out.empty()) out += " ";
        out += to_string(x);
    }
    return out.empty() ? "(none)" : out;
}

}  // namespace

SymbolicModel build_model(const Theory& gamma, const BuildPlan& plan, BuildTrace* trace) {
    const std::vector<Noun> small = plan.partition.in_class(SizeClass::Small);
    const std::vector<Noun> half = plan.partition.in_class(SizeClass::Half);
    const std::vector<Noun> large = plan.partition.in_class(SizeClass::Large);

    // The plan's partition may cover nouns the theory never mentions (a goal
    // sentence's nouns, say); saturate over the union so they get interpreted.
    std::vector<Noun> plan_atoms = small;
    plan_atoms.insert(plan_atoms.end(), half.begin(), half.end());
    plan_atoms.insert(plan_atoms.end(), large.begin(), large.end());
    SaturationResult sat = saturate(gamma, plan_atoms);
    if (!sat.consistent())
        throw precondition_error("an inconsistent theory has no model");
    DerivedRelations rels = relations(sat);
    const std::vector<Noun>& atoms = rels.atoms;
    for (const Noun& x : atoms) plan.partition.at(x);  // P-total for this atom set

    std::vector<Noun> q = compute_Q(sat, plan.partition);
    {
        std::vector<Noun> listed;
        for (const NounClass& cls : plan.listing.classes)
            listed.insert(listed.end(), cls.begin(), cls.end());
        std::sort(listed.begin(), listed.end());
        CARDLOGIC_CHECK(listed == q,
                        "B-listing-covers-Q: the listing enumerates exactly the nonempty smalls");
    }
    const std::size_t n = plan.listing.classes.size();
    KappaLadder ladder =
        kappa_ladder(plan.listing, rels, plan.partition, plan.demand_overrides);
    const Cardinal big = ladder.kappas[n];

    if (trace) {
        trace->add("partition: small={" + render_nouns(small) + "} half={" + render_nouns(half) +
                   "} large={" + render_nouns(large) + "}");
        trace->add("nonempty smalls (Q): " + render_nouns(q));
        for (std::size_t i = 0; i < n; ++i)
            trace->add("listing position " + std::to_string(i + 1) + ": {" +
                       render_nouns(plan.listing.classes[i]) + "}  size " +
                       ladder.kappas[i].to_string());
        trace->add("half layer size: " + big.to_string());
    }

    // Class structures and the half structure, tagged by their pair of nouns.
    std::vector<TaggedBlock> blocks;
    auto base_bases = [](const std::vector<Noun>& nouns) {
        std::set<std::string> bases;
        for (const Noun& x : nouns) bases.insert(x.base);
        return bases;
    };
    auto delta_of = [&](const std::vector<Noun>& members, bool derivable_self_seeds_only) {
        Theory delta;
        const std::set<std::string> bases = base_bases(members);
        for (const Sentence& s : gamma)
            if ((s.form == Form::All || s.form == Form::Some) && bases.count(s.left.base) &&
                bases.count(s.right.base))
                delta.push_back(s);
        for (const Noun& x : members)
            if (!derivable_self_seeds_only || sat.derived(Sentence{Form::Some, x, x}))
                delta.push_back(Sentence{Form::Some, x, x});
        return delta;
    };
    auto add_structure = [&](const Theory& delta, const std::vector<Noun>& members,
                             Cardinal kappa, const std::string& prefix) {
        CanonicalStructure canon = canonical_base_model(delta, members);
        Structure s = inflate(canon, kappa, prefix);
        for (std::size_t pi = 0; pi < canon.points.size(); ++pi)
            blocks.push_back(TaggedBlock{s.blocks[pi], canon.points[pi]});
        if (trace) {
            std::string pts;
            for (const auto& [p, qn] : canon.points)
                pts += " (" + to_string(p) + "," + to_string(qn) + ")";
            trace->add(prefix + " canonical points:" + (pts.empty() ? " (none)" : pts));
        }
    };
    for (std::size_t i = 1; i <= n; ++i)
        add_structure(delta_of(plan.listing.classes[i - 1], false),
                      plan.listing.classes[i - 1], ladder.kappas[i - 1],
                      "S" + std::to_string(i));
    add_structure(delta_of(half, true), half, big, "S" + std::to_string(n + 1));

    // Unit witnesses for the theory's own existential sentences, one per
    // unordered pair of nouns.
    std::set<std::pair<Noun, Noun>> witnessed;
    for (const Sentence& s : gamma)
        if (s.form == Form::Some) {
            std::pair<Noun, Noun> key = s.right < s.left ? std::make_pair(s.right, s.left)
                                                         : std::make_pair(s.left, s.right);
            if (!witnessed.insert(key).second) continue;
            blocks.push_back(TaggedBlock{
                Block{"W(" + to_string(s.left) + "," + to_string(s.right) + ")",
                      Cardinal::finite(1)},
                std::make_pair(s.left, s.right)});
        }

    // A filler guarantees the universe reaches the top size.
    bool has_big = std::any_of(blocks.begin(), blocks.end(),
                               [&](const TaggedBlock& b) { return b.block.size == big; });
    if (!has_big) {
        blocks.push_back(TaggedBlock{Block{"F", big}, std::nullopt});
        if (trace) trace->add("filler block F of size " + big.to_string());
    }

    // Small interpretations are fixed by the tags; half seeds start there.
    auto tag_member = [&](const TaggedBlock& b, const Noun& x) {
        return b.tag.has_value() &&
               (rels.leq(b.tag->first, x) || rels.leq(b.tag->second, x));
    };
    std::map<Noun, BlockSet> interp;
    for (const Noun& x : small) {
        BlockSet& members = interp[x];
        for (const TaggedBlock& b : blocks)
            if (tag_member(b, x)) members.insert(b.block.id);
        if (std::find(q.begin(), q.end(), x) == q.end())
            CARDLOGIC_CHECK(members.empty(),
                            "C-nonlisted-empty: small nouns outside Q stay empty");
    }
    std::map<std::string, std::set<Noun>> seeds;
    for (const TaggedBlock& b : blocks) {
        std::set<Noun> s;
        for (const Noun& h : half)
            if (tag_member(b, h)) s.insert(h);
        if (!s.empty()) seeds[b.block.id] = std::move(s);
    }

    // Keep-empty hints outside the half layer must already be empty here.
    for (const Noun& a : plan.hints.avoid) {
        if (plan.partition.at(a) == SizeClass::Small) {
            CARDLOGIC_CHECK(std::find(q.begin(), q.end(), a) == q.end(),
                            "B-avoid-empty-able: avoided small nouns lie outside Q");
        } else {
            CARDLOGIC_CHECK(plan.partition.at(a) != SizeClass::Large,
                            "B-avoid-empty-able: large nouns cannot be kept empty");
        }
    }

    // For the apart hint, record which blocks already carry either noun of
    // the pair through a small interpretation fixed by the tags.
    std::map<std::string, std::set<Noun>> carriers;
    if (plan.hints.apart) {
        for (const Noun& t : {plan.hints.apart->first, plan.hints.apart->second})
            if (plan.partition.at(t) == SizeClass::Small)
                for (const TaggedBlock& b : blocks)
                    if (tag_member(b, t)) carriers[b.block.id].insert(t);
    }

    std::vector<Block> plain_blocks;
    for (const TaggedBlock& b : blocks) plain_blocks.push_back(b.block);
    HalfAssignment ha =
        half_completion(plain_blocks, half, seeds, rels, sat, plan.hints, carriers);
    for (const Noun& h : half) {
        BlockSet& members = interp[h];
        for (const Block& b : plain_blocks)
            if (ha.chosen.at(b.id).count(h)) members.insert(b.id);
    }

    // Repair pass over the unanchored half nouns ("floats"), whose final
    // cardinalities must be 0 or the top size, with the zero set closed
    // downward under <=_c (otherwise a theory sentence "atleast x y" with
    // both sides unanchored could fail).  Two defects can remain after the
    // block-by-block completion, and both are fixed by adding blocks, which
    // never shrinks anything:
    //  - starvation: a float holds some weight but less than the top size;
    //    clone the half choices of one of its blocks onto a full-size block;
    //  - incoherence: a float is empty while a <=_c-smaller noun has
    //    weight (another float, or — under a refined partition — a large
    //    noun that is big by construction); grow a fresh full-size block
    //    from the empty float's <=-up-closure with the same completion
    //    machinery.
    std::vector<Noun> floats;
    for (const Noun& h : half)
        if (!sat.derived(Sentence{Form::Some, h, h})) floats.push_back(h);
    auto card_of_noun = [&](const Noun& x) {
        Cardinal total = Cardinal::finite(0);
        for (const Block& b : plain_blocks)
            if (interp[x].count(b.id)) total += b.size;
        return total;
    };
    auto add_block = [&](const std::string& id, const std::set<Noun>& chosen) {
        plain_blocks.push_back(Block{id, big});
        blocks.push_back(TaggedBlock{Block{id, big}, std::nullopt});
        for (const Noun& g : chosen) interp[g].insert(id);
        ha.chosen[id] = chosen;
    };
    // Large nouns are interpreted below as complements of bounded sets, so
    // they carry weight no matter what the loop does; everything else is
    // measured from the interpretations built so far.
    auto has_weight = [&](const Noun& x) {
        if (std::find(large.begin(), large.end(), x) != large.end()) return true;
        return !card_of_noun(x).is_zero();
    };
    std::size_t dcount = 0;
    for (;;) {
        CARDLOGIC_CHECK(dcount <= 2 * floats.size() + 1,
                        "HC-repair-bounded: each added block settles at least one float");
        const Noun* starving = nullptr;
        const Noun* empty_above = nullptr;
        for (const Noun& f : floats) {
            Cardinal c = card_of_noun(f);
            if (!c.is_zero() && !(c == big) && !starving) starving = &f;
            if (c.is_zero() && !empty_above)
                for (const Noun& g : atoms)
                    if (rels.leqc(g, f) && has_weight(g)) {
                        empty_above = &f;
                        break;
                    }
        }
        if (starving) {
            const std::string* donor = nullptr;
            for (const Block& b : plain_blocks)
                if (interp[*starving].count(b.id)) {
                    donor = &b.id;
                    break;
                }
            CARDLOGIC_CHECK(donor != nullptr, "HC-repair-donor: weight comes from a block");
            std::string did = "D" + std::to_string(++dcount);
            if (trace)
                trace->add("starvation repair: block " + did + " of size " + big.to_string() +
                           " clones the half choices of " + *donor + " for " + to_string(*starving));
            add_block(did, ha.chosen.at(*donor));
            continue;
        }
        if (empty_above) {
            std::set<Noun> grown;
            for (const Noun& g : half)
                if (rels.leq(*empty_above, g)) grown.insert(g);
            std::string did = "D" + std::to_string(++dcount);
            Block fresh{did, big};
            HalfAssignment one = half_completion({fresh}, half, {{did, grown}}, rels, sat,
                                                 plan.hints);
            if (trace)
                trace->add("starvation repair: block " + did + " of size " + big.to_string() +
                           " gives weight to " + to_string(*empty_above));
            add_block(did, one.chosen.at(did));
            continue;
        }
        break;
    }
    for (const Noun& f : floats)
        for (const Noun& g : atoms)
            if (rels.leqc(g, f))
                CARDLOGIC_CHECK(!(card_of_noun(f).is_zero() && has_weight(g)),
                                "C-float-coherent: empty floats are closed downward under <=_c");

    // Large nouns are complements.
    BlockSet all_ids;
    for (const Block& b : plain_blocks) all_ids.insert(b.id);
    for (const Noun& x : large) {
        BlockSet members = all_ids;
        for (const std::string& id : interp[complement(x)]) members.erase(id);
        interp[x] = std::move(members);
    }

    Structure raw;
    raw.blocks = plain_blocks;
    raw.interp = std::move(interp);
    raw.mode = Mode::Infinite;
    SymbolicModel m = validate_model(raw);

    // ---- structural claims -------------------------------------------------
    SatisfactionReport rep = satisfies_all(m, gamma);
    if (!rep.ok) {
        std::string msg = "C-satisfies-gamma violated; failing:";
        for (const Sentence& s : rep.failing) msg += " '" + to_string(s) + "'";
        throw internal_error(msg);
    }
    std::vector<Noun> small_half = small;
    small_half.insert(small_half.end(), half.begin(), half.end());
    std::sort(small_half.begin(), small_half.end());
    for (const Noun& z : small_half)
        for (const Noun& w : small_half)
            if (rels.leq(z, w)) {
                const BlockSet& mz = m.interp.at(z);
                const BlockSet& mw = m.interp.at(w);
                CARDLOGIC_CHECK(std::includes(mw.begin(), mw.end(), mz.begin(), mz.end()),
                                "C-subset-monotone: derivable inclusions hold blockwise");
            }
    for (std::size_t i = 0; i < n; ++i)
        for (const Noun& x : plan.listing.classes[i])
            CARDLOGIC_CHECK(card_of(m, x) == ladder.kappas[i],
                            "C-class-card-exact: listed classes have their ladder size");
    for (const Noun& h : half) {
        Cardinal c = card_of(m, h);
        if (sat.derived(Sentence{Form::Some, h, h}))
            CARDLOGIC_CHECK(c == big, "C-class-card-exact: anchored half nouns fill the top size");
        else
            CARDLOGIC_CHECK(c.is_zero() || c == big,
                            "C-class-card-exact: unanchored half nouns are empty or full-size");
    }
    for (const Noun& x : small)
        for (const Noun& y : small) {
            const BlockSet& mx = m.interp.at(x);
            const BlockSet& my = m.interp.at(y);
            bool meets = std::any_of(mx.begin(), mx.end(),
                                     [&](const std::string& b) { return my.count(b) != 0; });
            CARDLOGIC_CHECK(meets == sat.derived(Sentence{Form::Some, x, y}),
                            "C-intersection-witnessed: small intersections match derivability");
        }
    for (const TaggedBlock& b : blocks)
        if (b.tag)
            for (const Noun& x : small_half)
                for (const Noun& y : small_half)
                    if (tag_member(b, x) && tag_member(b, y))
                        CARDLOGIC_CHECK(sat.derived(Sentence{Form::Some, x, y}),
                                        "C-intersection-witnessed: seeded cohabitation is derivable");
    for (const Noun& x : large)
        CARDLOGIC_CHECK(card_of(m, x) == big, "C-large-card: large nouns fill the top size");
    CARDLOGIC_CHECK(universe_card(m) == big, "C-universe-card: the universe has the top size");
    CARDLOGIC_CHECK(!(Cardinal::aleph(n) < big),
                    "C-aleph-bound: at most one new aleph per listed class");
    for (const Noun& a : plan.hints.avoid)
        CARDLOGIC_CHECK(m.interp.at(a).empty(), "B-avoid-respected: avoided nouns are empty");

    if (trace) {
        trace->add("blocks: " + std::to_string(m.blocks.size()) + ", universe size " +
                   universe_card(m).to_string());
        trace->add("all structural claims verified");
    }
    return m;
}

SymbolicModel build_model(const Theory& gamma, BuildTrace* trace) {
    return build_model(gamma, default_plan(gamma), trace);
}

}  // namespace cardlogic
