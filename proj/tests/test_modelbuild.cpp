#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>
#include <string>
#include <vector>

#include "cardlogic/modelbuild.hpp"
#include "cardlogic/partition.hpp"
#include "cardlogic/prover.hpp"
#include "fixtures.hpp"

using namespace cardlogic;
using fixtures::N;
using fixtures::S;
using fixtures::T;

namespace {

bool intersects(const CanonicalStructure& cs, const Noun& x, const Noun& y) {
    for (std::size_t p : cs.interp.at(x))
        if (cs.interp.at(y).count(p)) return true;
    return false;
}

}  // namespace

TEST_CASE("canonical structures: one point per derivable cohabitation") {
    const Theory delta = T("some c c\nsome d d\nall c d\nsome d ~c");
    const CanonicalStructure cs = canonical_base_model(delta);

    using P = std::pair<Noun, Noun>;
    CHECK(cs.points == std::vector<P>{{N("c"), N("c")},
                                      {N("c"), N("d")},
                                      {N("~c"), N("~c")},
                                      {N("~c"), N("d")},
                                      {N("d"), N("d")}});
    CHECK(cs.atoms == std::vector<Noun>{N("c"), N("~c"), N("d"), N("~d")});
    CHECK(cs.interp.at(N("c")) == std::set<std::size_t>{0, 1});
    CHECK(cs.interp.at(N("~c")) == std::set<std::size_t>{2, 3});
    CHECK(cs.interp.at(N("d")) == std::set<std::size_t>{0, 1, 3, 4});
    CHECK(cs.interp.at(N("~d")).empty());

    // Intersections sit exactly where the sentences derive cohabitation.
    const SaturationResult sat = saturate(delta);
    for (const Noun& x : cs.atoms)
        for (const Noun& y : cs.atoms)
            CHECK(intersects(cs, x, y) == sat.derived(Sentence{Form::Some, x, y}));

    // Extra atoms extend the universe with empty interpretations.
    const CanonicalStructure wider = canonical_base_model(T("some c c"), {N("z")});
    CHECK(wider.atoms == std::vector<Noun>{N("c"), N("~c"), N("z"), N("~z")});
    CHECK(wider.interp.at(N("z")).empty());
    CHECK(wider.interp.at(N("~z")).empty());

    CHECK_THROWS_WITH_AS(canonical_base_model(T("atleast c d")),
                         "canonical structures are defined for universal/existential "
                         "sentences only, got 'atleast c d'",
                         precondition_error);
    CHECK_THROWS_WITH_AS(canonical_base_model(T("some c c\nall c ~c")),
                         "the given universal/existential sentences are inconsistent",
                         precondition_error);
}

TEST_CASE("inflation turns points into equal-size blocks") {
    const CanonicalStructure cs =
        canonical_base_model(T("some c c\nsome d d\nall c d\nsome d ~c"));
    const Structure m = inflate(cs, Cardinal::aleph(0), "S1");

    std::vector<std::string> ids;
    for (const Block& b : m.blocks) {
        ids.push_back(b.id);
        CHECK(b.size == Cardinal::aleph(0));
    }
    CHECK(ids == std::vector<std::string>{"S1(c,c)", "S1(c,d)", "S1(~c,~c)",
                                          "S1(~c,d)", "S1(d,d)"});
    CHECK(m.interp.at(N("c")) == BlockSet{"S1(c,c)", "S1(c,d)"});
    CHECK(m.interp.at(N("d")) ==
          BlockSet{"S1(c,c)", "S1(c,d)", "S1(~c,d)", "S1(d,d)"});
    CHECK(m.interp.at(N("~d")).empty());

    CHECK_THROWS_WITH_AS(inflate(cs, Cardinal::finite(7), "S1"),
                         "inflation requires an infinite cardinal, got 7",
                         precondition_error);
}

TEST_CASE("the size ladder steps exactly where a position demands more") {
    SUBCASE("worked theory: one listed class, half demands a step") {
        const Theory gamma = fixtures::worked_theory();
        const BuildPlan plan = default_plan(gamma);
        const DerivedRelations rels = relations(gamma);
        const KappaLadder ladder =
            kappa_ladder(plan.listing, rels, plan.partition, plan.demand_overrides);
        CHECK(ladder.kappas ==
              std::vector<Cardinal>{Cardinal::aleph(0), Cardinal::aleph(1)});
        CHECK(demands_larger(2, plan.listing, rels, plan.partition,
                             {Cardinal::aleph(0)}, {}));
    }

    SUBCASE("incomparable classes share a size unless overridden") {
        const Theory gamma = T("some p p\nsome q q\nmore z p\nmore z q");
        const BuildPlan plan = default_plan(gamma);
        const DerivedRelations rels = relations(gamma);
        REQUIRE(plan.listing.classes ==
                std::vector<NounClass>{{N("p")}, {N("q")}});

        CHECK_FALSE(demands_larger(2, plan.listing, rels, plan.partition,
                                   {Cardinal::aleph(0)}, {}));
        CHECK(demands_larger(2, plan.listing, rels, plan.partition,
                             {Cardinal::aleph(0)}, {2}));
        CHECK(demands_larger(3, plan.listing, rels, plan.partition,
                             {Cardinal::aleph(0), Cardinal::aleph(0)}, {}));

        CHECK(kappa_ladder(plan.listing, rels, plan.partition, {}).kappas ==
              std::vector<Cardinal>{Cardinal::aleph(0), Cardinal::aleph(0),
                                    Cardinal::aleph(1)});
        CHECK(kappa_ladder(plan.listing, rels, plan.partition, {2}).kappas ==
              std::vector<Cardinal>{Cardinal::aleph(0), Cardinal::aleph(1),
                                    Cardinal::aleph(2)});
    }

    SUBCASE("a strict chain climbs one aleph per position") {
        const Theory gamma = T("more x0 x1\nmore x1 x2\nmore x2 x3\nmore x3 x4\nmore x4 x5");
        const BuildPlan plan = default_plan(gamma);
        const KappaLadder ladder = kappa_ladder(plan.listing, relations(gamma),
                                                plan.partition, {});
        REQUIRE(ladder.kappas.size() == 5);
        for (std::size_t i = 0; i < 5; ++i) CHECK(ladder.kappas[i] == Cardinal::aleph(i));
    }
}

TEST_CASE("half completion: transversals under seeds, wishes, and guards") {
    SUBCASE("independent pairs") {
        const SaturationResult sat = saturate({}, {N("h"), N("k")});
        const DerivedRelations rels = relations(sat);
        const std::vector<Block> blocks = {{"B1", Cardinal::aleph(0)},
                                           {"B2", Cardinal::aleph(0)}};
        const std::vector<Noun> half = {N("h"), N("~h"), N("k"), N("~k")};

        auto is_transversal = [&](const HalfAssignment& ha) {
            for (const Block& b : blocks) {
                const std::set<Noun>& chosen = ha.chosen.at(b.id);
                CHECK(chosen.count(N("h")) + chosen.count(N("~h")) == 1);
                CHECK(chosen.count(N("k")) + chosen.count(N("~k")) == 1);
            }
        };

        const HalfAssignment seeded =
            half_completion(blocks, half, {{"B1", {N("h")}}}, rels, sat, {});
        is_transversal(seeded);
        CHECK(seeded.chosen.at("B1").count(N("h")) == 1);

        CompletionHints avoid;
        avoid.avoid = {N("k")};
        const HalfAssignment avoided = half_completion(blocks, half, {}, rels, sat, avoid);
        is_transversal(avoided);
        for (const Block& b : blocks) CHECK(avoided.chosen.at(b.id).count(N("k")) == 0);

        CompletionHints wish;
        wish.wish = {N("~k")};
        const HalfAssignment wished = half_completion(blocks, half, {}, rels, sat, wish);
        is_transversal(wished);
        for (const Block& b : blocks) CHECK(wished.chosen.at(b.id).count(N("~k")) == 1);

        // A block seeded with one of an 'apart' pair picks the other's complement.
        CompletionHints apart;
        apart.apart = {{N("h"), N("k")}};
        const HalfAssignment kept =
            half_completion(blocks, half, {{"B1", {N("h")}}}, rels, sat, apart);
        is_transversal(kept);
        CHECK(kept.chosen.at("B1").count(N("h")) == 1);
        CHECK(kept.chosen.at("B1").count(N("~k")) == 1);

        // The same steering works through carried small nouns.
        const HalfAssignment carried = half_completion(
            blocks, half, {}, rels, sat, apart, {{"B2", {N("h")}}});
        is_transversal(carried);
        CHECK(carried.chosen.at("B2").count(N("~k")) == 1);
    }

    SUBCASE("an inclusion forces choices upward") {
        const SaturationResult sat = saturate(T("all h k"));
        const DerivedRelations rels = relations(sat);
        const std::vector<Block> blocks = {{"B1", Cardinal::aleph(0)},
                                           {"B2", Cardinal::aleph(0)}};
        const std::vector<Noun> half = {N("h"), N("~h"), N("k"), N("~k")};

        // A seed below closes upward ...
        const HalfAssignment up =
            half_completion(blocks, half, {{"B1", {N("h")}}}, rels, sat, {});
        CHECK(up.chosen.at("B1") == std::set<Noun>{N("h"), N("k")});

        // ... and avoiding the upper noun rules out the lower one as well.
        CompletionHints avoid;
        avoid.avoid = {N("k")};
        const HalfAssignment none = half_completion(blocks, half, {}, rels, sat, avoid);
        for (const Block& b : blocks)
            CHECK(none.chosen.at(b.id) == std::set<Noun>{N("~h"), N("~k")});

        // Monotone everywhere: a chosen noun's derivable supersets are chosen.
        for (const Block& b : blocks)
            for (const Noun& x : up.chosen.at(b.id))
                for (const Noun& y : half)
                    if (rels.leq(x, y)) CHECK(up.chosen.at(b.id).count(y) == 1);
    }
}

TEST_CASE("building the worked theory's model reproduces the reference data") {
    const Theory gamma = fixtures::worked_theory();
    BuildTrace trace;
    const SymbolicModel m = build_model(gamma, &trace);

    CHECK(trace.lines ==
          std::vector<std::string>{
              "partition: small={a b c d} half={e ~e f ~f g ~g} large={~a ~b ~c ~d}",
              "nonempty smalls (Q): c d",
              "listing position 1: {c d}  size aleph_0",
              "half layer size: aleph_1",
              "S1 canonical points: (c,c) (c,d) (~c,~c) (~c,d) (d,d)",
              "S2 canonical points: (e,e) (e,f) (~e,~e) (~e,f) (~e,~f) (f,f) (~f,~f)",
              "blocks: 17, universe size aleph_1",
              "all structural claims verified",
          });

    CHECK(satisfies_all(m, gamma).ok);
    CHECK(m.blocks.size() == 17);
    CHECK(universe_card(m) == Cardinal::aleph(1));

    // Small nouns take the exact ladder sizes; unlisted smalls are empty.
    CHECK(card_of(m, N("a")) == Cardinal::finite(0));
    CHECK(card_of(m, N("b")) == Cardinal::finite(0));
    CHECK(card_of(m, N("c")) == Cardinal::aleph(0));
    CHECK(card_of(m, N("d")) == Cardinal::aleph(0));
    // Weighted half nouns take the top size; the empty float stays empty.
    for (const char* x : {"e", "~e", "f", "~f", "g"})
        CHECK(card_of(m, N(x)) == Cardinal::aleph(1));
    CHECK(card_of(m, N("~g")) == Cardinal::finite(0));
    // Large nouns are full-size.
    for (const char* x : {"~a", "~b", "~c", "~d"})
        CHECK(card_of(m, N(x)) == Cardinal::aleph(1));

    // Deterministic: building again gives the identical model.
    CHECK(render_model(build_model(gamma)) == render_model(m));

    // The aleph indices stay within one step of the listed class count.
    for (const Block& b : m.blocks)
        if (b.size.is_infinite()) CHECK(b.size.aleph_index() <= 2);
}

TEST_CASE("a plan override forces a strictly larger class size") {
    const Theory gamma = T("some p p\nsome q q\nmore z p\nmore z q");

    const SymbolicModel plain = build_model(gamma);
    CHECK(card_of(plain, N("p")) == Cardinal::aleph(0));
    CHECK(card_of(plain, N("q")) == Cardinal::aleph(0));
    CHECK(card_of(plain, N("z")) == Cardinal::aleph(1));
    CHECK(universe_card(plain) == Cardinal::aleph(1));

    BuildPlan plan = default_plan(gamma);
    plan.demand_overrides.insert(2);
    const SymbolicModel forced = build_model(gamma, plan);
    CHECK(card_of(forced, N("p")) == Cardinal::aleph(0));
    CHECK(card_of(forced, N("q")) == Cardinal::aleph(1));
    CHECK(card_of(forced, N("z")) == Cardinal::aleph(2));
    CHECK(universe_card(forced) == Cardinal::aleph(2));
    CHECK(satisfies_all(forced, gamma).ok);
}

TEST_CASE("the builder repairs a half noun bounded from below") {
    // v has no witness of its own, but must outweigh z, which the completion
    // does give weight; a repair block keeps the sizes coherent.
    const Theory gamma = T("atleast v z\nsome w w\nall w ~v");
    BuildTrace trace;
    const SymbolicModel m = build_model(gamma, &trace);

    CHECK(satisfies_all(m, gamma).ok);
    CHECK(card_of(m, N("v")) >= card_of(m, N("z")));
    CHECK(card_of(m, N("v")) == Cardinal::aleph(0));

    bool repaired = false;
    for (const std::string& line : trace.lines)
        repaired = repaired || line.find("starvation repair") != std::string::npos;
    CHECK(repaired);
    CHECK(trace.str().find("gives weight to v") != std::string::npos);
}

TEST_CASE("a strict chain builds with strictly descending cardinalities") {
    const Theory gamma = T("more x0 x1\nmore x1 x2\nmore x2 x3\nmore x3 x4\nmore x4 x5");
    const SymbolicModel m = build_model(gamma);
    CHECK(satisfies_all(m, gamma).ok);

    const std::vector<Cardinal> expected = {Cardinal::aleph(4), Cardinal::aleph(3),
                                            Cardinal::aleph(2), Cardinal::aleph(1),
                                            Cardinal::aleph(0), Cardinal::finite(0)};
    for (int i = 0; i <= 5; ++i) {
        const Cardinal c = card_of(m, N("x" + std::to_string(i)));
        CHECK(c == expected[static_cast<std::size_t>(i)]);
        if (i > 0) CHECK(c < card_of(m, N("x" + std::to_string(i - 1))));
    }
}

TEST_CASE("degenerate and rejected builds") {
    // A single unanchored existential: everything lands in one countable layer.
    const SymbolicModel single = build_model(T("some p p"));
    CHECK(card_of(single, N("p")) == Cardinal::aleph(0));
    CHECK(card_of(single, N("~p")) == Cardinal::finite(0));
    CHECK(universe_card(single) == Cardinal::aleph(0));

    // The empty theory still has a (nounless) infinite model.
    const SymbolicModel empty = build_model({});
    CHECK(universe_card(empty).is_infinite());

    CHECK_THROWS_WITH_AS(build_model(T("more p x\nmore q ~x"), BuildPlan{}),
                         "an inconsistent theory has no model", precondition_error);
    CHECK_THROWS_WITH_AS(build_model(T("more p x\nmore q ~x")),
                         "an inconsistent theory has no model, so no build plan",
                         precondition_error);
    CHECK_THROWS_WITH_AS(default_plan(T("some p ~p")),
                         "an inconsistent theory has no model, so no build plan",
                         precondition_error);
}

TEST_CASE("the default plan restates the standard analysis") {
    const Theory gamma = fixtures::worked_theory();
    const SaturationResult sat = saturate(gamma);
    const DerivedRelations rels = relations(sat);
    const BuildPlan plan = default_plan(gamma);

    CHECK(plan.partition.assignment == standard_partition(rels).assignment);
    CHECK(plan.listing.classes ==
          proper_listing(equivc_classes(rels, compute_Q(sat, standard_partition(rels))),
                         rels)
              .classes);
    CHECK(plan.demand_overrides.empty());
    CHECK(plan.hints.wish.empty());
    CHECK(plan.hints.avoid.empty());
    CHECK_FALSE(plan.hints.apart.has_value());
}
