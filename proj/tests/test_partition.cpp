#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "cardlogic/json_io.hpp"
#include "cardlogic/model.hpp"
#include "cardlogic/partition.hpp"
#include "cardlogic/prover.hpp"
#include "fixtures.hpp"

using namespace cardlogic;
using fixtures::N;
using fixtures::S;
using fixtures::T;

namespace {

using PairSet = std::set<std::pair<Noun, Noun>>;

PairSet nonreflexive(const std::vector<std::pair<Noun, Noun>>& pairs) {
    PairSet out;
    for (const auto& p : pairs)
        if (p.first != p.second) out.insert(p);
    return out;
}

const DerivedRelations& worked_rels() {
    static const DerivedRelations rels = relations(fixtures::worked_theory());
    return rels;
}

std::vector<Noun> nouns(std::initializer_list<const char*> names) {
    std::vector<Noun> out;
    for (const char* n : names) out.push_back(N(n));
    return out;
}

}  // namespace

TEST_CASE("the worked theory's standard partition") {
    const Partition part = standard_partition(worked_rels());
    CHECK(part.in_class(SizeClass::Small) == nouns({"a", "b", "c", "d"}));
    CHECK(part.in_class(SizeClass::Half) ==
          nouns({"e", "~e", "f", "~f", "g", "~g"}));
    CHECK(part.in_class(SizeClass::Large) == nouns({"~a", "~b", "~c", "~d"}));
    CHECK(part.at(N("c")) == SizeClass::Small);
    CHECK(part.is(N("~c"), SizeClass::Large));
    CHECK_FALSE(part.is(N("g"), SizeClass::Small));
    CHECK_THROWS_WITH_AS(part.at(N("zz")), "noun 'zz' is not covered by the partition",
                         precondition_error);

    CHECK(render_partition(part) ==
          "small: a b c d\n"
          "half: e ~e f ~f g ~g\n"
          "large: ~a ~b ~c ~d\n");
}

TEST_CASE("the worked theory's nonempty small nouns") {
    const SaturationResult sat = saturate(fixtures::worked_theory());
    const Partition part = standard_partition(worked_rels());
    CHECK(compute_Q(sat, part) == nouns({"c", "d"}));
}

TEST_CASE("refining the worked partition around g pulls g and its class down") {
    const Partition part = refined_partition(worked_rels(), N("g"));
    CHECK(part.in_class(SizeClass::Small) == nouns({"a", "b", "c", "d", "g"}));
    CHECK(part.in_class(SizeClass::Half) == nouns({"e", "~e", "f", "~f"}));
    CHECK(part.in_class(SizeClass::Large) ==
          nouns({"~a", "~b", "~c", "~d", "~g"}));
}

TEST_CASE("refinement preconditions: the complement must be deniably bigger") {
    // e ==_c ~e, so the complement of e is provably no smaller.
    CHECK_THROWS_WITH_AS(refined_partition(worked_rels(), N("e")),
                         "cannot refine the partition around 'e': the theory derives "
                         "that its complement is no bigger",
                         precondition_error);
    // ~b's complement b sits at the bottom of <=_c, so the same check fires.
    CHECK_THROWS_AS(refined_partition(worked_rels(), N("~b")), precondition_error);

    // Refining around a noun that is already small is legal and changes
    // nothing: only nouns provably no bigger than a join it, and none do.
    const Partition part = refined_partition(worked_rels(), N("a"));
    CHECK(part.assignment == standard_partition(worked_rels()).assignment);
}

TEST_CASE("a refinement may place a large noun strictly below a half noun") {
    // With only a size comparison to go on, the standard partition keeps
    // everything at half; refining around q commits q small and ~q large even
    // though ~q <_c p with p still at half.
    const Theory gamma = T("atleast p ~q");
    const DerivedRelations rels = relations(gamma);

    const Partition standard = standard_partition(rels);
    for (const Noun& x : rels.atoms) CHECK(standard.at(x) == SizeClass::Half);

    const Partition refined = refined_partition(rels, N("q"));
    CHECK(refined.in_class(SizeClass::Small) == nouns({"q"}));
    CHECK(refined.in_class(SizeClass::Half) == nouns({"p", "~p"}));
    CHECK(refined.in_class(SizeClass::Large) == nouns({"~q"}));
    CHECK(rels.ltc(N("~q"), N("p")));  // the large noun sits strictly below p
}

TEST_CASE("the worked theory's derived relation tables") {
    const DerivedRelations& rels = worked_rels();
    REQUIRE(rels.atoms.size() == 14);

    SUBCASE("inclusion: empty a at the bottom, full ~a at the top, two chains") {
        PairSet expected;
        for (const Noun& x : rels.atoms) {
            if (x != N("a")) expected.insert({N("a"), x});
            if (x != N("~a")) expected.insert({x, N("~a")});
        }
        expected.insert({N("c"), N("d")});
        expected.insert({N("~d"), N("~c")});
        expected.insert({N("e"), N("f")});
        expected.insert({N("~f"), N("~e")});
        REQUIRE(expected.size() == 29);
        CHECK(nonreflexive(rels.pairs_leq()) == expected);
    }

    SUBCASE("size equivalence classes") {
        const auto classes = equivc_classes(rels, rels.atoms);
        const std::vector<NounClass> expected = {
            nouns({"a"}),
            nouns({"~a", "~b", "~c", "~d", "e", "~e", "f"}),
            nouns({"b"}),
            nouns({"c", "d"}),
            nouns({"~f"}),
            nouns({"g"}),
            nouns({"~g"}),
        };
        CHECK(classes == expected);
    }

    SUBCASE("strict size order") {
        PairSet expected;
        auto row = [&](const char* from, std::initializer_list<const char*> tos) {
            for (const char* to : tos) expected.insert({N(from), N(to)});
        };
        const std::initializer_list<const char*> everything_else = {
            "~a", "b", "~b", "c", "~c", "d", "~d", "e", "~e", "f", "~f", "g", "~g"};
        row("a", everything_else);
        row("b", {"~a", "~b", "c", "~c", "d", "~d", "e", "~e", "f", "g"});
        for (const char* x : {"c", "d", "~f", "g", "~g"})
            row(x, {"~a", "~b", "~c", "~d", "e", "~e", "f"});
        REQUIRE(expected.size() == 58);
        CHECK(nonreflexive(rels.pairs_ltc()) == expected);
    }

    SUBCASE("witnessed strict size facts") {
        PairSet expected;
        auto row = [&](const char* from, std::initializer_list<const char*> tos) {
            for (const char* to : tos) expected.insert({N(from), N(to)});
        };
        row("a", {"~a", "~b", "c", "~c", "d", "~d", "e", "~e", "f", "~f"});
        row("b", {"~a", "~b", "c", "~c", "d", "~d", "e", "~e", "f"});
        row("c", {"~a", "~b", "~c", "~d", "e", "~e", "f"});
        row("d", {"~a", "~b", "~c", "~d", "e", "~e", "f"});
        REQUIRE(expected.size() == 33);
        CHECK(nonreflexive(rels.pairs_ltmore()) == expected);
    }

    SUBCASE("comparisons the sentences almost suggest but do not support") {
        // ~f is not a size top: only the provably empty a sits below it ...
        CHECK_FALSE(rels.equivc(N("f"), N("~f")));
        for (const char* x : {"b", "c", "d", "e", "g"}) {
            CHECK_FALSE(rels.leqc(N(x), N("~f")));
            CHECK_FALSE(rels.ltc(N(x), N("~f")));
        }
        CHECK(rels.leqc(N("a"), N("~f")));
        // ... nothing is witnessed strictly below ~f except a ...
        for (const char* x : {"b", "c", "d"}) CHECK_FALSE(rels.ltmore(N(x), N("~f")));
        CHECK(rels.ltmore(N("a"), N("~f")));
        // ... and "atleast g b" does not make g (or ~g) dominate c and d.
        for (const char* x : {"c", "d"}) {
            CHECK_FALSE(rels.ltmore(N(x), N("g")));
            CHECK_FALSE(rels.ltmore(N(x), N("~g")));
            CHECK_FALSE(rels.leqc(N(x), N("g")));
        }
    }
}

TEST_CASE("witness models refute the unsupported comparisons") {
    const Theory gamma = fixtures::worked_theory();

    // A model with a one-point ~f and two-point b and g.
    const SymbolicModel small_fbar = fixtures::small_fbar_model();
    REQUIRE(satisfies_all(small_fbar, gamma).ok);
    CHECK(card_of(small_fbar, N("~f")) == Cardinal::finite(1));
    CHECK(card_of(small_fbar, N("b")) == Cardinal::finite(2));
    CHECK(card_of(small_fbar, N("g")) == Cardinal::finite(2));
    for (const char* phi : {"atleast ~f b", "atleast ~f c", "atleast ~f d",
                            "atleast ~f e", "atleast ~f g", "atleast ~f f",
                            "more ~f b", "more g c", "more g d", "atleast g c",
                            "atleast g d"}) {
        CAPTURE(phi);
        CHECK_FALSE(satisfies(small_fbar, S(phi)));
        CHECK_FALSE(entails(gamma, S(phi)));  // the engine agrees
    }

    // A model where g exhausts the universe, so ~g is empty.
    const SymbolicModel full_g = fixtures::full_g_model();
    REQUIRE(satisfies_all(full_g, gamma).ok);
    CHECK(card_of(full_g, N("~g")) == Cardinal::finite(0));
    for (const char* phi : {"more ~g c", "more ~g d"}) {
        CAPTURE(phi);
        CHECK_FALSE(satisfies(full_g, S(phi)));
        CHECK_FALSE(entails(gamma, S(phi)));
    }
}

TEST_CASE("listings of the worked theory's classes") {
    const DerivedRelations& rels = worked_rels();

    SUBCASE("small classes sort along the strict size order") {
        const auto classes = equivc_classes(rels, nouns({"a", "b", "c", "d"}));
        CHECK(classes ==
              std::vector<NounClass>{nouns({"a"}), nouns({"b"}), nouns({"c", "d"})});
        const Listing listing = proper_listing(classes, rels);
        CHECK(listing.classes ==
              std::vector<NounClass>{nouns({"a"}), nouns({"b"}), nouns({"c", "d"})});
        CHECK(listing.position_of(N("a")) == 0);
        CHECK(listing.position_of(N("d")) == 2);
        CHECK(listing.position_of(N("g")) == -1);
    }

    SUBCASE("half classes: deterministic topological order and rendering") {
        const auto classes =
            equivc_classes(rels, nouns({"e", "~e", "f", "~f", "g", "~g"}));
        const Listing listing = proper_listing(classes, rels);
        CHECK(listing.classes == std::vector<NounClass>{nouns({"~f"}), nouns({"g"}),
                                                        nouns({"~g"}),
                                                        nouns({"e", "~e", "f"})});
        CHECK(render_listing(listing) ==
              "1: [~f]\n"
              "2: [g]\n"
              "3: [~g]\n"
              "4: [e ~e f]\n");

        // Properness: no later class is strictly below an earlier one.
        for (std::size_t i = 0; i < listing.classes.size(); ++i)
            for (std::size_t j = i + 1; j < listing.classes.size(); ++j)
                CHECK_FALSE(rels.ltc(listing.classes[j].front(),
                                     listing.classes[i].front()));
    }

    SUBCASE("placing a class as late as possible") {
        const auto classes =
            equivc_classes(rels, nouns({"e", "~e", "f", "~f", "g", "~g"}));
        const Listing listing = listing_placing_late(classes, rels, N("g"));
        CHECK(listing.classes == std::vector<NounClass>{nouns({"~f"}), nouns({"~g"}),
                                                        nouns({"g"}),
                                                        nouns({"e", "~e", "f"})});
        // Everything after [g] sits above g; everything not above g precedes it.
        const int gi = listing.position_of(N("g"));
        for (std::size_t i = 0; i < listing.classes.size(); ++i) {
            const Noun& rep = listing.classes[i].front();
            if (static_cast<int>(i) > gi) CHECK(rels.leqc(N("g"), rep));
            if (!rels.leqc(N("g"), rep)) CHECK(static_cast<int>(i) < gi);
        }
    }

    SUBCASE("reordering to force equal sizes") {
        const auto classes =
            equivc_classes(rels, nouns({"e", "~e", "f", "~f", "g", "~g"}));
        const Listing listing = proper_listing(classes, rels);

        const Listing moved = reorder_for_equal_size(listing, rels, N("e"), N("~f"));
        CHECK(moved.classes == std::vector<NounClass>{nouns({"g"}), nouns({"~g"}),
                                                      nouns({"~f"}),
                                                      nouns({"e", "~e", "f"})});
        // [~f] now directly precedes [e ~e f], with nothing pinched between.
        CHECK(moved.position_of(N("~f")) + 1 == moved.position_of(N("e")));

        // Strictly-bigger pairs cannot be equalized.
        const auto small = proper_listing(equivc_classes(rels, nouns({"a", "b", "c", "d"})),
                                          rels);
        CHECK_THROWS_WITH_AS(reorder_for_equal_size(small, rels, N("c"), N("a")),
                             "cannot give 'c' and 'a' equal sizes: the theory derives "
                             "that the former is strictly bigger",
                             precondition_error);
        // The pair must already be strictly ordered in <=_c ...
        CHECK_THROWS_AS(reorder_for_equal_size(listing, rels, N("g"), N("~f")),
                        precondition_error);
        // ... and both classes must be in the listing at hand.
        CHECK_THROWS_WITH_AS(reorder_for_equal_size(small, rels, N("e"), N("~g")),
                             "both nouns must appear in the listing", precondition_error);
    }
}

TEST_CASE("partition structure holds over random consistent theories") {
    std::mt19937 rng(4242u);
    std::uniform_int_distribution<int> form(0, 3);
    std::uniform_int_distribution<int> len(1, 5);
    const std::vector<Noun> pool = {N("p"), N("~p"), N("q"), N("~q"), N("r"), N("~r")};
    std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);

    int checked = 0;
    while (checked < 60) {
        Theory gamma;
        for (int i = 0, n = len(rng); i < n; ++i)
            gamma.push_back(
                Sentence{static_cast<Form>(form(rng)), pool[pick(rng)], pool[pick(rng)]});
        if (!is_consistent(gamma)) continue;
        ++checked;

        const SaturationResult sat = saturate(gamma);
        const DerivedRelations rels = relations(sat);
        const Partition part = standard_partition(rels);

        for (const Noun& x : rels.atoms) {
            // Complement duality.
            CHECK((part.at(x) == SizeClass::Small) ==
                  (part.at(complement(x)) == SizeClass::Large));
            // Provably-half nouns are at half; witnessed-small nouns are small.
            if (rels.equivc(x, complement(x))) CHECK(part.at(x) == SizeClass::Half);
            for (const Noun& y : rels.atoms)
                if (rels.ltmore(x, y)) CHECK(part.at(x) == SizeClass::Small);
        }

        // Q consists of exactly the small nouns forced nonempty, and is
        // closed under size equivalence.
        const auto q = compute_Q(sat, part);
        for (const Noun& x : part.in_class(SizeClass::Small)) {
            const bool in_q = std::find(q.begin(), q.end(), x) != q.end();
            CHECK(in_q == sat.derived(Sentence{Form::Some, x, x}));
        }
        for (const Noun& x : q)
            for (const Noun& y : rels.atoms)
                if (rels.equivc(x, y) && part.at(y) == SizeClass::Small)
                    CHECK(std::find(q.begin(), q.end(), y) != q.end());
    }
}

TEST_CASE("partitions round-trip through JSON") {
    const Partition part = standard_partition(worked_rels());
    const Partition back = partition_from_json(to_json(part));
    CHECK(back.assignment == part.assignment);

    nlohmann::json j = to_json(part);
    j["small"].push_back("~g");  // ~g is already at half
    CHECK_THROWS_WITH_AS(partition_from_json(j),
                         "line 0, column 0: noun '~g' appears in two size classes",
                         parse_error);
    nlohmann::json missing = to_json(part);
    missing.erase("half");
    CHECK_THROWS_AS(partition_from_json(missing), parse_error);
}
