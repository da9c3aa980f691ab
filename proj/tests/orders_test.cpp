#include <random>

#include "doctest.h"
#include "helpers.hpp"
#include "ordext/orders.hpp"

using namespace ordext;
using namespace ordext::testing;

TEST_CASE("order wrappers validate their axioms") {
    const UniversePtr u = letters(3);
    CHECK_THROWS_AS(PartialOrder(rel_of(u, {{"a", "b"}})), ValidationError);  // not reflexive
    CHECK_THROWS_AS(PartialOrder(rel_of(u, {{"a", "b"}, {"b", "c"}}, true)),
                    ValidationError);  // not transitive
    CHECK_THROWS_AS(PartialOrder(rel_of(u, {{"a", "b"}, {"b", "a"}, {"a", "a"}, {"b", "b"}}, true)),
                    ValidationError);  // not antisymmetric
    CHECK_NOTHROW(PartialOrder(rel_of(u, {{"a", "b"}}, true)));

    CHECK_THROWS_AS(TotalPreorder(Relation::identity(u)), ValidationError);  // not total
    CHECK_NOTHROW(TotalPreorder(Relation::full(u)));
}

TEST_CASE("total preorders and ranked blocks reconstruct each other") {
    const UniversePtr u = letters(3);
    const TotalPreorder t(u, {{0, 2}, {1}});
    CHECK(t.rel() == rel_of(u, {{"a", "c"}, {"c", "a"}, {"a", "b"}, {"c", "b"}}, true));
    CHECK(t.rank_of(0) == 0);
    CHECK(t.rank_of(1) == 1);
    CHECK(t.render_blocks() == "{a c} < {b}");

    const TotalPreorder back(t.rel());
    CHECK(back.ranked_blocks() == t.ranked_blocks());

    CHECK_THROWS_AS(TotalPreorder(u, {{0, 1}}), ValidationError);      // c missing
    CHECK_THROWS_AS(TotalPreorder(u, {{0, 1}, {1, 2}}), ValidationError);  // b twice

    std::mt19937 rng(29);
    const UniversePtr u5 = letters(5);
    for (int trial = 0; trial < 40; ++trial) {
        Partition part = random_partition(rng, u5);
        std::vector<std::vector<int>> blocks = part.blocks();
        std::shuffle(blocks.begin(), blocks.end(), rng);
        const TotalPreorder t5(u5, blocks);
        CHECK(is_total(t5.rel()));
        CHECK(is_preorder(t5.rel()));
        CHECK(TotalPreorder(t5.rel()).ranked_blocks() == t5.ranked_blocks());
        CHECK(symmetric_part(t5.rel()) == part.to_relation());
    }
}

TEST_CASE("indifference pairs are the strictly incomparable ones") {
    const UniversePtr u2 = letters(2);
    CHECK(indifference(Relation::identity(u2)) == Relation::full(u2));
    CHECK(indifference(rel_of(u2, {{"a", "b"}}, true)) == Relation::identity(u2));

    const UniversePtr u = letters(3);
    const Relation p = rel_of(u, {{"a", "b"}}, true);
    CHECK(indifference(p) ==
          rel_of(u, {{"a", "c"}, {"c", "a"}, {"b", "c"}, {"c", "b"}}, true));
    CHECK_THROWS_AS(indifference(rel_of(u, {{"a", "b"}})), ValidationError);
}

TEST_CASE("for a preorder exactly one of P, converse P, indifference holds per pair") {
    const UniversePtr u = letters(3);
    int preorders = 0;
    for (const Relation& r : all_relations(u)) {
        if (!is_preorder(r)) {
            continue;
        }
        ++preorders;
        const Relation strict = asymmetric_part(r);
        const Relation indiff = indifference(r);
        for (int x = 0; x < 3; ++x) {
            for (int y = 0; y < 3; ++y) {
                const int hits = (strict.contains(x, y) ? 1 : 0) +
                                 (strict.contains(y, x) ? 1 : 0) +
                                 (indiff.contains(x, y) ? 1 : 0);
                CHECK(hits == 1);
            }
        }
        CHECK(is_equivalence(symmetric_part(r)));
        if (is_antisymmetric(r)) {
            CHECK(symmetric_part(r) == Relation::identity(u));
        }
    }
    CHECK(preorders == 29);  // labeled preorders on three elements
}

TEST_CASE("equipotency groups equal indifference rows") {
    const UniversePtr u = letters(3);
    CHECK(equipotency(Relation::identity(u)) == Relation::full(u));
    CHECK(equipotency(rel_of(u, {{"a", "b"}, {"b", "c"}, {"a", "c"}}, true)) ==
          Relation::identity(u));
    CHECK(equipotency(rel_of(u, {{"a", "b"}}, true)) == Relation::identity(u));

    std::mt19937 rng(31);
    const UniversePtr u5 = letters(5);
    for (int trial = 0; trial < 60; ++trial) {
        const Relation pre = random_preorder(rng, u5);
        const Relation r = equipotency(pre);
        const Relation i = indifference(pre);
        CHECK(is_equivalence(r));
        CHECK(r.subset_of(i));
        CHECK((r == i) == is_negatively_transitive(asymmetric_part(pre)));
    }
}

TEST_CASE("quotient collapses blocks of the symmetric part") {
    const UniversePtr u = letters(3);
    const Partition s = part_of(u, {{"a", "c"}, {"b"}});
    const Relation pre = union_of(s.to_relation(), rel_of(u, {{"a", "b"}, {"c", "b"}}));
    const Relation q = quotient(pre, s);
    CHECK(q.universe()->labels() == std::vector<std::string>{"[a]", "[b]"});
    CHECK(q == rel_of(q.universe(), {{"[a]", "[b]"}}, true));
    CHECK(is_partial_order(q));

    SUBCASE("discrete partition gives an isomorphic copy") {
        const Relation p = rel_of(u, {{"a", "b"}}, true);
        const Relation qd = quotient(p, Partition::discrete(u));
        CHECK(qd.pairs() == p.pairs());
    }
    SUBCASE("full relation collapses to a point") {
        const Relation qf = quotient(Relation::full(u), Partition::single_block(u));
        CHECK(qf.size() == 1);
        CHECK(is_reflexive(qf));
    }
    SUBCASE("symmetric-part mismatch is reported with a witness pair") {
        const Relation p = rel_of(u, {{"a", "b"}}, true);
        try {
            quotient(p, s);
            FAIL("expected PreconditionError");
        } catch (const PreconditionError& e) {
            CHECK(std::string(e.what()).find("(a,c)") != std::string::npos);
        }
    }
}
