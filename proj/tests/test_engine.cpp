#include <doctest.h>

#include "ltlsync/engine.hpp"
#include "ltlsync/errors.hpp"
#include "ltlsync/oracle.hpp"
#include "ltlsync/random.hpp"
#include "support.hpp"

using namespace ltlsync;
using support::pqr;
using support::word;

TEST_CASE("model_check examples") {
    const Dfa d = pqr();
    const Verdict v = model_check(d, ltlf::parse("G (p -> F q)"), TraceMode::sets, true);
    REQUIRE(v.is_yes());
    CHECK(v.witness == word(d, "dc"));
    CHECK_FALSE(verify_witness(d, Problem::model_checking(ltlf::parse("G (p -> F q)"), false, true), word(d, "cd")));

    const Verdict t = model_check(d, ltlf::Formula::truth(), TraceMode::paths, false);
    REQUIRE(t.is_yes());
    CHECK(t.witness.empty());

    CHECK(model_check(d, ltlf::parse("G false"), TraceMode::paths, false).is_no());
    CHECK_THROWS_AS(model_check(d, ltlf::parse("G z"), TraceMode::paths, false), InputError);
}

TEST_CASE("model_check with a start set") {
    const Dfa d = pqr();
    const StateSet s = support::states(d, {"p"});
    const Verdict v = model_check(d, ltlf::parse("F r"), TraceMode::paths, false, s);
    REQUIRE(v.is_yes());
    CHECK(v.witness == word(d, "d"));
    // from {q} alone the sync requirement holds at once
    CHECK(model_check(d, ltlf::parse("q"), TraceMode::sets, true, support::states(d, {"q"})).witness.empty());
    CHECK_THROWS_AS(model_check(d, ltlf::parse("q"), TraceMode::sets, true, StateSet(3)), InputError);
}

TEST_CASE("model_check cap") {
    random::Rng rng(41);
    const Dfa d = random::random_dfa(rng, 10, 3);
    CHECK(model_check(d, ltlf::parse("G false"), TraceMode::sets, true, std::nullopt, 1).outcome != Outcome::yes);
    const Verdict v = model_check(d, ltlf::parse("F q9 & F q8 & F q7"), TraceMode::paths, true, std::nullopt, 3);
    CHECK(v.outcome == Outcome::limit);
}

TEST_CASE("constrained_sync examples") {
    const Dfa d = pqr();
    const Verdict v = constrained_sync(d, {RelationKind::lt_ll_sets, {{0, 1}}}, true);
    REQUIRE(v.is_yes());
    CHECK(v.witness == word(d, "dc"));

    random::Rng rng(42);
    for (int i = 0; i < 30; ++i) {
        const Dfa r = random::random_dfa(rng, random::uniform(rng, 2, 5), 2);
        const auto pairs = random::random_pairs(rng, r.num_states(), 3);
        for (auto k : {RelationKind::le_ll_sets, RelationKind::lt_lf_paths}) {
            const Verdict e = constrained_sync(r, {k, pairs}, false);
            REQUIRE(e.is_yes());
            CHECK(e.witness.empty());
        }
    }
    CHECK(constrained_sync(d, {RelationKind::lt_ll_paths, {{0, 1}}}, true).is_no());
    CHECK_THROWS_AS(constrained_sync(d, {RelationKind::lt_ll_paths, {{1, 1}}}, true), InputError);
}

TEST_CASE("vacuous le-ll-paths") {
    const Dfa d = pqr();
    const ConstraintSpec vac{RelationKind::le_ll_paths, {{0, 1}}, PathVariant::vacuous};
    const Verdict v = constrained_sync(d, vac, false);
    REQUIRE(v.is_yes());
    CHECK(v.witness.empty());
    // p -> q, q -> p, r never sees q: only vacuously fine from r
    const Verdict s = constrained_sync(d, vac, true);
    REQUIRE(s.is_yes());
    CHECK(agrees(vac, d, s.witness));
    CHECK(step_set(d, d.all_states(), s.witness).count() == 1);
    for (auto var : {PathVariant::literal, PathVariant::vacuous}) {
        for (bool sync : {false, true}) {
            const auto r = oracle::cross_check(d, Problem::constrained({RelationKind::le_ll_paths, {{0, 1}}, var}, sync), 6);
            CHECK_MESSAGE(!r.failure, r.reason);
        }
    }
}

TEST_CASE("sink-component route") {
    const Dfa d = pqr();
    CHECK(solve_cs_orep_np(d, {{0, 1}}).is_no());
    const Verdict e = solve_cs_orep_np(d, {});
    REQUIRE(e.is_yes());
    CHECK(step_set(d, d.all_states(), e.witness).count() == 1);

    const Dfa cerny({"0", "1", "2"}, {"a", "b"}, {1, 2, 0, 1, 1, 2});
    const Verdict c = solve_cs_orep_np(cerny, {{2, 0}});
    REQUIRE(c.is_yes());
    CHECK(agrees({RelationKind::lt_ll_paths, {{2, 0}}}, cerny, c.witness));
    CHECK(step_set(cerny, cerny.all_states(), c.witness).count() == 1);
    CHECK(constrained_sync(cerny, {RelationKind::lt_ll_paths, {{2, 0}}}, true).is_yes());

    const Dfa cycle({"0", "1", "2"}, {"a"}, {1, 2, 0});
    CHECK(solve_cs_orep_np(cycle, {}).is_no());
}

TEST_CASE("property: engine against enumeration") {
    random::Rng rng(43);
    for (int i = 0; i < 60; ++i) {
        const Dfa d = random::random_dfa(rng, random::uniform(rng, 1, 4), random::uniform(rng, 1, 3));
        const auto pairs = random::random_pairs(rng, d.num_states(), random::uniform(rng, 0, 2));
        for (auto k : kAllRelations) {
            for (bool sync : {false, true}) {
                const auto r = oracle::cross_check(d, Problem::constrained({k, pairs}, sync), 6);
                REQUIRE_MESSAGE(!r.failure, r.reason);
            }
        }
        const std::vector<std::string> atoms(d.state_names().begin(),
                                             d.state_names().begin() +
                                                 static_cast<std::ptrdiff_t>(std::min<std::size_t>(3, d.num_states())));
        const ltlf::Formula f = random::random_formula(rng, random::uniform(rng, 1, 8), atoms);
        for (bool paths : {false, true}) {
            for (bool sync : {false, true}) {
                const auto r = oracle::cross_check(d, Problem::model_checking(f, paths, sync), 6);
                REQUIRE_MESSAGE(!r.failure, (r.reason + " for " + ltlf::to_string(f)));
            }
        }
    }
}

TEST_CASE("property: sets-mode sync with true is synchronization") {
    random::Rng rng(44);
    for (int i = 0; i < 200; ++i) {
        const Dfa d = random::random_dfa(rng, random::uniform(rng, 1, 6), random::uniform(rng, 1, 3));
        const Verdict m = model_check(d, ltlf::Formula::truth(), TraceMode::sets, true);
        const Verdict s = synchronizing_word(d, SyncMode::shortest);
        REQUIRE(m.is_yes() == s.is_yes());
        if (m.is_yes()) CHECK(m.witness.size() == s.witness.size());
    }
}

TEST_CASE("property: sink-component route matches the product search") {
    random::Rng rng(45);
    for (int i = 0; i < 100; ++i) {
        const Dfa d = random::random_dfa(rng, random::uniform(rng, 1, 5), random::uniform(rng, 1, 3));
        const auto pairs = random::random_pairs(rng, d.num_states(), random::uniform(rng, 0, 2));
        const Verdict np = solve_cs_orep_np(d, pairs);
        const Verdict full = constrained_sync(d, {RelationKind::lt_ll_paths, pairs}, true);
        REQUIRE(np.is_yes() == full.is_yes());
    }
}
