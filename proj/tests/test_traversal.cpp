#include <doctest.h>

#include "ltlsync/engine.hpp"
#include "ltlsync/errors.hpp"
#include "ltlsync/random.hpp"
#include "ltlsync/traversal.hpp"
#include "support.hpp"

using namespace ltlsync;
using support::pqr;
using support::word;

TEST_CASE("extended integers") {
    const ExtInt lo = ExtInt::neg_inf(), hi = ExtInt::pos_inf(), z(0);
    CHECK(lo < z);
    CHECK(z < hi);
    CHECK(lo <= lo);
    CHECK(hi <= hi);
    CHECK_FALSE(lo < lo);
    CHECK_FALSE(hi < hi);
    CHECK(lo.to_string() == "-inf");
    CHECK(ExtInt(3).to_string() == "3");
}

TEST_CASE("traversal_profile") {
    const Dfa d = pqr();
    const State p = 0, q = 1, r = 2;
    const auto all = traversal_profile(d, word(d, "dc"), d.all_states());
    CHECK(all.last(p) == ExtInt(0));
    CHECK(all.last(q) == ExtInt(1));
    CHECK(all.last(r) == ExtInt(2));

    const auto eps = traversal_profile(d, Word{}, d.all_states());
    for (State x = 0; x < 3; ++x) {
        CHECK(eps.first(x) == ExtInt(0));
        CHECK(eps.last(x) == ExtInt(0));
    }

    const auto from_p = traversal_profile(d, word(d, "b"), StateSet::singleton(3, p));
    CHECK(from_p.last(p) == ExtInt(1));
    CHECK(from_p.last(q) == ExtInt::neg_inf());
    CHECK(from_p.first(q) == ExtInt::pos_inf());
    CHECK_THROWS_AS(traversal_profile(d, Word{}, StateSet(3)), InputError);
}

TEST_CASE("relation membership") {
    const Dfa d = pqr();
    const State p = 0, q = 1;
    using K = RelationKind;
    CHECK(relation_membership(K::lt_ll_sets, d, word(d, "dc"), p, q));
    CHECK_FALSE(relation_membership(K::le_ll_sets, d, word(d, "cd"), p, q));
    CHECK(relation_membership(K::lt_lf_paths, d, word(d, "b"), p, q));
    CHECK_FALSE(relation_membership(K::lt_lf_paths, d, word(d, "a"), p, q));
    CHECK_FALSE(relation_membership(K::le_ll_paths, d, word(d, "b"), p, q, PathVariant::literal));
    CHECK(relation_membership(K::le_ll_paths, d, word(d, "b"), p, q, PathVariant::vacuous));
    CHECK_THROWS_AS(relation_membership(K::lt_ll_sets, d, Word{}, p, p), InputError);
}

TEST_CASE("agrees") {
    const Dfa d = pqr();
    CHECK(agrees({RelationKind::lt_ll_sets, {{0, 1}}}, d, word(d, "dc")));
    CHECK(agrees({RelationKind::lt_ll_paths, {}}, d, word(d, "abc")));
    random::Rng rng(31);
    for (int i = 0; i < 50; ++i) {
        const Dfa r = random::random_dfa(rng, random::uniform(rng, 2, 5), 2);
        CHECK(agrees({RelationKind::le_ll_sets, random::random_pairs(rng, r.num_states(), 3)}, r, Word{}));
    }
}

TEST_CASE("constraint translation") {
    const Dfa d({"p", "q", "r", "s"}, {"a"}, {0, 1, 2, 3});
    CHECK(constraint_to_formula({RelationKind::le_ll_sets, {{0, 1}}}, d) == ltlf::parse("G (p -> F q)"));
    CHECK(constraint_to_formula({RelationKind::lt_ll_paths, {{0, 1}, {2, 3}}}, d) ==
          ltlf::parse("F (q & G !p) & F (s & G !r)"));
    CHECK(constraint_to_formula({RelationKind::lt_lf_paths, {{0, 1}}}, d) == ltlf::parse("G (q -> G !p)"));
    CHECK(constraint_to_formula({RelationKind::lt_lf_paths, {}}, d) == ltlf::Formula::truth());
    CHECK_THROWS_AS(constraint_to_formula({RelationKind::le_ll_paths, {{0, 1}}, PathVariant::vacuous}, d), InputError);
}

TEST_CASE("constraint JSON") {
    const Dfa d = pqr();
    const auto spec = constraint_from_json(
        nlohmann::json::parse(R"({"relation":"le-ll-paths","pairs":[["p","q"]],"variant":"vacuous"})"), d);
    CHECK(spec.kind == RelationKind::le_ll_paths);
    CHECK(spec.variant == PathVariant::vacuous);
    CHECK(spec.pairs == std::vector<StatePair>{{0, 1}});
    CHECK(to_json(spec, d)["relation"] == "le-ll-paths");
    CHECK_THROWS_AS(constraint_from_json(nlohmann::json::parse(R"({"relation":"lt-ll-sets","pairs":[["p","p"]]})"), d),
                    InputError);
    CHECK_THROWS_AS(constraint_from_json(nlohmann::json::parse(R"({"relation":"xx","pairs":[]})"), d), InputError);
}

TEST_CASE("property: inclusions, translation, finite set values") {
    random::Rng rng(32);
    using K = RelationKind;
    for (int i = 0; i < 1000; ++i) {
        const Dfa d = random::random_dfa(rng, random::uniform(rng, 2, 5), random::uniform(rng, 1, 3));
        const Word w = random::random_word(rng, d.num_letters(), random::uniform(rng, 0, 6));
        const auto pair = random::random_pairs(rng, d.num_states(), 1).front();
        const auto [p, q] = pair;
        auto in = [&](K k, PathVariant v = PathVariant::literal) { return relation_membership(k, d, w, p, q, v); };
        if (in(K::lt_ll_sets)) CHECK(in(K::le_ll_sets));
        for (auto v : {PathVariant::literal, PathVariant::vacuous}) {
            if (in(K::lt_ll_paths)) CHECK(in(K::le_ll_paths, v));
        }
        if (in(K::lt_lf_paths)) CHECK(in(K::le_ll_paths, PathVariant::vacuous));

        const auto prof = traversal_profile(d, w, d.all_states());
        for (State x = 0; x < d.num_states(); ++x) CHECK(prof.last(x).finite());

        for (K k : kAllRelations) {
            const ConstraintSpec spec{k, {pair}};
            const ltlf::Formula f = constraint_to_formula(spec, d);
            bool sat = true;
            if (on_paths(k)) {
                for (State r = 0; r < d.num_states(); ++r) sat = sat && ltlf::eval_trace(f, path_trace(d, r, w), d.state_names());
            } else {
                sat = ltlf::eval_trace(f, set_trace(d, d.all_states(), w), d.state_names());
            }
            CHECK(agrees(spec, d, w) == sat);
        }
    }
}
