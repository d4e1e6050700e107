#include <doctest.h>

#include <algorithm>

#include "ltlsync/engine.hpp"
#include "ltlsync/errors.hpp"
#include "ltlsync/random.hpp"
#include "ltlsync/reductions.hpp"
#include "ltlsync/travgraph.hpp"

using namespace ltlsync;

namespace {

TraversalInstance two_clause_instance() {
    return *cnf_to_fvt(CnfFormula{2, {{-1, 2}, {1, -2}}}).traversal;
}

std::vector<std::string> names(const TraversalInstance& inst, const VertexPath& path) {
    std::vector<std::string> out;
    for (Vertex v : path) out.push_back(inst.graph.name(v));
    return out;
}

// Every path with at most max_edges edges, shortest first.
std::optional<VertexPath> brute_force(const TraversalInstance& inst, TraversalKind kind, std::size_t max_edges) {
    std::vector<VertexPath> layer;
    for (Vertex v = 0; v < inst.graph.size(); ++v) layer.push_back({v});
    for (std::size_t e = 0; e <= max_edges; ++e) {
        for (const auto& p : layer) {
            if (verify_traversal_path(inst, p, kind)) return p;
        }
        std::vector<VertexPath> next;
        for (const auto& p : layer) {
            for (Vertex w : inst.graph.successors(p.back())) {
                next.push_back(p);
                next.back().push_back(w);
            }
        }
        layer = std::move(next);
    }
    return std::nullopt;
}

}  // namespace

TEST_CASE("first-visits examples") {
    const TraversalInstance inst = two_clause_instance();
    const PathVerdict v = solve_fvt(inst);
    REQUIRE(v.is_yes());
    CHECK(names(inst, v.witness) == std::vector<std::string>{"x'1", "x1^0", "x'2", "x2^0", "c'1", "c1^1", "c'2",
                                                             "c2^2", "f1", "f2", "x'1", "x1^1", "x'2", "x2^1"});
    CHECK(verify_traversal_path(inst, v.witness, TraversalKind::fvt));

    TraversalInstance empty{Digraph(3), {}, {}};
    const PathVerdict e = solve_fvt(empty);
    REQUIRE(e.is_yes());
    CHECK(e.witness.size() == 1);

    TraversalInstance locked{Digraph(std::vector<std::string>{"u", "v"}), {{0, 1}, {1, 0}}, {}};
    CHECK(solve_fvt(locked).is_no());
    CHECK(solve_lvt(locked).is_no());
    CHECK(solve_lvt(empty).is_yes());
}

TEST_CASE("last-visits on the reversed instance") {
    const TraversalInstance inst = two_clause_instance();
    TraversalInstance rev{inst.graph.reversed(), {}, {}};
    for (auto [u, v] : inst.pairs) rev.pairs.emplace_back(v, u);
    const PathVerdict f = solve_fvt(inst);
    const PathVerdict l = solve_lvt(rev);
    REQUIRE(l.is_yes());
    VertexPath back = f.witness;
    std::reverse(back.begin(), back.end());
    CHECK(l.witness == back);
    CHECK(verify_traversal_path(rev, l.witness, TraversalKind::lvt));
}

TEST_CASE("verify_traversal_path") {
    const TraversalInstance inst = two_clause_instance();
    const VertexPath good = solve_fvt(inst).witness;
    CHECK(verify_traversal_path(inst, good, TraversalKind::fvt));
    VertexPath short_path(good.begin(), good.end() - 2);  // drops the x2^1 key
    CHECK_FALSE(verify_traversal_path(inst, short_path, TraversalKind::fvt));

    Digraph g(std::vector<std::string>{"u", "v"});
    g.add_edge(1, 0);
    g.add_edge(0, 1);
    const TraversalInstance uv{g, {{0, 1}}, {}};
    CHECK_FALSE(verify_traversal_path(uv, {1, 0}, TraversalKind::fvt));
    CHECK(verify_traversal_path(uv, {0, 1}, TraversalKind::fvt));
    CHECK_FALSE(verify_traversal_path(uv, {0, 0}, TraversalKind::fvt));  // no such edge
    const TraversalInstance must{g, {}, {1}};
    CHECK_FALSE(verify_traversal_path(must, {0}, TraversalKind::lvt));
}

TEST_CASE("lvt_to_cs_orep") {
    Digraph cycle(3);
    cycle.add_edge(0, 1);
    cycle.add_edge(1, 2);
    cycle.add_edge(2, 0);
    const auto out = lvt_to_cs_orep({cycle, {}, {}});
    CHECK(out.dfa.letter_names() == std::vector<std::string>{"e_0", "s"});
    CHECK(step_set(out.dfa, out.dfa.all_states(), Word(3, 1)).count() == 1);

    Digraph loop(1);
    loop.add_edge(0, 0);
    const auto one = lvt_to_cs_orep({loop, {}, {}});
    CHECK(one.dfa.num_states() == 1);
    CHECK(synchronizing_word(one.dfa, SyncMode::shortest).witness.empty());

    const TraversalInstance inst = two_clause_instance();
    const auto big = lvt_to_cs_orep({inst.graph, inst.pairs, {}});
    std::size_t degree = 0;
    for (Vertex v = 0; v < inst.graph.size(); ++v) degree = std::max(degree, inst.graph.successors(v).size());
    CHECK(degree == 2);
    CHECK(big.dfa.num_letters() == degree + 1);
    CHECK(underlying_digraph(big.dfa).num_edges() >= inst.graph.num_edges());

    Digraph split(2);
    split.add_edge(0, 1);
    CHECK_THROWS_AS(lvt_to_cs_orep({split, {}, {}}), InputError);
}

TEST_CASE("cs_orep_to_lvt") {
    const Dfa pqr({"p", "q", "r"}, {"a", "b", "c", "d"}, {1, 0, 2, 0, 1, 2, 0, 2, 2, 2, 1, 2});
    CHECK_FALSE(cs_orep_to_lvt(pqr, {{0, 1}}).has_value());

    const Dfa cerny({"0", "1", "2"}, {"a", "b"}, {1, 2, 0, 1, 1, 2});
    const auto red = cs_orep_to_lvt(cerny, {{2, 0}});
    REQUIRE(red.has_value());
    CHECK(red->component.size() == 3);
    CHECK(red->instance.pairs == std::vector<VertexPair>{{2, 0}});

    const Dfa cycle({"0", "1", "2"}, {"a"}, {1, 2, 0});
    CHECK_FALSE(cs_orep_to_lvt(cycle, {}).has_value());
}

TEST_CASE("digraph JSON") {
    const auto j = nlohmann::json::parse(
        R"({"vertices":["u","v","w"],"edges":[["u","v"],["v","w"]],"pairs":[["u","w"]],"must_visit":["v"]})");
    const TraversalInstance inst = traversal_instance_from_json(j);
    CHECK(inst.graph.has_edge(0, 1));
    CHECK(inst.pairs == std::vector<VertexPair>{{0, 2}});
    CHECK(inst.must_visit == std::vector<Vertex>{1});
    CHECK(traversal_instance_from_json(to_json(inst)).graph == inst.graph);
    CHECK_THROWS_AS(traversal_instance_from_json(nlohmann::json::parse(R"({"vertices":["u"],"pairs":[["u","u"]]})")),
                    InputError);
}

TEST_CASE("property: search agrees with path enumeration; length bound") {
    random::Rng rng(51);
    for (int i = 0; i < 200; ++i) {
        const std::size_t n = random::uniform(rng, 1, 4);
        Digraph g(n);
        for (Vertex u = 0; u < n; ++u) {
            for (Vertex v = 0; v < n; ++v) {
                if (random::uniform(rng, 0, 2) == 0) g.add_edge(u, v);
            }
        }
        TraversalInstance inst{g, {}, {}};
        for (auto [p, q] : random::random_pairs(rng, n, random::uniform(rng, 0, 3))) inst.pairs.emplace_back(p, q);
        if (random::uniform(rng, 0, 2) == 0) inst.must_visit.push_back(static_cast<Vertex>(random::uniform(rng, 0, n - 1)));
        const std::size_t bound = (n - 1) * (n - 1) + 1;
        for (auto kind : {TraversalKind::fvt, TraversalKind::lvt}) {
            const PathVerdict v = solve_traversal(inst, kind);
            const auto brute = brute_force(inst, kind, bound);
            REQUIRE(v.is_yes() == brute.has_value());
            if (v.is_yes()) {
                CHECK(v.witness.size() == brute->size());
                CHECK(v.witness.size() - 1 <= (n - 1) * (n - 1));
            }
        }
    }
}

TEST_CASE("property: last-visits equals constrained synchronization on the generated automaton") {
    random::Rng rng(52);
    for (int i = 0; i < 100; ++i) {
        const std::size_t n = random::uniform(rng, 1, 6);
        const Digraph g = random::random_strongly_connected(rng, n, 0.2);
        TraversalInstance inst{g, {}, {}};
        for (auto [p, q] : random::random_pairs(rng, n, random::uniform(rng, 0, 3))) inst.pairs.emplace_back(p, q);
        const auto cs = lvt_to_cs_orep(inst);
        const PathVerdict l = solve_lvt(inst);
        const Verdict c = constrained_sync(cs.dfa, {RelationKind::lt_ll_paths, cs.pairs}, true);
        REQUIRE(l.is_yes() == c.is_yes());
    }
}

TEST_CASE("property: traversal part of the sink-component route") {
    random::Rng rng(53);
    for (int i = 0; i < 100; ++i) {
        const Dfa d = random::random_dfa(rng, random::uniform(rng, 1, 5), random::uniform(rng, 1, 3));
        const auto pairs = random::random_pairs(rng, d.num_states(), random::uniform(rng, 0, 2));
        const auto red = cs_orep_to_lvt(d, pairs);
        if (!red) {
            CHECK(solve_cs_orep_np(d, pairs).is_no());
            continue;
        }
        CHECK(solve_lvt(red->instance).is_yes() == solve_cs_orep_np(d, pairs).is_yes());
    }
}
