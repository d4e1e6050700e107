#include <algorithm>
#include <deque>
#include <string>

#include "ltlsync/errors.hpp"
#include "ltlsync/travgraph.hpp"

namespace ltlsync {

CsOrepInstance lvt_to_cs_orep(const TraversalInstance& inst) {
    inst.validate();
    const Digraph& g = inst.graph;
    const std::size_t n = g.size();
    if (!inst.must_visit.empty()) throw InputError("must-visit vertices are not supported by this reduction");
    if (!strongly_connected(g)) throw InputError("the reduction needs a strongly connected graph");

    std::size_t d = 0;
    for (Vertex v = 0; v < n; ++v) d = std::max(d, g.successors(v).size());

    // In-tree toward vertex 0 by breadth-first search on the reverse graph.
    const Digraph rev = g.reversed();
    std::vector<State> toward(n, kNoState);
    toward[0] = 0;
    std::deque<Vertex> queue{0};
    while (!queue.empty()) {
        const Vertex v = queue.front();
        queue.pop_front();
        for (Vertex u : rev.successors(v)) {
            if (toward[u] == kNoState) {
                toward[u] = v;
                queue.push_back(u);
            }
        }
    }

    std::vector<std::string> states, letters;
    for (Vertex v = 0; v < n; ++v) states.push_back(g.name(v));
    std::vector<State> table;
    for (std::size_t i = 0; i < d; ++i) {
        letters.push_back("e_" + std::to_string(i));
        for (Vertex v = 0; v < n; ++v) {
            const auto& succ = g.successors(v);
            table.push_back(succ.empty() ? v : succ[std::min(i, succ.size() - 1)]);
        }
    }
    letters.push_back("s");
    table.insert(table.end(), toward.begin(), toward.end());

    CsOrepInstance out{Dfa(std::move(states), std::move(letters), std::move(table)), {}};
    for (auto [u, v] : inst.pairs) out.pairs.emplace_back(u, v);
    return out;
}

std::optional<LvtReduction> cs_orep_to_lvt(const Dfa& dfa, const std::vector<StatePair>& pairs) {
    ConstraintSpec{RelationKind::lt_ll_paths, pairs, PathVariant::literal}.validate(dfa.num_states());
    const Verdict sync = synchronizing_word(dfa, SyncMode::greedy);
    if (!sync.is_yes()) return std::nullopt;

    const Digraph g = underlying_digraph(dfa);
    const SccPartition parts = sccs(g);
    const auto sinks = sink_sccs(parts);
    // A synchronizing automaton has exactly one sink component.
    if (sinks.size() != 1) return std::nullopt;
    const std::vector<Vertex>& comp = parts.components[sinks.front()];
    std::vector<std::int64_t> local(dfa.num_states(), -1);
    for (std::size_t i = 0; i < comp.size(); ++i) local[comp[i]] = static_cast<std::int64_t>(i);

    LvtReduction red;
    red.instance.graph = g.induced(comp);
    red.component.assign(comp.begin(), comp.end());
    red.sync_word = sync.witness;
    red.anchor = step(dfa, 0, sync.witness);
    for (auto [p, q] : pairs) {
        if (local[q] < 0) return std::nullopt;
        const auto lq = static_cast<Vertex>(local[q]);
        if (local[p] >= 0) red.instance.pairs.emplace_back(static_cast<Vertex>(local[p]), lq);
        if (std::find(red.instance.must_visit.begin(), red.instance.must_visit.end(), lq) ==
            red.instance.must_visit.end()) {
            red.instance.must_visit.push_back(lq);
        }
    }
    std::sort(red.instance.must_visit.begin(), red.instance.must_visit.end());
    return red;
}

}  // namespace ltlsync
