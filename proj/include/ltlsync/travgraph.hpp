#pragma once

#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

#include "ltlsync/automata.hpp"
#include "ltlsync/digraph.hpp"
#include "ltlsync/traversal.hpp"
#include "ltlsync/verdict.hpp"

namespace ltlsync {

using VertexPair = std::pair<Vertex, Vertex>;

/// Digraph with an irreflexive order relation on vertices and a set of
/// vertices every solution path must visit.
struct TraversalInstance {
    Digraph graph;
    std::vector<VertexPair> pairs;
    std::vector<Vertex> must_visit;

    /// Throws InputError on reflexive pairs or out-of-range vertices.
    void validate() const;
};

/// fvt: a path with first(u) < first(v) for every pair (u, v);
/// lvt: a path with last(u) < last(v). Unvisited vertices count as
/// +inf for first and -inf for last. Paths are non-empty vertex sequences.
enum class TraversalKind { fvt, lvt };
std::string_view traversal_kind_id(TraversalKind k) noexcept;
TraversalKind traversal_kind_from_id(std::string_view id);

/// Breadth-first over (vertex, visited keys); a yes carries a shortest path,
/// the lexicographically smallest among them. Limit when more than cap
/// search states are explored or more than 63 vertices are keys.
PathVerdict solve_fvt(const TraversalInstance& inst, std::size_t cap = kDefaultSubsetCap);
/// Reverses edges and pairs, solves fvt, reverses the path.
PathVerdict solve_lvt(const TraversalInstance& inst, std::size_t cap = kDefaultSubsetCap);
PathVerdict solve_traversal(const TraversalInstance& inst, TraversalKind kind, std::size_t cap = kDefaultSubsetCap);

/// Checks edges, the order constraints and the must-visit set.
bool verify_traversal_path(const TraversalInstance& inst, const VertexPath& path, TraversalKind kind);

// --- bridges to constrained synchronization ------------------------------------

struct CsOrepInstance {
    Dfa dfa;
    std::vector<StatePair> pairs;
};

/// For a strongly connected graph without must-visit vertices: letters e_0..
/// follow the sorted out-neighbours (the last one repeated for low degree),
/// letter s follows a shortest-path in-tree to vertex 0, which loops on s.
/// The lvt instance has a solution iff the automaton has a synchronizing
/// word agreeing with the lt-ll-paths pairs.
CsOrepInstance lvt_to_cs_orep(const TraversalInstance& inst);

/// The traversal part of deciding lt-ll-paths synchronization: a greedy
/// synchronizing word into the unique sink component, and an lvt instance on
/// that component whose must-visit set holds every second component of a
/// pair. nullopt when the automaton does not synchronize or some second
/// component lies outside the sink component; the answer is then no.
struct LvtReduction {
    TraversalInstance instance;
    /// Local vertex index to automaton state.
    std::vector<State> component;
    Word sync_word;
    /// Common state reached by sync_word.
    State anchor = 0;
};
std::optional<LvtReduction> cs_orep_to_lvt(const Dfa& dfa, const std::vector<StatePair>& pairs);

// --- JSON ----------------------------------------------------------------------

/// {"vertices": [names] | n, "edges": [[u, v], ...], "pairs": [[u, v], ...],
///  "must_visit": [v, ...]}; endpoints are names or indices.
TraversalInstance traversal_instance_from_json(const nlohmann::json& j);
nlohmann::json to_json(const TraversalInstance& inst);
nlohmann::json path_to_json(const TraversalInstance& inst, const VertexPath& path);

}  // namespace ltlsync
