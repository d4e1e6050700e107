#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace ltlsync {

using Vertex = std::uint32_t;

/// Directed graph on vertices 0..n-1 with optional names. Parallel edges
/// collapse; successor lists are kept sorted.
class Digraph {
public:
    Digraph() = default;
    explicit Digraph(std::size_t n);
    explicit Digraph(std::vector<std::string> names);

    std::size_t size() const noexcept { return succ_.size(); }
    void add_edge(Vertex u, Vertex v);
    bool has_edge(Vertex u, Vertex v) const;
    const std::vector<Vertex>& successors(Vertex u) const { return succ_.at(u); }
    std::size_t num_edges() const noexcept;

    const std::vector<std::string>& names() const noexcept { return names_; }
    /// Name if present, otherwise the decimal index.
    std::string name(Vertex v) const;

    Digraph reversed() const;
    /// Subgraph induced by the given vertices, renumbered in the given order.
    Digraph induced(const std::vector<Vertex>& vertices) const;

    friend bool operator==(const Digraph&, const Digraph&) = default;

private:
    std::vector<std::string> names_;
    std::vector<std::vector<Vertex>> succ_;
};

struct SccPartition {
    /// Components ordered by their smallest vertex; members sorted.
    std::vector<std::vector<Vertex>> components;
    std::vector<std::uint32_t> component_of;
    std::vector<bool> is_sink;
};

SccPartition sccs(const Digraph& g);
/// Indices (into components) of the sink components.
std::vector<std::size_t> sink_sccs(const SccPartition& p);
std::vector<std::size_t> sink_sccs(const Digraph& g);
bool strongly_connected(const Digraph& g);

}  // namespace ltlsync
