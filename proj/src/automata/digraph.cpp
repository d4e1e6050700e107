#include <algorithm>
#include <stdexcept>

#include "ltlsync/digraph.hpp"

namespace ltlsync {

Digraph::Digraph(std::size_t n) : succ_(n) {}

Digraph::Digraph(std::vector<std::string> names) : names_(std::move(names)), succ_(names_.size()) {}

void Digraph::add_edge(Vertex u, Vertex v) {
    if (u >= size() || v >= size()) throw std::out_of_range("digraph edge endpoint out of range");
    auto& s = succ_[u];
    auto it = std::lower_bound(s.begin(), s.end(), v);
    if (it == s.end() || *it != v) s.insert(it, v);
}

bool Digraph::has_edge(Vertex u, Vertex v) const {
    const auto& s = succ_.at(u);
    return std::binary_search(s.begin(), s.end(), v);
}

std::size_t Digraph::num_edges() const noexcept {
    std::size_t n = 0;
    for (const auto& s : succ_) n += s.size();
    return n;
}

std::string Digraph::name(Vertex v) const {
    if (v < names_.size()) return names_[v];
    return std::to_string(v);
}

Digraph Digraph::reversed() const {
    Digraph r = names_.empty() ? Digraph(size()) : Digraph(names_);
    for (Vertex u = 0; u < size(); ++u) {
        for (Vertex v : succ_[u]) r.add_edge(v, u);
    }
    return r;
}

Digraph Digraph::induced(const std::vector<Vertex>& vertices) const {
    std::vector<std::string> names;
    if (!names_.empty()) {
        for (Vertex v : vertices) names.push_back(names_.at(v));
    }
    Digraph out = names.empty() ? Digraph(vertices.size()) : Digraph(std::move(names));
    std::vector<std::int64_t> pos(size(), -1);
    for (std::size_t i = 0; i < vertices.size(); ++i) pos[vertices[i]] = static_cast<std::int64_t>(i);
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        for (Vertex v : succ_.at(vertices[i])) {
            if (pos[v] >= 0) out.add_edge(static_cast<Vertex>(i), static_cast<Vertex>(pos[v]));
        }
    }
    return out;
}

// Iterative Tarjan.
SccPartition sccs(const Digraph& g) {
    const std::size_t n = g.size();
    constexpr std::uint32_t kUnvisited = 0xffffffffU;
    std::vector<std::uint32_t> index(n, kUnvisited), low(n, 0);
    std::vector<bool> on_stack(n, false);
    std::vector<Vertex> stack;
    std::vector<std::vector<Vertex>> comps;
    std::uint32_t counter = 0;

    struct Frame {
        Vertex v;
        std::size_t next_child;
    };
    std::vector<Frame> call;
    for (Vertex root = 0; root < n; ++root) {
        if (index[root] != kUnvisited) continue;
        call.push_back({root, 0});
        index[root] = low[root] = counter++;
        stack.push_back(root);
        on_stack[root] = true;
        while (!call.empty()) {
            Frame& f = call.back();
            const auto& succ = g.successors(f.v);
            if (f.next_child < succ.size()) {
                const Vertex w = succ[f.next_child++];
                if (index[w] == kUnvisited) {
                    index[w] = low[w] = counter++;
                    stack.push_back(w);
                    on_stack[w] = true;
                    call.push_back({w, 0});
                } else if (on_stack[w]) {
                    low[f.v] = std::min(low[f.v], index[w]);
                }
                continue;
            }
            const Vertex v = f.v;
            call.pop_back();
            if (!call.empty()) low[call.back().v] = std::min(low[call.back().v], low[v]);
            if (low[v] == index[v]) {
                std::vector<Vertex> comp;
                Vertex w;
                do {
                    w = stack.back();
                    stack.pop_back();
                    on_stack[w] = false;
                    comp.push_back(w);
                } while (w != v);
                std::sort(comp.begin(), comp.end());
                comps.push_back(std::move(comp));
            }
        }
    }

    std::sort(comps.begin(), comps.end(), [](const auto& a, const auto& b) { return a.front() < b.front(); });
    SccPartition p;
    p.component_of.assign(n, 0);
    for (std::size_t c = 0; c < comps.size(); ++c) {
        for (Vertex v : comps[c]) p.component_of[v] = static_cast<std::uint32_t>(c);
    }
    p.is_sink.assign(comps.size(), true);
    for (Vertex u = 0; u < n; ++u) {
        for (Vertex v : g.successors(u)) {
            if (p.component_of[u] != p.component_of[v]) p.is_sink[p.component_of[u]] = false;
        }
    }
    p.components = std::move(comps);
    return p;
}

std::vector<std::size_t> sink_sccs(const SccPartition& p) {
    std::vector<std::size_t> out;
    for (std::size_t c = 0; c < p.components.size(); ++c) {
        if (p.is_sink[c]) out.push_back(c);
    }
    return out;
}

std::vector<std::size_t> sink_sccs(const Digraph& g) { return sink_sccs(sccs(g)); }

bool strongly_connected(const Digraph& g) { return g.size() > 0 && sccs(g).components.size() == 1; }

}  // namespace ltlsync
