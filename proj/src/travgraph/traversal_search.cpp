#include <algorithm>
#include <unordered_map>

#include "ltlsync/errors.hpp"
#include "ltlsync/travgraph.hpp"

namespace ltlsync {

std::string_view traversal_kind_id(TraversalKind k) noexcept { return k == TraversalKind::fvt ? "fvt" : "lvt"; }

TraversalKind traversal_kind_from_id(std::string_view id) {
    if (id == "fvt") return TraversalKind::fvt;
    if (id == "lvt") return TraversalKind::lvt;
    throw InputError("unknown traversal kind '" + std::string(id) + "'");
}

void TraversalInstance::validate() const {
    const std::size_t n = graph.size();
    for (auto [u, v] : pairs) {
        if (u >= n || v >= n) throw InputError("traversal pair refers to an unknown vertex");
        if (u == v) throw InputError("traversal relations must be irreflexive");
    }
    for (Vertex v : must_visit) {
        if (v >= n) throw InputError("must-visit vertex out of range");
    }
}

PathVerdict solve_fvt(const TraversalInstance& inst, std::size_t cap) {
    inst.validate();
    const std::size_t n = inst.graph.size();
    std::vector<int> key_of(n, -1);
    int keys = 0;
    auto make_key = [&](Vertex v) {
        if (key_of[v] < 0) key_of[v] = keys++;
    };
    for (auto [u, v] : inst.pairs) make_key(u);
    for (Vertex v : inst.must_visit) make_key(v);
    if (keys > 63) return PathVerdict::limit();

    std::vector<std::uint64_t> lockers(n, 0);
    for (auto [u, v] : inst.pairs) lockers[v] |= std::uint64_t{1} << key_of[u];
    const std::uint64_t goal = keys == 0 ? 0 : (~std::uint64_t{0} >> (64 - keys));
    auto bit = [&](Vertex v) { return key_of[v] < 0 ? std::uint64_t{0} : std::uint64_t{1} << key_of[v]; };

    struct Node {
        Vertex v;
        std::uint64_t mask;
        std::uint32_t parent;
    };
    constexpr std::uint32_t kRoot = 0xffffffffU;
    std::vector<Node> nodes;
    std::unordered_map<std::uint64_t, std::uint32_t> seen;  // mask * n + v
    auto code = [&](Vertex v, std::uint64_t mask) { return mask * n + v; };
    auto push = [&](Vertex v, std::uint64_t mask, std::uint32_t parent) {
        if (seen.emplace(code(v, mask), static_cast<std::uint32_t>(nodes.size())).second) {
            nodes.push_back({v, mask, parent});
        }
    };
    // mask * n + v must not overflow.
    if (keys > 0 && n > (std::uint64_t{1} << (64 - keys))) return PathVerdict::limit();

    for (Vertex v = 0; v < n; ++v) {
        if (lockers[v] == 0) push(v, bit(v), kRoot);
    }
    for (std::size_t head = 0; head < nodes.size(); ++head) {
        const Node cur = nodes[head];
        if (cur.mask == goal) {
            VertexPath path;
            for (auto i = static_cast<std::uint32_t>(head); i != kRoot; i = nodes[i].parent) path.push_back(nodes[i].v);
            std::reverse(path.begin(), path.end());
            if (!verify_traversal_path(inst, path, TraversalKind::fvt)) {
                throw VerificationError("traversal path failed verification");
            }
            return PathVerdict::yes(std::move(path), {nodes.size()});
        }
        for (Vertex w : inst.graph.successors(cur.v)) {
            if ((lockers[w] & ~cur.mask) != 0) continue;
            push(w, cur.mask | bit(w), static_cast<std::uint32_t>(head));
            if (nodes.size() > cap) return PathVerdict::limit({nodes.size()});
        }
    }
    return PathVerdict::no({nodes.size()});
}

PathVerdict solve_lvt(const TraversalInstance& inst, std::size_t cap) {
    inst.validate();
    TraversalInstance rev{inst.graph.reversed(), {}, inst.must_visit};
    for (auto [u, v] : inst.pairs) rev.pairs.emplace_back(v, u);
    PathVerdict r = solve_fvt(rev, cap);
    if (r.is_yes()) {
        std::reverse(r.witness.begin(), r.witness.end());
        if (!verify_traversal_path(inst, r.witness, TraversalKind::lvt)) {
            throw VerificationError("traversal path failed verification");
        }
    }
    return r;
}

PathVerdict solve_traversal(const TraversalInstance& inst, TraversalKind kind, std::size_t cap) {
    return kind == TraversalKind::fvt ? solve_fvt(inst, cap) : solve_lvt(inst, cap);
}

bool verify_traversal_path(const TraversalInstance& inst, const VertexPath& path, TraversalKind kind) {
    const std::size_t n = inst.graph.size();
    if (path.empty()) return false;
    for (Vertex v : path) {
        if (v >= n) return false;
    }
    for (std::size_t i = 1; i < path.size(); ++i) {
        if (!inst.graph.has_edge(path[i - 1], path[i])) return false;
    }
    std::vector<ExtInt> first(n, ExtInt::pos_inf()), last(n, ExtInt::neg_inf());
    for (std::size_t i = 0; i < path.size(); ++i) {
        const ExtInt pos(static_cast<std::int64_t>(i));
        if (first[path[i]] == ExtInt::pos_inf()) first[path[i]] = pos;
        last[path[i]] = pos;
    }
    for (Vertex v : inst.must_visit) {
        if (first[v] == ExtInt::pos_inf()) return false;
    }
    for (auto [u, v] : inst.pairs) {
        const bool ok = kind == TraversalKind::fvt ? first[u] < first[v] : last[u] < last[v];
        if (!ok) return false;
    }
    return true;
}

}  // namespace ltlsync
