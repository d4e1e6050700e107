#include <algorithm>
#include "ltlsync/errors.hpp"
#include "ltlsync/travgraph.hpp"

namespace ltlsync {

namespace {

Vertex vertex_ref(const Digraph& g, const nlohmann::json& j) {
    if (j.is_number_unsigned()) {
        const auto v = j.get<std::uint64_t>();
        if (v >= g.size()) throw InputError("vertex index out of range");
        return static_cast<Vertex>(v);
    }
    if (j.is_string()) {
        const auto name = j.get<std::string>();
        const auto& names = g.names();
        for (Vertex v = 0; v < names.size(); ++v) {
            if (names[v] == name) return v;
        }
        throw InputError("unknown vertex '" + name + "'");
    }
    throw InputError("vertices are referenced by name or index");
}

std::vector<VertexPair> edge_list(const Digraph& g, const nlohmann::json& j, const char* what) {
    std::vector<VertexPair> out;
    if (j.is_null()) return out;
    if (!j.is_array()) throw InputError(std::string(what) + " must be an array");
    for (const auto& e : j) {
        if (!e.is_array() || e.size() != 2) throw InputError(std::string(what) + " entries must be [u, v]");
        out.emplace_back(vertex_ref(g, e[0]), vertex_ref(g, e[1]));
    }
    return out;
}

}  // namespace

TraversalInstance traversal_instance_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("vertices")) throw InputError("traversal instance needs \"vertices\"");
    TraversalInstance inst;
    const auto& vs = j.at("vertices");
    if (vs.is_number_unsigned()) {
        inst.graph = Digraph(vs.get<std::size_t>());
    } else if (vs.is_array()) {
        std::vector<std::string> names;
        for (const auto& v : vs) {
            if (!v.is_string()) throw InputError("vertex names must be strings");
            names.push_back(v.get<std::string>());
        }
        std::vector<std::string> sorted = names;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
            throw InputError("duplicate vertex name");
        }
        inst.graph = Digraph(std::move(names));
    } else {
        throw InputError("\"vertices\" must be a count or a list of names");
    }
    for (auto [u, v] : edge_list(inst.graph, j.value("edges", nlohmann::json()), "edges")) inst.graph.add_edge(u, v);
    inst.pairs = edge_list(inst.graph, j.value("pairs", nlohmann::json()), "pairs");
    if (j.contains("must_visit")) {
        for (const auto& v : j.at("must_visit")) inst.must_visit.push_back(vertex_ref(inst.graph, v));
    }
    inst.validate();
    return inst;
}

nlohmann::json to_json(const TraversalInstance& inst) {
    const Digraph& g = inst.graph;
    nlohmann::json j;
    auto ref = [&](Vertex v) { return g.names().empty() ? nlohmann::json(v) : nlohmann::json(g.name(v)); };
    if (g.names().empty())
        j["vertices"] = g.size();
    else
        j["vertices"] = g.names();
    j["edges"] = nlohmann::json::array();
    for (Vertex u = 0; u < g.size(); ++u) {
        for (Vertex v : g.successors(u)) j["edges"].push_back({ref(u), ref(v)});
    }
    j["pairs"] = nlohmann::json::array();
    for (auto [u, v] : inst.pairs) j["pairs"].push_back({ref(u), ref(v)});
    j["must_visit"] = nlohmann::json::array();
    for (Vertex v : inst.must_visit) j["must_visit"].push_back(ref(v));
    return j;
}

nlohmann::json path_to_json(const TraversalInstance& inst, const VertexPath& path) {
    nlohmann::json j = nlohmann::json::array();
    for (Vertex v : path) j.push_back(inst.graph.name(v));
    return j;
}

}  // namespace ltlsync
