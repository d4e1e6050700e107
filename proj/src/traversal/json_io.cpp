#include "ltlsync/errors.hpp"
#include "ltlsync/traversal.hpp"

namespace ltlsync {

using nlohmann::json;

std::vector<StatePair> pairs_from_json(const json& j, const PartialDfa& dfa) {
    if (!j.is_array()) throw InputError("pairs must be an array of [p, q] arrays");
    std::vector<StatePair> out;
    for (const auto& e : j) {
        if (!e.is_array() || e.size() != 2 || !e[0].is_string() || !e[1].is_string()) {
            throw InputError("each pair must be a two-element array of state names");
        }
        out.emplace_back(dfa.state_index(e[0].get<std::string>()), dfa.state_index(e[1].get<std::string>()));
    }
    return out;
}

ConstraintSpec constraint_from_json(const json& j, const PartialDfa& dfa) {
    if (!j.is_object()) throw InputError("constraint JSON: expected an object");
    ConstraintSpec spec;
    spec.kind = relation_from_id(j.at("relation").get<std::string>());
    spec.pairs = pairs_from_json(j.value("pairs", json::array()), dfa);
    spec.variant = variant_from_id(j.value("variant", std::string("literal")));
    spec.validate(dfa.num_states());
    return spec;
}

json to_json(const ConstraintSpec& spec, const PartialDfa& dfa) {
    json pairs = json::array();
    for (auto [p, q] : spec.pairs) pairs.push_back({dfa.state_name(p), dfa.state_name(q)});
    return json{{"relation", relation_id(spec.kind)}, {"pairs", std::move(pairs)}, {"variant", variant_id(spec.variant)}};
}

}  // namespace ltlsync
