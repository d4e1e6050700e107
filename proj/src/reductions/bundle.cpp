#include "ltlsync/automata_json.hpp"
#include "ltlsync/errors.hpp"
#include "ltlsync/reductions.hpp"

namespace ltlsync {

nlohmann::json problem_to_json(const Problem& p, const Dfa& dfa) {
    nlohmann::json j{{"problem", problem_id(p.kind)}};
    if (p.formula) j["formula"] = ltlf::to_string(*p.formula);
    if (p.constraint) j["constraint"] = to_json(*p.constraint, dfa);
    if (p.start) {
        j["subset"] = nlohmann::json::array();
        p.start->for_each([&](State q) { j["subset"].push_back(dfa.state_name(q)); });
    }
    return j;
}

Problem problem_from_bundle(const nlohmann::json& j, const Dfa& dfa) {
    if (!j.is_object() || !j.contains("problem")) throw InputError("instance needs a \"problem\" field");
    Problem p;
    p.kind = problem_from_id(j.at("problem").get<std::string>());
    if (is_model_checking(p.kind)) {
        if (!j.contains("formula") || !j.at("formula").is_string()) throw InputError("instance needs a \"formula\"");
        p.formula = ltlf::parse(j.at("formula").get<std::string>());
    } else {
        if (!j.contains("constraint")) throw InputError("instance needs a \"constraint\"");
        p.constraint = constraint_from_json(j.at("constraint"), dfa);
    }
    if (j.contains("subset")) {
        StateSet s(dfa.num_states());
        for (const auto& q : j.at("subset")) s.insert(dfa.state_index(q.get<std::string>()));
        p.start = s;
    }
    return p;
}

nlohmann::json to_json(const ReductionOutput& out) {
    nlohmann::json j;
    if (out.dfa && out.problem) {
        j = problem_to_json(*out.problem, *out.dfa);
        j["dfa"] = to_json(*out.dfa);
    } else if (out.traversal) {
        j["problem"] = "fvt";
        j["digraph"] = to_json(*out.traversal);
    }
    j["reduction"] = {{"kind", out.kind}, {"variant", out.variant}, {"fingerprint", out.fingerprint}};
    j["pullback"] = out.pullback;
    return j;
}

ReductionOutput reduction_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("reduction")) throw InputError("not a reduction bundle");
    ReductionOutput out;
    const auto& meta = j.at("reduction");
    out.kind = meta.at("kind").get<std::string>();
    out.variant = meta.value("variant", "");
    out.fingerprint = meta.value("fingerprint", "");
    out.pullback = j.value("pullback", nlohmann::json::object());
    if (j.contains("dfa")) {
        out.dfa = dfa_from_json(j.at("dfa"));
        out.problem = problem_from_bundle(j, *out.dfa);
    }
    if (j.contains("digraph")) out.traversal = traversal_instance_from_json(j.at("digraph"));
    return out;
}

}  // namespace ltlsync
