#include <fstream>
#include <sstream>

#include "ltlsync/automata_json.hpp"
#include "ltlsync/errors.hpp"

namespace ltlsync {

using nlohmann::json;

namespace {

std::vector<std::string> string_list(const json& j, const char* key) {
    if (!j.contains(key) || !j.at(key).is_array()) {
        throw InputError(std::string("DFA JSON: '") + key + "' must be an array of strings");
    }
    std::vector<std::string> out;
    for (const auto& e : j.at(key)) {
        if (!e.is_string()) throw InputError(std::string("DFA JSON: '") + key + "' must contain strings");
        out.push_back(e.get<std::string>());
    }
    return out;
}

}  // namespace

DfaDocument dfa_document_from_json(const json& j) {
    if (!j.is_object()) throw InputError("DFA JSON: expected an object");
    auto states = string_list(j, "states");
    auto alphabet = string_list(j, "alphabet");
    const bool partial = j.value("partial", false);
    // Index names before building; the constructor re-validates uniqueness.
    PartialDfa names_only(states, alphabet, std::vector<State>(states.size() * alphabet.size(), kNoState));
    std::vector<State> table(states.size() * alphabet.size(), kNoState);
    if (j.contains("transitions")) {
        const auto& tr = j.at("transitions");
        if (!tr.is_object()) throw InputError("DFA JSON: 'transitions' must be an object");
        for (const auto& [from, row] : tr.items()) {
            const State q = names_only.state_index(from);
            if (!row.is_object()) throw InputError("DFA JSON: transitions of '" + from + "' must be an object");
            for (const auto& [letter, target] : row.items()) {
                const Letter a = names_only.letter_index(letter);
                if (!target.is_string()) throw InputError("DFA JSON: transition target must be a state name");
                table[a * states.size() + q] = names_only.state_index(target.get<std::string>());
            }
        }
    }
    if (!partial) {
        for (std::size_t i = 0; i < table.size(); ++i) {
            if (table[i] == kNoState) {
                throw InputError("DFA JSON: missing transition for state '" + states[i % states.size()] +
                                 "' on letter '" + alphabet[i / states.size()] + "' (set \"partial\": true)");
            }
        }
    }
    DfaDocument doc{PartialDfa(std::move(states), std::move(alphabet), std::move(table)), partial, std::nullopt, {}};
    doc.finals = StateSet(doc.automaton.num_states());
    if (j.contains("initial") && !j.at("initial").is_null()) {
        doc.initial = doc.automaton.state_index(j.at("initial").get<std::string>());
    }
    if (j.contains("finals")) {
        for (const auto& f : j.at("finals")) doc.finals.insert(doc.automaton.state_index(f.get<std::string>()));
    }
    return doc;
}

Dfa dfa_from_json(const json& j) {
    auto doc = dfa_document_from_json(j);
    if (!doc.automaton.is_complete()) throw InputError("DFA JSON: automaton is partial where a complete DFA is required");
    return Dfa(doc.automaton);
}

PartialDfa partial_dfa_from_json(const json& j) { return dfa_document_from_json(j).automaton; }

Acceptor acceptor_from_json(const json& j) {
    auto doc = dfa_document_from_json(j);
    if (!doc.initial) throw InputError("acceptor JSON: 'initial' is required");
    if (!doc.automaton.is_complete()) throw InputError("acceptor JSON: automaton must be complete");
    return Acceptor{Dfa(doc.automaton), *doc.initial, doc.finals};
}

json to_json(const PartialDfa& dfa, bool partial) {
    json tr = json::object();
    for (State q = 0; q < dfa.num_states(); ++q) {
        json row = json::object();
        for (Letter a = 0; a < dfa.num_letters(); ++a) {
            if (dfa.defined(q, a)) row[dfa.letter_name(a)] = dfa.state_name(dfa.next(q, a));
        }
        tr[dfa.state_name(q)] = std::move(row);
    }
    return json{{"states", dfa.state_names()},
                {"alphabet", dfa.letter_names()},
                {"partial", partial},
                {"transitions", std::move(tr)}};
}

json to_json(const Dfa& dfa) { return to_json(static_cast<const PartialDfa&>(dfa), false); }

json to_json(const Acceptor& acc) {
    json j = to_json(acc.dfa);
    j["initial"] = acc.dfa.state_name(acc.initial);
    json finals = json::array();
    acc.finals.for_each([&](State q) { finals.push_back(acc.dfa.state_name(q)); });
    j["finals"] = std::move(finals);
    return j;
}

json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open '" + path + "'");
    try {
        return json::parse(in);
    } catch (const json::exception& e) {
        throw InputError("'" + path + "': " + e.what());
    }
}

void write_json_file(const std::string& path, const json& j) {
    std::ofstream out(path);
    if (!out) throw InputError("cannot write '" + path + "'");
    out << j.dump(2) << '\n';
}

}  // namespace ltlsync
