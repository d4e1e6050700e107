#pragma once

#include <string>
#include <variant>

#include <json.hpp>

#include "ltlsync/automata.hpp"

namespace ltlsync {

/// Parsed DFA file. The automaton is a Dfa unless "partial" is true.
struct DfaDocument {
    PartialDfa automaton;
    bool partial = false;
    std::optional<State> initial;
    StateSet finals;
};

/// {"states":[...], "alphabet":[...], "partial":bool,
///  "transitions":{state:{letter:state}}, "initial":state?, "finals":[state]?}
/// Throws InputError on schema violations, including missing transitions
/// when "partial" is absent or false.
DfaDocument dfa_document_from_json(const nlohmann::json& j);
Dfa dfa_from_json(const nlohmann::json& j);
PartialDfa partial_dfa_from_json(const nlohmann::json& j);
/// Requires "initial"; "finals" defaults to empty.
Acceptor acceptor_from_json(const nlohmann::json& j);

nlohmann::json to_json(const PartialDfa& dfa, bool partial);
nlohmann::json to_json(const Dfa& dfa);
nlohmann::json to_json(const Acceptor& acc);

nlohmann::json read_json_file(const std::string& path);
void write_json_file(const std::string& path, const nlohmann::json& j);

}  // namespace ltlsync
