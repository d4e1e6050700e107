#pragma once

#include <string>

#include "ltlsync/automata.hpp"
#include "ltlsync/automata_json.hpp"

namespace support {

// States p, q, r over a, b, c, d; r is a sink.
inline ltlsync::Dfa pqr() {
    return ltlsync::Dfa({"p", "q", "r"}, {"a", "b", "c", "d"},
                        // letter-major: a, b, c, d
                        {1, 0, 2, 0, 1, 2, 0, 2, 2, 2, 1, 2});
}

inline std::string data(const std::string& name) { return std::string(LTLSYNC_TEST_DATA) + "/" + name; }

inline ltlsync::Word word(const ltlsync::PartialDfa& dfa, const std::string& text) {
    return ltlsync::parse_word(dfa, text);
}

inline ltlsync::StateSet states(const ltlsync::PartialDfa& dfa, std::initializer_list<const char*> names) {
    ltlsync::StateSet s(dfa.num_states());
    for (const char* n : names) s.insert(dfa.state_index(n));
    return s;
}

}  // namespace support
