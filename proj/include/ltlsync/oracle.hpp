#pragma once

#include <optional>
#include <span>
#include <string>

#include "ltlsync/automata.hpp"
#include "ltlsync/problem.hpp"

namespace ltlsync::oracle {

/// yes(word), or no-up-to(bound): nothing found among words of length <= bound.
struct OracleVerdict {
    bool found = false;
    Word witness;
    std::size_t bound = 0;
};

/// Direct check of the problem definition on one word. Trace semantics and
/// visit positions are evaluated here from scratch.
bool check_word(const Dfa& dfa, const Problem& problem, std::span<const Letter> w);

/// Scans all words of length 0..max_len in length-lexicographic order and
/// returns the first one passing check_word.
OracleVerdict enumerate_decide(const Dfa& dfa, const Problem& problem, std::size_t max_len);

struct CrossCheckReport {
    Verdict engine;
    OracleVerdict oracle;
    bool failure = false;
    /// The engine hit its cap; nothing is compared.
    bool engine_limited = false;
    std::string reason;
};

/// Runs the engine and the oracle. A failure is: the engine witness fails
/// check_word; the engine says no while the oracle has a word; the engine
/// witness is within the bound but the oracle has none; the two minimal
/// witness lengths differ.
CrossCheckReport cross_check(const Dfa& dfa, const Problem& problem, std::size_t max_len,
                             std::size_t cap = kDefaultProductCap);

}  // namespace ltlsync::oracle
