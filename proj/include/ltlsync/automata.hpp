#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ltlsync/digraph.hpp"
#include "ltlsync/state_set.hpp"
#include "ltlsync/verdict.hpp"

namespace ltlsync {

inline constexpr State kNoState = 0xffffffffU;

/// Deterministic semi-automaton whose transition function may be partial.
/// States and letters are named externally and indexed densely in input order.
/// The table is letter-major: next(q, a) = table[a * num_states + q].
class PartialDfa {
public:
    PartialDfa() = default;
    PartialDfa(std::vector<std::string> states, std::vector<std::string> alphabet, std::vector<State> table);

    std::size_t num_states() const noexcept { return states_.size(); }
    std::size_t num_letters() const noexcept { return alphabet_.size(); }

    State next(State q, Letter a) const noexcept { return table_[a * states_.size() + q]; }
    bool defined(State q, Letter a) const noexcept { return next(q, a) != kNoState; }
    std::span<const State> column(Letter a) const noexcept {
        return {table_.data() + a * states_.size(), states_.size()};
    }

    const std::vector<std::string>& state_names() const noexcept { return states_; }
    const std::vector<std::string>& letter_names() const noexcept { return alphabet_; }
    const std::string& state_name(State q) const { return states_.at(q); }
    const std::string& letter_name(Letter a) const { return alphabet_.at(a); }
    const std::vector<State>& table() const noexcept { return table_; }

    std::optional<State> find_state(std::string_view name) const noexcept;
    std::optional<Letter> find_letter(std::string_view name) const noexcept;
    /// Throws InputError for unknown names.
    State state_index(std::string_view name) const;
    Letter letter_index(std::string_view name) const;

    bool is_complete() const noexcept;
    StateSet all_states() const { return StateSet::full(num_states()); }

private:
    std::vector<std::string> states_;
    std::vector<std::string> alphabet_;
    std::vector<State> table_;
};

/// Complete DFA: every (state, letter) pair has a target.
class Dfa : public PartialDfa {
public:
    Dfa() = default;
    /// Throws InputError if some transition is undefined.
    Dfa(std::vector<std::string> states, std::vector<std::string> alphabet, std::vector<State> table);
    explicit Dfa(const PartialDfa& complete);
};

struct Acceptor {
    Dfa dfa;
    State initial = 0;
    StateSet finals;

    bool accepts(std::span<const Letter> w) const;
};

// --- simulation ----------------------------------------------------------

StateSet image(const Dfa& dfa, const StateSet& s, Letter a);
/// nullopt when a is undefined on some member of s.
std::optional<StateSet> image(const PartialDfa& pdfa, const StateSet& s, Letter a);

StateSet step_set(const Dfa& dfa, const StateSet& s, std::span<const Letter> w);
/// nullopt ("undefined") when some letter is undefined on an active state.
std::optional<StateSet> step_set(const PartialDfa& pdfa, const StateSet& s, std::span<const Letter> w);

State step(const Dfa& dfa, State q, std::span<const Letter> w);

/// States q, q.w[1], ..., q.w; always |w| + 1 entries.
std::vector<State> path_of(const Dfa& dfa, State q, std::span<const Letter> w);

// --- synchronization -----------------------------------------------------

enum class SyncMode { greedy, shortest };

/// Greedy mode merges one pair at a time (polynomial, not length-optimal);
/// shortest mode runs breadth-first search on the power-set automaton and
/// reports limit once more than cap subsets are explored.
Verdict synchronizing_word(const Dfa& dfa, SyncMode mode, std::size_t cap = kDefaultSubsetCap);

/// Shortest word carefully synchronizing all states of pdfa.
Verdict carefully_synchronizing_word(const PartialDfa& pdfa, std::size_t cap = kDefaultSubsetCap);

/// Shortest word w with p.w = q.
Verdict word_between(const Dfa& dfa, State p, State q);

Digraph underlying_digraph(const PartialDfa& pdfa);

// --- words ---------------------------------------------------------------

/// Parses a word: whitespace- or comma-separated letter names, or, when the
/// text has no separators and every character is a letter name, one letter
/// per character. Throws InputError on unknown letters.
Word parse_word(const PartialDfa& dfa, std::string_view text);
std::string format_word(const PartialDfa& dfa, std::span<const Letter> w);

}  // namespace ltlsync
