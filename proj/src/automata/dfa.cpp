#include <algorithm>
#include <cctype>
#include <unordered_set>

#include "ltlsync/automata.hpp"
#include "ltlsync/errors.hpp"
#include "ltlsync/kernels.hpp"

namespace ltlsync {

namespace {

void require_unique(const std::vector<std::string>& names, std::string_view what) {
    std::unordered_set<std::string_view> seen;
    for (const auto& n : names) {
        if (n.empty()) throw InputError(std::string(what) + " names must be non-empty");
        if (!seen.insert(n).second) throw InputError("duplicate " + std::string(what) + " name '" + n + "'");
    }
}

}  // namespace

PartialDfa::PartialDfa(std::vector<std::string> states, std::vector<std::string> alphabet,
                       std::vector<State> table)
    : states_(std::move(states)), alphabet_(std::move(alphabet)), table_(std::move(table)) {
    require_unique(states_, "state");
    require_unique(alphabet_, "letter");
    if (table_.size() != states_.size() * alphabet_.size()) {
        throw InputError("transition table has wrong size");
    }
    for (State t : table_) {
        if (t != kNoState && t >= states_.size()) throw InputError("transition target out of range");
    }
}

std::optional<State> PartialDfa::find_state(std::string_view name) const noexcept {
    auto it = std::find(states_.begin(), states_.end(), name);
    if (it == states_.end()) return std::nullopt;
    return static_cast<State>(it - states_.begin());
}

std::optional<Letter> PartialDfa::find_letter(std::string_view name) const noexcept {
    auto it = std::find(alphabet_.begin(), alphabet_.end(), name);
    if (it == alphabet_.end()) return std::nullopt;
    return static_cast<Letter>(it - alphabet_.begin());
}

State PartialDfa::state_index(std::string_view name) const {
    if (auto q = find_state(name)) return *q;
    throw InputError("unknown state '" + std::string(name) + "'");
}

Letter PartialDfa::letter_index(std::string_view name) const {
    if (auto a = find_letter(name)) return *a;
    throw InputError("unknown letter '" + std::string(name) + "'");
}

bool PartialDfa::is_complete() const noexcept {
    return std::find(table_.begin(), table_.end(), kNoState) == table_.end();
}

Dfa::Dfa(std::vector<std::string> states, std::vector<std::string> alphabet, std::vector<State> table)
    : PartialDfa(std::move(states), std::move(alphabet), std::move(table)) {
    if (!is_complete()) throw InputError("DFA transition function is not total");
}

Dfa::Dfa(const PartialDfa& complete) : PartialDfa(complete) {
    if (!is_complete()) throw InputError("DFA transition function is not total");
}

bool Acceptor::accepts(std::span<const Letter> w) const { return finals.contains(step(dfa, initial, w)); }

StateSet image(const Dfa& dfa, const StateSet& s, Letter a) {
    const auto from = s.members();
    std::vector<State> to(from.size());
    kernels::gather(dfa.column(a), from, to);
    StateSet out(dfa.num_states());
    for (State q : to) out.insert(q);
    return out;
}

std::optional<StateSet> image(const PartialDfa& pdfa, const StateSet& s, Letter a) {
    const auto from = s.members();
    std::vector<State> to(from.size());
    kernels::gather(pdfa.column(a), from, to);
    if (kernels::contains(to, kNoState)) return std::nullopt;
    StateSet out(pdfa.num_states());
    for (State q : to) out.insert(q);
    return out;
}

StateSet step_set(const Dfa& dfa, const StateSet& s, std::span<const Letter> w) {
    StateSet cur = s;
    for (Letter a : w) cur = image(dfa, cur, a);
    return cur;
}

std::optional<StateSet> step_set(const PartialDfa& pdfa, const StateSet& s, std::span<const Letter> w) {
    StateSet cur = s;
    for (Letter a : w) {
        auto next = image(pdfa, cur, a);
        if (!next) return std::nullopt;
        cur = std::move(*next);
    }
    return cur;
}

State step(const Dfa& dfa, State q, std::span<const Letter> w) {
    for (Letter a : w) q = dfa.next(q, a);
    return q;
}

std::vector<State> path_of(const Dfa& dfa, State q, std::span<const Letter> w) {
    std::vector<State> path;
    path.reserve(w.size() + 1);
    path.push_back(q);
    for (Letter a : w) {
        q = dfa.next(q, a);
        path.push_back(q);
    }
    return path;
}

Digraph underlying_digraph(const PartialDfa& pdfa) {
    Digraph g(pdfa.state_names());
    for (State q = 0; q < pdfa.num_states(); ++q) {
        for (Letter a = 0; a < pdfa.num_letters(); ++a) {
            if (pdfa.defined(q, a)) g.add_edge(q, pdfa.next(q, a));
        }
    }
    return g;
}

Word parse_word(const PartialDfa& dfa, std::string_view text) {
    Word w;
    const bool separated = std::any_of(text.begin(), text.end(), [](char c) {
        return std::isspace(static_cast<unsigned char>(c)) || c == ',';
    });
    if (!separated && !text.empty() && !dfa.find_letter(text)) {
        for (char c : text) w.push_back(dfa.letter_index(std::string_view(&c, 1)));
        return w;
    }
    std::size_t i = 0;
    while (i < text.size()) {
        while (i < text.size() && (std::isspace(static_cast<unsigned char>(text[i])) || text[i] == ',')) ++i;
        std::size_t j = i;
        while (j < text.size() && !std::isspace(static_cast<unsigned char>(text[j])) && text[j] != ',') ++j;
        if (j > i) w.push_back(dfa.letter_index(text.substr(i, j - i)));
        i = j;
    }
    return w;
}

std::string format_word(const PartialDfa& dfa, std::span<const Letter> w) {
    std::string out;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i != 0) out += ' ';
        out += dfa.letter_name(w[i]);
    }
    return out;
}

}  // namespace ltlsync
