#pragma once

// Breadth-first search over the product of the DFA with a trace monitor.

#include <cstdint>
#include <memory>
#include <unordered_map>
#include <vector>

#include "ltlsync/automata.hpp"
#include "ltlsync/formula_nfa.hpp"

namespace ltlsync::detail {

struct U64VecHash {
    std::size_t operator()(const std::vector<std::uint64_t>& v) const noexcept {
        std::uint64_t h = 0x9e3779b97f4a7c15ULL ^ v.size();
        for (std::uint64_t x : v) {
            h ^= x + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
            h *= 0xff51afd7ed558ccdULL;
        }
        return static_cast<std::size_t>(h ^ (h >> 33));
    }
};

/// Deterministic monitor over labels read one position at a time. State 0..n
/// are interned ids; initial() is the state before the first label.
class Monitor {
public:
    virtual ~Monitor() = default;
    virtual std::uint32_t initial() const = 0;
    virtual std::uint32_t step(std::uint32_t m, const StateSet& label) = 0;
    virtual std::uint32_t step_state(std::uint32_t m, State q) = 0;
    virtual bool accepting(std::uint32_t m) const = 0;
    /// No continuation can reach acceptance.
    virtual bool dead(std::uint32_t m) const = 0;
};

/// Subset construction over the formula automaton, built lazily.
class FormulaMonitor final : public Monitor {
public:
    FormulaMonitor(const ltlf::Formula& f, const PartialDfa& dfa);

    std::uint32_t initial() const override { return initial_; }
    std::uint32_t step(std::uint32_t m, const StateSet& label) override;
    std::uint32_t step_state(std::uint32_t m, State q) override;
    bool accepting(std::uint32_t m) const override { return accepting_[m]; }
    bool dead(std::uint32_t m) const override { return macros_[m].empty(); }

private:
    std::uint32_t intern_state(ltlf::FormulaNfa::StateKey key);
    std::uint32_t intern_macro(std::vector<std::uint32_t> members);
    std::uint32_t compute(std::uint32_t m, const StateSet& label);

    ltlf::FormulaNfa nfa_;
    std::size_t width_;
    std::unordered_map<std::vector<std::uint64_t>, std::uint32_t, U64VecHash> state_ids_;
    std::vector<ltlf::FormulaNfa::StateKey> states_;
    std::unordered_map<std::vector<std::uint64_t>, std::uint32_t, U64VecHash> macro_ids_;
    std::vector<std::vector<std::uint32_t>> macros_;
    std::vector<bool> accepting_;
    std::unordered_map<std::vector<std::uint64_t>, std::uint32_t, U64VecHash> set_memo_;
    std::unordered_map<std::uint64_t, std::uint32_t> state_memo_;
    std::uint32_t initial_ = 0;
};

/// Per path, for each pair (p, q): whether q was seen and whether p was
/// visited after the last q. Accepts when no pair has both.
class VacuousMonitor final : public Monitor {
public:
    explicit VacuousMonitor(std::vector<std::pair<State, State>> pairs);

    std::uint32_t initial() const override { return 0; }
    std::uint32_t step(std::uint32_t m, const StateSet& label) override;
    std::uint32_t step_state(std::uint32_t m, State q) override;
    bool accepting(std::uint32_t m) const override { return accepting_[m]; }
    bool dead(std::uint32_t) const override { return false; }

private:
    std::uint32_t intern(std::vector<std::uint64_t> bits);

    std::vector<std::pair<State, State>> pairs_;
    std::unordered_map<std::vector<std::uint64_t>, std::uint32_t, U64VecHash> ids_;
    std::vector<std::vector<std::uint64_t>> bits_;
    std::vector<bool> accepting_;
    std::unordered_map<std::uint64_t, std::uint32_t> memo_;
};

/// Each path from start carries its own monitor state.
Verdict search_paths(const Dfa& dfa, Monitor& monitor, const StateSet& start, bool sync, std::size_t cap);
/// One monitor run over the power-set trace from start.
Verdict search_sets(const Dfa& dfa, Monitor& monitor, const StateSet& start, bool sync, std::size_t cap);

}  // namespace ltlsync::detail
