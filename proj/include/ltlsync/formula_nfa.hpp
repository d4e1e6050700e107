#pragma once

#include <cstdint>
#include <vector>

#include "ltlsync/ltlf.hpp"

namespace ltlsync::ltlf {

/// Finite automaton over labels (subsets of P) accepting exactly the traces
/// that satisfy a formula.
///
/// A state is a set of obligations: subformulas of the negation normal form
/// that must hold from the next position on. Reading a label progresses the
/// conjunction of the obligations into a disjunction of successor obligation
/// sets. A distinguished end state is entered instead when the label is the
/// last one of the trace and satisfies the obligations there; it has no
/// successors and is the only final state.
///
/// Transitions are computed on demand from a concrete label; the 2^P
/// alphabet is never enumerated. The object is immutable after construction
/// and safe to query concurrently.
class FormulaNfa {
public:
    /// Sorted obligation ids; {kEndMarker} is the end state.
    using StateKey = std::vector<std::uint32_t>;
    static constexpr std::uint32_t kEndMarker = 0xffffffffU;

    /// Throws InputError if f mentions atoms outside props.
    /// successors() throws ResourceLimitError when one transition would
    /// produce more than cap successor states.
    FormulaNfa(const Formula& f, Propositions props, std::size_t cap = 1 << 16);

    const Propositions& propositions() const noexcept { return props_; }
    std::size_t closure_size() const noexcept { return nodes_.size(); }

    std::vector<StateKey> initial_states() const { return {StateKey{root_}}; }
    static bool is_final(const StateKey& s) noexcept { return s.size() == 1 && s[0] == kEndMarker; }
    std::vector<StateKey> successors(const StateKey& s, const Label& label) const;

    /// Subset simulation over a non-empty trace.
    bool accepts(const Trace& trace) const;

private:
    enum class Kind : std::uint8_t { truth, falsity, literal, conj, disj, next, weak_next, until, release };
    struct Node {
        Kind kind;
        bool positive;  // literal polarity
        std::uint32_t prop;
        std::uint32_t a;
        std::uint32_t b;
        friend bool operator==(const Node&, const Node&) = default;
    };
    using Dnf = std::vector<StateKey>;

    std::uint32_t intern(Node n);
    std::uint32_t build(const Formula& f, bool negated);
    Dnf progress(std::uint32_t id, const Label& label) const;
    bool final_value(std::uint32_t id, const Label& label) const;
    Dnf combine_and(const Dnf& x, const Dnf& y) const;
    static void absorb(Dnf& d);

    Propositions props_;
    std::vector<Node> nodes_;
    std::uint32_t root_ = 0;
    std::size_t cap_;
};

}  // namespace ltlsync::ltlf
