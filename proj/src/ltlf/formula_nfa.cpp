#include "ltlsync/formula_nfa.hpp"

#include <algorithm>
#include <set>
#include <unordered_map>

namespace ltlsync::ltlf {

FormulaNfa::FormulaNfa(const Formula& f, Propositions props, std::size_t cap) : props_(std::move(props)), cap_(cap) {
    root_ = build(f, false);
}

std::uint32_t FormulaNfa::intern(Node n) {
    for (std::uint32_t i = 0; i < nodes_.size(); ++i) {
        if (nodes_[i] == n) return i;
    }
    nodes_.push_back(n);
    return static_cast<std::uint32_t>(nodes_.size() - 1);
}

// Negation normal form: F a = true U a, G a = false R a, a -> b = !a | b,
// !X a = weak-next !a, !(a U b) = !a R !b.
std::uint32_t FormulaNfa::build(const Formula& f, bool negated) {
    auto binary = [&](Kind k, std::uint32_t a, std::uint32_t b) { return intern({k, false, 0, a, b}); };
    switch (f.op()) {
        case Op::truth: return intern({negated ? Kind::falsity : Kind::truth, false, 0, 0, 0});
        case Op::falsity: return intern({negated ? Kind::truth : Kind::falsity, false, 0, 0, 0});
        case Op::atom: {
            auto it = std::find(props_.begin(), props_.end(), f.name());
            if (it == props_.end()) throw InputError("atom '" + f.name() + "' is not a declared proposition");
            return intern({Kind::literal, !negated, static_cast<std::uint32_t>(it - props_.begin()), 0, 0});
        }
        case Op::negation: return build(f.operand(), !negated);
        case Op::conjunction:
            return binary(negated ? Kind::disj : Kind::conj, build(f.lhs(), negated), build(f.rhs(), negated));
        case Op::disjunction:
            return binary(negated ? Kind::conj : Kind::disj, build(f.lhs(), negated), build(f.rhs(), negated));
        case Op::implication:
            return binary(negated ? Kind::conj : Kind::disj, build(f.lhs(), !negated), build(f.rhs(), negated));
        case Op::next: return binary(negated ? Kind::weak_next : Kind::next, build(f.operand(), negated), 0);
        case Op::until:
            return binary(negated ? Kind::release : Kind::until, build(f.lhs(), negated), build(f.rhs(), negated));
        case Op::finally: {
            const std::uint32_t t = intern({negated ? Kind::falsity : Kind::truth, false, 0, 0, 0});
            return binary(negated ? Kind::release : Kind::until, t, build(f.operand(), negated));
        }
        case Op::globally: {
            const std::uint32_t t = intern({negated ? Kind::truth : Kind::falsity, false, 0, 0, 0});
            return binary(negated ? Kind::until : Kind::release, t, build(f.operand(), negated));
        }
    }
    return 0;
}

void FormulaNfa::absorb(Dnf& d) {
    std::sort(d.begin(), d.end(), [](const StateKey& x, const StateKey& y) {
        return x.size() != y.size() ? x.size() < y.size() : x < y;
    });
    d.erase(std::unique(d.begin(), d.end()), d.end());
    Dnf kept;
    for (auto& clause : d) {
        const bool subsumed = std::any_of(kept.begin(), kept.end(), [&](const StateKey& k) {
            return std::includes(clause.begin(), clause.end(), k.begin(), k.end());
        });
        if (!subsumed) kept.push_back(std::move(clause));
    }
    d = std::move(kept);
}

FormulaNfa::Dnf FormulaNfa::combine_and(const Dnf& x, const Dnf& y) const {
    Dnf out;
    for (const auto& a : x) {
        for (const auto& b : y) {
            StateKey merged;
            std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(merged));
            out.push_back(std::move(merged));
            if (out.size() > cap_) throw ResourceLimitError("formula automaton transition exceeds state cap");
        }
    }
    absorb(out);
    return out;
}

// Obligations for position i+1 given the label at a non-final position i.
FormulaNfa::Dnf FormulaNfa::progress(std::uint32_t id, const Label& label) const {
    const Node& n = nodes_[id];
    const Dnf yes{StateKey{}};
    const Dnf no{};
    switch (n.kind) {
        case Kind::truth: return yes;
        case Kind::falsity: return no;
        case Kind::literal: return label.contains(n.prop) == n.positive ? yes : no;
        case Kind::conj: return combine_and(progress(n.a, label), progress(n.b, label));
        case Kind::disj: {
            Dnf out = progress(n.a, label);
            Dnf rhs = progress(n.b, label);
            out.insert(out.end(), rhs.begin(), rhs.end());
            absorb(out);
            return out;
        }
        case Kind::next:
        case Kind::weak_next: {
            const Node& arg = nodes_[n.a];
            if (arg.kind == Kind::truth) return yes;
            if (arg.kind == Kind::falsity) return no;
            return Dnf{StateKey{n.a}};
        }
        case Kind::until: {
            Dnf out = progress(n.b, label);
            Dnf stay = combine_and(progress(n.a, label), Dnf{StateKey{id}});
            out.insert(out.end(), stay.begin(), stay.end());
            absorb(out);
            return out;
        }
        case Kind::release: {
            Dnf keep = progress(n.a, label);
            keep.push_back(StateKey{id});
            absorb(keep);
            return combine_and(progress(n.b, label), keep);
        }
    }
    return no;
}

// Truth at the final position of the trace.
bool FormulaNfa::final_value(std::uint32_t id, const Label& label) const {
    const Node& n = nodes_[id];
    switch (n.kind) {
        case Kind::truth: return true;
        case Kind::falsity: return false;
        case Kind::literal: return label.contains(n.prop) == n.positive;
        case Kind::conj: return final_value(n.a, label) && final_value(n.b, label);
        case Kind::disj: return final_value(n.a, label) || final_value(n.b, label);
        case Kind::next: return false;
        case Kind::weak_next: return true;
        case Kind::until:
        case Kind::release: return final_value(n.b, label);
    }
    return false;
}

std::vector<FormulaNfa::StateKey> FormulaNfa::successors(const StateKey& s, const Label& label) const {
    if (is_final(s)) return {};
    Dnf acc{StateKey{}};
    bool at_end = true;
    for (std::uint32_t ob : s) {
        acc = combine_and(acc, progress(ob, label));
        if (at_end) at_end = final_value(ob, label);
    }
    if (at_end) acc.push_back(StateKey{kEndMarker});
    return acc;
}

bool FormulaNfa::accepts(const Trace& trace) const {
    if (trace.empty()) throw InputError("LTLf traces must be non-empty");
    const auto init = initial_states();
    std::set<StateKey> current(init.begin(), init.end());
    for (const Label& label : trace) {
        std::set<StateKey> next;
        for (const auto& s : current) {
            for (auto& t : successors(s, label)) next.insert(std::move(t));
        }
        current = std::move(next);
    }
    return std::any_of(current.begin(), current.end(), [](const StateKey& s) { return is_final(s); });
}

}  // namespace ltlsync::ltlf
