#include "search.hpp"

#include <algorithm>
#include <optional>

#include "ltlsync/errors.hpp"
#include "ltlsync/kernels.hpp"

namespace ltlsync::detail {

namespace {

std::vector<std::uint64_t> widen(const std::vector<std::uint32_t>& v) { return {v.begin(), v.end()}; }

template <class Node, class Hash, class Expand, class Goal>
Verdict bfs(Node init, std::size_t num_letters, Expand expand, Goal goal, std::size_t cap) {
    constexpr std::uint32_t kRoot = 0xffffffffU;
    std::unordered_map<Node, std::uint32_t, Hash> seen;
    std::vector<Node> nodes;
    std::vector<std::uint32_t> parent;
    std::vector<Letter> via;
    seen.emplace(init, 0);
    nodes.push_back(std::move(init));
    parent.push_back(kRoot);
    via.push_back(0);
    for (std::size_t head = 0; head < nodes.size(); ++head) {
        const Node cur = nodes[head];
        if (goal(cur)) {
            Word w;
            for (auto i = static_cast<std::uint32_t>(head); parent[i] != kRoot; i = parent[i]) w.push_back(via[i]);
            std::reverse(w.begin(), w.end());
            return Verdict::yes(std::move(w), {nodes.size()});
        }
        for (Letter a = 0; a < num_letters; ++a) {
            std::optional<Node> nx = expand(cur, a);
            if (!nx) continue;
            auto [it, fresh] = seen.emplace(*nx, static_cast<std::uint32_t>(nodes.size()));
            if (!fresh) continue;
            nodes.push_back(std::move(*nx));
            parent.push_back(static_cast<std::uint32_t>(head));
            via.push_back(a);
            if (nodes.size() > cap) return Verdict::limit({nodes.size()});
        }
    }
    return Verdict::no({nodes.size()});
}

struct SetNode {
    StateSet set;
    std::uint32_t macro;
    friend bool operator==(const SetNode&, const SetNode&) = default;
};
struct SetNodeHash {
    std::size_t operator()(const SetNode& n) const noexcept { return n.set.hash() * 31 + n.macro; }
};

}  // namespace

// --- formula monitor ----------------------------------------------------------

FormulaMonitor::FormulaMonitor(const ltlf::Formula& f, const PartialDfa& dfa)
    : nfa_(f, dfa.state_names()), width_(dfa.num_states()) {
    std::vector<std::uint32_t> init;
    for (auto& s : nfa_.initial_states()) init.push_back(intern_state(std::move(s)));
    initial_ = intern_macro(std::move(init));
}

std::uint32_t FormulaMonitor::intern_state(ltlf::FormulaNfa::StateKey key) {
    auto [it, fresh] = state_ids_.emplace(widen(key), static_cast<std::uint32_t>(states_.size()));
    if (fresh) states_.push_back(std::move(key));
    return it->second;
}

std::uint32_t FormulaMonitor::intern_macro(std::vector<std::uint32_t> members) {
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    auto [it, fresh] = macro_ids_.emplace(widen(members), static_cast<std::uint32_t>(macros_.size()));
    if (fresh) {
        const bool acc = std::any_of(members.begin(), members.end(),
                                     [&](std::uint32_t s) { return ltlf::FormulaNfa::is_final(states_[s]); });
        macros_.push_back(std::move(members));
        accepting_.push_back(acc);
    }
    return it->second;
}

std::uint32_t FormulaMonitor::compute(std::uint32_t m, const StateSet& label) {
    std::vector<std::uint32_t> out;
    const auto members = macros_[m];
    for (std::uint32_t s : members) {
        const auto key = states_[s];
        for (auto& t : nfa_.successors(key, label)) out.push_back(intern_state(std::move(t)));
    }
    return intern_macro(std::move(out));
}

std::uint32_t FormulaMonitor::step(std::uint32_t m, const StateSet& label) {
    std::vector<std::uint64_t> key{m};
    key.insert(key.end(), label.raw().begin(), label.raw().end());
    if (auto it = set_memo_.find(key); it != set_memo_.end()) return it->second;
    const std::uint32_t r = compute(m, label);
    set_memo_.emplace(std::move(key), r);
    return r;
}

std::uint32_t FormulaMonitor::step_state(std::uint32_t m, State q) {
    const std::uint64_t key = (std::uint64_t{m} << 32) | q;
    if (auto it = state_memo_.find(key); it != state_memo_.end()) return it->second;
    const std::uint32_t r = compute(m, StateSet::singleton(width_, q));
    state_memo_.emplace(key, r);
    return r;
}

// --- vacuous monitor ---------------------------------------------------------

VacuousMonitor::VacuousMonitor(std::vector<std::pair<State, State>> pairs) : pairs_(std::move(pairs)) {
    intern(std::vector<std::uint64_t>((2 * pairs_.size() + 63) / 64, 0));
}

std::uint32_t VacuousMonitor::intern(std::vector<std::uint64_t> bits) {
    auto [it, fresh] = ids_.emplace(bits, static_cast<std::uint32_t>(bits_.size()));
    if (fresh) {
        bool acc = true;
        for (std::size_t i = 0; i < pairs_.size(); ++i) {
            const bool seen_q = (bits[(2 * i) / 64] >> ((2 * i) % 64)) & 1U;
            const bool pending = (bits[(2 * i + 1) / 64] >> ((2 * i + 1) % 64)) & 1U;
            if (seen_q && pending) acc = false;
        }
        bits_.push_back(std::move(bits));
        accepting_.push_back(acc);
    }
    return it->second;
}

std::uint32_t VacuousMonitor::step_state(std::uint32_t m, State q) {
    const std::uint64_t key = (std::uint64_t{m} << 32) | q;
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    auto bits = bits_[m];
    auto set = [&](std::size_t b, bool v) {
        if (v)
            bits[b / 64] |= std::uint64_t{1} << (b % 64);
        else
            bits[b / 64] &= ~(std::uint64_t{1} << (b % 64));
    };
    for (std::size_t i = 0; i < pairs_.size(); ++i) {
        if (pairs_[i].second == q) {
            set(2 * i, true);
            set(2 * i + 1, false);
        } else if (pairs_[i].first == q) {
            set(2 * i + 1, true);
        }
    }
    const std::uint32_t r = intern(std::move(bits));
    memo_.emplace(key, r);
    return r;
}

std::uint32_t VacuousMonitor::step(std::uint32_t, const StateSet&) {
    throw InputError("the vacuous variant is defined on paths only");
}

// --- searches ------------------------------------------------------------------

Verdict search_paths(const Dfa& dfa, Monitor& monitor, const StateSet& start, bool sync, std::size_t cap) {
    using Node = std::vector<std::uint64_t>;
    auto pack = [](State q, std::uint32_t m) { return (std::uint64_t{q} << 32) | m; };
    Node init;
    bool dead = false;
    start.for_each([&](State q) {
        const std::uint32_t m = monitor.step_state(monitor.initial(), q);
        dead = dead || monitor.dead(m);
        init.push_back(pack(q, m));
    });
    if (dead) return Verdict::no({1});
    std::sort(init.begin(), init.end());

    std::vector<std::uint32_t> from, to;
    auto expand = [&](const Node& cur, Letter a) -> std::optional<Node> {
        from.resize(cur.size());
        to.resize(cur.size());
        for (std::size_t i = 0; i < cur.size(); ++i) from[i] = static_cast<std::uint32_t>(cur[i] >> 32);
        kernels::gather(dfa.column(a), from, to);
        Node next(cur.size());
        for (std::size_t i = 0; i < cur.size(); ++i) {
            const std::uint32_t m = monitor.step_state(static_cast<std::uint32_t>(cur[i]), to[i]);
            if (monitor.dead(m)) return std::nullopt;
            next[i] = pack(to[i], m);
        }
        std::sort(next.begin(), next.end());
        next.erase(std::unique(next.begin(), next.end()), next.end());
        return next;
    };
    auto goal = [&](const Node& cur) {
        for (std::uint64_t x : cur) {
            if (!monitor.accepting(static_cast<std::uint32_t>(x))) return false;
            if (sync && (x >> 32) != (cur.front() >> 32)) return false;
        }
        return !sync || !cur.empty();
    };
    return bfs<Node, U64VecHash>(std::move(init), dfa.num_letters(), expand, goal, cap);
}

Verdict search_sets(const Dfa& dfa, Monitor& monitor, const StateSet& start, bool sync, std::size_t cap) {
    SetNode init{start, monitor.step(monitor.initial(), start)};
    if (monitor.dead(init.macro)) return Verdict::no({1});
    auto expand = [&](const SetNode& cur, Letter a) -> std::optional<SetNode> {
        SetNode next{image(dfa, cur.set, a), 0};
        next.macro = monitor.step(cur.macro, next.set);
        if (monitor.dead(next.macro)) return std::nullopt;
        return next;
    };
    auto goal = [&](const SetNode& cur) {
        return monitor.accepting(cur.macro) && (!sync || cur.set.count() == 1);
    };
    return bfs<SetNode, SetNodeHash>(std::move(init), dfa.num_letters(), expand, goal, cap);
}

}  // namespace ltlsync::detail
