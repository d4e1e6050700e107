#include <algorithm>
#include <deque>
#include <unordered_map>

#include "ltlsync/automata.hpp"

namespace ltlsync {

namespace {

struct Node {
    std::size_t parent;
    Letter letter;
};

Word unwind(const std::vector<Node>& nodes, std::size_t at) {
    Word w;
    while (at != 0) {
        w.push_back(nodes[at].letter);
        at = nodes[at].parent;
    }
    std::reverse(w.begin(), w.end());
    return w;
}

// Breadth-first search over subsets. next(set, letter) returns the successor
// or nullopt when the move is forbidden.
template <class Next>
Verdict subset_bfs(const StateSet& start, std::size_t num_letters, std::size_t cap, Next&& next) {
    if (start.count() <= 1) return Verdict::yes({}, {1});
    std::unordered_map<StateSet, std::size_t> index;
    std::vector<StateSet> sets;
    std::vector<Node> nodes;
    index.emplace(start, 0);
    sets.push_back(start);
    nodes.push_back({0, 0});
    for (std::size_t head = 0; head < sets.size(); ++head) {
        for (Letter a = 0; a < num_letters; ++a) {
            std::optional<StateSet> succ = next(sets[head], a);
            if (!succ) continue;
            auto [it, inserted] = index.emplace(*succ, sets.size());
            if (!inserted) continue;
            nodes.push_back({head, a});
            sets.push_back(std::move(*succ));
            if (sets.back().count() == 1) return Verdict::yes(unwind(nodes, sets.size() - 1), {sets.size()});
            if (sets.size() > cap) return Verdict::limit({sets.size()});
        }
    }
    return Verdict::no({sets.size()});
}

// Shortest word merging p and q, searched on the pair automaton.
std::optional<Word> merge_pair(const Dfa& dfa, State p, State q) {
    const std::size_t n = dfa.num_states();
    auto key = [n](State a, State b) { return a < b ? a * n + b : b * n + a; };
    std::vector<std::size_t> parent(n * n, SIZE_MAX);
    std::vector<Letter> via(n * n, 0);
    std::deque<std::pair<State, State>> queue;
    parent[key(p, q)] = key(p, q);
    queue.emplace_back(p, q);
    while (!queue.empty()) {
        auto [a, b] = queue.front();
        queue.pop_front();
        for (Letter x = 0; x < dfa.num_letters(); ++x) {
            const State a2 = dfa.next(a, x);
            const State b2 = dfa.next(b, x);
            const std::size_t k = key(a2, b2);
            if (parent[k] != SIZE_MAX) continue;
            parent[k] = key(a, b);
            via[k] = x;
            if (a2 == b2) {
                Word w;
                for (std::size_t at = k; at != key(p, q); at = parent[at]) w.push_back(via[at]);
                std::reverse(w.begin(), w.end());
                return w;
            }
            queue.emplace_back(a2, b2);
        }
    }
    return std::nullopt;
}

Verdict greedy_sync(const Dfa& dfa) {
    StateSet cur = dfa.all_states();
    Word w;
    std::size_t merges = 0;
    while (cur.count() > 1) {
        const auto members = cur.members();
        auto u = merge_pair(dfa, members[0], members[1]);
        if (!u) return Verdict::no({merges});
        cur = step_set(dfa, cur, *u);
        w.insert(w.end(), u->begin(), u->end());
        ++merges;
    }
    return Verdict::yes(std::move(w), {merges});
}

}  // namespace

Verdict synchronizing_word(const Dfa& dfa, SyncMode mode, std::size_t cap) {
    if (mode == SyncMode::greedy) return greedy_sync(dfa);
    return subset_bfs(dfa.all_states(), dfa.num_letters(), cap,
                      [&](const StateSet& s, Letter a) -> std::optional<StateSet> { return image(dfa, s, a); });
}

Verdict carefully_synchronizing_word(const PartialDfa& pdfa, std::size_t cap) {
    return subset_bfs(pdfa.all_states(), pdfa.num_letters(), cap,
                      [&](const StateSet& s, Letter a) { return image(pdfa, s, a); });
}

Verdict word_between(const Dfa& dfa, State p, State q) {
    if (p == q) return Verdict::yes({}, {1});
    const std::size_t n = dfa.num_states();
    std::vector<std::size_t> parent(n, SIZE_MAX);
    std::vector<Letter> via(n, 0);
    std::deque<State> queue{p};
    parent[p] = p;
    while (!queue.empty()) {
        const State x = queue.front();
        queue.pop_front();
        for (Letter a = 0; a < dfa.num_letters(); ++a) {
            const State y = dfa.next(x, a);
            if (parent[y] != SIZE_MAX) continue;
            parent[y] = x;
            via[y] = a;
            if (y == q) {
                Word w;
                for (State at = q; at != p; at = static_cast<State>(parent[at])) w.push_back(via[at]);
                std::reverse(w.begin(), w.end());
                return Verdict::yes(std::move(w));
            }
            queue.push_back(y);
        }
    }
    return Verdict::no();
}

}  // namespace ltlsync
