#include "ltlsync/random.hpp"

#include <algorithm>
#include <string>

namespace ltlsync::random {

namespace {

std::vector<std::string> state_names(std::size_t n) {
    std::vector<std::string> out;
    for (std::size_t i = 0; i < n; ++i) out.push_back("q" + std::to_string(i));
    return out;
}

std::vector<std::string> letter_names(std::size_t k) {
    std::vector<std::string> out;
    for (std::size_t i = 0; i < k; ++i) {
        out.push_back(i < 26 ? std::string(1, static_cast<char>('a' + i)) : "l" + std::to_string(i));
    }
    return out;
}

bool coin(Rng& rng, double p) { return std::bernoulli_distribution(p)(rng); }

}  // namespace

Dfa random_dfa(Rng& rng, std::size_t states, std::size_t letters) {
    std::vector<State> table(states * letters);
    for (auto& t : table) t = static_cast<State>(uniform(rng, 0, states - 1));
    return Dfa(state_names(states), letter_names(letters), std::move(table));
}

PartialDfa random_partial_dfa(Rng& rng, std::size_t states, std::size_t letters, double missing) {
    std::vector<State> table(states * letters);
    for (auto& t : table) t = coin(rng, missing) ? kNoState : static_cast<State>(uniform(rng, 0, states - 1));
    return PartialDfa(state_names(states), letter_names(letters), std::move(table));
}

Acceptor random_acceptor(Rng& rng, std::size_t states, std::size_t letters) {
    Acceptor acc{random_dfa(rng, states, letters), 0, StateSet(states)};
    for (State q = 0; q < states; ++q) {
        if (coin(rng, 0.4)) acc.finals.insert(q);
    }
    return acc;
}

ltlf::Formula random_formula(Rng& rng, std::size_t nodes, const std::vector<std::string>& atoms) {
    using ltlf::Formula;
    if (nodes <= 1) {
        const std::size_t pick = uniform(rng, 0, atoms.size() + 1);
        if (pick == atoms.size()) return Formula::truth();
        if (pick == atoms.size() + 1) return Formula::falsity();
        return Formula::atom(atoms[pick]);
    }
    if (nodes == 2 || coin(rng, 0.4)) {
        const Formula sub = random_formula(rng, nodes - 1, atoms);
        switch (uniform(rng, 0, 3)) {
            case 0: return Formula::negation(sub);
            case 1: return Formula::next(sub);
            case 2: return Formula::finally(sub);
            default: return Formula::globally(sub);
        }
    }
    const std::size_t left = uniform(rng, 1, nodes - 2);
    const Formula a = random_formula(rng, left, atoms);
    const Formula b = random_formula(rng, nodes - 1 - left, atoms);
    switch (uniform(rng, 0, 3)) {
        case 0: return Formula::conjunction(a, b);
        case 1: return Formula::disjunction(a, b);
        case 2: return Formula::implication(a, b);
        default: return Formula::until(a, b);
    }
}

std::vector<StatePair> random_pairs(Rng& rng, std::size_t states, std::size_t count) {
    std::vector<StatePair> all;
    for (State p = 0; p < states; ++p) {
        for (State q = 0; q < states; ++q) {
            if (p != q) all.emplace_back(p, q);
        }
    }
    std::shuffle(all.begin(), all.end(), rng);
    all.resize(std::min(count, all.size()));
    return all;
}

Word random_word(Rng& rng, std::size_t letters, std::size_t length) {
    Word w(length);
    for (auto& a : w) a = static_cast<Letter>(uniform(rng, 0, letters - 1));
    return w;
}

Digraph random_strongly_connected(Rng& rng, std::size_t vertices, double extra_edge) {
    std::vector<std::string> names;
    for (std::size_t i = 0; i < vertices; ++i) names.push_back("v" + std::to_string(i));
    Digraph g(std::move(names));
    std::vector<Vertex> order(vertices);
    for (std::size_t i = 0; i < vertices; ++i) order[i] = static_cast<Vertex>(i);
    std::shuffle(order.begin(), order.end(), rng);
    for (std::size_t i = 0; i < vertices; ++i) g.add_edge(order[i], order[(i + 1) % vertices]);
    for (Vertex u = 0; u < vertices; ++u) {
        for (Vertex v = 0; v < vertices; ++v) {
            if (coin(rng, extra_edge)) g.add_edge(u, v);
        }
    }
    return g;
}

CnfFormula random_cnf(Rng& rng, std::size_t vars, std::size_t clauses, std::size_t max_width) {
    CnfFormula cnf{vars, {}};
    for (std::size_t j = 0; j < clauses; ++j) {
        std::vector<int> vs(vars);
        for (std::size_t i = 0; i < vars; ++i) vs[i] = static_cast<int>(i + 1);
        std::shuffle(vs.begin(), vs.end(), rng);
        vs.resize(uniform(rng, 1, std::min(max_width, vars)));
        for (int& v : vs) {
            if (coin(rng, 0.5)) v = -v;
        }
        cnf.clauses.push_back(std::move(vs));
    }
    return cnf;
}

}  // namespace ltlsync::random
