#pragma once

// Seeded generators for test corpora.

#include <cstdint>
#include <random>
#include <vector>

#include "ltlsync/automata.hpp"
#include "ltlsync/ltlf.hpp"
#include "ltlsync/reductions.hpp"
#include "ltlsync/traversal.hpp"

namespace ltlsync::random {

using Rng = std::mt19937_64;

/// States named q0.., letters a, b, c, ... (then l<k>).
Dfa random_dfa(Rng& rng, std::size_t states, std::size_t letters);
/// Each transition removed with the given probability.
PartialDfa random_partial_dfa(Rng& rng, std::size_t states, std::size_t letters, double missing);
Acceptor random_acceptor(Rng& rng, std::size_t states, std::size_t letters);
/// Random formula of exactly the given node count over the atoms.
ltlf::Formula random_formula(Rng& rng, std::size_t nodes, const std::vector<std::string>& atoms);
/// Distinct irreflexive pairs; fewer when the state count is too small.
std::vector<StatePair> random_pairs(Rng& rng, std::size_t states, std::size_t count);
Word random_word(Rng& rng, std::size_t letters, std::size_t length);
/// Strongly connected: a Hamiltonian cycle plus random extra edges.
Digraph random_strongly_connected(Rng& rng, std::size_t vertices, double extra_edge);
CnfFormula random_cnf(Rng& rng, std::size_t vars, std::size_t clauses, std::size_t max_width);

inline std::size_t uniform(Rng& rng, std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

}  // namespace ltlsync::random
