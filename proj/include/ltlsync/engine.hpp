#pragma once

#include <optional>
#include <span>
#include <vector>

#include "ltlsync/automata.hpp"
#include "ltlsync/ltlf.hpp"
#include "ltlsync/problem.hpp"
#include "ltlsync/traversal.hpp"

namespace ltlsync {

enum class TraceMode { paths, sets };

/// Decides whether some word w makes every path from S (paths mode), or the
/// single power-set path from S (sets mode), satisfy f; with sync, w must
/// also satisfy |S.w| = 1. Breadth-first over the implicit product, so a yes
/// carries a shortest witness, possibly empty. Exceeding cap explored product
/// states gives limit. Every witness is re-verified before it is returned.
Verdict model_check(const Dfa& dfa, const ltlf::Formula& f, TraceMode mode, bool sync,
                    const std::optional<StateSet>& start = std::nullopt, std::size_t cap = kDefaultProductCap);

/// Some word w agrees with the constraint (and synchronizes S when
/// require_sync). Literal constraints go through their LTLf translation;
/// the vacuous le-ll-paths variant uses a direct per-path obligation monitor.
Verdict constrained_sync(const Dfa& dfa, const ConstraintSpec& spec, bool require_sync,
                         const std::optional<StateSet>& start = std::nullopt,
                         std::size_t cap = kDefaultProductCap);

/// Dispatches on the problem kind.
Verdict solve(const Dfa& dfa, const Problem& problem, std::size_t cap = kDefaultProductCap);

/// Independent re-check of a candidate witness for a problem: re-simulates
/// the traces and evaluates the formula directly, or checks agreement.
bool verify_witness(const Dfa& dfa, const Problem& problem, std::span<const Letter> w);

/// Synchronization under lt-ll-paths constraints through the sink-component
/// decomposition: synchronize into the unique sink component, then solve a
/// last-visits traversal there. The composed witness is not length-minimal.
Verdict solve_cs_orep_np(const Dfa& dfa, const std::vector<StatePair>& pairs, std::size_t cap = kDefaultSubsetCap);

/// Path and set traces used for verification.
ltlf::Trace path_trace(const Dfa& dfa, State q, std::span<const Letter> w);
ltlf::Trace set_trace(const Dfa& dfa, const StateSet& start, std::span<const Letter> w);

}  // namespace ltlsync
