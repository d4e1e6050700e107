#include <algorithm>

#include "ltlsync/engine.hpp"
#include "ltlsync/errors.hpp"
#include "search.hpp"

namespace ltlsync {

std::string_view problem_id(ProblemKind k) noexcept {
    switch (k) {
        case ProblemKind::mc_paths: return "mc-paths";
        case ProblemKind::mc_paths_sync: return "mc-paths-sync";
        case ProblemKind::mc_sets: return "mc-sets";
        case ProblemKind::mc_sets_sync: return "mc-sets-sync";
        case ProblemKind::cs: return "cs";
        case ProblemKind::cw: return "cw";
    }
    return "?";
}

ProblemKind problem_from_id(std::string_view id) {
    for (auto k : {ProblemKind::mc_paths, ProblemKind::mc_paths_sync, ProblemKind::mc_sets, ProblemKind::mc_sets_sync,
                   ProblemKind::cs, ProblemKind::cw}) {
        if (problem_id(k) == id) return k;
    }
    throw InputError("unknown problem '" + std::string(id) + "'");
}

Problem Problem::model_checking(ltlf::Formula f, bool paths, bool sync, std::optional<StateSet> start) {
    Problem p;
    p.kind = paths ? (sync ? ProblemKind::mc_paths_sync : ProblemKind::mc_paths)
                   : (sync ? ProblemKind::mc_sets_sync : ProblemKind::mc_sets);
    p.formula = std::move(f);
    p.start = std::move(start);
    return p;
}

Problem Problem::constrained(ConstraintSpec spec, bool sync, std::optional<StateSet> start) {
    Problem p;
    p.kind = sync ? ProblemKind::cs : ProblemKind::cw;
    p.constraint = std::move(spec);
    p.start = std::move(start);
    return p;
}

ltlf::Trace path_trace(const Dfa& dfa, State q, std::span<const Letter> w) {
    ltlf::Trace t;
    for (State s : path_of(dfa, q, w)) t.push_back(StateSet::singleton(dfa.num_states(), s));
    return t;
}

ltlf::Trace set_trace(const Dfa& dfa, const StateSet& start, std::span<const Letter> w) {
    ltlf::Trace t{start};
    for (Letter a : w) t.push_back(image(dfa, t.back(), a));
    return t;
}

namespace {

StateSet resolve_start(const Dfa& dfa, const std::optional<StateSet>& start) {
    if (!start) return dfa.all_states();
    if (start->width() != dfa.num_states()) throw InputError("start set does not match the automaton");
    if (start->empty()) throw InputError("start set must be non-empty");
    return *start;
}

void check_letters(const Dfa& dfa, std::span<const Letter> w) {
    for (Letter a : w) {
        if (a >= dfa.num_letters()) throw InputError("word uses a letter outside the alphabet");
    }
}

}  // namespace

bool verify_witness(const Dfa& dfa, const Problem& problem, std::span<const Letter> w) {
    check_letters(dfa, w);
    const StateSet s = resolve_start(dfa, problem.start);
    if (requires_sync(problem.kind) && step_set(dfa, s, w).count() != 1) return false;
    if (!is_model_checking(problem.kind)) {
        if (!problem.constraint) throw InputError("constrained problem without a constraint");
        return agrees(*problem.constraint, dfa, w, s);
    }
    if (!problem.formula) throw InputError("model-checking problem without a formula");
    const auto& props = dfa.state_names();
    if (!paths_semantics(problem.kind)) return ltlf::eval_trace(*problem.formula, set_trace(dfa, s, w), props);
    bool ok = true;
    s.for_each([&](State q) { ok = ok && ltlf::eval_trace(*problem.formula, path_trace(dfa, q, w), props); });
    return ok;
}

Verdict model_check(const Dfa& dfa, const ltlf::Formula& f, TraceMode mode, bool sync,
                    const std::optional<StateSet>& start, std::size_t cap) {
    const StateSet s = resolve_start(dfa, start);
    Verdict v;
    try {
        detail::FormulaMonitor monitor(f, dfa);
        v = mode == TraceMode::paths ? detail::search_paths(dfa, monitor, s, sync, cap)
                                     : detail::search_sets(dfa, monitor, s, sync, cap);
    } catch (const ResourceLimitError&) {
        return Verdict::limit();
    }
    if (v.is_yes() && !verify_witness(dfa, Problem::model_checking(f, mode == TraceMode::paths, sync, s), v.witness)) {
        throw VerificationError("model-checking witness failed independent verification");
    }
    return v;
}

Verdict solve(const Dfa& dfa, const Problem& problem, std::size_t cap) {
    if (is_model_checking(problem.kind)) {
        if (!problem.formula) throw InputError("model-checking problem without a formula");
        return model_check(dfa, *problem.formula,
                           paths_semantics(problem.kind) ? TraceMode::paths : TraceMode::sets,
                           requires_sync(problem.kind), problem.start, cap);
    }
    if (!problem.constraint) throw InputError("constrained problem without a constraint");
    return constrained_sync(dfa, *problem.constraint, requires_sync(problem.kind), problem.start, cap);
}

}  // namespace ltlsync
