#include "ltlsync/engine.hpp"
#include "ltlsync/errors.hpp"
#include "search.hpp"

namespace ltlsync {

Verdict constrained_sync(const Dfa& dfa, const ConstraintSpec& spec, bool require_sync,
                         const std::optional<StateSet>& start, std::size_t cap) {
    spec.validate(dfa.num_states());
    Verdict v;
    if (spec.kind == RelationKind::le_ll_paths && spec.variant == PathVariant::vacuous) {
        const StateSet s = start ? *start : dfa.all_states();
        if (s.width() != dfa.num_states() || s.empty()) throw InputError("start set must be a non-empty state set");
        detail::VacuousMonitor monitor(spec.pairs);
        v = detail::search_paths(dfa, monitor, s, require_sync, cap);
    } else {
        const TraceMode mode = on_paths(spec.kind) ? TraceMode::paths : TraceMode::sets;
        v = model_check(dfa, constraint_to_formula(spec, dfa), mode, require_sync, start, cap);
    }
    if (v.is_yes() && !verify_witness(dfa, Problem::constrained(spec, require_sync, start), v.witness)) {
        throw VerificationError("constrained witness does not agree with the constraint");
    }
    return v;
}

}  // namespace ltlsync
