#pragma once

#include <optional>
#include <string_view>

#include "ltlsync/ltlf.hpp"
#include "ltlsync/traversal.hpp"

namespace ltlsync {

/// The decision problems over a DFA: four model-checking forms and the
/// constrained forms with (cs) or without (cw) the synchronization demand.
enum class ProblemKind { mc_paths, mc_paths_sync, mc_sets, mc_sets_sync, cs, cw };

/// "mc-paths", "mc-paths-sync", "mc-sets", "mc-sets-sync", "cs", "cw".
std::string_view problem_id(ProblemKind k) noexcept;
ProblemKind problem_from_id(std::string_view id);

constexpr bool is_model_checking(ProblemKind k) noexcept { return k != ProblemKind::cs && k != ProblemKind::cw; }
constexpr bool requires_sync(ProblemKind k) noexcept {
    return k == ProblemKind::mc_paths_sync || k == ProblemKind::mc_sets_sync || k == ProblemKind::cs;
}
constexpr bool paths_semantics(ProblemKind k) noexcept {
    return k == ProblemKind::mc_paths || k == ProblemKind::mc_paths_sync;
}

struct Problem {
    ProblemKind kind = ProblemKind::mc_paths;
    /// Model-checking forms.
    std::optional<ltlf::Formula> formula;
    /// Constrained forms.
    std::optional<ConstraintSpec> constraint;
    /// Start set S; all states when absent.
    std::optional<StateSet> start;

    static Problem model_checking(ltlf::Formula f, bool paths, bool sync, std::optional<StateSet> start = {});
    static Problem constrained(ConstraintSpec spec, bool sync, std::optional<StateSet> start = {});
};

}  // namespace ltlsync
