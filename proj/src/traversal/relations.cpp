#include "ltlsync/errors.hpp"
#include "ltlsync/traversal.hpp"

namespace ltlsync {

std::string_view relation_id(RelationKind k) noexcept {
    switch (k) {
        case RelationKind::lt_ll_sets: return "lt-ll-sets";
        case RelationKind::le_ll_sets: return "le-ll-sets";
        case RelationKind::lt_ll_paths: return "lt-ll-paths";
        case RelationKind::le_ll_paths: return "le-ll-paths";
        case RelationKind::lt_lf_paths: return "lt-lf-paths";
    }
    return "?";
}

RelationKind relation_from_id(std::string_view id) {
    for (auto k : kAllRelations) {
        if (relation_id(k) == id) return k;
    }
    throw InputError("unknown relation '" + std::string(id) + "'");
}

std::string_view variant_id(PathVariant v) noexcept { return v == PathVariant::literal ? "literal" : "vacuous"; }

PathVariant variant_from_id(std::string_view id) {
    if (id == "literal") return PathVariant::literal;
    if (id == "vacuous") return PathVariant::vacuous;
    throw InputError("unknown variant '" + std::string(id) + "'");
}

void ConstraintSpec::validate(std::size_t num_states) const {
    for (auto [p, q] : pairs) {
        if (p >= num_states || q >= num_states) throw InputError("constraint pair refers to an unknown state");
        if (p == q) throw InputError("constraint relations must be irreflexive");
    }
}

bool relation_membership(RelationKind kind, const TraversalProfile& prof, State p, State q, PathVariant variant) {
    if (p == q) throw InputError("traversal relations are irreflexive");
    switch (kind) {
        case RelationKind::lt_ll_sets: return prof.last(p) < prof.last(q);
        case RelationKind::le_ll_sets: return prof.last(p) <= prof.last(q);
        default: break;
    }
    for (std::size_t r = 0; r < prof.starts().size(); ++r) {
        bool ok = false;
        switch (kind) {
            case RelationKind::lt_ll_paths: ok = prof.last(r, p) < prof.last(r, q); break;
            case RelationKind::le_ll_paths:
                ok = (variant == PathVariant::vacuous && prof.last(r, q) == ExtInt::neg_inf()) ||
                     prof.last(r, p) <= prof.last(r, q);
                break;
            case RelationKind::lt_lf_paths: ok = prof.last(r, p) < prof.first(r, q); break;
            default: break;
        }
        if (!ok) return false;
    }
    return true;
}

bool relation_membership(RelationKind kind, const Dfa& dfa, std::span<const Letter> w, State p, State q,
                         PathVariant variant, const std::optional<StateSet>& start) {
    const auto profile = traversal_profile(dfa, w, start ? *start : dfa.all_states());
    return relation_membership(kind, profile, p, q, variant);
}

bool agrees(const ConstraintSpec& spec, const Dfa& dfa, std::span<const Letter> w,
            const std::optional<StateSet>& start) {
    spec.validate(dfa.num_states());
    if (spec.pairs.empty()) return true;
    const auto profile = traversal_profile(dfa, w, start ? *start : dfa.all_states());
    for (auto [p, q] : spec.pairs) {
        if (!relation_membership(spec.kind, profile, p, q, spec.variant)) return false;
    }
    return true;
}

ltlf::Formula constraint_to_formula(const ConstraintSpec& spec, const PartialDfa& dfa) {
    using ltlf::Formula;
    if (spec.variant == PathVariant::vacuous && spec.kind == RelationKind::le_ll_paths) {
        throw InputError("the vacuous le-ll-paths variant has no LTLf translation");
    }
    spec.validate(dfa.num_states());
    std::vector<Formula> parts;
    for (auto [p, q] : spec.pairs) {
        const Formula fp = Formula::atom(dfa.state_name(p));
        const Formula fq = Formula::atom(dfa.state_name(q));
        switch (spec.kind) {
            case RelationKind::le_ll_sets:
            case RelationKind::le_ll_paths:
                parts.push_back(Formula::globally(Formula::implication(fp, Formula::finally(fq))));
                break;
            case RelationKind::lt_ll_sets:
            case RelationKind::lt_ll_paths:
                parts.push_back(Formula::finally(Formula::conjunction(fq, Formula::globally(Formula::negation(fp)))));
                break;
            case RelationKind::lt_lf_paths:
                parts.push_back(Formula::globally(Formula::implication(fq, Formula::globally(Formula::negation(fp)))));
                break;
        }
    }
    return ltlf::conjoin(parts);
}

}  // namespace ltlsync
