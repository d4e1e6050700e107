// Deliberately naive: recursive trace semantics and explicit visit tables,
// sharing nothing with the search code it is used to check.

#include <algorithm>
#include <limits>

#include "ltlsync/errors.hpp"
#include "ltlsync/oracle.hpp"

namespace ltlsync::oracle {

namespace {

using Trace = std::vector<StateSet>;

bool holds(const ltlf::Formula& f, const Trace& t, std::size_t i, const PartialDfa& dfa) {
    using ltlf::Op;
    const std::size_t k = t.size() - 1;
    switch (f.op()) {
        case Op::truth: return true;
        case Op::falsity: return false;
        case Op::atom: return t[i].contains(dfa.state_index(f.name()));
        case Op::negation: return !holds(f.operand(), t, i, dfa);
        case Op::conjunction: return holds(f.lhs(), t, i, dfa) && holds(f.rhs(), t, i, dfa);
        case Op::disjunction: return holds(f.lhs(), t, i, dfa) || holds(f.rhs(), t, i, dfa);
        case Op::implication: return !holds(f.lhs(), t, i, dfa) || holds(f.rhs(), t, i, dfa);
        case Op::next: return i < k && holds(f.operand(), t, i + 1, dfa);
        case Op::until:
            for (std::size_t j = i; j <= k; ++j) {
                if (holds(f.rhs(), t, j, dfa)) return true;
                if (!holds(f.lhs(), t, j, dfa)) return false;
            }
            return false;
        case Op::finally:
            for (std::size_t j = i; j <= k; ++j) {
                if (holds(f.operand(), t, j, dfa)) return true;
            }
            return false;
        case Op::globally:
            for (std::size_t j = i; j <= k; ++j) {
                if (!holds(f.operand(), t, j, dfa)) return false;
            }
            return true;
    }
    return false;
}

constexpr std::int64_t kNever = std::numeric_limits<std::int64_t>::min();
constexpr std::int64_t kUnseen = std::numeric_limits<std::int64_t>::max();

struct Visits {
    std::vector<std::int64_t> first, last;
};

Visits visits(const Dfa& dfa, State start, std::span<const Letter> w) {
    Visits v{std::vector<std::int64_t>(dfa.num_states(), kUnseen), std::vector<std::int64_t>(dfa.num_states(), kNever)};
    State q = start;
    for (std::size_t i = 0; i <= w.size(); ++i) {
        const auto pos = static_cast<std::int64_t>(i);
        if (v.first[q] == kUnseen) v.first[q] = pos;
        v.last[q] = pos;
        if (i < w.size()) q = dfa.next(q, w[i]);
    }
    return v;
}

bool pair_holds(const ConstraintSpec& spec, const std::vector<Visits>& per_start, State p, State q) {
    switch (spec.kind) {
        case RelationKind::lt_ll_sets:
        case RelationKind::le_ll_sets: {
            std::int64_t lp = kNever, lq = kNever;
            for (const auto& v : per_start) {
                lp = std::max(lp, v.last[p]);
                lq = std::max(lq, v.last[q]);
            }
            return spec.kind == RelationKind::lt_ll_sets ? lp < lq : lp <= lq;
        }
        case RelationKind::lt_ll_paths:
            for (const auto& v : per_start) {
                if (!(v.last[p] < v.last[q])) return false;
            }
            return true;
        case RelationKind::le_ll_paths:
            for (const auto& v : per_start) {
                if (spec.variant == PathVariant::vacuous && v.last[q] == kNever) continue;
                if (!(v.last[p] <= v.last[q])) return false;
            }
            return true;
        case RelationKind::lt_lf_paths:
            for (const auto& v : per_start) {
                if (!(v.last[p] < v.first[q])) return false;
            }
            return true;
    }
    return false;
}

}  // namespace

bool check_word(const Dfa& dfa, const Problem& problem, std::span<const Letter> w) {
    const StateSet start = problem.start ? *problem.start : dfa.all_states();
    const std::vector<State> starts = start.members();

    if (requires_sync(problem.kind)) {
        StateSet s = start;
        for (Letter a : w) {
            StateSet next(dfa.num_states());
            s.for_each([&](State q) { next.insert(dfa.next(q, a)); });
            s = next;
        }
        if (s.count() != 1) return false;
    }

    if (is_model_checking(problem.kind)) {
        const ltlf::Formula& f = problem.formula.value();
        if (paths_semantics(problem.kind)) {
            for (State r : starts) {
                Trace t;
                State q = r;
                t.push_back(StateSet::singleton(dfa.num_states(), q));
                for (Letter a : w) {
                    q = dfa.next(q, a);
                    t.push_back(StateSet::singleton(dfa.num_states(), q));
                }
                if (!holds(f, t, 0, dfa)) return false;
            }
            return true;
        }
        Trace t{start};
        for (Letter a : w) {
            StateSet next(dfa.num_states());
            t.back().for_each([&](State q) { next.insert(dfa.next(q, a)); });
            t.push_back(next);
        }
        return holds(f, t, 0, dfa);
    }

    const ConstraintSpec& spec = problem.constraint.value();
    std::vector<Visits> per_start;
    for (State r : starts) per_start.push_back(visits(dfa, r, w));
    for (auto [p, q] : spec.pairs) {
        if (!pair_holds(spec, per_start, p, q)) return false;
    }
    return true;
}

OracleVerdict enumerate_decide(const Dfa& dfa, const Problem& problem, std::size_t max_len) {
    const std::size_t k = dfa.num_letters();
    for (std::size_t len = 0; len <= max_len; ++len) {
        Word w(len, 0);
        while (true) {
            if (check_word(dfa, problem, w)) return {true, w, max_len};
            // odometer, last letter fastest
            std::size_t i = len;
            while (i > 0 && w[i - 1] + 1 == k) w[--i] = 0;
            if (i == 0) break;
            ++w[i - 1];
        }
        if (k == 0) break;
    }
    return {false, {}, max_len};
}

}  // namespace ltlsync::oracle
