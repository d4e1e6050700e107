#include "ltlsync/engine.hpp"
#include "ltlsync/errors.hpp"
#include "ltlsync/travgraph.hpp"

namespace ltlsync {

Verdict solve_cs_orep_np(const Dfa& dfa, const std::vector<StatePair>& pairs, std::size_t cap) {
    const auto red = cs_orep_to_lvt(dfa, pairs);
    if (!red) return Verdict::no();
    const PathVerdict path = solve_lvt(red->instance, cap);
    if (!path.is_yes()) return path.outcome == Outcome::limit ? Verdict::limit(path.stats) : Verdict::no(path.stats);

    Word w = red->sync_word;
    const State entry = red->component[path.witness.front()];
    const Verdict bridge = word_between(dfa, red->anchor, entry);
    if (!bridge.is_yes()) throw VerificationError("sink component is not strongly connected");
    w.insert(w.end(), bridge.witness.begin(), bridge.witness.end());
    for (std::size_t i = 1; i < path.witness.size(); ++i) {
        const State u = red->component[path.witness[i - 1]];
        const State v = red->component[path.witness[i]];
        Letter a = 0;
        while (a < dfa.num_letters() && dfa.next(u, a) != v) ++a;
        if (a == dfa.num_letters()) throw VerificationError("traversal path uses a missing edge");
        w.push_back(a);
    }

    const ConstraintSpec spec{RelationKind::lt_ll_paths, pairs, PathVariant::literal};
    if (!verify_witness(dfa, Problem::constrained(spec, true), w)) {
        throw VerificationError("composed witness fails the constraint");
    }
    return Verdict::yes(std::move(w), path.stats);
}

}  // namespace ltlsync
