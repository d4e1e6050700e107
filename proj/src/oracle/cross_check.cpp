#include "ltlsync/engine.hpp"
#include "ltlsync/oracle.hpp"

namespace ltlsync::oracle {

CrossCheckReport cross_check(const Dfa& dfa, const Problem& problem, std::size_t max_len, std::size_t cap) {
    CrossCheckReport r;
    r.engine = solve(dfa, problem, cap);
    r.oracle = enumerate_decide(dfa, problem, max_len);
    auto fail = [&](std::string why) {
        r.failure = true;
        r.reason = std::move(why);
        return r;
    };
    if (r.engine.outcome == Outcome::limit) {
        r.engine_limited = true;
        r.reason = "engine hit its cap";
        return r;
    }
    if (r.engine.is_yes()) {
        if (!check_word(dfa, problem, r.engine.witness)) return fail("engine witness fails the direct check");
        if (r.engine.witness.size() <= max_len && !r.oracle.found) {
            return fail("engine witness within the bound but the oracle found none");
        }
        if (r.oracle.found && r.oracle.witness.size() != r.engine.witness.size()) {
            return fail("minimal witness lengths differ: engine " + std::to_string(r.engine.witness.size()) +
                        ", oracle " + std::to_string(r.oracle.witness.size()));
        }
        return r;
    }
    if (r.oracle.found) return fail("engine says no but the oracle found a witness");
    return r;
}

}  // namespace ltlsync::oracle
