#include <unordered_map>

#include "ltlsync/ltlf.hpp"

namespace ltlsync::ltlf {

namespace {

// Post-order node array; truth[node][position] filled from the last position back.
struct Evaluator {
    const Trace& trace;
    std::unordered_map<std::string, std::size_t> prop_index;
    std::vector<std::vector<char>> values;

    const std::vector<char>& eval(const Formula& f) {
        const std::size_t k = trace.size();
        std::vector<char> v(k, 0);
        switch (f.op()) {
            case Op::truth: v.assign(k, 1); break;
            case Op::falsity: break;
            case Op::atom: {
                auto it = prop_index.find(f.name());
                if (it == prop_index.end()) throw InputError("atom '" + f.name() + "' is not a declared proposition");
                for (std::size_t i = 0; i < k; ++i) v[i] = trace[i].contains(static_cast<State>(it->second));
                break;
            }
            case Op::negation: {
                const auto& a = eval(f.operand());
                for (std::size_t i = 0; i < k; ++i) v[i] = !a[i];
                break;
            }
            case Op::conjunction:
            case Op::disjunction:
            case Op::implication: {
                const auto a = eval(f.lhs());
                const auto& b = eval(f.rhs());
                for (std::size_t i = 0; i < k; ++i) {
                    v[i] = f.op() == Op::conjunction   ? (a[i] && b[i])
                           : f.op() == Op::disjunction ? (a[i] || b[i])
                                                       : (!a[i] || b[i]);
                }
                break;
            }
            case Op::next: {
                const auto& a = eval(f.operand());
                for (std::size_t i = 0; i + 1 < k; ++i) v[i] = a[i + 1];
                break;
            }
            case Op::until: {
                const auto a = eval(f.lhs());
                const auto& b = eval(f.rhs());
                for (std::size_t i = k; i-- > 0;) v[i] = b[i] || (a[i] && i + 1 < k && v[i + 1]);
                break;
            }
            case Op::finally: {
                const auto& a = eval(f.operand());
                for (std::size_t i = k; i-- > 0;) v[i] = a[i] || (i + 1 < k && v[i + 1]);
                break;
            }
            case Op::globally: {
                const auto& a = eval(f.operand());
                for (std::size_t i = k; i-- > 0;) v[i] = a[i] && (i + 1 == k || v[i + 1]);
                break;
            }
        }
        values.push_back(std::move(v));
        return values.back();
    }
};

}  // namespace

bool eval_trace(const Formula& f, const Trace& trace, const Propositions& props) {
    if (trace.empty()) throw InputError("LTLf traces must be non-empty");
    Evaluator ev{trace, {}, {}};
    for (std::size_t i = 0; i < props.size(); ++i) ev.prop_index.emplace(props[i], i);
    // Each eval returns a reference into `values`; reserve so it stays valid.
    ev.values.reserve(f.size() + 1);
    return ev.eval(f)[0] != 0;
}

}  // namespace ltlsync::ltlf
