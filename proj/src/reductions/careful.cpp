#include "ltlsync/automata_json.hpp"
#include "ltlsync/errors.hpp"
#include "ltlsync/reductions.hpp"
#include "names.hpp"

namespace ltlsync {

std::string_view careful_variant_id(CarefulVariant v) noexcept {
    switch (v) {
        case CarefulVariant::orz: return "orz";
        case CarefulVariant::ore: return "ore";
        case CarefulVariant::cw_ore: return "cw-ore";
    }
    return "?";
}

CarefulVariant careful_variant_from_id(std::string_view id) {
    for (auto v : {CarefulVariant::orz, CarefulVariant::ore, CarefulVariant::cw_ore}) {
        if (careful_variant_id(v) == id) return v;
    }
    throw InputError("unknown careful-synchronization variant '" + std::string(id) + "'");
}

ReductionOutput careful_to_constrained(const PartialDfa& source, CarefulVariant variant) {
    const std::size_t n = source.num_states();
    const std::size_t k = source.num_letters();
    if (n == 0) throw InputError("source automaton has no states");
    const bool hats = variant != CarefulVariant::orz;
    const bool with_c = variant == CarefulVariant::cw_ore;

    State sink = 0;
    if (with_c) {
        const SccPartition parts = sccs(underlying_digraph(source));
        const auto sinks = sink_sccs(parts);
        if (sinks.size() != 1) throw InputError("not carefully synchronizable: multiple sink components");
        sink = parts.components[sinks.front()].front();
    }

    detail::NamePool states_pool, letters_pool;
    for (const auto& s : source.state_names()) states_pool.reserve(s);
    for (const auto& a : source.letter_names()) letters_pool.reserve(a);

    std::vector<std::string> states = source.state_names();
    const State minus = static_cast<State>(states.size());
    states.push_back(states_pool.fresh("q_minus"));
    const State r = static_cast<State>(states.size());
    states.push_back(states_pool.fresh("r"));
    nlohmann::json hat_names = nlohmann::json::object();
    const State first_hat = static_cast<State>(states.size());
    if (hats) {
        for (State q = 0; q <= r; ++q) {
            if (q == minus) continue;
            states.push_back(states_pool.fresh("hat_" + states[q]));
            hat_names[states[q]] = states.back();
        }
    }
    State plus1 = kNoState, plus2 = kNoState;
    if (with_c) {
        plus1 = static_cast<State>(states.size());
        states.push_back(states_pool.fresh("q_plus1"));
        plus2 = static_cast<State>(states.size());
        states.push_back(states_pool.fresh("q_plus2"));
    }
    std::vector<std::string> letters = source.letter_names();
    if (with_c) letters.push_back(letters_pool.fresh("c"));

    const std::size_t m = states.size();
    const State t = 0;
    std::vector<State> table(letters.size() * m, kNoState);
    for (Letter a = 0; a < k; ++a) {
        State* col = table.data() + a * m;
        for (State q = 0; q < n; ++q) col[q] = source.defined(q, a) ? source.next(q, a) : minus;
        col[minus] = col[r] = col[t];
        if (hats) {
            // hat copies follow the order Q, r
            for (State q = 0; q < n; ++q) col[first_hat + q] = q;
            col[first_hat + n] = r;
        }
        if (with_c) {
            col[plus1] = plus1;
            col[plus2] = plus2;
        }
    }
    if (with_c) {
        State* col = table.data() + k * m;
        for (State q = 0; q < m; ++q) col[q] = minus;
        col[sink] = plus1;
        col[plus1] = plus2;
        col[plus2] = plus2;
    }

    ReductionOutput out;
    out.kind = "careful";
    out.variant = std::string(careful_variant_id(variant));
    out.dfa = Dfa(states, letters, std::move(table));
    ConstraintSpec spec{variant == CarefulVariant::orz ? RelationKind::le_ll_sets : RelationKind::lt_ll_sets,
                        {{minus, r}},
                        PathVariant::literal};
    if (with_c) spec.pairs.emplace_back(plus1, plus2);
    out.problem = Problem::constrained(std::move(spec), !with_c);

    nlohmann::json src = to_json(source, true);
    out.fingerprint = detail::fnv1a(src.dump());
    out.pullback = {{"source", src}, {"t", states[t]}, {"q_minus", states[minus]}, {"r", states[r]}};
    if (hats) out.pullback["hats"] = hat_names;
    if (with_c) {
        out.pullback["c"] = letters.back();
        out.pullback["s"] = states[sink];
        out.pullback["q_plus1"] = states[plus1];
        out.pullback["q_plus2"] = states[plus2];
    }
    return out;
}

}  // namespace ltlsync
