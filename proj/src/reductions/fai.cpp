#include "ltlsync/automata_json.hpp"
#include "ltlsync/errors.hpp"
#include "ltlsync/reductions.hpp"
#include "names.hpp"

namespace ltlsync {

std::string_view fai_variant_id(FaiVariant v) noexcept {
    switch (v) {
        case FaiVariant::orzp: return "orzp";
        case FaiVariant::ordp: return "ordp";
        case FaiVariant::cw_orzp: return "cw-orzp";
        case FaiVariant::mc_f_fixture: return "mc-F-fixture";
        case FaiVariant::mc_g_fixture: return "mc-G-fixture";
    }
    return "?";
}

FaiVariant fai_variant_from_id(std::string_view id) {
    for (auto v : {FaiVariant::orzp, FaiVariant::ordp, FaiVariant::cw_orzp, FaiVariant::mc_f_fixture,
                   FaiVariant::mc_g_fixture}) {
        if (fai_variant_id(v) == id) return v;
    }
    throw InputError("unknown intersection variant '" + std::string(id) + "'");
}

ReductionOutput fai_to_constrained(const std::vector<Acceptor>& acceptors, FaiVariant variant) {
    if (acceptors.empty()) throw InputError("need at least one acceptor");
    const PartialDfa& first = acceptors.front().dfa;
    const std::size_t k = first.num_letters();
    // letter_map[i][a] = letter of acceptor i named like letter a of the first
    std::vector<std::vector<Letter>> letter_map;
    for (const auto& acc : acceptors) {
        if (acc.dfa.num_letters() != k) throw InputError("acceptors must share one alphabet");
        std::vector<Letter> map;
        for (Letter a = 0; a < k; ++a) {
            const auto b = acc.dfa.find_letter(first.letter_name(a));
            if (!b) throw InputError("acceptors must share one alphabet");
            map.push_back(*b);
        }
        letter_map.push_back(std::move(map));
    }

    detail::NamePool state_pool, letter_pool;
    std::vector<std::string> states;
    std::vector<State> offset;
    for (std::size_t i = 0; i < acceptors.size(); ++i) {
        offset.push_back(static_cast<State>(states.size()));
        for (const auto& q : acceptors[i].dfa.state_names()) {
            states.push_back(state_pool.fresh(q + "_" + std::to_string(i + 1)));
        }
    }
    const State y = static_cast<State>(states.size());
    states.push_back(state_pool.fresh("y"));
    const State no = y + 1;
    states.push_back(state_pool.fresh("n"));
    const State f = y + 2;
    states.push_back(state_pool.fresh("f"));

    for (const auto& a : first.letter_names()) {
        if (a != "r" && a != "t") letter_pool.reserve(a);
    }
    letter_pool.reserve("r");
    letter_pool.reserve("t");
    std::vector<std::string> letters;
    nlohmann::json renamed = nlohmann::json::object();
    for (const auto& a : first.letter_names()) {
        letters.push_back(a == "r" || a == "t" ? letter_pool.fresh(a + "_0") : a);
        if (letters.back() != a) renamed[letters.back()] = a;
    }
    const Letter lr = static_cast<Letter>(k);
    const Letter lt = lr + 1;
    letters.push_back("r");
    letters.push_back("t");

    const std::size_t m = states.size();
    std::vector<State> table(letters.size() * m);
    for (Letter a = 0; a < letters.size(); ++a) {
        for (State q = 0; q < m; ++q) table[a * m + q] = q;
    }
    for (std::size_t i = 0; i < acceptors.size(); ++i) {
        const Acceptor& acc = acceptors[i];
        for (State q = 0; q < acc.dfa.num_states(); ++q) {
            const State g = offset[i] + q;
            for (Letter a = 0; a < k; ++a) table[a * m + g] = offset[i] + acc.dfa.next(q, letter_map[i][a]);
            table[lr * m + g] = offset[i] + acc.initial;
            table[lt * m + g] = acc.finals.contains(q) ? y : no;
        }
    }
    table[lt * m + y] = f;
    table[lt * m + no] = f;

    ReductionOutput out;
    out.kind = "fai";
    out.variant = std::string(fai_variant_id(variant));
    out.dfa = Dfa(states, letters, std::move(table));

    std::vector<StatePair> r1, r2;
    for (std::size_t i = 0; i < acceptors.size(); ++i) {
        r1.emplace_back(offset[i] + acceptors[i].initial, y);
        r2.emplace_back(no, offset[i] + acceptors[i].initial);
    }
    using ltlf::Formula;
    const Formula fy = Formula::atom(states[y]), fn = Formula::atom(states[no]), ff = Formula::atom(states[f]);
    switch (variant) {
        case FaiVariant::orzp:
            out.problem = Problem::constrained({RelationKind::le_ll_paths, r1, PathVariant::literal}, true);
            break;
        case FaiVariant::ordp:
            out.problem = Problem::constrained({RelationKind::lt_lf_paths, r2, PathVariant::literal}, true);
            break;
        case FaiVariant::cw_orzp: {
            auto pairs = r1;
            for (State p = 0; p < m; ++p) {
                if (p != f) pairs.emplace_back(p, f);
            }
            out.problem = Problem::constrained({RelationKind::le_ll_paths, pairs, PathVariant::literal}, false);
            break;
        }
        case FaiVariant::mc_f_fixture:
            out.problem = Problem::model_checking(
                Formula::conjunction(Formula::finally(ff),
                                     Formula::implication(Formula::conjunction(Formula::negation(fn),
                                                                               Formula::negation(ff)),
                                                          Formula::finally(fy))),
                true, false);
            break;
        case FaiVariant::mc_g_fixture:
            out.problem = Problem::model_checking(
                Formula::implication(Formula::negation(fn), Formula::globally(Formula::negation(fn))), true, true);
            break;
    }

    nlohmann::json sources = nlohmann::json::array();
    for (const auto& acc : acceptors) sources.push_back(to_json(acc));
    out.fingerprint = detail::fnv1a(sources.dump());
    out.pullback = {{"sources", sources}, {"y", states[y]},        {"n", states[no]}, {"f", states[f]},
                    {"r", "r"},           {"t", "t"},              {"renamed_letters", renamed}};
    return out;
}

}  // namespace ltlsync
