// Acceptance suite: one line per criterion, nonzero exit if any fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <deque>
#include <functional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "ltlsync/engine.hpp"
#include "ltlsync/errors.hpp"
#include "ltlsync/formula_nfa.hpp"
#include "ltlsync/oracle.hpp"
#include "ltlsync/random.hpp"
#include "ltlsync/reductions.hpp"

using namespace ltlsync;

namespace {

struct Check {
    bool pass = true;
    std::ostringstream detail;
    void fail(const std::string& why) {
        if (pass) detail << "first failure: " << why << "; ";
        pass = false;
    }
};

using Clock = std::chrono::steady_clock;

bool run(int number, const char* name, double budget_s, const std::function<void(Check&)>& body) {
    Check out;
    const auto t0 = Clock::now();
    try {
        body(out);
    } catch (const std::exception& e) {
        out.fail(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(Clock::now() - t0).count();
    if (secs > budget_s) out.fail("runtime over budget");
    std::printf("criterion %d (%s): %s  [%s%.2fs of %.0fs]\n", number, name, out.pass ? "PASS" : "FAIL",
                out.detail.str().c_str(), secs, budget_s);
    std::fflush(stdout);
    return out.pass;
}

std::size_t pick(random::Rng& rng, std::size_t lo, std::size_t hi) { return random::uniform(rng, lo, hi); }

Dfa sample() {
    return Dfa({"p", "q", "r"}, {"a", "b", "c", "d"}, {1, 0, 2, 0, 1, 2, 0, 2, 2, 2, 1, 2});
}

// ---------------------------------------------------------------------------

void relation_table(Check& out) {
    const Dfa d = sample();
    const std::vector<std::string> words{"a", "b", "c d", "d c"};
    struct Column {
        RelationKind kind;
        PathVariant variant;
        std::vector<bool> want;
    };
    const std::vector<Column> columns{
        {RelationKind::lt_ll_sets, PathVariant::literal, {false, false, false, true}},
        {RelationKind::le_ll_sets, PathVariant::literal, {true, true, false, true}},
        {RelationKind::lt_ll_paths, PathVariant::literal, {false, false, false, false}},
        {RelationKind::lt_lf_paths, PathVariant::literal, {false, true, true, true}},
        {RelationKind::le_ll_paths, PathVariant::vacuous, {false, true, true, true}},
        // the literal reading differs from the table in this column
        {RelationKind::le_ll_paths, PathVariant::literal, {false, false, false, false}},
    };
    int cells = 0;
    for (const auto& c : columns) {
        for (std::size_t i = 0; i < words.size(); ++i) {
            const Word w = parse_word(d, words[i]);
            if (relation_membership(c.kind, d, w, 0, 1, c.variant) != c.want[i]) {
                out.fail(std::string(relation_id(c.kind)) + "/" + std::string(variant_id(c.variant)) + " on " +
                         words[i]);
            }
            ++cells;
        }
    }
    out.detail << cells << " cells; ";
}

void constrained_equivalence(Check& out) {
    random::Rng rng(2001);
    std::size_t runs = 0, limited = 0, yes = 0, oracle_found = 0;
    for (int i = 0; i < 200; ++i) {
        const std::size_t n = pick(rng, 2, 4);
        const Dfa d = random::random_dfa(rng, n, pick(rng, 1, 3));
        const auto pairs = random::random_pairs(rng, n, pick(rng, 1, 2));
        for (RelationKind k : kAllRelations) {
            for (bool sync : {false, true}) {
                const Problem p = Problem::constrained({k, pairs}, sync);
                const auto r = oracle::cross_check(d, p, 8);
                ++runs;
                if (r.engine_limited) {
                    ++limited;
                    continue;
                }
                if (r.failure) out.fail(r.reason);
                if (r.engine.is_yes()) {
                    ++yes;
                    if (!verify_witness(d, p, r.engine.witness)) out.fail("witness does not re-verify");
                }
                if (r.oracle.found) ++oracle_found;
            }
        }
    }
    out.detail << runs << " runs, " << yes << " yes, " << oracle_found << " oracle witnesses, " << limited
               << " engine-limited; ";
}

ltlf::Trace random_trace(random::Rng& rng, std::size_t props, std::size_t len) {
    ltlf::Trace t;
    for (std::size_t i = 0; i < len; ++i) {
        ltlf::Label l(props);
        for (std::size_t p = 0; p < props; ++p) {
            if (pick(rng, 0, 1)) l.insert(static_cast<State>(p));
        }
        t.push_back(l);
    }
    return t;
}

void model_checking_equivalence(Check& out) {
    random::Rng rng(3001);
    std::size_t runs = 0, limited = 0;
    for (int i = 0; i < 200; ++i) {
        const std::size_t n = pick(rng, 1, 4);
        const Dfa d = random::random_dfa(rng, n, pick(rng, 1, 3));
        std::vector<std::string> names = d.state_names();
        std::shuffle(names.begin(), names.end(), rng);
        names.resize(pick(rng, 1, std::min<std::size_t>(3, n)));
        const ltlf::Formula f = random::random_formula(rng, pick(rng, 1, 8), names);
        for (ProblemKind kind :
             {ProblemKind::mc_paths, ProblemKind::mc_paths_sync, ProblemKind::mc_sets, ProblemKind::mc_sets_sync}) {
            const Problem p = Problem::model_checking(f, paths_semantics(kind), requires_sync(kind));
            const auto r = oracle::cross_check(d, p, 8);
            ++runs;
            if (r.engine_limited) {
                ++limited;
                continue;
            }
            if (r.failure) out.fail(std::string(problem_id(kind)) + " " + ltlf::to_string(f) + ": " + r.reason);
        }
    }
    std::size_t mismatches = 0;
    for (int i = 0; i < 1000; ++i) {
        const std::size_t k = pick(rng, 1, 3);
        ltlf::Propositions props;
        for (std::size_t j = 0; j < k; ++j) props.push_back("s" + std::to_string(j));
        const ltlf::Formula f = random::random_formula(rng, pick(rng, 1, 8), props);
        const ltlf::Trace t = random_trace(rng, k, pick(rng, 1, 6));
        if (ltlf::FormulaNfa(f, props).accepts(t) != ltlf::eval_trace(f, t, props)) {
            ++mismatches;
            out.fail("automaton and evaluation disagree on " + ltlf::to_string(f));
        }
    }
    out.detail << runs << " runs, " << limited << " engine-limited, " << mismatches << "/1000 automaton mismatches; ";
}

bool careful_ok(const PartialDfa& pd, const Word& w) {
    const auto img = step_set(pd, pd.all_states(), w);
    return img && img->count() == 1;
}

void careful_round_trip(Check& out) {
    random::Rng rng(4001);
    std::size_t yes_cases = 0, pulled = 0, multi_sink = 0, oracle_runs = 0;
    for (int i = 0; i < 100; ++i) {
        const PartialDfa pd = random::random_partial_dfa(rng, pick(rng, 2, 4), 2, 0.25);
        const Verdict truth = carefully_synchronizing_word(pd);
        if (truth.outcome == Outcome::limit) {
            out.fail("source search hit its cap");
            continue;
        }
        if (truth.is_yes() && !careful_ok(pd, truth.witness)) out.fail("source witness does not synchronize");
        for (auto var : {CarefulVariant::orz, CarefulVariant::ore, CarefulVariant::cw_ore}) {
            const std::string tag = std::string(careful_variant_id(var)) + " #" + std::to_string(i);
            ReductionOutput red;
            try {
                red = careful_to_constrained(pd, var);
            } catch (const InputError&) {
                if (var != CarefulVariant::cw_ore) throw;
                ++multi_sink;
                if (truth.is_yes()) out.fail(tag + ": several sinks but the source synchronizes");
                continue;
            }
            const Verdict v = solve(*red.dfa, *red.problem);
            if (v.outcome == Outcome::limit) {
                out.fail(tag + ": engine limit");
                continue;
            }
            if (v.is_yes() != truth.is_yes()) out.fail(tag + ": engine and source disagree");
            if (v.is_yes()) {
                ++yes_cases;
                const Word back = pullback_word(red, v.witness);
                if (careful_ok(pd, back)) ++pulled;
                else out.fail(tag + ": pullback does not synchronize");
            }
            const auto r = oracle::cross_check(*red.dfa, *red.problem, 8);
            ++oracle_runs;
            if (r.failure) out.fail(tag + ": " + r.reason);
            if (r.oracle.found && !truth.is_yes()) out.fail(tag + ": oracle yes, source no");
        }
    }
    out.detail << yes_cases << " yes cases, " << pulled << " pullbacks synchronize, " << multi_sink
               << " multi-sink cw-ore sources, " << oracle_runs << " oracle runs; ";
}

bool product_nonempty(const std::vector<Acceptor>& accs) {
    std::vector<State> init;
    for (const auto& a : accs) init.push_back(a.initial);
    std::set<std::vector<State>> seen{init};
    std::deque<std::vector<State>> queue{init};
    const std::size_t k = accs.front().dfa.num_letters();
    while (!queue.empty()) {
        const auto cur = queue.front();
        queue.pop_front();
        bool all = true;
        for (std::size_t i = 0; i < accs.size(); ++i) all = all && accs[i].finals.contains(cur[i]);
        if (all) return true;
        for (Letter a = 0; a < k; ++a) {
            std::vector<State> nxt;
            for (std::size_t i = 0; i < accs.size(); ++i) nxt.push_back(accs[i].dfa.next(cur[i], a));
            if (seen.insert(nxt).second) queue.push_back(nxt);
        }
    }
    return false;
}

void intersection_round_trip(Check& out) {
    random::Rng rng(5001);
    std::size_t yes_cases = 0, pulled = 0, nonempty = 0;
    for (int i = 0; i < 50; ++i) {
        const std::vector<Acceptor> accs{random::random_acceptor(rng, pick(rng, 1, 3), 2),
                                         random::random_acceptor(rng, pick(rng, 1, 3), 2)};
        const bool truth = product_nonempty(accs);
        nonempty += truth;
        for (auto var : {FaiVariant::orzp, FaiVariant::ordp, FaiVariant::cw_orzp, FaiVariant::mc_f_fixture,
                         FaiVariant::mc_g_fixture}) {
            const std::string tag = std::string(fai_variant_id(var)) + " #" + std::to_string(i);
            const auto red = fai_to_constrained(accs, var);
            const Verdict v = solve(*red.dfa, *red.problem);
            if (v.outcome == Outcome::limit) {
                out.fail(tag + ": engine limit");
                continue;
            }
            if (v.is_yes() != truth) out.fail(tag + ": engine and product disagree");
            if (v.is_yes()) {
                ++yes_cases;
                const Word back = pullback_word(red, v.witness);
                bool all = true;
                for (const auto& a : accs) all = all && a.accepts(back);
                if (all) ++pulled;
                else out.fail(tag + ": pullback rejected by a source");
            }
        }
    }
    out.detail << nonempty << "/50 non-empty, " << yes_cases << " yes cases, " << pulled << " pullbacks accepted; ";
}

std::vector<std::vector<int>> all_clauses(std::size_t vars) {
    std::vector<std::vector<int>> out;
    std::size_t total = 1;
    for (std::size_t i = 0; i < vars; ++i) total *= 3;
    for (std::size_t code = 1; code < total; ++code) {
        std::vector<int> clause;
        std::size_t c = code;
        for (std::size_t v = 1; v <= vars; ++v, c /= 3) {
            if (c % 3 == 1) clause.push_back(static_cast<int>(v));
            if (c % 3 == 2) clause.push_back(-static_cast<int>(v));
        }
        out.push_back(clause);
    }
    return out;
}

void cnf_round_trip(Check& out) {
    std::size_t instances = 0, sat = 0, longest = 0;
    auto check = [&](const CnfFormula& cnf) {
        ++instances;
        const bool truth = brute_force_sat(cnf).has_value();
        sat += truth;
        const auto red = cnf_to_fvt(cnf);
        const PathVerdict v = solve_fvt(*red.traversal);
        const std::string tag = to_dimacs(cnf);
        if (v.outcome == Outcome::limit) {
            out.fail("limit on " + tag);
            return;
        }
        if (v.is_yes() != truth) out.fail("SAT and traversal disagree on " + tag);
        if (!v.is_yes()) return;
        const std::size_t nv = red.traversal->graph.size();
        const std::size_t len = v.witness.size() - 1;
        longest = std::max(longest, len);
        if (len > (nv - 1) * (nv - 1)) out.fail("witness longer than (|V|-1)^2 on " + tag);
        if (!cnf.satisfied_by(pullback_assignment(red, v.witness))) out.fail("pullback unsatisfying on " + tag);
    };

    for (std::size_t vars = 1; vars <= 3; ++vars) {
        const auto clauses = all_clauses(vars);
        std::vector<std::size_t> idx;
        std::function<void()> rec = [&] {
            if (!idx.empty()) {
                CnfFormula cnf{vars, {}};
                for (auto i : idx) cnf.clauses.push_back(clauses[i]);
                check(cnf);
            }
            if (idx.size() == 3) return;
            for (std::size_t i = 0; i < clauses.size(); ++i) {
                idx.push_back(i);
                rec();
                idx.pop_back();
            }
        };
        rec();
    }
    const std::size_t exhaustive = instances;
    random::Rng rng(6001);
    for (int i = 0; i < 100; ++i) {
        check(random::random_cnf(rng, pick(rng, 1, 6), pick(rng, 1, 8), pick(rng, 1, 3)));
    }

    const CnfFormula two{2, {{-1, 2}, {1, -2}}};
    const auto red = cnf_to_fvt(two);
    const auto& inst = *red.traversal;
    std::set<std::string> pairs;
    for (auto [u, v] : inst.pairs) pairs.insert(inst.graph.name(u) + ">" + inst.graph.name(v));
    const std::set<std::string> want{"x1^0>c1^1", "x2^1>c1^2", "x1^1>c2^1", "x2^0>c2^2", "x'1>f1", "f1>f2"};
    if (inst.pairs.size() != 6 || pairs != want) out.fail("two-clause pairs differ");
    const PathVerdict v = solve_fvt(inst);
    if (!v.is_yes() || pullback_assignment(red, v.witness) != std::vector<bool>{false, false})
        out.fail("two-clause assignment is not x1=0 x2=0");

    out.detail << exhaustive << " exhaustive + 100 random CNFs, " << sat << " satisfiable, longest witness " << longest
               << "; ";
}

void np_route(Check& out) {
    random::Rng rng(7001);
    std::size_t yes = 0, limited = 0;
    for (int i = 0; i < 100; ++i) {
        const std::size_t n = pick(rng, 2, 5);
        const Dfa d = random::random_dfa(rng, n, pick(rng, 1, 3));
        const auto pairs = random::random_pairs(rng, n, pick(rng, 1, 3));
        const ConstraintSpec spec{RelationKind::lt_ll_paths, pairs};
        const Verdict np = solve_cs_orep_np(d, pairs);
        const Verdict ref = constrained_sync(d, spec, true);
        if (np.outcome == Outcome::limit || ref.outcome == Outcome::limit) {
            ++limited;
            continue;
        }
        if (np.is_yes() != ref.is_yes()) out.fail("disagreement on instance " + std::to_string(i));
        if (np.is_yes()) {
            ++yes;
            if (!agrees(spec, d, np.witness) || step_set(d, d.all_states(), np.witness).count() != 1)
                out.fail("composed witness does not re-verify");
        }
    }
    out.detail << yes << " yes, " << limited << " limited; ";
}

void inclusions(Check& out) {
    random::Rng rng(8001);
    std::size_t violations = 0, eps_failures = 0;
    for (int i = 0; i < 1000; ++i) {
        const std::size_t n = pick(rng, 2, 4);
        const Dfa d = random::random_dfa(rng, n, pick(rng, 1, 3));
        const Word w = random::random_word(rng, d.num_letters(), pick(rng, 0, 6));
        const auto [p, q] = random::random_pairs(rng, n, 1).front();
        const TraversalProfile prof = traversal_profile(d, w, d.all_states());
        auto in = [&](RelationKind k, PathVariant var = PathVariant::literal) {
            return relation_membership(k, prof, p, q, var);
        };
        auto implies = [&](bool a, bool b, const char* what) {
            if (a && !b) {
                ++violations;
                out.fail(what);
            }
        };
        implies(in(RelationKind::lt_ll_sets), in(RelationKind::le_ll_sets), "lt-ll-sets not in le-ll-sets");
        for (auto var : {PathVariant::literal, PathVariant::vacuous}) {
            implies(in(RelationKind::lt_ll_paths, var), in(RelationKind::le_ll_paths, var),
                    "lt-ll-paths not in le-ll-paths");
        }
        implies(in(RelationKind::lt_lf_paths), in(RelationKind::le_ll_paths, PathVariant::vacuous),
                "lt-lf-paths not in vacuous le-ll-paths");

        for (RelationKind k : {RelationKind::le_ll_sets, RelationKind::lt_lf_paths}) {
            const Verdict v = constrained_sync(d, {k, {{p, q}}}, false);
            if (!v.is_yes() || !v.witness.empty()) {
                ++eps_failures;
                out.fail(std::string("no empty witness for cw ") + std::string(relation_id(k)));
            }
        }
    }
    out.detail << violations << " inclusion violations, " << eps_failures << " empty-witness failures; ";
}

}  // namespace

int main() {
    bool ok = true;
    ok &= run(1, "relation table on the sample automaton", 1, relation_table);
    ok &= run(2, "constrained problems vs enumeration", 180, constrained_equivalence);
    ok &= run(3, "model checking vs enumeration", 180, model_checking_equivalence);
    ok &= run(4, "careful synchronization round trip", 120, careful_round_trip);
    ok &= run(5, "intersection non-emptiness round trip", 120, intersection_round_trip);
    ok &= run(6, "satisfiability to first-visits traversal", 120, cnf_round_trip);
    ok &= run(7, "sink-component route vs product search", 120, np_route);
    ok &= run(8, "inclusions and empty witnesses", 60, inclusions);
    std::printf("%s\n", ok ? "all criteria pass" : "some criteria fail");
    return ok ? 0 : 1;
}
