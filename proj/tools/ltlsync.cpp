// Command-line front end.
//
// Exit codes: 0 yes, 1 no, 2 usage or input error, 3 oracle inconclusive,
// 4 resource limit, 5 internal verification failure.

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "ltlsync/automata_json.hpp"
#include "ltlsync/engine.hpp"
#include "ltlsync/errors.hpp"
#include "ltlsync/oracle.hpp"
#include "ltlsync/random.hpp"
#include "ltlsync/reductions.hpp"
#include "ltlsync/travgraph.hpp"

using namespace ltlsync;
using nlohmann::json;

namespace {

enum Exit { kYes = 0, kNo = 1, kInput = 2, kInconclusive = 3, kLimit = 4, kInternal = 5 };

std::string read_text(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot read '" + path + "'");
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

json parse_json_text(const std::string& text, const char* what) {
    try {
        return json::parse(text);
    } catch (const json::exception& e) {
        throw InputError(std::string("bad ") + what + " JSON: " + e.what());
    }
}

// Inline JSON when it looks like JSON, otherwise a file path.
json json_arg(const std::string& arg, const char* what) {
    const auto first = arg.find_first_not_of(" \t\n");
    if (first != std::string::npos && (arg[first] == '[' || arg[first] == '{')) return parse_json_text(arg, what);
    return parse_json_text(read_text(arg), what);
}

int exit_for(Outcome o) {
    switch (o) {
        case Outcome::yes: return kYes;
        case Outcome::no: return kNo;
        case Outcome::inconclusive: return kInconclusive;
        case Outcome::limit: return kLimit;
    }
    return kInternal;
}

json word_json(const PartialDfa& dfa, std::span<const Letter> w) {
    json j = json::array();
    for (Letter a : w) j.push_back(dfa.letter_name(a));
    return j;
}

struct ProblemArgs {
    std::string dfa, instance, problem, formula, relation, pairs, constraint, variant = "literal", mode, subset;
    bool sync = false;
    CLI::Option* sync_opt = nullptr;
    std::size_t cap = kDefaultProductCap;
    bool json_out = false;

    void add_to(CLI::App* app) {
        app->add_option("--dfa", dfa, "DFA JSON file");
        app->add_option("--instance", instance, "instance bundle JSON (as written by reduce)");
        app->add_option("--problem", problem, "mc-paths|mc-paths-sync|mc-sets|mc-sets-sync|mc|cs|cw");
        app->add_option("--formula", formula, "LTLf formula, or @file");
        app->add_option("--relation", relation, "lt-ll-sets|le-ll-sets|lt-ll-paths|le-ll-paths|lt-lf-paths");
        app->add_option("--pairs", pairs, "constraint pairs as JSON [[\"p\",\"q\"],...] or a file");
        app->add_option("--constraint", constraint, "constraint JSON or file");
        app->add_option("--variant", variant, "literal|vacuous")->check(CLI::IsMember({"literal", "vacuous"}));
        app->add_option("--mode", mode, "paths|sets")->check(CLI::IsMember({"paths", "sets"}));
        sync_opt = app->add_flag("--sync,!--no-sync", sync, "require synchronization");
        app->add_option("--subset", subset, "start set S, comma-separated state names");
        app->add_option("--cap", cap, "explored-state cap");
        app->add_flag("--json", json_out, "machine-readable output");
    }
};

struct Loaded {
    Dfa dfa;
    Problem problem;
    std::optional<ReductionOutput> reduction;
};

StateSet parse_subset(const Dfa& dfa, const std::string& text) {
    StateSet s(dfa.num_states());
    std::string name;
    std::istringstream in(text);
    while (std::getline(in, name, ',')) {
        const auto b = name.find_first_not_of(' ');
        const auto e = name.find_last_not_of(' ');
        if (b == std::string::npos) continue;
        s.insert(dfa.state_index(name.substr(b, e - b + 1)));
    }
    if (s.empty()) throw InputError("--subset names no states");
    return s;
}

Loaded load_problem(const ProblemArgs& a) {
    Loaded out;
    json bundle;
    if (!a.instance.empty()) {
        bundle = parse_json_text(read_text(a.instance), "instance");
        if (bundle.contains("reduction")) out.reduction = reduction_from_json(bundle);
    }
    if (!a.dfa.empty()) {
        out.dfa = dfa_from_json(parse_json_text(read_text(a.dfa), "DFA"));
    } else if (bundle.contains("dfa")) {
        out.dfa = dfa_from_json(bundle.at("dfa"));
    } else {
        throw InputError("no automaton: pass --dfa or an --instance with a \"dfa\"");
    }

    if (a.problem.empty() && bundle.contains("problem")) {
        out.problem = problem_from_bundle(bundle, out.dfa);
    } else {
        if (a.problem.empty()) throw InputError("--problem is required");
        std::string id = a.problem;
        if (id == "mc") id = "mc-paths";
        out.problem.kind = problem_from_id(id);
        if (is_model_checking(out.problem.kind)) {
            if (a.formula.empty()) throw InputError("model checking needs --formula");
            const std::string text = a.formula[0] == '@' ? read_text(a.formula.substr(1)) : a.formula;
            out.problem.formula = ltlf::parse(text);
        } else if (!a.constraint.empty()) {
            out.problem.constraint = constraint_from_json(json_arg(a.constraint, "constraint"), out.dfa);
        } else {
            if (a.relation.empty()) throw InputError("constrained problems need --relation or --constraint");
            ConstraintSpec spec;
            spec.kind = relation_from_id(a.relation);
            spec.variant = variant_from_id(a.variant);
            if (!a.pairs.empty()) spec.pairs = pairs_from_json(json_arg(a.pairs, "pairs"), out.dfa);
            out.problem.constraint = spec;
        }
    }
    if (out.problem.constraint && a.variant == "vacuous") out.problem.constraint->variant = PathVariant::vacuous;

    // --mode and --sync adjust the kind
    const bool mc = is_model_checking(out.problem.kind);
    bool paths = paths_semantics(out.problem.kind);
    bool sync = requires_sync(out.problem.kind);
    if (!a.mode.empty()) {
        if (!mc) throw InputError("--mode applies to model checking only");
        paths = a.mode == "paths";
    }
    if (a.sync_opt && a.sync_opt->count() > 0) sync = a.sync;
    if (mc) {
        out.problem.kind = paths ? (sync ? ProblemKind::mc_paths_sync : ProblemKind::mc_paths)
                                 : (sync ? ProblemKind::mc_sets_sync : ProblemKind::mc_sets);
    } else {
        out.problem.kind = sync ? ProblemKind::cs : ProblemKind::cw;
    }
    if (!a.subset.empty()) out.problem.start = parse_subset(out.dfa, a.subset);
    if (out.problem.constraint) out.problem.constraint->validate(out.dfa.num_states());
    return out;
}

int run_check(const ProblemArgs& a, bool np) {
    const Loaded l = load_problem(a);
    Verdict v;
    if (np) {
        const auto& c = l.problem.constraint;
        if (l.problem.kind != ProblemKind::cs || !c || c->kind != RelationKind::lt_ll_paths || l.problem.start) {
            throw InputError("--np needs --problem cs with relation lt-ll-paths and no --subset");
        }
        v = solve_cs_orep_np(l.dfa, c->pairs, a.cap);
    } else {
        v = solve(l.dfa, l.problem, a.cap);
    }

    std::optional<std::pair<const PartialDfa*, Word>> pulled;
    PartialDfa careful_src;
    std::vector<Acceptor> fai_src;
    if (v.is_yes() && l.reduction && (l.reduction->kind == "careful" || l.reduction->kind == "fai")) {
        ReductionOutput red = *l.reduction;
        red.dfa = l.dfa;
        Word w = pullback_word(red, v.witness);
        if (red.kind == "careful") {
            careful_src = careful_source(red);
            pulled.emplace(&careful_src, std::move(w));
        } else {
            fai_src = fai_sources(red);
            pulled.emplace(&fai_src.front().dfa, std::move(w));
        }
    }

    if (a.json_out) {
        json j{{"verdict", outcome_name(v.outcome)},
               {"witness", v.is_yes() ? word_json(l.dfa, v.witness) : json(nullptr)},
               {"stats", {{"explored", v.stats.explored}}}};
        if (pulled) j["pullback"] = word_json(*pulled->first, pulled->second);
        std::cout << j.dump() << '\n';
    } else {
        std::cout << outcome_name(v.outcome) << '\n';
        if (v.is_yes()) std::cout << format_word(l.dfa, v.witness) << '\n';
        if (pulled) std::cout << "pullback: " << format_word(*pulled->first, pulled->second) << '\n';
    }
    return exit_for(v.outcome);
}

int run_relations(const std::string& dfa_path, const std::vector<std::string>& words, std::size_t max_len,
                  const std::string& pair, const std::string& variant, const std::string& subset, bool json_out) {
    const Dfa dfa = dfa_from_json(parse_json_text(read_text(dfa_path), "DFA"));
    const auto comma = pair.find(',');
    if (comma == std::string::npos) throw InputError("--pair expects p,q");
    const State p = dfa.state_index(pair.substr(0, comma));
    const State q = dfa.state_index(pair.substr(comma + 1));
    const PathVariant var = variant_from_id(variant);
    const std::optional<StateSet> start = subset.empty() ? std::nullopt : std::optional(parse_subset(dfa, subset));

    std::vector<Word> list;
    for (const auto& w : words) list.push_back(parse_word(dfa, w));
    if (words.empty()) {
        for (std::size_t len = 0; len <= max_len; ++len) {
            Word w(len, 0);
            while (true) {
                list.push_back(w);
                std::size_t i = len;
                while (i > 0 && w[i - 1] + 1 == dfa.num_letters()) w[--i] = 0;
                if (i == 0) break;
                ++w[i - 1];
            }
        }
    }

    json rows = json::array();
    if (!json_out) {
        std::cout << "word";
        for (auto k : kAllRelations) std::cout << '\t' << relation_id(k);
        std::cout << '\n';
    }
    for (const Word& w : list) {
        json row{{"word", word_json(dfa, w)}};
        if (!json_out) std::cout << (w.empty() ? std::string("(empty)") : format_word(dfa, w));
        for (auto k : kAllRelations) {
            const bool in = relation_membership(k, dfa, w, p, q, var, start);
            row[std::string(relation_id(k))] = in;
            if (!json_out) std::cout << '\t' << (in ? "yes" : "no");
        }
        if (!json_out) std::cout << '\n';
        rows.push_back(row);
    }
    if (json_out) std::cout << rows.dump() << '\n';
    return kYes;
}

int run_reduce(const std::string& kind, const std::vector<std::string>& inputs, const std::string& variant,
               const std::string& out_path) {
    if (inputs.empty()) throw InputError("reduce needs --in");
    ReductionOutput out;
    if (kind == "careful") {
        const PartialDfa src = partial_dfa_from_json(parse_json_text(read_text(inputs.front()), "DFA"));
        out = careful_to_constrained(src, careful_variant_from_id(variant.empty() ? "orz" : variant));
    } else if (kind == "fai") {
        std::vector<Acceptor> accs;
        for (const auto& path : inputs) {
            const json j = parse_json_text(read_text(path), "acceptor");
            if (j.is_array()) {
                for (const auto& a : j) accs.push_back(acceptor_from_json(a));
            } else {
                accs.push_back(acceptor_from_json(j));
            }
        }
        out = fai_to_constrained(accs, fai_variant_from_id(variant.empty() ? "orzp" : variant));
    } else if (kind == "cnf") {
        out = cnf_to_fvt(parse_dimacs(read_text(inputs.front())));
    } else {
        throw InputError("unknown reduction '" + kind + "'");
    }
    const json j = to_json(out);
    if (out_path.empty()) {
        std::cout << j.dump(2) << '\n';
    } else {
        std::ofstream f(out_path);
        if (!f) throw InputError("cannot write '" + out_path + "'");
        f << j.dump(2) << '\n';
    }
    return kYes;
}

int run_traversal(const std::string& kind_id, const std::string& in, std::size_t cap, bool json_out) {
    const TraversalKind kind = traversal_kind_from_id(kind_id);
    const json j = parse_json_text(read_text(in), "instance");
    std::optional<ReductionOutput> red;
    TraversalInstance inst;
    if (j.contains("digraph")) {
        if (j.contains("reduction")) red = reduction_from_json(j);
        inst = traversal_instance_from_json(j.at("digraph"));
    } else {
        inst = traversal_instance_from_json(j);
    }
    const PathVerdict v = solve_traversal(inst, kind, cap);
    std::optional<std::vector<bool>> assignment;
    if (v.is_yes() && red && red->kind == "cnf" && kind == TraversalKind::fvt) {
        red->traversal = inst;
        assignment = pullback_assignment(*red, v.witness);
    }
    if (json_out) {
        json out{{"verdict", outcome_name(v.outcome)},
                 {"witness", v.is_yes() ? path_to_json(inst, v.witness) : json(nullptr)},
                 {"stats", {{"explored", v.stats.explored}}}};
        if (assignment) out["pullback"] = *assignment;
        std::cout << out.dump() << '\n';
    } else {
        std::cout << outcome_name(v.outcome) << '\n';
        if (v.is_yes()) {
            for (std::size_t i = 0; i < v.witness.size(); ++i) {
                std::cout << (i ? " " : "") << inst.graph.name(v.witness[i]);
            }
            std::cout << '\n';
        }
        if (assignment) {
            std::cout << "pullback:";
            for (std::size_t i = 0; i < assignment->size(); ++i) {
                std::cout << " x" << i + 1 << '=' << ((*assignment)[i] ? 1 : 0);
            }
            std::cout << '\n';
        }
    }
    return exit_for(v.outcome);
}

json report_json(const Dfa& dfa, const oracle::CrossCheckReport& r) {
    return {{"engine", {{"verdict", outcome_name(r.engine.outcome)},
                        {"witness", r.engine.is_yes() ? word_json(dfa, r.engine.witness) : json(nullptr)}}},
            {"oracle", {{"verdict", r.oracle.found ? "yes" : "no-up-to"},
                        {"bound", r.oracle.bound},
                        {"witness", r.oracle.found ? word_json(dfa, r.oracle.witness) : json(nullptr)}}},
            {"agreement", !r.failure},
            {"reason", r.reason}};
}

int oracle_exit(const oracle::CrossCheckReport& r) {
    if (r.failure) return kNo;
    if (r.engine_limited) return kLimit;
    return r.oracle.found ? kYes : kInconclusive;
}

int run_oracle(const ProblemArgs& a, std::size_t max_len) {
    const Loaded l = load_problem(a);
    const auto r = oracle::cross_check(l.dfa, l.problem, max_len, a.cap);
    if (a.json_out) {
        std::cout << report_json(l.dfa, r).dump() << '\n';
    } else {
        std::cout << "engine: " << outcome_name(r.engine.outcome);
        if (r.engine.is_yes()) std::cout << " [" << format_word(l.dfa, r.engine.witness) << "]";
        std::cout << "\noracle: ";
        if (r.oracle.found)
            std::cout << "yes [" << format_word(l.dfa, r.oracle.witness) << "]";
        else
            std::cout << "no-up-to " << r.oracle.bound;
        std::cout << '\n' << (r.failure ? "FAILURE: " + r.reason : "agreement") << '\n';
    }
    return oracle_exit(r);
}

// Random corpus: constrained and model-checking problems on small DFAs.
int run_oracle_corpus(std::uint64_t seed, std::size_t count, std::size_t max_len, std::size_t cap, bool json_out) {
    random::Rng rng(seed);
    std::size_t failures = 0, limited = 0;
    json reports = json::array();
    for (std::size_t i = 0; i < count; ++i) {
        const Dfa dfa = random::random_dfa(rng, random::uniform(rng, 1, 4), random::uniform(rng, 1, 3));
        Problem p;
        const std::size_t pick = random::uniform(rng, 0, 5);
        if (pick < 4) {
            std::vector<std::string> atoms(dfa.state_names().begin(),
                                           dfa.state_names().begin() +
                                               static_cast<std::ptrdiff_t>(std::min<std::size_t>(3, dfa.num_states())));
            p = Problem::model_checking(random::random_formula(rng, random::uniform(rng, 1, 8), atoms), pick < 2,
                                        pick % 2 == 1);
        } else {
            ConstraintSpec spec{kAllRelations[random::uniform(rng, 0, 4)],
                                random::random_pairs(rng, dfa.num_states(), random::uniform(rng, 0, 2)),
                                PathVariant::literal};
            p = Problem::constrained(spec, pick == 4);
        }
        const auto r = oracle::cross_check(dfa, p, max_len, cap);
        failures += r.failure ? 1 : 0;
        limited += r.engine_limited ? 1 : 0;
        if (r.failure) {
            json bad = report_json(dfa, r);
            bad["instance"] = problem_to_json(p, dfa);
            bad["instance"]["dfa"] = to_json(dfa);
            reports.push_back(bad);
            if (!json_out) std::cout << "FAILURE #" << i << ": " << r.reason << '\n';
        }
    }
    if (json_out) {
        std::cout << json{{"instances", count}, {"failures", failures}, {"limited", limited}, {"reports", reports}}.dump()
                  << '\n';
    } else {
        std::cout << count << " instances, " << failures << " failures, " << limited << " at cap\n";
    }
    return failures == 0 ? kYes : kNo;
}

int run_fixture(const std::string& name, bool json_out) {
    const std::vector<std::pair<std::string, std::string>> fixtures = {
        {"mc-paths-1", "G (q1 -> F q2)"},
        {"mc-paths-2", "G (q1 -> F q2) & G (q3 -> F q4)"},
        {"fai-F", "F f & ((!n & !f) -> F y)"},
        {"fai-G", "!n -> G !n"},
    };
    json out = json::object();
    bool found = false;
    for (const auto& [id, text] : fixtures) {
        if (!name.empty() && name != id) continue;
        found = true;
        const std::string canon = ltlf::to_string(ltlf::parse(text));
        if (json_out)
            out[id] = canon;
        else
            std::cout << id << ": " << canon << '\n';
    }
    if (!found) throw InputError("unknown fixture '" + name + "'");
    if (json_out) std::cout << out.dump() << '\n';
    return kYes;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"LTLf model checking and constrained synchronization on DFAs"};
    app.require_subcommand(1);

    ProblemArgs check_args, oracle_args;
    bool np = false;
    auto* check = app.add_subcommand("check", "decide a model-checking or constrained problem");
    check_args.add_to(check);
    check->add_flag("--np", np, "use the sink-component route (cs, lt-ll-paths)");
    ProblemArgs witness_args;
    auto* witness = app.add_subcommand("witness", "same as check");
    witness_args.add_to(witness);

    std::string rel_dfa, rel_pair, rel_variant = "literal", rel_subset;
    std::vector<std::string> rel_words;
    std::size_t rel_max = 2;
    bool rel_json = false;
    auto* relations = app.add_subcommand("relations", "traversal-relation table for one pair");
    relations->add_option("--dfa", rel_dfa, "DFA JSON file")->required();
    relations->add_option("--pair", rel_pair, "p,q")->required();
    relations->add_option("--word", rel_words, "word (repeatable); default all words up to --max-len");
    relations->add_option("--max-len", rel_max, "enumeration bound");
    relations->add_option("--variant", rel_variant, "literal|vacuous");
    relations->add_option("--subset", rel_subset, "start set S");
    relations->add_flag("--json", rel_json);

    std::string red_kind, red_variant, red_out;
    std::vector<std::string> red_in;
    auto* reduce = app.add_subcommand("reduce", "generate a reduction instance");
    reduce->add_option("kind", red_kind, "careful|fai|cnf")->required()->check(CLI::IsMember({"careful", "fai", "cnf"}));
    reduce->add_option("--in", red_in, "source file (repeatable for fai)")->required();
    reduce->add_option("--variant", red_variant, "orz|ore|cw-ore; orzp|ordp|cw-orzp|mc-F-fixture|mc-G-fixture");
    reduce->add_option("--out", red_out, "output file; default standard output");

    std::string trav_kind, trav_in;
    std::size_t trav_cap = kDefaultSubsetCap;
    bool trav_json = false;
    auto* traversal = app.add_subcommand("solve-traversal", "first- or last-visits traversal");
    traversal->add_option("kind", trav_kind, "fvt|lvt")->required()->check(CLI::IsMember({"fvt", "lvt"}));
    traversal->add_option("--in", trav_in, "digraph JSON or cnf bundle")->required();
    traversal->add_option("--cap", trav_cap);
    traversal->add_flag("--json", trav_json);

    std::size_t max_len = 8, count = 100;
    std::optional<std::uint64_t> seed;
    auto* oracle_cmd = app.add_subcommand("oracle", "cross-check the engine against enumeration");
    oracle_args.add_to(oracle_cmd);
    oracle_cmd->add_option("--max-len", max_len, "longest enumerated word");
    oracle_cmd->add_option("--seed", seed, "run a seeded random corpus instead of one instance");
    oracle_cmd->add_option("--count", count, "corpus size for --seed");

    std::string fixture_name;
    bool fixture_json = false;
    auto* fixture = app.add_subcommand("fixture", "print the fixed formulas");
    fixture->add_option("name", fixture_name, "mc-paths-1|mc-paths-2|fai-F|fai-G");
    fixture->add_flag("--json", fixture_json);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kInput;
    }

    try {
        if (*check) return run_check(check_args, np);
        if (*witness) return run_check(witness_args, false);
        if (*relations) return run_relations(rel_dfa, rel_words, rel_max, rel_pair, rel_variant, rel_subset, rel_json);
        if (*reduce) return run_reduce(red_kind, red_in, red_variant, red_out);
        if (*traversal) return run_traversal(trav_kind, trav_in, trav_cap, trav_json);
        if (*oracle_cmd) {
            if (seed) return run_oracle_corpus(*seed, count, max_len, oracle_args.cap, oracle_args.json_out);
            return run_oracle(oracle_args, max_len);
        }
        if (*fixture) return run_fixture(fixture_name, fixture_json);
    } catch (const ResourceLimitError& e) {
        std::cerr << "resource limit: " << e.what() << '\n';
        return kLimit;
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kInput;
    } catch (const json::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kInput;
    } catch (const VerificationError& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return kInternal;
    }
    return kInput;
}
