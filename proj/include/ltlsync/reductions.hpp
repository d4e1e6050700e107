#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "ltlsync/automata.hpp"
#include "ltlsync/problem.hpp"
#include "ltlsync/travgraph.hpp"

namespace ltlsync {

enum class CarefulVariant { orz, ore, cw_ore };
enum class FaiVariant { orzp, ordp, cw_orzp, mc_f_fixture, mc_g_fixture };

std::string_view careful_variant_id(CarefulVariant v) noexcept;  // "orz", "ore", "cw-ore"
CarefulVariant careful_variant_from_id(std::string_view id);
std::string_view fai_variant_id(FaiVariant v) noexcept;  // "orzp", "ordp", "cw-orzp", "mc-F-fixture", "mc-G-fixture"
FaiVariant fai_variant_from_id(std::string_view id);

/// Propositional formula in conjunctive normal form; literals are signed
/// 1-based variable numbers.
struct CnfFormula {
    std::size_t num_vars = 0;
    std::vector<std::vector<int>> clauses;

    /// Throws InputError on empty clauses, out-of-range literals, and
    /// clauses holding both l and -l.
    void validate() const;
    bool satisfied_by(const std::vector<bool>& assignment) const;
};

/// "p cnf n m" header, zero-terminated clauses, "c" comment lines.
CnfFormula parse_dimacs(std::string_view text);
std::string to_dimacs(const CnfFormula& cnf);
/// Exhaustive search; first satisfying assignment in binary counting order.
std::optional<std::vector<bool>> brute_force_sat(const CnfFormula& cnf);

/// A generated instance with what is needed to map its witnesses back.
struct ReductionOutput {
    /// "careful", "fai" or "cnf".
    std::string kind;
    std::string variant;
    /// DFA instances: dfa plus problem. CNF instances: traversal.
    std::optional<Dfa> dfa;
    std::optional<Problem> problem;
    std::optional<TraversalInstance> traversal;
    /// FNV-1a of the serialized source.
    std::string fingerprint;
    /// Embedded source and generated names.
    nlohmann::json pullback;
};

/// Partial DFA to complete DFA with ordering constraints: orz targets cs
/// with le-ll-sets, ore cs with lt-ll-sets, cw-ore cw with lt-ll-sets. The
/// source carefully synchronizes iff the generated instance has a witness.
/// cw-ore throws InputError when the source digraph has several sink
/// components. The source needs at least one state.
ReductionOutput careful_to_constrained(const PartialDfa& source, CarefulVariant variant);

/// Intersection non-emptiness of acceptors over one alphabet to the chosen
/// constrained or fixed-formula problem. Throws InputError when the
/// alphabets differ or the list is empty.
ReductionOutput fai_to_constrained(const std::vector<Acceptor>& acceptors, FaiVariant variant);

/// Satisfiability to first-visits traversal on a strongly connected graph.
ReductionOutput cnf_to_fvt(const CnfFormula& cnf);

/// Source-side witness of a careful or fai instance, as letters of the
/// source alphabet. Throws VerificationError when the re-check fails.
Word pullback_word(const ReductionOutput& out, std::span<const Letter> witness);
/// Assignment read off the first visits along a traversal path.
std::vector<bool> pullback_assignment(const ReductionOutput& out, const VertexPath& path);

/// Source objects stored in the pullback metadata.
PartialDfa careful_source(const ReductionOutput& out);
std::vector<Acceptor> fai_sources(const ReductionOutput& out);
CnfFormula cnf_source(const ReductionOutput& out);

/// {"problem": kind, "dfa"|"digraph": ..., "constraint"|"formula": ...,
///  "pullback": {...}}. DFA bundles are accepted by check; digraph bundles
/// by solve-traversal.
nlohmann::json to_json(const ReductionOutput& out);
ReductionOutput reduction_from_json(const nlohmann::json& j);

/// Problem stored in a DFA bundle, the bundle's "problem" naming its kind.
Problem problem_from_bundle(const nlohmann::json& j, const Dfa& dfa);
nlohmann::json problem_to_json(const Problem& p, const Dfa& dfa);

}  // namespace ltlsync
