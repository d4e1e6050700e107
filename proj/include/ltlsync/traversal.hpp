#pragma once

#include <compare>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

#include "ltlsync/automata.hpp"
#include "ltlsync/ltlf.hpp"

namespace ltlsync {

/// Position of a visit, or -inf / +inf for "never". The built-in order gives
/// -inf < n < +inf, -inf <= -inf and +inf <= +inf, and neither -inf < -inf
/// nor +inf < +inf.
class ExtInt {
public:
    constexpr ExtInt() = default;
    constexpr explicit ExtInt(std::int64_t v) : v_(v) {}
    static constexpr ExtInt neg_inf() { return ExtInt(std::numeric_limits<std::int64_t>::min()); }
    static constexpr ExtInt pos_inf() { return ExtInt(std::numeric_limits<std::int64_t>::max()); }

    constexpr bool finite() const { return *this != neg_inf() && *this != pos_inf(); }
    constexpr std::int64_t value() const { return v_; }
    std::string to_string() const;

    friend constexpr auto operator<=>(ExtInt, ExtInt) = default;

private:
    std::int64_t v_ = 0;
};

enum class RelationKind { lt_ll_sets, le_ll_sets, lt_ll_paths, le_ll_paths, lt_lf_paths };
inline constexpr RelationKind kAllRelations[] = {RelationKind::lt_ll_sets, RelationKind::le_ll_sets,
                                                 RelationKind::lt_ll_paths, RelationKind::le_ll_paths,
                                                 RelationKind::lt_lf_paths};

/// "lt-ll-sets", "le-ll-sets", "lt-ll-paths", "le-ll-paths", "lt-lf-paths".
std::string_view relation_id(RelationKind k) noexcept;
/// Throws InputError for unknown ids.
RelationKind relation_from_id(std::string_view id);
constexpr bool on_paths(RelationKind k) noexcept {
    return k == RelationKind::lt_ll_paths || k == RelationKind::le_ll_paths || k == RelationKind::lt_lf_paths;
}

/// How le-ll-paths treats a path that never visits the second state:
/// literal compares last(p) <= -inf; vacuous leaves that path unconstrained.
enum class PathVariant { literal, vacuous };
std::string_view variant_id(PathVariant v) noexcept;
PathVariant variant_from_id(std::string_view id);

using StatePair = std::pair<State, State>;

struct ConstraintSpec {
    RelationKind kind = RelationKind::lt_ll_sets;
    std::vector<StatePair> pairs;
    PathVariant variant = PathVariant::literal;

    /// Throws InputError on reflexive pairs or out-of-range states.
    void validate(std::size_t num_states) const;
};

/// First and last visit positions of every state along the paths of a word.
class TraversalProfile {
public:
    TraversalProfile(std::size_t num_states, std::vector<State> starts);

    const std::vector<State>& starts() const noexcept { return starts_; }
    std::size_t num_states() const noexcept { return n_; }

    /// Per start (index into starts()).
    ExtInt first(std::size_t start, State q) const { return first_[start * n_ + q]; }
    ExtInt last(std::size_t start, State q) const { return last_[start * n_ + q]; }
    /// Aggregated over all starts.
    ExtInt first(State q) const { return agg_first_[q]; }
    ExtInt last(State q) const { return agg_last_[q]; }

    void record(std::size_t start, State q, std::int64_t position);

private:
    std::size_t n_;
    std::vector<State> starts_;
    std::vector<ExtInt> first_, last_, agg_first_, agg_last_;
};

/// Simulates every path from S once. S must be non-empty.
TraversalProfile traversal_profile(const Dfa& dfa, std::span<const Letter> w, const StateSet& start);

/// Literal evaluation of the defining inequality for (p, q); the set
/// relations aggregate over the profile's starts, the path relations
/// quantify over them. Throws InputError when p == q.
bool relation_membership(RelationKind kind, const TraversalProfile& profile, State p, State q,
                         PathVariant variant = PathVariant::literal);
bool relation_membership(RelationKind kind, const Dfa& dfa, std::span<const Letter> w, State p, State q,
                         PathVariant variant = PathVariant::literal,
                         const std::optional<StateSet>& start = std::nullopt);

/// R is a subset of R(w). S defaults to all states.
bool agrees(const ConstraintSpec& spec, const Dfa& dfa, std::span<const Letter> w,
            const std::optional<StateSet>& start = std::nullopt);

/// Per pair (p, q): le-ll G(p -> F q), lt-ll F(q & G !p), lt-lf G(q -> G !p);
/// the conjunction over all pairs, true for none. Atoms are state names.
/// Throws InputError for the vacuous variant, which has no translation.
ltlf::Formula constraint_to_formula(const ConstraintSpec& spec, const PartialDfa& dfa);

/// {"relation": id, "pairs": [["p","q"],...], "variant": "literal"|"vacuous"}
ConstraintSpec constraint_from_json(const nlohmann::json& j, const PartialDfa& dfa);
std::vector<StatePair> pairs_from_json(const nlohmann::json& j, const PartialDfa& dfa);
nlohmann::json to_json(const ConstraintSpec& spec, const PartialDfa& dfa);

}  // namespace ltlsync
