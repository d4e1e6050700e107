#pragma once

#include <cstddef>
#include <cstdint>
#include <string_view>
#include <utility>
#include <vector>

#include "ltlsync/state_set.hpp"

namespace ltlsync {

enum class Outcome { yes, no, inconclusive, limit };

constexpr std::string_view outcome_name(Outcome o) noexcept {
    switch (o) {
        case Outcome::yes: return "yes";
        case Outcome::no: return "no";
        case Outcome::inconclusive: return "inconclusive";
        case Outcome::limit: return "limit";
    }
    return "?";
}

struct SearchStats {
    std::size_t explored = 0;
};

/// Result of a decision procedure. A yes carries its witness; inconclusive
/// carries the exhausted bound; limit means the explored-state cap was hit.
template <class Witness>
struct BasicVerdict {
    Outcome outcome = Outcome::no;
    Witness witness{};
    std::size_t bound = 0;
    SearchStats stats{};

    static BasicVerdict yes(Witness w, SearchStats s = {}) { return {Outcome::yes, std::move(w), 0, s}; }
    static BasicVerdict no(SearchStats s = {}) { return {Outcome::no, {}, 0, s}; }
    static BasicVerdict inconclusive(std::size_t bound, SearchStats s = {}) {
        return {Outcome::inconclusive, {}, bound, s};
    }
    static BasicVerdict limit(SearchStats s = {}) { return {Outcome::limit, {}, 0, s}; }

    bool is_yes() const noexcept { return outcome == Outcome::yes; }
    bool is_no() const noexcept { return outcome == Outcome::no; }
};

using Verdict = BasicVerdict<Word>;
using VertexPath = std::vector<std::uint32_t>;
using PathVerdict = BasicVerdict<VertexPath>;

inline constexpr std::size_t kDefaultSubsetCap = std::size_t{1} << 20;
inline constexpr std::size_t kDefaultProductCap = 2'000'000;

}  // namespace ltlsync
