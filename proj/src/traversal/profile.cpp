#include <algorithm>

#include "ltlsync/errors.hpp"
#include "ltlsync/traversal.hpp"

namespace ltlsync {

std::string ExtInt::to_string() const {
    if (*this == neg_inf()) return "-inf";
    if (*this == pos_inf()) return "+inf";
    return std::to_string(v_);
}

TraversalProfile::TraversalProfile(std::size_t num_states, std::vector<State> starts)
    : n_(num_states),
      starts_(std::move(starts)),
      first_(starts_.size() * n_, ExtInt::pos_inf()),
      last_(starts_.size() * n_, ExtInt::neg_inf()),
      agg_first_(n_, ExtInt::pos_inf()),
      agg_last_(n_, ExtInt::neg_inf()) {}

void TraversalProfile::record(std::size_t start, State q, std::int64_t position) {
    const ExtInt pos(position);
    auto& f = first_[start * n_ + q];
    auto& l = last_[start * n_ + q];
    f = std::min(f, pos);
    l = std::max(l, pos);
    agg_first_[q] = std::min(agg_first_[q], pos);
    agg_last_[q] = std::max(agg_last_[q], pos);
}

TraversalProfile traversal_profile(const Dfa& dfa, std::span<const Letter> w, const StateSet& start) {
    if (start.empty()) throw InputError("traversal profile needs a non-empty start set");
    TraversalProfile profile(dfa.num_states(), start.members());
    const auto& starts = profile.starts();
    for (std::size_t i = 0; i < starts.size(); ++i) {
        State q = starts[i];
        profile.record(i, q, 0);
        for (std::size_t pos = 0; pos < w.size(); ++pos) {
            q = dfa.next(q, w[pos]);
            profile.record(i, q, static_cast<std::int64_t>(pos + 1));
        }
    }
    return profile;
}

}  // namespace ltlsync
