#include "ltlsync/state_set.hpp"

#include <algorithm>

namespace ltlsync {

StateSet::StateSet(std::size_t width) : width_(width), words_((width + 63) / 64, 0) {}

StateSet::StateSet(std::size_t width, std::initializer_list<State> members) : StateSet(width) {
    for (State q : members) insert(q);
}

StateSet StateSet::full(std::size_t width) {
    StateSet s(width);
    for (std::size_t i = 0; i < s.words_.size(); ++i) s.words_[i] = ~std::uint64_t{0};
    if (width % 64 != 0) s.words_.back() = (std::uint64_t{1} << (width % 64)) - 1;
    return s;
}

StateSet StateSet::singleton(std::size_t width, State q) {
    StateSet s(width);
    s.insert(q);
    return s;
}

std::size_t StateSet::count() const noexcept {
    std::size_t n = 0;
    for (auto w : words_) n += static_cast<std::size_t>(std::popcount(w));
    return n;
}

bool StateSet::empty() const noexcept {
    return std::all_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w == 0; });
}

State StateSet::first() const noexcept {
    for (std::size_t w = 0; w < words_.size(); ++w) {
        if (words_[w] != 0) return static_cast<State>(w * 64 + std::countr_zero(words_[w]));
    }
    return static_cast<State>(width_);
}

std::vector<State> StateSet::members() const {
    std::vector<State> out;
    out.reserve(count());
    for_each([&](State q) { out.push_back(q); });
    return out;
}

StateSet& StateSet::operator|=(const StateSet& other) noexcept {
    for (std::size_t i = 0; i < words_.size() && i < other.words_.size(); ++i) words_[i] |= other.words_[i];
    return *this;
}

StateSet& StateSet::operator&=(const StateSet& other) noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i) {
        words_[i] &= i < other.words_.size() ? other.words_[i] : 0;
    }
    return *this;
}

bool StateSet::is_subset_of(const StateSet& other) const noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i) {
        const std::uint64_t o = i < other.words_.size() ? other.words_[i] : 0;
        if ((words_[i] & ~o) != 0) return false;
    }
    return true;
}

std::size_t StateSet::hash() const noexcept {
    std::uint64_t h = 0x9e3779b97f4a7c15ULL ^ width_;
    for (auto w : words_) {
        h ^= w + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return static_cast<std::size_t>(h);
}

}  // namespace ltlsync
