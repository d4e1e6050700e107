#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <vector>

namespace ltlsync {

using State = std::uint32_t;
using Letter = std::uint32_t;

/// Letters of a word, as indices into the owning alphabet. May be empty.
using Word = std::vector<Letter>;

/// Fixed-width bit set over state indices.
class StateSet {
public:
    StateSet() = default;
    explicit StateSet(std::size_t width);
    StateSet(std::size_t width, std::initializer_list<State> members);

    static StateSet full(std::size_t width);
    static StateSet singleton(std::size_t width, State q);

    std::size_t width() const noexcept { return width_; }
    bool contains(State q) const noexcept {
        return q < width_ && ((words_[q >> 6] >> (q & 63)) & 1U);
    }
    void insert(State q) noexcept { words_[q >> 6] |= std::uint64_t{1} << (q & 63); }
    void erase(State q) noexcept { words_[q >> 6] &= ~(std::uint64_t{1} << (q & 63)); }

    std::size_t count() const noexcept;
    bool empty() const noexcept;
    /// Smallest member, or width() when empty.
    State first() const noexcept;

    /// Members in increasing order.
    std::vector<State> members() const;

    template <class F>
    void for_each(F&& f) const {
        for (std::size_t w = 0; w < words_.size(); ++w) {
            std::uint64_t bits = words_[w];
            while (bits != 0) {
                const int bit = std::countr_zero(bits);
                f(static_cast<State>(w * 64 + static_cast<std::size_t>(bit)));
                bits &= bits - 1;
            }
        }
    }

    StateSet& operator|=(const StateSet& other) noexcept;
    StateSet& operator&=(const StateSet& other) noexcept;
    bool is_subset_of(const StateSet& other) const noexcept;

    const std::vector<std::uint64_t>& raw() const noexcept { return words_; }

    friend bool operator==(const StateSet&, const StateSet&) = default;
    friend auto operator<=>(const StateSet& a, const StateSet& b) {
        return a.words_ <=> b.words_;
    }

    std::size_t hash() const noexcept;

private:
    std::size_t width_ = 0;
    std::vector<std::uint64_t> words_;
};

}  // namespace ltlsync

template <>
struct std::hash<ltlsync::StateSet> {
    std::size_t operator()(const ltlsync::StateSet& s) const noexcept { return s.hash(); }
};
