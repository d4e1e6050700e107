#include "ltlsync/kernels.hpp"

#include <atomic>

namespace ltlsync::kernels {

#ifndef LTLSYNC_HAVE_AVX2
namespace avx2 {
bool available() noexcept { return false; }
void gather(std::span<const std::uint32_t> column, std::span<const std::uint32_t> index,
            std::span<std::uint32_t> out) noexcept {
    scalar::gather(column, index, out);
}
bool contains(std::span<const std::uint32_t> values, std::uint32_t value) noexcept {
    return scalar::contains(values, value);
}
}  // namespace avx2
#endif

namespace {

std::atomic<Isa>& current() {
    static std::atomic<Isa> isa{detected_isa()};
    return isa;
}

}  // namespace

Isa detected_isa() noexcept { return avx2::available() ? Isa::avx2 : Isa::scalar; }

Isa active_isa() noexcept { return current().load(std::memory_order_relaxed); }

Isa select_isa(Isa requested) noexcept {
    const Isa chosen = (requested == Isa::avx2 && !avx2::available()) ? Isa::scalar : requested;
    current().store(chosen, std::memory_order_relaxed);
    return chosen;
}

std::string_view isa_name(Isa isa) noexcept {
    switch (isa) {
        case Isa::scalar: return "scalar";
        case Isa::avx2: return "avx2";
    }
    return "unknown";
}

// Short inputs stay scalar; the vector setup cost dominates below one lane group.
void gather(std::span<const std::uint32_t> column, std::span<const std::uint32_t> index,
            std::span<std::uint32_t> out) noexcept {
    if (index.size() >= 8 && active_isa() == Isa::avx2) {
        avx2::gather(column, index, out);
    } else {
        scalar::gather(column, index, out);
    }
}

bool contains(std::span<const std::uint32_t> values, std::uint32_t value) noexcept {
    if (values.size() >= 8 && active_isa() == Isa::avx2) return avx2::contains(values, value);
    return scalar::contains(values, value);
}

}  // namespace ltlsync::kernels
