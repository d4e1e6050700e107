#include "ltlsync/kernels.hpp"

namespace ltlsync::kernels::scalar {

void gather(std::span<const std::uint32_t> column, std::span<const std::uint32_t> index,
            std::span<std::uint32_t> out) noexcept {
    for (std::size_t i = 0; i < index.size(); ++i) out[i] = column[index[i]];
}

bool contains(std::span<const std::uint32_t> values, std::uint32_t value) noexcept {
    for (auto v : values) {
        if (v == value) return true;
    }
    return false;
}

}  // namespace ltlsync::kernels::scalar
