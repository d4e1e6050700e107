#include "ltlsync/kernels.hpp"

#include <immintrin.h>

namespace ltlsync::kernels::avx2 {

bool available() noexcept { return __builtin_cpu_supports("avx2"); }

void gather(std::span<const std::uint32_t> column, std::span<const std::uint32_t> index,
            std::span<std::uint32_t> out) noexcept {
    const auto* base = reinterpret_cast<const int*>(column.data());
    std::size_t i = 0;
    const std::size_t n = index.size();
    for (; i + 8 <= n; i += 8) {
        const __m256i idx = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(index.data() + i));
        const __m256i v = _mm256_i32gather_epi32(base, idx, 4);
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(out.data() + i), v);
    }
    for (; i < n; ++i) out[i] = column[index[i]];
}

bool contains(std::span<const std::uint32_t> values, std::uint32_t value) noexcept {
    const __m256i needle = _mm256_set1_epi32(static_cast<int>(value));
    std::size_t i = 0;
    const std::size_t n = values.size();
    for (; i + 8 <= n; i += 8) {
        const __m256i v = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(values.data() + i));
        if (_mm256_movemask_epi8(_mm256_cmpeq_epi32(v, needle)) != 0) return true;
    }
    for (; i < n; ++i) {
        if (values[i] == value) return true;
    }
    return false;
}

}  // namespace ltlsync::kernels::avx2
