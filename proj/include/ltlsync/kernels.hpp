#pragma once

// Data-parallel inner loops of the automaton searches. Every kernel has a
// scalar reference implementation; vectorized variants are picked at runtime
// from the host CPU and must produce identical results.

#include <cstdint>
#include <span>
#include <string_view>

namespace ltlsync::kernels {

enum class Isa { scalar, avx2 };

/// Best variant supported by this CPU and this build.
Isa detected_isa() noexcept;
/// Variant currently used by the dispatching entry points.
Isa active_isa() noexcept;
/// Forces a variant; requests for unsupported variants fall back to scalar.
/// Returns the variant actually selected.
Isa select_isa(Isa requested) noexcept;
std::string_view isa_name(Isa isa) noexcept;

/// out[i] = column[index[i]]. All indices must be < column.size().
void gather(std::span<const std::uint32_t> column, std::span<const std::uint32_t> index,
            std::span<std::uint32_t> out) noexcept;

/// True when some element equals value.
bool contains(std::span<const std::uint32_t> values, std::uint32_t value) noexcept;

namespace scalar {
void gather(std::span<const std::uint32_t> column, std::span<const std::uint32_t> index,
            std::span<std::uint32_t> out) noexcept;
bool contains(std::span<const std::uint32_t> values, std::uint32_t value) noexcept;
}  // namespace scalar

namespace avx2 {
bool available() noexcept;
void gather(std::span<const std::uint32_t> column, std::span<const std::uint32_t> index,
            std::span<std::uint32_t> out) noexcept;
bool contains(std::span<const std::uint32_t> values, std::uint32_t value) noexcept;
}  // namespace avx2

}  // namespace ltlsync::kernels
