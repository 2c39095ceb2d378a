#pragma once

// Data-parallel kernels used by the group engine. Every kernel has a scalar
// reference implementation; wider variants are selected once at startup
// from CPUID (or the FSIKIT_SIMD environment variable) and must produce
// bit-identical results.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>

namespace fsi::simd {

enum class Level { scalar, avx2 };

std::string_view to_string(Level level);
std::optional<Level> parse_level(std::string_view name);

// True if this binary contains the variant and the CPU can run it.
bool supported(Level level);

// Best supported level, unless FSIKIT_SIMD names another supported one.
Level detect_level();

Level active_level();

// Throws std::invalid_argument if the level is not supported here.
void set_level(Level level);

// out[i] = table[idx[i]]. Every idx[i] must be < table.size().
// Composing permutations p then q is gather(q, p, out).
void gather(std::span<const std::uint32_t> table,
            std::span<const std::uint32_t> idx,
            std::span<std::uint32_t> out);

bool equal(std::span<const std::uint32_t> a, std::span<const std::uint32_t> b);

std::size_t count_equal(std::span<const std::uint32_t> values,
                        std::uint32_t target);

namespace scalar {
void gather(std::span<const std::uint32_t> table,
            std::span<const std::uint32_t> idx,
            std::span<std::uint32_t> out);
bool equal(std::span<const std::uint32_t> a, std::span<const std::uint32_t> b);
std::size_t count_equal(std::span<const std::uint32_t> values,
                        std::uint32_t target);
}  // namespace scalar

#if defined(FSI_HAVE_AVX2)
namespace avx2 {
void gather(std::span<const std::uint32_t> table,
            std::span<const std::uint32_t> idx,
            std::span<std::uint32_t> out);
bool equal(std::span<const std::uint32_t> a, std::span<const std::uint32_t> b);
std::size_t count_equal(std::span<const std::uint32_t> values,
                        std::uint32_t target);
}  // namespace avx2
#endif

}  // namespace fsi::simd
