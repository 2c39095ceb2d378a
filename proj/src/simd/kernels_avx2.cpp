// Compiled with -mavx2; only reached through the dispatcher after a CPUID
// check.

#include <immintrin.h>

#include <algorithm>
#include <cassert>

#include "fsi/simd/kernels.hpp"

namespace fsi::simd::avx2 {

void gather(std::span<const std::uint32_t> table,
            std::span<const std::uint32_t> idx,
            std::span<std::uint32_t> out) {
  assert(out.size() >= idx.size());
  const auto* base = reinterpret_cast<const int*>(table.data());
  const std::size_t n = idx.size();
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    __m256i vi = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(idx.data() + i));
    __m256i v = _mm256_i32gather_epi32(base, vi, 4);
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(out.data() + i), v);
  }
  for (; i < n; ++i) out[i] = table[idx[i]];
}

bool equal(std::span<const std::uint32_t> a, std::span<const std::uint32_t> b) {
  if (a.size() != b.size()) return false;
  const std::size_t n = a.size();
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a.data() + i));
    __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b.data() + i));
    if (_mm256_movemask_epi8(_mm256_cmpeq_epi32(va, vb)) != -1) return false;
  }
  for (; i < n; ++i)
    if (a[i] != b[i]) return false;
  return true;
}

std::size_t count_equal(std::span<const std::uint32_t> values,
                        std::uint32_t target) {
  const std::size_t n = values.size();
  const __m256i t = _mm256_set1_epi32(static_cast<int>(target));
  // Lane counters hold negated hit counts (cmpeq yields -1). Flush before
  // 2^31 iterations could overflow a lane.
  std::size_t total = 0;
  std::size_t i = 0;
  while (i + 8 <= n) {
    __m256i acc = _mm256_setzero_si256();
    const std::size_t stop = std::min(n - (n - i) % 8, i + (std::size_t{1} << 30));
    for (; i < stop; i += 8) {
      __m256i v = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(values.data() + i));
      acc = _mm256_sub_epi32(acc, _mm256_cmpeq_epi32(v, t));
    }
    alignas(32) std::uint32_t lanes[8];
    _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), acc);
    for (auto l : lanes) total += l;
  }
  for (; i < n; ++i) total += (values[i] == target);
  return total;
}

}  // namespace fsi::simd::avx2
