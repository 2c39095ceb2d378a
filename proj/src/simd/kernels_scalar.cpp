#include <cassert>

#include "fsi/simd/kernels.hpp"

namespace fsi::simd::scalar {

void gather(std::span<const std::uint32_t> table,
            std::span<const std::uint32_t> idx,
            std::span<std::uint32_t> out) {
  assert(out.size() >= idx.size());
  for (std::size_t i = 0; i < idx.size(); ++i) {
    assert(idx[i] < table.size());
    out[i] = table[idx[i]];
  }
}

bool equal(std::span<const std::uint32_t> a, std::span<const std::uint32_t> b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != b[i]) return false;
  return true;
}

std::size_t count_equal(std::span<const std::uint32_t> values,
                        std::uint32_t target) {
  std::size_t n = 0;
  for (auto v : values) n += (v == target);
  return n;
}

}  // namespace fsi::simd::scalar
