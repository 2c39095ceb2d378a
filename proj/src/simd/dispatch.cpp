#include <atomic>
#include <cstdlib>
#include <stdexcept>
#include <string>

#include "fsi/simd/kernels.hpp"

namespace fsi::simd {

namespace {

struct Table {
  void (*gather)(std::span<const std::uint32_t>, std::span<const std::uint32_t>,
                 std::span<std::uint32_t>);
  bool (*equal)(std::span<const std::uint32_t>, std::span<const std::uint32_t>);
  std::size_t (*count_equal)(std::span<const std::uint32_t>, std::uint32_t);
};

constexpr Table kScalar{&scalar::gather, &scalar::equal, &scalar::count_equal};
#if defined(FSI_HAVE_AVX2)
constexpr Table kAvx2{&avx2::gather, &avx2::equal, &avx2::count_equal};
#endif

const Table& table_for(Level level) {
#if defined(FSI_HAVE_AVX2)
  if (level == Level::avx2) return kAvx2;
#endif
  (void)level;
  return kScalar;
}

std::atomic<Level>& current() {
  static std::atomic<Level> level{detect_level()};
  return level;
}

const Table& active() { return table_for(current().load(std::memory_order_relaxed)); }

}  // namespace

std::string_view to_string(Level level) {
  switch (level) {
    case Level::scalar: return "scalar";
    case Level::avx2: return "avx2";
  }
  return "unknown";
}

std::optional<Level> parse_level(std::string_view name) {
  if (name == "scalar") return Level::scalar;
  if (name == "avx2") return Level::avx2;
  return std::nullopt;
}

bool supported(Level level) {
  switch (level) {
    case Level::scalar: return true;
    case Level::avx2:
#if defined(FSI_HAVE_AVX2)
      return __builtin_cpu_supports("avx2");
#else
      return false;
#endif
  }
  return false;
}

Level detect_level() {
  if (const char* env = std::getenv("FSIKIT_SIMD")) {
    if (auto level = parse_level(env); level && supported(*level)) return *level;
  }
  return supported(Level::avx2) ? Level::avx2 : Level::scalar;
}

Level active_level() { return current().load(std::memory_order_relaxed); }

void set_level(Level level) {
  if (!supported(level))
    throw std::invalid_argument("SIMD level not supported on this machine: " +
                                std::string(to_string(level)));
  current().store(level, std::memory_order_relaxed);
}

void gather(std::span<const std::uint32_t> table,
            std::span<const std::uint32_t> idx,
            std::span<std::uint32_t> out) {
  active().gather(table, idx, out);
}

bool equal(std::span<const std::uint32_t> a, std::span<const std::uint32_t> b) {
  return active().equal(a, b);
}

std::size_t count_equal(std::span<const std::uint32_t> values,
                        std::uint32_t target) {
  return active().count_equal(values, target);
}

}  // namespace fsi::simd
