#pragma once

#include <string_view>
#include <vector>

#include "fsi/bigint.hpp"
#include "fsi/classes.hpp"
#include "fsi/group.hpp"

namespace fsi::test {

inline Group make(std::string_view descriptor) { return enumerate_group(preset(descriptor)); }

struct Built {
  Group g;
  ClassData cd;
};

inline Built build(std::string_view descriptor) {
  Group g = make(descriptor);
  ClassData cd = conjugacy_classes(g);
  return {std::move(g), std::move(cd)};
}

inline std::vector<BigInt> ints(std::initializer_list<long> values) {
  std::vector<BigInt> out;
  for (long v : values) out.emplace_back(v);
  return out;
}

inline Rational q(long num, long den = 1) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

// Every preset the suite covers, plus a few larger ones for property tests.
inline const std::vector<std::string_view>& small_presets() {
  static const std::vector<std::string_view> names{
      "cyclic:1",     "cyclic:2",     "cyclic:3",      "cyclic:4",      "cyclic:5",
      "cyclic:6",     "cyclic:7",     "cyclic:8",      "cyclic:9",      "cyclic:10",
      "cyclic:11",    "cyclic:12",    "elementary_abelian_2:2",          "symmetric:3",
      "symmetric:4",  "alternating:4", "alternating:5", "dihedral:4",   "dihedral:5",
      "quaternion:8", "sl23",         "dicyclic:3",    "quaternion:16", "dihedral:6"};
  return names;
}

}  // namespace fsi::test
