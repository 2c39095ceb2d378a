#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <vector>

#include "fsi/bigint.hpp"
#include "fsi/character_table.hpp"
#include "fsi/class_algebra.hpp"
#include "fsi/classes.hpp"
#include "fsi/group.hpp"
#include "fsi/newton.hpp"

namespace fsi {

struct IndicatorSummary {
  std::size_t count_plus = 0;
  std::size_t count_minus = 0;
  std::size_t count_zero = 0;
  std::size_t k_r = 0;
  std::size_t k_total = 0;
};

// Throws InconsistencyError if the multiset size is not k_r.
IndicatorSummary indicator_summary(const IndicatorMultiset& im, const ClassData& cd);

// s(n) * |G| < s(n+1) for odd n: some character has indicator -1.
struct NegativeWitness {
  std::size_t n = 0;
  BigInt lhs;  // s(n) * |G|
  BigInt rhs;  // s(n+1)
};

// The scan bound used when none is given: max(k_r + 2, 16).
inline std::size_t default_scan_bound(std::size_t k_r) {
  return std::max<std::size_t>(k_r + 2, 16);
}

// First odd n in [3, max_n] with s(n) |G| < s(n+1). Needs s(1..max_n+1).
// No witness does not mean no indicator -1.
std::optional<NegativeWitness> detect_negative_indicator(const SolutionCounts& sc,
                                                         const BigInt& order,
                                                         std::size_t max_n);

// First n with s(n+1) > |G| s(n) over the whole sequence, if any.
std::optional<std::size_t> monotonicity_violation(const SolutionCounts& sc,
                                                  const BigInt& order);

// Exact finite form of lim s(n)/|G|^(n-1) = [G : <g^2>]: the number of
// entries equal to 1 must be the index of the squares subgroup.
struct LimitReport {
  std::size_t ones = 0;
  std::size_t squares_index = 0;
  bool passed = false;
};

LimitReport verify_limit_identity(const IndicatorMultiset& im, const Group& g);

struct HigherIndicatorReport {
  unsigned long k = 2;
  SolutionCounts counts;
  std::vector<Rational> normalized;  // s_k(n) / |G|^(n-1), n = 1..max_n
  bool fixture_checked = false;
  std::vector<BigInt> indicators;    // eps_k per fixture character
  std::vector<Rational> predicted;   // sum_chi eps_k^n / chi(1)^(n-2)
  std::optional<std::size_t> first_mismatch;
  bool passed = true;
};

// s_k(n) for n = 1..max_n; with a fixture, checks
// s_k(n) / |G|^(n-1) = sum_chi eps_k(chi)^n / chi(1)^(n-2) exactly.
// Throws InputError on fixture/group mismatch or k < 2.
HigherIndicatorReport higher_indicator_check(const Group& g, const ClassData& cd,
                                             unsigned long k, std::size_t max_n,
                                             const oracle::CharacterTableFixture* fixture);

}  // namespace fsi
