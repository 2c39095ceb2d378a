#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "fsi/bigint.hpp"
#include "fsi/class_algebra.hpp"
#include "fsi/classes.hpp"
#include "fsi/group.hpp"

namespace fsi {

// p[m] = sum_i a_i^m over the unknown roots a_i; rho_minus_1 = sum_i 1/a_i.
struct PowerSums {
  std::vector<Rational> p;
  Rational rho_minus_1;
};

// Exact polynomial over Q, coefficients in ascending degree.
class RationalPolynomial {
 public:
  RationalPolynomial() = default;
  explicit RationalPolynomial(std::vector<Rational> coeffs);

  // prod_i (X - a_i) from sigma_0 = 1, sigma_1, ..., sigma_n.
  static RationalPolynomial from_elementary(std::span<const Rational> sigma);
  static RationalPolynomial from_roots(std::span<const Rational> roots);

  std::size_t degree() const { return coeffs_.empty() ? 0 : coeffs_.size() - 1; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  bool is_monic() const { return !coeffs_.empty() && coeffs_.back() == 1; }

  Rational operator()(const Rational& x) const;

  // Divides by (X - r); returns the remainder.
  Rational divide_linear(const Rational& r, RationalPolynomial& quotient) const;

  // Scaled by the least common denominator: integer coefficients.
  std::vector<BigInt> cleared() const;

  std::string to_string() const;

  friend bool operator==(const RationalPolynomial&, const RationalPolynomial&) = default;

 private:
  std::vector<Rational> coeffs_;
};

// Multiset of nonzero integers, held in descending order.
class IndicatorMultiset {
 public:
  IndicatorMultiset() = default;
  explicit IndicatorMultiset(std::vector<BigInt> entries);

  const std::vector<BigInt>& entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }
  std::size_t count(const BigInt& v) const;
  std::size_t count_positive() const;
  std::size_t count_negative() const;
  BigInt sum() const;
  BigInt sum_of_squares() const;

  // "1,1,1,1,-2"
  std::string to_string() const;

  friend bool operator==(const IndicatorMultiset&, const IndicatorMultiset&) = default;

 private:
  std::vector<BigInt> entries_;
};

// p[m] = s(m+2) / order^(m+1) for m < terms; rho_minus_1 = s(1).
// Needs s(1..terms+1). Throws InconsistencyError unless s(2) = order * k_r.
PowerSums power_sums_from_counts(const SolutionCounts& sc, const BigInt& order,
                                 std::size_t k_r, std::size_t terms);
inline PowerSums power_sums_from_counts(const SolutionCounts& sc, const BigInt& order,
                                        std::size_t k_r) {
  return power_sums_from_counts(sc, order, k_r, k_r);
}

// sigma_0..sigma_n with n = p[0]. With use_shortcut, sigma_n comes from
// sigma_n * rho_{-1} = sigma_{n-1} and p[n] is not needed; otherwise the
// Newton recursion runs all the way and p[n] must be present.
std::vector<Rational> elementary_symmetric(const PowerSums& ps, bool use_shortcut = true);

RationalPolynomial newton_elementary(const PowerSums& ps, bool use_shortcut = true);

// All roots with multiplicity. Tries +-1/d for d | order first (largest
// |root| first, positive before negative), then the rational root theorem
// on the cleared polynomial. Throws InconsistencyError if it does not split.
std::vector<Rational> extract_rational_roots(const RationalPolynomial& poly,
                                             const BigInt& order);

struct RecoveryOptions {
  bool use_shortcut = true;
};

struct Recovery {
  std::size_t k_r = 0;
  SolutionCounts counts;
  PowerSums sums;
  std::vector<Rational> sigma;
  RationalPolynomial polynomial;
  std::vector<Rational> roots;
  IndicatorMultiset multiset;
};

// Inverts a solution-count sequence: power sums, Newton, roots, reciprocals.
Recovery recover_from_counts(const SolutionCounts& sc, const BigInt& order,
                             std::size_t k_r, RecoveryOptions options = {});

Recovery recover(const Group& g, const ClassData& cd, const StructureTensor& t,
                 RecoveryOptions options = {});
Recovery recover(const Group& g, const ClassData& cd, RecoveryOptions options = {});

IndicatorMultiset recover_indicator_multiset(const Group& g, const ClassData& cd);

}  // namespace fsi
