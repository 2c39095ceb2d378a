#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fsi/bigint.hpp"

namespace fsi::oracle {

// Exact element of a cyclotomic field Q(zeta_N): sum_j c_j zeta_N^j with
// j < phi(N), i.e. reduced modulo the N-th cyclotomic polynomial, so equal
// values in the same field have equal coefficients. Binary operations lift
// both sides to Q(zeta_lcm).
class Cyclotomic {
 public:
  Cyclotomic() : c_{Rational(0)} {}
  Cyclotomic(Rational r) : c_{std::move(r)} {}  // NOLINT: implicit by intent
  Cyclotomic(long v) : c_{Rational(v)} {}       // NOLINT

  // E(n)^j = exp(2 pi i j / n)
  static Cyclotomic root_of_unity(unsigned n, long j);

  // GAP-like syntax without spaces: "1", "-1/2", "E(3)", "-E(5)^2-E(5)^3",
  // "2*E(4)+1". Throws InputError.
  static Cyclotomic parse(std::string_view text);

  unsigned field() const { return n_; }

  Cyclotomic operator+(const Cyclotomic& o) const;
  Cyclotomic operator-(const Cyclotomic& o) const;
  Cyclotomic operator*(const Cyclotomic& o) const;
  Cyclotomic operator-() const;
  Cyclotomic conj() const;

  bool operator==(const Cyclotomic& o) const;

  bool is_zero() const;
  std::optional<Rational> as_rational() const;

  std::string to_string() const;

 private:
  Cyclotomic(unsigned n, std::vector<Rational> c);
  Cyclotomic lifted(unsigned m) const;
  void reduce();

  unsigned n_ = 1;
  std::vector<Rational> c_;
};

}  // namespace fsi::oracle
