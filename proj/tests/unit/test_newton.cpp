#include <doctest.h>

#include "fsi/error.hpp"
#include "fsi/newton.hpp"
#include "helpers.hpp"

using namespace fsi;
using fsi::test::build;
using fsi::test::ints;
using fsi::test::q;

namespace {

SolutionCounts counts(std::initializer_list<long> values) { return {2, ints(values)}; }

}  // namespace

TEST_CASE("power sums from counts") {
  const auto s3 = power_sums_from_counts(counts({4, 18, 90, 486}), BigInt(6), 3, 3);
  CHECK(s3.p == std::vector<Rational>{q(3), q(5, 2), q(9, 4)});
  CHECK(s3.rho_minus_1 == 4);

  const auto c2 = power_sums_from_counts(counts({2, 4, 8}), BigInt(2), 2, 2);
  CHECK(c2.p == std::vector<Rational>{q(2), q(2)});
  CHECK(c2.rho_minus_1 == 2);

  const auto q8 = power_sums_from_counts(counts({2, 40, 224, 2176, 15872}), BigInt(8), 5, 4);
  CHECK(q8.p == std::vector<Rational>{q(5), q(7, 2), q(17, 4), q(31, 8)});
  CHECK(q8.rho_minus_1 == 2);
}

TEST_CASE("power sums reject inconsistent input") {
  CHECK_THROWS_AS(power_sums_from_counts(counts({4, 19, 90, 486}), BigInt(6), 3, 3),
                  InconsistencyError);
  CHECK_THROWS_AS(power_sums_from_counts(counts({4, 24, 90, 486}), BigInt(6), 3, 3),
                  InconsistencyError);
  CHECK_THROWS_AS(power_sums_from_counts(counts({4, 18}), BigInt(6), 3, 3), InputError);
}

TEST_CASE("Newton recursion with the shortcut") {
  PowerSums s3{{q(3), q(5, 2), q(9, 4)}, BigInt(4)};
  CHECK(elementary_symmetric(s3, true) == std::vector<Rational>{q(1), q(5, 2), q(2), q(1, 2)});
  CHECK(newton_elementary(s3, true).to_string() == "X^3 - 5/2*X^2 + 2*X - 1/2");

  PowerSums c2{{q(2), q(2)}, BigInt(2)};
  CHECK(newton_elementary(c2, true).to_string() == "X^2 - 2*X + 1");

  PowerSums q8{{q(5), q(7, 2), q(17, 4), q(31, 8), q(65, 16)}, BigInt(2)};
  CHECK(elementary_symmetric(q8, true) ==
        std::vector<Rational>{q(1), q(7, 2), q(4), q(1), q(-1), q(-1, 2)});
  CHECK(newton_elementary(q8, true).to_string() == "X^5 - 7/2*X^4 + 4*X^3 - X^2 - X + 1/2");
}

TEST_CASE("long path needs one more power sum and agrees") {
  PowerSums s3{{q(3), q(5, 2), q(9, 4)}, BigInt(4)};
  CHECK_THROWS_AS(elementary_symmetric(s3, false), InputError);
  s3.p.push_back(q(1) + q(1) + q(1, 8));
  CHECK(elementary_symmetric(s3, false) == elementary_symmetric(s3, true));
}

TEST_CASE("Newton rejects a zero rho") {
  PowerSums bad{{q(2), q(2)}, BigInt(0)};
  CHECK_THROWS_AS(elementary_symmetric(bad, true), InconsistencyError);
}

TEST_CASE("polynomial helpers") {
  const auto p = RationalPolynomial::from_roots(std::vector<Rational>{q(1), q(1), q(1, 2)});
  CHECK(p.to_string() == "X^3 - 5/2*X^2 + 2*X - 1/2");
  CHECK(p.is_monic());
  CHECK(p.degree() == 3);
  CHECK(p(q(1)) == 0);
  CHECK(p(q(1, 2)) == 0);
  CHECK(p(q(0)) == q(-1, 2));
  CHECK(p.cleared() == ints({-1, 4, -5, 2}));
  RationalPolynomial quotient;
  CHECK(p.divide_linear(q(1, 2), quotient) == 0);
  CHECK(quotient.to_string() == "X^2 - 2*X + 1");
  CHECK(p.divide_linear(q(2), quotient) == p(q(2)));
  CHECK(RationalPolynomial{}.to_string() == "0");
}

TEST_CASE("root extraction examples") {
  const auto s3 = RationalPolynomial::from_elementary(
      std::vector<Rational>{q(1), q(5, 2), q(2), q(1, 2)});
  CHECK(extract_rational_roots(s3, BigInt(6)) == std::vector<Rational>{q(1), q(1), q(1, 2)});
  const auto c2 = RationalPolynomial(std::vector<Rational>{q(1), q(-2), q(1)});
  CHECK(extract_rational_roots(c2, BigInt(2)) == std::vector<Rational>{q(1), q(1)});
  const auto q8 = RationalPolynomial::from_elementary(
      std::vector<Rational>{q(1), q(7, 2), q(4), q(1), q(-1), q(-1, 2)});
  CHECK(extract_rational_roots(q8, BigInt(8)) ==
        std::vector<Rational>{q(1), q(1), q(1), q(1), q(-1, 2)});
}

TEST_CASE("root extraction falls back to the rational root theorem") {
  const auto p = RationalPolynomial::from_roots(std::vector<Rational>{q(2, 3), q(1), q(-5)});
  auto roots = extract_rational_roots(p, BigInt(6));
  std::sort(roots.begin(), roots.end());
  CHECK(roots == std::vector<Rational>{q(-5), q(2, 3), q(1)});
}

TEST_CASE("root extraction errors") {
  const RationalPolynomial irreducible(std::vector<Rational>{q(-2), q(0), q(1)});
  CHECK_THROWS_AS(extract_rational_roots(irreducible, BigInt(8)), InconsistencyError);
  const RationalPolynomial non_monic(std::vector<Rational>{q(-1), q(2)});
  CHECK_THROWS_AS(extract_rational_roots(non_monic, BigInt(8)), InputError);
  const RationalPolynomial zero_constant(std::vector<Rational>{q(0), q(1)});
  CHECK_THROWS_AS(extract_rational_roots(zero_constant, BigInt(8)), InconsistencyError);
}

TEST_CASE("indicator multiset helpers") {
  const IndicatorMultiset im(ints({1, -2, 1, 1, 1}));
  CHECK(im.to_string() == "1,1,1,1,-2");
  CHECK(im.size() == 5);
  CHECK(im.count(BigInt(1)) == 4);
  CHECK(im.count_positive() == 4);
  CHECK(im.count_negative() == 1);
  CHECK(im.sum() == 2);
  CHECK(im.sum_of_squares() == 8);
  CHECK(im == IndicatorMultiset(ints({-2, 1, 1, 1, 1})));
}

TEST_CASE("end-to-end recovery") {
  CHECK(recover_indicator_multiset(build("symmetric:3").g, build("symmetric:3").cd) ==
        IndicatorMultiset(ints({1, 1, 2})));
  const auto q8 = build("quaternion:8");
  CHECK(recover_indicator_multiset(q8.g, q8.cd) == IndicatorMultiset(ints({1, 1, 1, 1, -2})));
  const auto c1 = build("cyclic:1");
  CHECK(recover_indicator_multiset(c1.g, c1.cd) == IndicatorMultiset(ints({1})));
  const auto c3 = build("cyclic:3");
  CHECK(recover_indicator_multiset(c3.g, c3.cd) == IndicatorMultiset(ints({1})));
}

TEST_CASE("shortcut and long path recover the same multiset") {
  for (auto name : fsi::test::small_presets()) {
    CAPTURE(name);
    const auto [g, cd] = build(name);
    const auto fast = recover(g, cd, RecoveryOptions{true});
    const auto slow = recover(g, cd, RecoveryOptions{false});
    CHECK(fast.multiset == slow.multiset);
    CHECK(fast.sigma == slow.sigma);
    CHECK(fast.counts.max_n() == cd.num_real_classes() + 1);
    CHECK(slow.counts.max_n() == cd.num_real_classes() + 2);
    CHECK(RationalPolynomial::from_roots(fast.roots) == fast.polynomial);
    CHECK(fast.multiset.size() == cd.num_real_classes());
    CHECK(fast.multiset.sum() == fast.counts(1));
  }
}

TEST_CASE("recovery rejects corrupted counts") {
  auto sc = counts({4, 18, 91});
  CHECK_THROWS(recover_from_counts(sc, BigInt(6), 3));
}
