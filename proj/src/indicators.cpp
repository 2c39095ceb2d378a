#include "fsi/indicators.hpp"

#include "fsi/error.hpp"

namespace fsi {

IndicatorSummary indicator_summary(const IndicatorMultiset& im, const ClassData& cd) {
  IndicatorSummary s;
  s.k_r = cd.num_real_classes();
  s.k_total = cd.num_classes();
  if (im.size() != s.k_r)
    throw InconsistencyError("multiset has " + std::to_string(im.size()) +
                             " entries but the group has " + std::to_string(s.k_r) +
                             " real classes");
  s.count_plus = im.count_positive();
  s.count_minus = im.count_negative();
  s.count_zero = s.k_total - s.k_r;
  return s;
}

std::optional<NegativeWitness> detect_negative_indicator(const SolutionCounts& sc,
                                                         const BigInt& order,
                                                         std::size_t max_n) {
  if (sc.max_n() < max_n + 1)
    throw InputError("negative-indicator scan up to n = " + std::to_string(max_n) +
                     " needs s(1.." + std::to_string(max_n + 1) + ")");
  // n = 1 reduces to k_r > s(1); the scan starts at n = 3.
  for (std::size_t n = 3; n <= max_n; n += 2) {
    BigInt lhs = sc(n) * order;
    if (lhs < sc(n + 1)) return NegativeWitness{n, std::move(lhs), sc(n + 1)};
  }
  return std::nullopt;
}

std::optional<std::size_t> monotonicity_violation(const SolutionCounts& sc,
                                                  const BigInt& order) {
  for (std::size_t n = 1; n < sc.max_n(); ++n)
    if (sc(n + 1) > sc(n) * order) return n;
  return std::nullopt;
}

LimitReport verify_limit_identity(const IndicatorMultiset& im, const Group& g) {
  LimitReport r;
  r.ones = im.count(BigInt(1));
  r.squares_index = squares_subgroup_index(g);
  r.passed = r.ones == r.squares_index;
  return r;
}

HigherIndicatorReport higher_indicator_check(const Group& g, const ClassData& cd,
                                             unsigned long k, std::size_t max_n,
                                             const oracle::CharacterTableFixture* fixture) {
  if (k < 2) throw InputError("higher indicators need k >= 2");
  HigherIndicatorReport r;
  r.k = k;
  const auto t = structure_constants(g, cd);
  r.counts = solution_count_sequence(power_distribution(g, cd, k), t, k, max_n);
  const BigInt order(static_cast<unsigned long>(g.order()));
  BigInt scale = 1;  // |G|^(n-1)
  for (std::size_t n = 1; n <= max_n; ++n) {
    Rational q(r.counts(n), scale);
    q.canonicalize();
    r.normalized.push_back(std::move(q));
    scale *= order;
  }
  if (!fixture) return r;

  const auto alignment = oracle::align_fixture(*fixture, g, cd, t);
  r.indicators = oracle::higher_indicators(*fixture, alignment, g, cd, k);
  r.fixture_checked = true;
  for (std::size_t n = 1; n <= max_n; ++n) {
    Rational sum = 0;
    for (std::size_t chi = 0; chi < r.indicators.size(); ++chi) {
      const BigInt eps_n = pow(r.indicators[chi], n);
      const BigInt deg = fixture->degree(chi);
      // chi(1)^(2-n), which is chi(1) when n = 1
      if (n <= 2) sum += Rational(eps_n * pow(deg, 2 - n));
      else {
        Rational term(eps_n, pow(deg, n - 2));
        term.canonicalize();
        sum += term;
      }
    }
    sum.canonicalize();
    if (sum != r.normalized[n - 1] && !r.first_mismatch) r.first_mismatch = n;
    r.predicted.push_back(std::move(sum));
  }
  r.passed = !r.first_mismatch;
  return r;
}

}  // namespace fsi
