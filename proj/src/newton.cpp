#include "fsi/newton.hpp"

#include <algorithm>
#include <sstream>

#include "fsi/error.hpp"

namespace fsi {

RationalPolynomial::RationalPolynomial(std::vector<Rational> coeffs)
    : coeffs_(std::move(coeffs)) {
  for (auto& c : coeffs_) c.canonicalize();
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

RationalPolynomial RationalPolynomial::from_elementary(std::span<const Rational> sigma) {
  if (sigma.empty()) return {};
  const std::size_t n = sigma.size() - 1;
  std::vector<Rational> c(n + 1);
  for (std::size_t k = 0; k <= n; ++k) {
    c[k] = sigma[n - k];
    if ((n - k) % 2) c[k] = -c[k];
  }
  return RationalPolynomial(std::move(c));
}

RationalPolynomial RationalPolynomial::from_roots(std::span<const Rational> roots) {
  std::vector<Rational> c{Rational(1)};
  for (const auto& r : roots) {
    std::vector<Rational> next(c.size() + 1);
    for (std::size_t i = 0; i < c.size(); ++i) {
      next[i + 1] += c[i];
      next[i] -= r * c[i];
    }
    c = std::move(next);
  }
  return RationalPolynomial(std::move(c));
}

Rational RationalPolynomial::operator()(const Rational& x) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Rational RationalPolynomial::divide_linear(const Rational& r,
                                           RationalPolynomial& quotient) const {
  if (coeffs_.empty()) {
    quotient = {};
    return 0;
  }
  const std::size_t n = degree();
  std::vector<Rational> q(n);
  Rational carry = coeffs_[n];
  for (std::size_t i = n; i-- > 0;) {
    q[i] = carry;
    carry = coeffs_[i] + r * carry;
  }
  quotient = RationalPolynomial(std::move(q));
  return carry;
}

std::vector<BigInt> RationalPolynomial::cleared() const {
  BigInt lcm = 1;
  for (const auto& c : coeffs_)
    mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.get_den_mpz_t());
  std::vector<BigInt> out;
  out.reserve(coeffs_.size());
  for (const auto& c : coeffs_) out.push_back(c.get_num() * (lcm / c.get_den()));
  return out;
}

std::string RationalPolynomial::to_string() const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    const Rational& c = coeffs_[i];
    if (c == 0) continue;
    const Rational mag = abs(c);
    if (first) {
      if (sgn(c) < 0) os << "-";
    } else {
      os << (sgn(c) < 0 ? " - " : " + ");
    }
    first = false;
    const bool unit = mag == 1;
    if (i == 0) {
      os << mag.get_str();
    } else {
      if (!unit) os << mag.get_str() << "*";
      os << "X";
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

IndicatorMultiset::IndicatorMultiset(std::vector<BigInt> entries) : entries_(std::move(entries)) {
  std::sort(entries_.begin(), entries_.end(), std::greater<>{});
}

std::size_t IndicatorMultiset::count(const BigInt& v) const {
  return static_cast<std::size_t>(std::count(entries_.begin(), entries_.end(), v));
}

std::size_t IndicatorMultiset::count_positive() const {
  return static_cast<std::size_t>(
      std::count_if(entries_.begin(), entries_.end(), [](const BigInt& e) { return sgn(e) > 0; }));
}

std::size_t IndicatorMultiset::count_negative() const {
  return static_cast<std::size_t>(
      std::count_if(entries_.begin(), entries_.end(), [](const BigInt& e) { return sgn(e) < 0; }));
}

BigInt IndicatorMultiset::sum() const {
  BigInt s = 0;
  for (const auto& e : entries_) s += e;
  return s;
}

BigInt IndicatorMultiset::sum_of_squares() const {
  BigInt s = 0;
  for (const auto& e : entries_) s += e * e;
  return s;
}

std::string IndicatorMultiset::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (i) out += ",";
    out += entries_[i].get_str();
  }
  return out;
}

PowerSums power_sums_from_counts(const SolutionCounts& sc, const BigInt& order,
                                 std::size_t k_r, std::size_t terms) {
  if (terms == 0 || sc.max_n() < terms + 1)
    throw InputError("solution counts too short: need s(1.." + std::to_string(terms + 1) +
                     "), have " + std::to_string(sc.max_n()));
  if (sgn(order) <= 0) throw InputError("group order must be positive");
  if (!mpz_divisible_p(sc(2).get_mpz_t(), order.get_mpz_t()))
    throw InconsistencyError("s(2) = " + sc(2).get_str() + " is not divisible by |G| = " +
                             order.get_str());
  if (sc(2) / order != k_r)
    throw InconsistencyError("s(2)/|G| = " + BigInt(sc(2) / order).get_str() +
                             " disagrees with k_r = " + std::to_string(k_r));
  PowerSums ps;
  BigInt denom = order;
  for (std::size_t m = 0; m < terms; ++m) {
    Rational p(sc(m + 2), denom);
    p.canonicalize();
    ps.p.push_back(std::move(p));
    denom *= order;
  }
  ps.rho_minus_1 = sc(1);
  return ps;
}

std::vector<Rational> elementary_symmetric(const PowerSums& ps, bool use_shortcut) {
  if (ps.p.empty() || ps.p[0].get_den() != 1 || sgn(ps.p[0]) <= 0)
    throw InconsistencyError("p(0) must be a positive integer");
  const std::size_t n = ps.p[0].get_num().get_ui();
  const std::size_t needed = use_shortcut ? n : n + 1;
  if (ps.p.size() < needed)
    throw InputError("need power sums p(0.." + std::to_string(needed - 1) + ")");

  std::vector<Rational> sigma(n + 1);
  sigma[0] = 1;
  const std::size_t last = use_shortcut ? n - 1 : n;
  for (std::size_t k = 1; k <= last; ++k) {
    // k sigma_k = sum_{i=1..k} (-1)^(i-1) sigma_{k-i} p_i
    Rational acc = 0;
    for (std::size_t i = 1; i <= k; ++i) {
      if (i % 2) acc += sigma[k - i] * ps.p[i];
      else acc -= sigma[k - i] * ps.p[i];
    }
    sigma[k] = acc / k;
  }
  if (use_shortcut) {
    if (sgn(ps.rho_minus_1) == 0) throw InconsistencyError("rho_{-1} is zero");
    sigma[n] = sigma[n - 1] / ps.rho_minus_1;
  }
  if (sgn(sigma[n]) == 0) throw InconsistencyError("zero constant term");
  return sigma;
}

RationalPolynomial newton_elementary(const PowerSums& ps, bool use_shortcut) {
  return RationalPolynomial::from_elementary(elementary_symmetric(ps, use_shortcut));
}

namespace {

// Positive divisors in ascending order. Trial division; the integers here
// are products of small primes (degrees and group orders).
std::vector<BigInt> divisors(BigInt n) {
  n = abs(n);
  if (n == 0) throw InconsistencyError("divisors of zero requested");
  std::vector<std::pair<BigInt, unsigned>> factors;
  for (BigInt p = 2; p * p <= n; ++p) {
    if (p > 10000000)
      throw InconsistencyError("cannot factor " + n.get_str() + " for rational root search");
    unsigned e = 0;
    while (mpz_divisible_p(n.get_mpz_t(), p.get_mpz_t())) {
      n /= p;
      ++e;
    }
    if (e) factors.emplace_back(p, e);
  }
  if (n > 1) factors.emplace_back(n, 1);

  std::vector<BigInt> divs{1};
  for (const auto& [p, e] : factors) {
    const std::size_t base = divs.size();
    BigInt pk = 1;
    for (unsigned i = 1; i <= e; ++i) {
      pk *= p;
      for (std::size_t j = 0; j < base; ++j) divs.push_back(divs[j] * pk);
    }
  }
  std::sort(divs.begin(), divs.end());
  return divs;
}

}  // namespace

std::vector<Rational> extract_rational_roots(const RationalPolynomial& poly,
                                             const BigInt& order) {
  if (!poly.is_monic()) throw InputError("polynomial must be monic");
  if (poly.coeffs()[0] == 0) throw InconsistencyError("zero constant term");

  std::vector<Rational> roots;
  RationalPolynomial rest = poly;
  auto deflate = [&](const Rational& r) {
    RationalPolynomial q;
    while (rest.degree() > 0 && rest.divide_linear(r, q) == 0) {
      roots.push_back(r);
      rest = q;
    }
  };

  for (const auto& d : divisors(order)) {
    if (rest.degree() == 0) break;
    deflate(Rational(1, d));
    deflate(Rational(-1, d));
  }

  if (rest.degree() > 0) {
    const auto ints = rest.cleared();
    std::vector<Rational> candidates;
    const auto nums = divisors(ints.front());
    const auto dens = divisors(ints.back());
    for (const auto& p : nums)
      for (const auto& q : dens) {
        Rational r(p, q);
        r.canonicalize();
        candidates.push_back(r);
        candidates.push_back(-r);
      }
    std::sort(candidates.begin(), candidates.end(), [](const Rational& a, const Rational& b) {
      const Rational ma = abs(a), mb = abs(b);
      if (ma != mb) return ma > mb;
      return a > b;
    });
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
    for (const auto& r : candidates) {
      if (rest.degree() == 0) break;
      deflate(r);
    }
  }

  if (rest.degree() > 0)
    throw InconsistencyError("polynomial " + poly.to_string() +
                             " does not split over the rationals; remaining factor " +
                             rest.to_string());
  return roots;
}

Recovery recover_from_counts(const SolutionCounts& sc, const BigInt& order,
                             std::size_t k_r, RecoveryOptions options) {
  Recovery r;
  r.k_r = k_r;
  r.counts = sc;
  r.sums = power_sums_from_counts(sc, order, k_r, options.use_shortcut ? k_r : k_r + 1);
  r.sigma = elementary_symmetric(r.sums, options.use_shortcut);
  r.polynomial = RationalPolynomial::from_elementary(r.sigma);
  r.roots = extract_rational_roots(r.polynomial, order);

  std::vector<BigInt> entries;
  for (const auto& root : r.roots) {
    Rational inv = 1 / root;
    if (inv.get_den() != 1)
      throw InconsistencyError("root " + root.get_str() + " has a non-integral reciprocal");
    entries.push_back(inv.get_num());
  }
  r.multiset = IndicatorMultiset(std::move(entries));
  return r;
}

Recovery recover(const Group& g, const ClassData& cd, const StructureTensor& t,
                 RecoveryOptions options) {
  const std::size_t k_r = cd.num_real_classes();
  const std::size_t max_n = k_r + (options.use_shortcut ? 1 : 2);
  const auto sc = solution_count_sequence(power_distribution(g, cd, 2), t, 2, max_n);
  return recover_from_counts(sc, BigInt(static_cast<unsigned long>(g.order())), k_r, options);
}

Recovery recover(const Group& g, const ClassData& cd, RecoveryOptions options) {
  return recover(g, cd, structure_constants(g, cd), options);
}

IndicatorMultiset recover_indicator_multiset(const Group& g, const ClassData& cd) {
  return recover(g, cd).multiset;
}

}  // namespace fsi
