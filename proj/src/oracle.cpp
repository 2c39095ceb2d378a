#include "fsi/oracle.hpp"

#include <sstream>

#include "fsi/character_table.hpp"
#include "fsi/class_algebra.hpp"
#include "fsi/error.hpp"
#include "fsi/indicators.hpp"

namespace fsi::oracle {

bool literal_count_feasible(std::size_t order, std::size_t n) {
  unsigned long total = 1;
  for (std::size_t i = 0; i < n; ++i) {
    if (total > kLiteralTupleLimit / order) return false;
    total *= order;
  }
  return total <= kLiteralTupleLimit;
}

namespace {

std::uint64_t count_literal(const Group& g, const std::vector<Element>& powers,
                            std::size_t depth, Element prefix) {
  if (depth == 0) return prefix == Group::identity() ? 1 : 0;
  std::uint64_t total = 0;
  for (Element p : powers) total += count_literal(g, powers, depth - 1, g.product(prefix, p));
  return total;
}

BigInt count_dp(const Group& g, const std::vector<Element>& powers, std::size_t n) {
  std::vector<BigInt> f(g.order(), 0), next(g.order(), 0);
  f[Group::identity()] = 1;
  for (std::size_t step = 0; step < n; ++step) {
    for (auto& x : next) x = 0;
    for (Element z = 0; z < g.order(); ++z) {
      if (sgn(f[z]) == 0) continue;
      for (Element p : powers) next[g.product(z, p)] += f[z];
    }
    std::swap(f, next);
  }
  return f[Group::identity()];
}

}  // namespace

BigInt naive_tuple_count(const Group& g, std::size_t n, unsigned long k, TupleCountMode mode) {
  if (n == 0) throw InputError("tuple length must be positive");
  std::vector<Element> powers(g.order());
  for (Element h = 0; h < g.order(); ++h) powers[h] = g.power(h, k);

  const bool feasible = literal_count_feasible(g.order(), n);
  if (mode == TupleCountMode::literal && !feasible)
    throw InputError("literal tuple enumeration limited to |G|^n <= 10^8");
  if (mode == TupleCountMode::literal || (mode == TupleCountMode::automatic && feasible))
    return BigInt(static_cast<unsigned long>(count_literal(g, powers, n, Group::identity())));
  return count_dp(g, powers, n);
}

void VerificationReport::add(std::string name, bool passed, std::string detail) {
  checks_.push_back(Check{std::move(name), passed, std::move(detail)});
}

void VerificationReport::merge(const VerificationReport& other, std::string_view prefix) {
  for (const auto& c : other.checks_)
    checks_.push_back(Check{std::string(prefix) + c.name, c.passed, c.detail});
}

std::size_t VerificationReport::failures() const {
  std::size_t n = 0;
  for (const auto& c : checks_) n += !c.passed;
  return n;
}

std::string VerificationReport::to_text() const {
  std::ostringstream os;
  for (const auto& c : checks_) {
    os << (c.passed ? "PASS " : "FAIL ") << c.name;
    if (!c.detail.empty()) os << ": " << c.detail;
    os << '\n';
  }
  return os.str();
}

VerificationReport verify_bijection(const Group& g, const ClassData& cd) {
  if (g.order() > kBijectionLimit)
    throw InputError("bijection check limited to |G| <= " + std::to_string(kBijectionLimit));
  const std::size_t n = g.order();
  auto pair_str = [](Element a, Element b) {
    return "(" + std::to_string(a) + "," + std::to_string(b) + ")";
  };
  std::vector<Element> square(n);
  for (Element x = 0; x < n; ++x) square[x] = g.product(x, x);
  auto in_a = [&](Element x, Element y) { return g.conjugate(x, y) == g.inverse(x); };
  auto in_b = [&](Element a, Element b) {
    return g.product(square[a], square[b]) == Group::identity();
  };

  std::size_t size_a = 0, size_b = 0;
  std::string forward_fail, backward_fail, compose_fail;
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      if (in_a(x, y)) {
        ++size_a;
        const Element gx = g.product(x, g.inverse(y));
        if (!in_b(gx, y) && forward_fail.empty())
          forward_fail = pair_str(x, y) + " -> " + pair_str(gx, y) + " not in B";
        if (g.product(gx, y) != x && compose_fail.empty())
          compose_fail = "backward(forward" + pair_str(x, y) + ") != " + pair_str(x, y);
      }
      if (in_b(x, y)) {
        ++size_b;
        const Element xy = g.product(x, y);
        if (!in_a(xy, y) && backward_fail.empty())
          backward_fail = pair_str(x, y) + " -> " + pair_str(xy, y) + " not in A";
        if (g.product(xy, g.inverse(y)) != x && compose_fail.empty())
          compose_fail = "forward(backward" + pair_str(x, y) + ") != " + pair_str(x, y);
      }
    }
  }

  VerificationReport r;
  r.add("bijection/forward_into_B", forward_fail.empty(), forward_fail);
  r.add("bijection/backward_into_A", backward_fail.empty(), backward_fail);
  r.add("bijection/composites_identity", compose_fail.empty(), compose_fail);

  const BigInt s2 = solution_count_sequence(g, cd, 2, 2, Strategy::class_algebra)(2);
  const BigInt expected = BigInt(static_cast<unsigned long>(n)) *
                          static_cast<unsigned long>(cd.num_real_classes());
  const bool ok = size_a == size_b && s2 == static_cast<unsigned long>(size_a) && s2 == expected;
  r.add("bijection/cardinality", ok,
        "|A|=" + std::to_string(size_a) + " |B|=" + std::to_string(size_b) +
            " s(2)=" + s2.get_str() + " |G|k_r=" + expected.get_str());
  return r;
}

std::optional<IndicatorMultiset> fixture_expectation(std::string_view preset_label) {
  const auto name = fixture_for_preset(preset_label);
  if (!name) return std::nullopt;
  return fixture_indicator_multiset(*name);
}

namespace {

std::string join(const SolutionCounts& sc, std::size_t upto) {
  std::string s;
  for (std::size_t n = 1; n <= upto && n <= sc.max_n(); ++n) {
    if (n > 1) s += ",";
    s += sc(n).get_str();
  }
  return s;
}

}  // namespace

VerificationReport verify_group(const Group& g, const ClassData& cd,
                                const std::optional<IndicatorMultiset>& expected) {
  VerificationReport r;
  const std::string p = g.label() + "/";
  const BigInt order(static_cast<unsigned long>(g.order()));
  const std::size_t k_r = cd.num_real_classes();
  const std::size_t bound = default_scan_bound(k_r);

  const auto t = structure_constants(g, cd);
  const auto squares = power_distribution(g, cd, 2);
  const auto sc = solution_count_sequence(squares, t, 2, bound + 1);

  {
    const std::size_t upto = k_r + 2;
    const auto dp = solution_count_sequence(g, cd, 2, upto, Strategy::element_dp);
    std::string detail;
    for (std::size_t n = 1; n <= upto && detail.empty(); ++n) {
      if (dp(n) != sc(n))
        detail = "n=" + std::to_string(n) + " class_algebra=" + sc(n).get_str() +
                 " element_dp=" + dp(n).get_str();
      else if (literal_count_feasible(g.order(), n)) {
        const BigInt naive = naive_tuple_count(g, n, 2, TupleCountMode::literal);
        if (naive != sc(n))
          detail = "n=" + std::to_string(n) + " class_algebra=" + sc(n).get_str() +
                   " literal=" + naive.get_str();
      }
    }
    r.add(p + "strategy_equivalence", detail.empty(),
          detail.empty() ? "s(1.." + std::to_string(upto) + ")=" + join(sc, upto) : detail);
  }

  const BigInt s2_expected = order * static_cast<unsigned long>(k_r);
  r.add(p + "s2_identity", sc(2) == s2_expected,
        "s(2)=" + sc(2).get_str() + " |G|k_r=" + s2_expected.get_str());

  Recovery rec;
  try {
    rec = recover_from_counts(sc, order, k_r);
    r.add(p + "recovery", true, "multiset " + rec.multiset.to_string());
  } catch (const std::exception& e) {
    r.add(p + "recovery", false, e.what());
    return r;
  }
  const IndicatorMultiset& im = rec.multiset;

  {
    std::string detail;
    const bool all_real = k_r == cd.num_classes();
    if (im.size() != k_r) detail = "size " + std::to_string(im.size()) + " != k_r";
    else if (im.sum() != sc(1)) detail = "sum " + im.sum().get_str() + " != s(1)";
    else if (im.sum_of_squares() > order) detail = "sum of squares exceeds |G|";
    else if ((im.sum_of_squares() == order) != all_real)
      detail = "sum of squares = |G| must hold exactly when every class is real";
    else if (im.count(BigInt(1)) < 1) detail = "no entry equal to 1";
    else if (!(RationalPolynomial::from_roots(rec.roots) == rec.polynomial))
      detail = "roots do not resynthesize the polynomial";
    for (const auto& d : im.entries())
      if (detail.empty() && !mpz_divisible_p(order.get_mpz_t(), BigInt(abs(d)).get_mpz_t()))
        detail = "entry " + d.get_str() + " does not divide |G|";
    r.add(p + "multiset_invariants", detail.empty(), detail);
  }

  if (expected) {
    const bool ok = *expected == im;
    r.add(p + "fixture", ok,
          "recovered {" + im.to_string() + "} fixture {" + expected->to_string() + "}");
  }

  if (g.order() <= kBijectionLimit) r.merge(verify_bijection(g, cd), p);

  {
    const auto lim = verify_limit_identity(im, g);
    r.add(p + "limit_identity", lim.passed,
          "ones=" + std::to_string(lim.ones) + " index=" + std::to_string(lim.squares_index));
  }

  {
    const auto witness = detect_negative_indicator(sc, order, bound);
    const std::size_t minus = im.count_negative();
    const bool ok = !witness || minus >= 1;
    r.add(p + "negative_criterion", ok,
          witness ? "witness n=" + std::to_string(witness->n) + " with " +
                        std::to_string(minus) + " negative entries"
                  : "no witness up to " + std::to_string(bound));
    if (minus == 0) {
      const auto v = monotonicity_violation(sc, order);
      r.add(p + "monotonicity", !v,
            v ? "s(" + std::to_string(*v + 1) + ") > |G| s(" + std::to_string(*v) + ")"
              : "s(n+1) <= |G| s(n) for n < " + std::to_string(sc.max_n()));
    }
  }

  {
    const auto ps_long = power_sums_from_counts(sc, order, k_r, k_r + 1);
    const auto sigma_long = elementary_symmetric(ps_long, false);
    const bool ok = sigma_long.back() == rec.sigma.back();
    r.add(p + "shortcut", ok,
          "sigma_" + std::to_string(k_r) + " shortcut=" + rec.sigma.back().get_str() +
              " long=" + sigma_long.back().get_str());
  }
  return r;
}

std::vector<std::string> default_suite() {
  std::vector<std::string> names;
  for (int n = 1; n <= 12; ++n) names.push_back("cyclic:" + std::to_string(n));
  for (const char* s : {"elementary_abelian_2:2", "symmetric:3", "symmetric:4", "alternating:4",
                        "alternating:5", "dihedral:4", "dihedral:5", "quaternion:8", "sl23"})
    names.emplace_back(s);
  return names;
}

VerificationReport run_verification_suite(std::span<const std::string> presets,
                                          const SuiteOptions& options) {
  VerificationReport report;
  for (const auto& name : presets) {
    try {
      const Group g = enumerate_group(preset(name), options.order_cap);
      const ClassData cd = conjugacy_classes(g);
      std::optional<IndicatorMultiset> expected;
      try {
        if (options.expected) expected = options.expected(g.label());
      } catch (const std::exception& e) {
        report.add(g.label() + "/fixture", false, e.what());
      }
      report.merge(verify_group(g, cd, expected));
    } catch (const std::exception& e) {
      report.add(name + "/setup", false, e.what());
    }
  }
  return report;
}

}  // namespace fsi::oracle
