#include "fsi/class_algebra.hpp"

#include "fsi/error.hpp"
#include "fsi/simd/kernels.hpp"

namespace fsi {

CentralVector CentralVector::unit(std::size_t num_classes) {
  CentralVector v;
  v.coeffs.assign(num_classes, 0);
  if (num_classes) v.coeffs[0] = 1;
  return v;
}

std::string_view to_string(Strategy s) {
  switch (s) {
    case Strategy::class_algebra: return "class_algebra";
    case Strategy::element_dp: return "element_dp";
  }
  return "unknown";
}

std::optional<Strategy> parse_strategy(std::string_view name) {
  if (name == "class_algebra") return Strategy::class_algebra;
  if (name == "element_dp") return Strategy::element_dp;
  return std::nullopt;
}

std::vector<std::size_t> power_counts(const Group& g, unsigned long k) {
  std::vector<std::size_t> v(g.order(), 0);
  for (Element h = 0; h < g.order(); ++h) ++v[g.power(h, k)];
  return v;
}

CentralVector power_distribution(const Group& g, const ClassData& cd, unsigned long k) {
  if (k == 0) throw InputError("power k must be positive");
  const auto v = power_counts(g, k);
  CentralVector t;
  t.coeffs.reserve(cd.num_classes());
  for (Element rep : cd.reps) t.coeffs.emplace_back(static_cast<unsigned long>(v[rep]));
  return t;
}

StructureTensor structure_constants(const Group& g, const ClassData& cd) {
  const std::size_t k = cd.num_classes();
  StructureTensor t(k);
  std::vector<Element> products;
  std::vector<std::uint32_t> classes;
  std::vector<std::uint64_t> raw(k);
  for (std::size_t c = 0; c < k; ++c) {
    for (std::size_t d = 0; d < k; ++d) {
      const auto& ys = cd.members[d];
      products.resize(ys.size());
      classes.resize(ys.size());
      std::fill(raw.begin(), raw.end(), 0);
      for (Element x : cd.members[c]) {
        g.left_products(x, ys, products);
        simd::gather(cd.class_of, products, classes);
        for (auto e : classes) ++raw[e];
      }
      for (std::size_t e = 0; e < k; ++e) {
        if (raw[e] % cd.sizes[e] != 0)
          throw InconsistencyError("class product count not divisible by class size");
        t(c, d, e) = static_cast<unsigned long>(raw[e] / cd.sizes[e]);
      }
    }
  }
  return t;
}

CentralVector central_product(const CentralVector& u, const CentralVector& w,
                              const StructureTensor& t) {
  const std::size_t k = t.num_classes();
  if (u.coeffs.size() != k || w.coeffs.size() != k)
    throw InputError("central vector dimension mismatch");
  CentralVector r;
  r.coeffs.assign(k, 0);
  BigInt uw;
  for (std::size_t c = 0; c < k; ++c) {
    if (sgn(u.coeffs[c]) == 0) continue;
    for (std::size_t d = 0; d < k; ++d) {
      if (sgn(w.coeffs[d]) == 0) continue;
      uw = u.coeffs[c] * w.coeffs[d];
      for (std::size_t e = 0; e < k; ++e)
        if (sgn(t(c, d, e)) != 0) r.coeffs[e] += uw * t(c, d, e);
    }
  }
  return r;
}

SolutionCounts solution_count_sequence(const CentralVector& t_vec, const StructureTensor& t,
                                       unsigned long k,
                                       std::size_t max_n) {
  SolutionCounts sc;
  sc.k = k;
  CentralVector power = t_vec;
  for (std::size_t n = 1; n <= max_n; ++n) {
    if (n > 1) power = central_product(power, t_vec, t);
    sc.values.push_back(power.coeffs.at(0));
  }
  return sc;
}

namespace {

SolutionCounts element_dp(const Group& g, unsigned long k, std::size_t max_n) {
  const auto v = power_counts(g, k);
  std::vector<Element> support;
  std::vector<unsigned long> weight;
  for (Element z = 0; z < g.order(); ++z)
    if (v[z]) {
      support.push_back(z);
      weight.push_back(v[z]);
    }

  SolutionCounts sc;
  sc.k = k;
  std::vector<BigInt> f(g.order(), 0), next(g.order(), 0);
  f[Group::identity()] = 1;
  std::vector<Element> products(support.size());
  for (std::size_t n = 1; n <= max_n; ++n) {
    for (auto& x : next) x = 0;
    // f_n(h w) += f_{n-1}(h) v(w)
    for (Element h = 0; h < g.order(); ++h) {
      if (sgn(f[h]) == 0) continue;
      g.left_products(h, support, products);
      for (std::size_t j = 0; j < support.size(); ++j)
        mpz_addmul_ui(next[products[j]].get_mpz_t(), f[h].get_mpz_t(), weight[j]);
    }
    std::swap(f, next);
    sc.values.push_back(f[Group::identity()]);
  }
  return sc;
}

}  // namespace

SolutionCounts solution_count_sequence(const Group& g, const ClassData& cd,
                                       unsigned long k, std::size_t max_n,
                                       Strategy strategy) {
  if (k == 0) throw InputError("power k must be positive");
  if (strategy == Strategy::element_dp) return element_dp(g, k, max_n);
  const auto t = structure_constants(g, cd);
  return solution_count_sequence(power_distribution(g, cd, k), t, k, max_n);
}

}  // namespace fsi
