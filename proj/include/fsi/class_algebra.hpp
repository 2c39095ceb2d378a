#pragma once

#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "fsi/bigint.hpp"
#include "fsi/classes.hpp"
#include "fsi/group.hpp"

namespace fsi {

// An element sum_C coeffs[C] * C^ of the centre of the group algebra,
// written in the class-sum basis.
struct CentralVector {
  std::vector<BigInt> coeffs;

  static CentralVector unit(std::size_t num_classes);
  friend bool operator==(const CentralVector&, const CentralVector&) = default;
};

// Class multiplication constants a(C, D, E) = #{(x, y) in C x D : xy = z}
// for a fixed z in E.
class StructureTensor {
 public:
  StructureTensor() = default;
  explicit StructureTensor(std::size_t num_classes)
      : k_(num_classes), a_(num_classes * num_classes * num_classes) {}

  std::size_t num_classes() const { return k_; }
  const BigInt& operator()(std::size_t c, std::size_t d, std::size_t e) const {
    return a_[(c * k_ + d) * k_ + e];
  }
  BigInt& operator()(std::size_t c, std::size_t d, std::size_t e) {
    return a_[(c * k_ + d) * k_ + e];
  }

 private:
  std::size_t k_ = 0;
  std::vector<BigInt> a_;
};

struct SolutionCounts {
  unsigned long k = 2;
  std::vector<BigInt> values;  // values[n-1] = s_k(n)

  std::size_t max_n() const { return values.size(); }
  const BigInt& operator()(std::size_t n) const { return values.at(n - 1); }
};

enum class Strategy { class_algebra, element_dp };

std::string_view to_string(Strategy s);
std::optional<Strategy> parse_strategy(std::string_view name);

// v(z) = #{h : h^k = z}, one value per element. Constant on classes.
std::vector<std::size_t> power_counts(const Group& g, unsigned long k);

// coeffs[C] = v(reps[C]); so sum_C coeffs[C] * |C| = |G|.
CentralVector power_distribution(const Group& g, const ClassData& cd, unsigned long k);

// Iterates all (x, y) in C x D and normalises the per-class raw counts by
// |E|. Throws InconsistencyError if a raw count is not divisible by |E|.
StructureTensor structure_constants(const Group& g, const ClassData& cd);

CentralVector central_product(const CentralVector& u, const CentralVector& w,
                              const StructureTensor& t);

// s_k(1..max_n): the identity coefficient of T^n with T the k-th power
// distribution. class_algebra multiplies in the centre; element_dp
// convolves the element-level function over the whole group.
SolutionCounts solution_count_sequence(const Group& g, const ClassData& cd,
                                       unsigned long k, std::size_t max_n,
                                       Strategy strategy);

// class_algebra route with a precomputed tensor.
SolutionCounts solution_count_sequence(const CentralVector& t_vec, const StructureTensor& t,
                                       unsigned long k,
                                       std::size_t max_n);

}  // namespace fsi
