#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "fsi/bigint.hpp"
#include "fsi/classes.hpp"
#include "fsi/group.hpp"
#include "fsi/newton.hpp"

namespace fsi::oracle {

enum class TupleCountMode { automatic, literal, dp };

// Literal enumeration is allowed while |G|^n stays below this.
inline constexpr unsigned long kLiteralTupleLimit = 100'000'000;

bool literal_count_feasible(std::size_t order, std::size_t n);

// #{(g_1..g_n) : g_1^k ... g_n^k = 1}. Literal mode walks every tuple
// (InputError beyond kLiteralTupleLimit); dp mode pushes a distribution
// over elements one factor at a time. Neither uses classes.
BigInt naive_tuple_count(const Group& g, std::size_t n, unsigned long k,
                         TupleCountMode mode = TupleCountMode::automatic);

struct Check {
  std::string name;
  bool passed = false;
  std::string detail;
};

class VerificationReport {
 public:
  void add(std::string name, bool passed, std::string detail = {});
  void merge(const VerificationReport& other, std::string_view prefix = {});

  const std::vector<Check>& checks() const { return checks_; }
  std::size_t failures() const;
  bool passed() const { return failures() == 0; }

  // One "PASS name" / "FAIL name: detail" line per check, in insertion order.
  std::string to_text() const;

 private:
  std::vector<Check> checks_;
};

inline constexpr std::size_t kBijectionLimit = 4096;

// Checks that (x, y) -> (x y^-1, y) and (g, h) -> (g h, h) are mutually
// inverse bijections between A = {y^-1 x y = x^-1} and B = {g^2 h^2 = 1},
// and that |A| = |B| = |G| k_r = s(2). Throws InputError above kBijectionLimit.
VerificationReport verify_bijection(const Group& g, const ClassData& cd);

// Expected multiset for a preset label, or nullopt when there is none.
using ExpectedMultiset = std::function<std::optional<IndicatorMultiset>(std::string_view)>;

// Looks the label up among the built-in character-table fixtures.
std::optional<IndicatorMultiset> fixture_expectation(std::string_view preset_label);

// Every cross-check for one group; check names are "<label>/<check>".
VerificationReport verify_group(const Group& g, const ClassData& cd,
                                const std::optional<IndicatorMultiset>& expected);

struct SuiteOptions {
  ExpectedMultiset expected = fixture_expectation;
  std::size_t order_cap = kDefaultOrderCap;
};

// C1..C12, C2xC2, S3, S4, A4, A5, D4, D5, Q8, SL(2,3) as preset descriptors.
std::vector<std::string> default_suite();

VerificationReport run_verification_suite(std::span<const std::string> presets,
                                          const SuiteOptions& options = {});

}  // namespace fsi::oracle
