#include <doctest.h>

#include "fsi/class_algebra.hpp"
#include "fsi/oracle.hpp"
#include "helpers.hpp"

using namespace fsi;
using fsi::test::build;
using fsi::test::ints;

TEST_CASE("power distribution examples") {
  CHECK(power_distribution(build("cyclic:2").g, build("cyclic:2").cd, 2).coeffs == ints({2, 0}));
  const auto s3 = build("symmetric:3");
  CHECK(power_distribution(s3.g, s3.cd, 2).coeffs == ints({4, 0, 1}));
  const auto q8 = build("quaternion:8");
  CHECK(power_distribution(q8.g, q8.cd, 2).coeffs == ints({2, 6, 0, 0, 0}));
}

TEST_CASE("power distribution is a class function with total |G|") {
  for (auto name : fsi::test::small_presets()) {
    CAPTURE(name);
    const auto [g, cd] = build(name);
    for (unsigned long k : {2ul, 3ul}) {
      const auto v = power_counts(g, k);
      const auto t = power_distribution(g, cd, k);
      BigInt total = 0;
      for (ClassIndex c = 0; c < cd.num_classes(); ++c)
        total += t.coeffs[c] * static_cast<unsigned long>(cd.sizes[c]);
      CHECK(total == static_cast<unsigned long>(g.order()));
      for (Element z = 0; z < g.order(); ++z) CHECK(t.coeffs[cd.class_of[z]] == v[z]);
      if (g.order() <= 48)
        for (Element z = 0; z < g.order(); ++z)
          for (Element y = 0; y < g.order(); ++y) REQUIRE(v[g.conjugate(z, y)] == v[z]);
    }
  }
}

TEST_CASE("structure constants of S3") {
  const auto [g, cd] = build("symmetric:3");
  const auto t = structure_constants(g, cd);
  // classes: identity, transpositions, 3-cycles
  CHECK(t(2, 2, 0) == 2);
  CHECK(t(2, 2, 2) == 1);
  CHECK(t(2, 2, 1) == 0);
  CHECK(t(1, 1, 0) == 3);
  CHECK(t(0, 0, 0) == 1);
  CHECK(t(0, 0, 1) == 0);
}

TEST_CASE("structure constants of C2") {
  const auto [g, cd] = build("cyclic:2");
  const auto t = structure_constants(g, cd);
  CHECK(t(1, 1, 0) == 1);
  CHECK(t(1, 1, 1) == 0);
}

TEST_CASE("structure constants count products") {
  for (auto name : fsi::test::small_presets()) {
    CAPTURE(name);
    const auto [g, cd] = build(name);
    const auto t = structure_constants(g, cd);
    const std::size_t k = cd.num_classes();
    for (std::size_t c = 0; c < k; ++c)
      for (std::size_t d = 0; d < k; ++d) {
        BigInt total = 0;
        for (std::size_t e = 0; e < k; ++e) {
          CHECK(sgn(t(c, d, e)) >= 0);
          total += t(c, d, e) * static_cast<unsigned long>(cd.sizes[e]);
        }
        CHECK(total == static_cast<unsigned long>(cd.sizes[c] * cd.sizes[d]));
        CHECK(t(c, d, 0) == (cd.inverse_class[c] == d ? cd.sizes[c] : 0));
      }
  }
}

TEST_CASE("central products") {
  const auto s3 = build("symmetric:3");
  const auto t3 = structure_constants(s3.g, s3.cd);
  const CentralVector v3{ints({4, 0, 1})};
  CHECK(central_product(v3, v3, t3).coeffs == ints({18, 0, 9}));
  CHECK(central_product(v3, CentralVector::unit(3), t3) == v3);

  const auto q8 = build("quaternion:8");
  const auto t8 = structure_constants(q8.g, q8.cd);
  const CentralVector v8{ints({2, 6, 0, 0, 0})};
  CHECK(central_product(v8, v8, t8).coeffs == ints({40, 24, 0, 0, 0}));
}

TEST_CASE("solution count examples") {
  const auto c2 = build("cyclic:2");
  CHECK(solution_count_sequence(c2.g, c2.cd, 2, 4, Strategy::class_algebra).values ==
        ints({2, 4, 8, 16}));
  const auto s3 = build("symmetric:3");
  CHECK(solution_count_sequence(s3.g, s3.cd, 2, 4, Strategy::class_algebra).values ==
        ints({4, 18, 90, 486}));
  const auto q8 = build("quaternion:8");
  CHECK(solution_count_sequence(q8.g, q8.cd, 2, 6, Strategy::element_dp).values ==
        ints({2, 40, 224, 2176, 15872, 133120}));
  const auto c3 = build("cyclic:3");
  CHECK(solution_count_sequence(c3.g, c3.cd, 3, 4, Strategy::class_algebra).values ==
        ints({3, 9, 27, 81}));
  const auto sc = solution_count_sequence(c2.g, c2.cd, 3, 4, Strategy::class_algebra);
  CHECK(sc.values == ints({1, 2, 4, 8}));
  CHECK(sc.k == 3);
}

TEST_CASE("strategies agree with each other and with literal counting") {
  for (auto name : fsi::test::small_presets()) {
    CAPTURE(name);
    const auto [g, cd] = build(name);
    const std::size_t upto = cd.num_real_classes() + 2;
    for (unsigned long k : {2ul, 3ul}) {
      const auto a = solution_count_sequence(g, cd, k, upto, Strategy::class_algebra);
      const auto b = solution_count_sequence(g, cd, k, upto, Strategy::element_dp);
      CHECK(a.values == b.values);
      for (std::size_t n = 1; n <= upto; ++n)
        if (oracle::literal_count_feasible(g.order(), n))
          CHECK(oracle::naive_tuple_count(g, n, k, oracle::TupleCountMode::literal) == a(n));
    }
    std::size_t involutions = 0;
    for (Element x = 0; x < g.order(); ++x)
      involutions += g.product(x, x) == Group::identity();
    const auto sc = solution_count_sequence(g, cd, 2, 2, Strategy::class_algebra);
    CHECK(sc(1) == static_cast<unsigned long>(involutions));
    CHECK(sc(2) == static_cast<unsigned long>(g.order() * cd.num_real_classes()));
  }
}

TEST_CASE("strategy names") {
  CHECK(parse_strategy("element_dp") == Strategy::element_dp);
  CHECK(parse_strategy("class_algebra") == Strategy::class_algebra);
  CHECK_FALSE(parse_strategy("literal").has_value());
  CHECK(to_string(Strategy::element_dp) == "element_dp");
}

TEST_CASE("large counts stay exact") {
  const auto [g, cd] = build("alternating:5");
  const auto sc = solution_count_sequence(g, cd, 2, 12, Strategy::class_algebra);
  const auto dp = solution_count_sequence(g, cd, 2, 12, Strategy::element_dp);
  CHECK(sc.values == dp.values);
  CHECK(sc(12) > BigInt("18446744073709551616"));
}
