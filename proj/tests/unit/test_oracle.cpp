#include <doctest.h>

#include "fsi/character_table.hpp"
#include "fsi/class_algebra.hpp"
#include "fsi/cyclotomic.hpp"
#include "fsi/error.hpp"
#include "fsi/newton.hpp"
#include "fsi/oracle.hpp"
#include "helpers.hpp"

using namespace fsi;
using namespace fsi::oracle;
using fsi::test::build;
using fsi::test::ints;
using fsi::test::q;

namespace {

const char* kS3 =
    "S3 6 3\n"
    "1 3 2\n"
    "1 2 3\n"
    "0 0 2\n"
    "1 1 1\n"
    "1 -1 1\n"
    "2 0 -1\n";

}  // namespace

TEST_CASE("cyclotomic arithmetic") {
  const auto z3 = Cyclotomic::root_of_unity(3, 1);
  CHECK(z3 * z3 * z3 == Cyclotomic(1));
  CHECK((Cyclotomic(1) + z3 + z3 * z3).is_zero());
  CHECK(z3.conj() == z3 * z3);
  CHECK(Cyclotomic::parse("E(4)^2") == Cyclotomic(-1));
  CHECK(Cyclotomic::parse("-1/2*E(3)+3") == Cyclotomic(3) - Cyclotomic(q(1, 2)) * z3);
  const auto golden = Cyclotomic::parse("E(5)+E(5)^4");
  CHECK_FALSE(golden.as_rational().has_value());
  CHECK(golden * golden + golden == Cyclotomic(1));
  CHECK((Cyclotomic::root_of_unity(12, 3) - Cyclotomic::root_of_unity(4, 1)).is_zero());
  CHECK(Cyclotomic::parse("5/3").as_rational() == q(5, 3));
  CHECK_THROWS_AS(Cyclotomic::parse("E(0)"), InputError);
  CHECK_THROWS_AS(Cyclotomic::parse("E(3"), InputError);
  CHECK_THROWS_AS(Cyclotomic::parse(""), InputError);
}

TEST_CASE("fixture parsing and validation") {
  const auto f = parse_fixture(kS3);
  CHECK(f.name == "S3");
  CHECK(f.order == 6);
  CHECK(f.num_classes() == 3);
  CHECK(f.degree(2) == 2);
  CHECK_NOTHROW(validate_fixture(f));

  std::string bad = kS3;
  bad.replace(bad.rfind("2 0 -1"), 6, "2 0 1 ");
  CHECK_THROWS_AS(validate_fixture(parse_fixture(bad)), InputError);
  CHECK_THROWS_AS(parse_fixture("S3 6 3\n1 3 2\n"), InputError);
  CHECK_THROWS_AS(parse_fixture("S3 6 3\n1 3 2\n1 2 3\n0 0 2\n1 1 1\n1 -1\n2 0 -1\n"),
                  InputError);
}

TEST_CASE("every built-in fixture is valid and matches its preset") {
  const auto names = builtin_fixture_names();
  CHECK(names.size() == 13);
  for (const auto& name : names) {
    CAPTURE(name);
    const auto& f = builtin_fixture(name);
    CHECK_NOTHROW(validate_fixture(f));
    BigInt squares = 0;
    for (std::size_t chi = 0; chi < f.num_classes(); ++chi) squares += f.degree(chi) * f.degree(chi);
    CHECK(squares == static_cast<unsigned long>(f.order));
    const auto label = fixture_preset(name);
    CHECK(fixture_for_preset(label) == name);
    const auto [g, cd] = build(label);
    const auto t = structure_constants(g, cd);
    const auto alignment = align_fixture(f, g, cd, t);
    CHECK(alignment.size() == cd.num_classes());
    CHECK(fixture_indicator_multiset(f, g, cd, t) == recover_indicator_multiset(g, cd));
  }
  CHECK_THROWS_AS(builtin_fixture("M24"), InputError);
  CHECK_FALSE(fixture_for_preset("alternating:5").has_value());
}

TEST_CASE("fixture multiset examples") {
  CHECK(fixture_indicator_multiset("Q8") == IndicatorMultiset(ints({1, 1, 1, 1, -2})));
  CHECK(fixture_indicator_multiset("S3") == IndicatorMultiset(ints({1, 1, 2})));
  CHECK(fixture_indicator_multiset("C3") == IndicatorMultiset(ints({1})));
  CHECK(fixture_indicator_multiset("SL(2,3)").count(BigInt(-2)) == 1);
  CHECK_THROWS_AS(fixture_indicator_multiset("nope"), InputError);
}

TEST_CASE("fixture alignment fails on the wrong group") {
  const auto [g, cd] = build("dihedral:4");
  const auto t = structure_constants(g, cd);
  CHECK_THROWS_AS(align_fixture(builtin_fixture("Q8"), g, cd, t), InputError);
  CHECK_THROWS_AS(align_fixture(builtin_fixture("S3"), g, cd, t), InputError);
}

TEST_CASE("naive tuple counts") {
  CHECK(naive_tuple_count(build("cyclic:2").g, 3, 2) == 8);
  CHECK(naive_tuple_count(build("symmetric:3").g, 2, 2) == 18);
  CHECK(naive_tuple_count(build("quaternion:8").g, 2, 2) == 40);
  const auto q8 = build("quaternion:8").g;
  CHECK(naive_tuple_count(q8, 6, 2, TupleCountMode::dp) == 133120);
  CHECK(naive_tuple_count(q8, 6, 2, TupleCountMode::literal) == 133120);
  CHECK(literal_count_feasible(10, 8));
  CHECK_FALSE(literal_count_feasible(10, 9));
  const auto a5 = build("alternating:5").g;
  CHECK_THROWS_AS(naive_tuple_count(a5, 6, 2, TupleCountMode::literal), InputError);
  CHECK_THROWS_AS(naive_tuple_count(a5, 0, 2), InputError);
}

TEST_CASE("bijection sizes") {
  for (auto [name, size] : {std::pair{"symmetric:3", 18}, {"quaternion:8", 40}, {"cyclic:1", 1}}) {
    CAPTURE(name);
    const auto [g, cd] = build(name);
    const auto r = verify_bijection(g, cd);
    CHECK(r.passed());
    CHECK(r.checks().size() == 4);
    CHECK(r.checks().back().detail.find("|A|=" + std::to_string(size) + " |B|=" +
                                        std::to_string(size)) == 0);
  }
}

TEST_CASE("verify_group passes on presets") {
  for (auto name : fsi::test::small_presets()) {
    CAPTURE(name);
    const auto [g, cd] = build(name);
    const auto r = verify_group(g, cd, fixture_expectation(g.label()));
    INFO(r.to_text());
    CHECK(r.passed());
  }
}

TEST_CASE("verify_group reports a wrong expectation") {
  const auto [g, cd] = build("symmetric:3");
  const auto r = verify_group(g, cd, IndicatorMultiset(ints({1, 1, 1})));
  CHECK_FALSE(r.passed());
  CHECK(r.failures() == 1);
  CHECK(r.to_text().find("FAIL symmetric:3/fixture: recovered {2,1,1} fixture {1,1,1}") !=
        std::string::npos);
}

TEST_CASE("suite reports a corrupted fixture") {
  SuiteOptions options;
  options.expected = [](std::string_view label) -> std::optional<IndicatorMultiset> {
    if (label == "quaternion:8") return IndicatorMultiset(ints({2, 1, 1, 1, 1}));
    return fixture_expectation(label);
  };
  const std::vector<std::string> names{"symmetric:3", "quaternion:8"};
  const auto r = run_verification_suite(names, options);
  CHECK(r.failures() == 1);
  const auto text = r.to_text();
  CHECK(text.find("FAIL quaternion:8/fixture: recovered {1,1,1,1,-2} fixture {2,1,1,1,1}") !=
        std::string::npos);
  CHECK(text.find("PASS symmetric:3/fixture") != std::string::npos);
}

TEST_CASE("suite reports setup failures and handles the empty list") {
  const std::vector<std::string> none;
  const auto empty = run_verification_suite(none);
  CHECK(empty.passed());
  CHECK(empty.checks().empty());
  const std::vector<std::string> bad{"cyclic:0"};
  const auto r = run_verification_suite(bad);
  CHECK_FALSE(r.passed());
  CHECK(r.checks().front().name == "cyclic:0/setup");
}

TEST_CASE("default suite passes") {
  const auto names = default_suite();
  CHECK(names.size() == 21);
  const auto r = run_verification_suite(names);
  INFO(r.to_text());
  CHECK(r.passed());
}

TEST_CASE("report text is deterministic") {
  const std::vector<std::string> names{"sl23"};
  CHECK(run_verification_suite(names).to_text() == run_verification_suite(names).to_text());
}
