#include "fsi/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <fstream>
#include <optional>
#include <sstream>

#include "fsi/character_table.hpp"
#include "fsi/class_algebra.hpp"
#include "fsi/classes.hpp"
#include "fsi/error.hpp"
#include "fsi/group.hpp"
#include "fsi/indicators.hpp"
#include "fsi/newton.hpp"
#include "fsi/oracle.hpp"
#include "fsi/simd/kernels.hpp"

namespace fsi::cli {

namespace {

using Json = nlohmann::ordered_json;

struct Config {
  std::string group;
  std::string input_format;
  std::string format = "text";
  std::size_t order_cap = 0;
  std::string simd = "auto";
  std::size_t max_n = 0;
  unsigned long k = 2;
  std::string strategy = "class_algebra";
  bool no_shortcut = false;
  bool suite = false;
};

struct Loaded {
  Group group;
  ClassData classes;
};

Loaded load_group(const Config& cfg) {
  if (cfg.group.empty()) throw InputError("--group is required (preset:NAME[:PARAM] or file:PATH)");
  const std::size_t cap = cfg.order_cap ? cfg.order_cap : order_cap_from_env();
  GroupSpec spec = [&] {
    if (cfg.group.rfind("preset:", 0) == 0)
      return parse_group_spec(cfg.group.substr(7), InputFormat::preset);
    if (cfg.group.rfind("file:", 0) != 0)
      throw InputError("group source must start with 'preset:' or 'file:'");
    const std::string path = cfg.group.substr(5);
    std::ifstream in(path);
    if (!in) throw InputError("cannot read " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    std::string fmt = cfg.input_format;
    if (fmt.empty()) fmt = path.ends_with(".multtable") ? "multtable" : "gens";
    auto parsed = parse_group_spec(buf.str(), fmt == "multtable" ? InputFormat::multtable
                                                                 : InputFormat::gens);
    parsed.label = path;
    return parsed;
  }();
  Group g = enumerate_group(spec, cap);
  ClassData cd = conjugacy_classes(g);
  return {std::move(g), std::move(cd)};
}

Json strings(const std::vector<BigInt>& values) {
  Json a = Json::array();
  for (const auto& v : values) a.push_back(v.get_str());
  return a;
}

Json strings(const std::vector<Rational>& values) {
  Json a = Json::array();
  for (const auto& v : values) a.push_back(v.get_str());
  return a;
}

std::string joined(const std::vector<BigInt>& values, const char* sep = ",") {
  std::string s;
  for (std::size_t i = 0; i < values.size(); ++i) s += (i ? sep : "") + values[i].get_str();
  return s;
}

std::string joined(const std::vector<Rational>& values, const char* sep = ",") {
  std::string s;
  for (std::size_t i = 0; i < values.size(); ++i) s += (i ? sep : "") + values[i].get_str();
  return s;
}

BigInt order_of(const Group& g) { return BigInt(static_cast<unsigned long>(g.order())); }

int cmd_info(const Config& cfg, std::ostream& out) {
  const auto [g, cd] = load_group(cfg);
  const std::size_t index = squares_subgroup_index(g);
  if (cfg.format == "json") {
    Json j;
    j["order"] = g.order();
    j["num_classes"] = cd.num_classes();
    j["num_real_classes"] = cd.num_real_classes();
    j["squares_index"] = index;
    out << j.dump() << '\n';
  } else {
    out << "order=" << g.order() << "  k=" << cd.num_classes()
        << "  k_r=" << cd.num_real_classes() << "  squares_index=" << index << '\n';
  }
  return kOk;
}

int cmd_ssequence(const Config& cfg, std::ostream& out) {
  const auto [g, cd] = load_group(cfg);
  const auto strategy = parse_strategy(cfg.strategy);
  if (!strategy) throw InputError("unknown --strategy '" + cfg.strategy + "'");
  const auto sc = solution_count_sequence(g, cd, cfg.k, cfg.max_n, *strategy);
  if (cfg.format == "json") {
    Json j;
    j["order"] = g.order();
    j["s_sequence"] = strings(sc.values);
    out << j.dump() << '\n';
  } else {
    for (std::size_t n = 1; n <= sc.max_n(); ++n)
      out << "s_" << cfg.k << "(" << n << ") = " << sc(n).get_str() << '\n';
  }
  return kOk;
}

int cmd_recover(const Config& cfg, std::ostream& out) {
  const auto [g, cd] = load_group(cfg);
  const auto rec = recover(g, cd, RecoveryOptions{!cfg.no_shortcut});
  if (cfg.format == "json") {
    Json j;
    j["order"] = g.order();
    j["num_real_classes"] = rec.k_r;
    j["s_sequence"] = strings(rec.counts.values);
    j["power_sums"] = strings(rec.sums.p);
    j["polynomial"] = strings(rec.polynomial.coeffs());
    j["roots"] = strings(rec.roots);
    j["multiset"] = strings(rec.multiset.entries());
    out << j.dump() << '\n';
  } else {
    out << "k_r=" << rec.k_r << "  multiset: " << rec.multiset.to_string() << '\n';
    out << "s(1.." << rec.counts.max_n() << "): " << joined(rec.counts.values) << '\n';
    out << "polynomial: " << rec.polynomial.to_string() << '\n';
    out << "roots: " << joined(rec.roots) << '\n';
  }
  return kOk;
}

int cmd_indicators(const Config& cfg, std::ostream& out) {
  const auto [g, cd] = load_group(cfg);
  const auto im = recover_indicator_multiset(g, cd);
  const auto s = indicator_summary(im, cd);
  if (cfg.format == "json") {
    Json j;
    j["order"] = g.order();
    j["num_classes"] = s.k_total;
    j["num_real_classes"] = s.k_r;
    j["multiset"] = strings(im.entries());
    j["summary"] = Json{{"plus", s.count_plus}, {"minus", s.count_minus}, {"zero", s.count_zero}};
    out << j.dump() << '\n';
  } else {
    out << "indicator +1: " << s.count_plus << "\nindicator -1: " << s.count_minus
        << "\nindicator  0: " << s.count_zero << "\n(k=" << s.k_total << ", k_r=" << s.k_r
        << ")\n";
  }
  return kOk;
}

int cmd_detect_negative(const Config& cfg, std::ostream& out) {
  const auto [g, cd] = load_group(cfg);
  const std::size_t bound = cfg.max_n ? cfg.max_n : default_scan_bound(cd.num_real_classes());
  const auto sc = solution_count_sequence(g, cd, 2, bound + 1, Strategy::class_algebra);
  const auto w = detect_negative_indicator(sc, order_of(g), bound);
  if (cfg.format == "json") {
    Json j;
    j["order"] = g.order();
    j["witness"] = w ? Json{{"n", std::to_string(w->n)},
                            {"lhs", w->lhs.get_str()},
                            {"rhs", w->rhs.get_str()}}
                     : Json(nullptr);
    out << j.dump() << '\n';
  } else if (w) {
    out << "witness n=" << w->n << ": s(" << w->n << ")*|G| < s(" << w->n + 1 << ")\n"
        << "  " << w->lhs.get_str() << " < " << w->rhs.get_str() << '\n';
  } else {
    out << "no witness up to " << bound << '\n';
  }
  return kOk;
}

int cmd_verify(const Config& cfg, std::ostream& out) {
  oracle::VerificationReport report;
  if (cfg.suite) {
    oracle::SuiteOptions options;
    options.order_cap = cfg.order_cap ? cfg.order_cap : order_cap_from_env();
    const auto names = oracle::default_suite();
    report = oracle::run_verification_suite(names, options);
  } else {
    const auto [g, cd] = load_group(cfg);
    std::optional<IndicatorMultiset> expected;
    if (cfg.group.rfind("preset:", 0) == 0) expected = oracle::fixture_expectation(g.label());
    report = oracle::verify_group(g, cd, expected);
  }
  if (cfg.format == "json") {
    Json checks = Json::array();
    for (const auto& c : report.checks())
      checks.push_back(
          Json{{"name", c.name}, {"status", c.passed ? "pass" : "fail"}, {"detail", c.detail}});
    Json j;
    j["passed"] = report.passed();
    j["checks"] = std::move(checks);
    out << j.dump() << '\n';
  } else {
    out << report.to_text();
    out << (report.passed() ? "all " + std::to_string(report.checks().size()) + " checks passed"
                            : std::to_string(report.failures()) + " of " +
                                  std::to_string(report.checks().size()) + " checks failed")
        << '\n';
  }
  return report.passed() ? kOk : kVerificationFailed;
}

int cmd_bench(const Config& cfg, std::ostream& out) {
  using Clock = std::chrono::steady_clock;
  const auto [g, cd] = load_group(cfg);
  struct Row {
    std::string strategy;
    std::string simd;
    double seconds;
  };
  std::vector<Row> rows;
  std::optional<SolutionCounts> reference;
  const auto restore = simd::active_level();
  for (auto level : {simd::Level::scalar, simd::Level::avx2}) {
    if (!simd::supported(level)) continue;
    simd::set_level(level);
    for (auto strategy : {Strategy::class_algebra, Strategy::element_dp}) {
      const auto start = Clock::now();
      auto sc = solution_count_sequence(g, cd, cfg.k, cfg.max_n, strategy);
      const double secs = std::chrono::duration<double>(Clock::now() - start).count();
      if (!reference) reference = sc;
      else if (reference->values != sc.values)
        throw InconsistencyError(std::string("strategy ") + std::string(to_string(strategy)) +
                                 " disagrees with the reference sequence");
      rows.push_back({std::string(to_string(strategy)), std::string(simd::to_string(level)), secs});
    }
  }
  simd::set_level(restore);
  if (cfg.format == "json") {
    Json runs = Json::array();
    for (const auto& r : rows)
      runs.push_back(Json{{"strategy", r.strategy}, {"simd", r.simd}, {"seconds", r.seconds}});
    Json j;
    j["order"] = g.order();
    j["s_sequence"] = strings(reference->values);
    j["runs"] = std::move(runs);
    out << j.dump() << '\n';
  } else {
    out << "order=" << g.order() << "  k=" << cfg.k << "  max_n=" << cfg.max_n
        << "  (all strategies agree)\n";
    for (const auto& r : rows) {
      std::ostringstream line;
      line.setf(std::ios::fixed);
      line.precision(6);
      line << r.seconds;
      out << r.strategy << " [" << r.simd << "]: " << line.str() << " s\n";
    }
  }
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Config cfg;
  CLI::App app{"Frobenius-Schur indicator toolkit: recovers {chi(1) eps(chi)} from "
               "solution counts of g_1^2...g_n^2 = 1"};
  app.name("fsikit");
  app.require_subcommand(1);
  app.fallthrough();

  app.add_option("--group", cfg.group, "preset:NAME[:PARAM] or file:PATH");
  app.add_option("--input-format", cfg.input_format, "gens or multtable (file sources)")
      ->check(CLI::IsMember({"gens", "multtable"}));
  app.add_option("--format", cfg.format, "text or json")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--order-cap", cfg.order_cap, "enumeration cap (default FSIKIT_ORDER_CAP or 20000)")
      ->check(CLI::PositiveNumber);
  app.add_option("--simd", cfg.simd, "kernel level: auto, scalar or avx2")
      ->check(CLI::IsMember({"auto", "scalar", "avx2"}));

  auto* info = app.add_subcommand("info", "order, k(G), k_r(G) and [G : <g^2>]");
  auto* ssequence = app.add_subcommand("ssequence", "print s_k(1..N)");
  ssequence->add_option("--max-n", cfg.max_n, "N")->required()->check(CLI::PositiveNumber);
  ssequence->add_option("--k", cfg.k, "power (default 2)")->check(CLI::PositiveNumber);
  ssequence->add_option("--strategy", cfg.strategy, "class_algebra or element_dp")
      ->check(CLI::IsMember({"class_algebra", "element_dp"}));
  auto* recover_cmd = app.add_subcommand("recover", "recover the multiset {chi(1) eps(chi)}");
  recover_cmd->add_flag("--no-shortcut", cfg.no_shortcut,
                        "compute the top coefficient from s(k_r+2) instead of rho_-1");
  auto* indicators = app.add_subcommand("indicators", "counts of indicators +1, -1, 0");
  auto* detect = app.add_subcommand("detect-negative", "search for s(n)|G| < s(n+1), n odd");
  detect->add_option("--max-n", cfg.max_n, "largest odd n to scan")->check(CLI::PositiveNumber);
  auto* verify = app.add_subcommand("verify", "run every cross-check");
  verify->add_flag("--suite", cfg.suite, "verify the built-in preset list");
  auto* bench = app.add_subcommand("bench", "time each strategy and kernel level");
  bench->add_option("--max-n", cfg.max_n, "N")->required()->check(CLI::PositiveNumber);
  bench->add_option("--k", cfg.k, "power (default 2)")->check(CLI::PositiveNumber);

  std::vector<std::string> rev(args.rbegin(), args.rend());
  if (!rev.empty()) rev.pop_back();
  try {
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInputError;
  }

  try {
    if (cfg.simd != "auto") simd::set_level(*simd::parse_level(cfg.simd));
    if (*info) return cmd_info(cfg, out);
    if (*ssequence) return cmd_ssequence(cfg, out);
    if (*recover_cmd) return cmd_recover(cfg, out);
    if (*indicators) return cmd_indicators(cfg, out);
    if (*detect) return cmd_detect_negative(cfg, out);
    if (*verify) return cmd_verify(cfg, out);
    if (*bench) return cmd_bench(cfg, out);
  } catch (const InputError& e) {
    err << "fsikit: input error: " << e.what() << '\n';
    return kInputError;
  } catch (const std::invalid_argument& e) {
    err << "fsikit: " << e.what() << '\n';
    return kInputError;
  } catch (const InconsistencyError& e) {
    err << "fsikit: internal inconsistency: " << e.what() << '\n';
    return kInternalError;
  }
  return kInputError;
}

}  // namespace fsi::cli
