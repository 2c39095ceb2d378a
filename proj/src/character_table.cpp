#include "fsi/character_table.hpp"

#include <map>
#include <sstream>

#include "fixtures_data.hpp"
#include "fsi/error.hpp"

namespace fsi::oracle {

namespace {

std::vector<std::vector<std::string>> tokenized_lines(std::string_view text) {
  std::vector<std::vector<std::string>> lines;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    std::istringstream ls(line);
    std::vector<std::string> tokens;
    for (std::string tok; ls >> tok;) tokens.push_back(tok);
    if (!tokens.empty()) lines.push_back(std::move(tokens));
  }
  return lines;
}

unsigned long to_count(const std::string& tok, const std::string& context) {
  std::size_t used = 0;
  unsigned long v = 0;
  try {
    v = std::stoul(tok, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != tok.size() || tok.empty() || tok[0] == '-')
    throw InputError(context + ": expected a nonnegative integer, got '" + tok + "'");
  return v;
}

const std::map<std::string, std::string, std::less<>>& preset_by_fixture() {
  static const std::map<std::string, std::string, std::less<>> m{
      {"C1", "cyclic:1"},       {"C2", "cyclic:2"},
      {"C3", "cyclic:3"},       {"C4", "cyclic:4"},
      {"C5", "cyclic:5"},       {"C2xC2", "elementary_abelian_2:2"},
      {"S3", "symmetric:3"},    {"D4", "dihedral:4"},
      {"Q8", "quaternion:8"},   {"A4", "alternating:4"},
      {"S4", "symmetric:4"},    {"SL(2,3)", "sl23"},
      {"D5", "dihedral:5"},
  };
  return m;
}

}  // namespace

BigInt CharacterTableFixture::degree(std::size_t chi) const {
  const auto d = values.at(chi).at(0).as_rational();
  return d ? d->get_num() : BigInt(0);
}

CharacterTableFixture parse_fixture(std::string_view text) {
  const auto lines = tokenized_lines(text);
  if (lines.empty()) throw InputError("empty fixture");
  if (lines[0].size() != 3) throw InputError("fixture header must be 'name order num_classes'");
  CharacterTableFixture f;
  f.name = lines[0][0];
  const std::string ctx = "fixture " + f.name;
  f.order = to_count(lines[0][1], ctx);
  const std::size_t k = to_count(lines[0][2], ctx);
  if (lines.size() != 4 + k)
    throw InputError(ctx + ": expected " + std::to_string(4 + k) + " lines, found " +
                     std::to_string(lines.size()));
  for (std::size_t i = 1; i <= 3; ++i)
    if (lines[i].size() != k)
      throw InputError(ctx + ": line " + std::to_string(i + 1) + " must have " +
                       std::to_string(k) + " entries");
  for (const auto& t : lines[1]) f.class_sizes.push_back(to_count(t, ctx));
  for (const auto& t : lines[2]) f.element_orders.push_back(to_count(t, ctx));
  for (const auto& t : lines[3]) f.square_map.push_back(to_count(t, ctx));
  for (std::size_t r = 0; r < k; ++r) {
    const auto& row = lines[4 + r];
    if (row.size() != k)
      throw InputError(ctx + ": character " + std::to_string(r) + " has " +
                       std::to_string(row.size()) + " values");
    std::vector<Cyclotomic> values;
    for (const auto& t : row) values.push_back(Cyclotomic::parse(t));
    f.values.push_back(std::move(values));
  }
  validate_fixture(f);
  return f;
}

void validate_fixture(const CharacterTableFixture& f) {
  const std::string ctx = "fixture " + f.name;
  const std::size_t k = f.num_classes();
  if (k == 0) throw InputError(ctx + ": no classes");
  if (f.element_orders.size() != k || f.square_map.size() != k || f.values.size() != k)
    throw InputError(ctx + ": inconsistent dimensions");
  std::size_t total = 0;
  for (std::size_t c = 0; c < k; ++c) {
    if (f.class_sizes[c] == 0 || f.order % f.class_sizes[c] != 0)
      throw InputError(ctx + ": class size " + std::to_string(f.class_sizes[c]) +
                       " does not divide the order");
    if (f.square_map[c] >= k) throw InputError(ctx + ": square map index out of range");
    total += f.class_sizes[c];
  }
  if (total != f.order) throw InputError(ctx + ": class sizes do not sum to the order");
  if (f.class_sizes[0] != 1 || f.element_orders[0] != 1 || f.square_map[0] != 0)
    throw InputError(ctx + ": column 0 must be the identity class");

  BigInt degree_squares = 0;
  for (std::size_t chi = 0; chi < k; ++chi) {
    if (f.values[chi].size() != k) throw InputError(ctx + ": ragged character row");
    const auto d = f.values[chi][0].as_rational();
    if (!d || d->get_den() != 1 || sgn(*d) <= 0)
      throw InputError(ctx + ": character " + std::to_string(chi) +
                       " has no positive integer degree");
    degree_squares += d->get_num() * d->get_num();
  }
  if (degree_squares != static_cast<unsigned long>(f.order))
    throw InputError(ctx + ": sum of squared degrees is " + degree_squares.get_str() +
                     ", expected " + std::to_string(f.order));

  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = 0; b < k; ++b) {
      Cyclotomic inner(0L);
      for (std::size_t c = 0; c < k; ++c)
        inner = inner + Cyclotomic(static_cast<long>(f.class_sizes[c])) * f.values[a][c] *
                            f.values[b][c].conj();
      const Cyclotomic expected(a == b ? static_cast<long>(f.order) : 0L);
      if (!(inner == expected))
        throw InputError(ctx + ": rows " + std::to_string(a) + " and " + std::to_string(b) +
                         " violate orthogonality (inner product " + inner.to_string() + ")");
    }
}

std::vector<std::string> builtin_fixture_names() {
  std::vector<std::string> names;
  for (const auto& [name, preset] : preset_by_fixture()) names.push_back(name);
  return names;
}

const CharacterTableFixture& builtin_fixture(std::string_view name) {
  static const std::map<std::string, CharacterTableFixture, std::less<>> fixtures = [] {
    std::map<std::string, CharacterTableFixture, std::less<>> m;
    for (const auto& [stem, text] : detail::embedded_fixture_texts()) {
      auto f = parse_fixture(text);
      m.emplace(f.name, std::move(f));
    }
    return m;
  }();
  auto it = fixtures.find(name);
  if (it == fixtures.end()) throw InputError("unknown fixture '" + std::string(name) + "'");
  return it->second;
}

std::string fixture_preset(std::string_view fixture_name) {
  const auto& m = preset_by_fixture();
  auto it = m.find(fixture_name);
  if (it == m.end()) throw InputError("unknown fixture '" + std::string(fixture_name) + "'");
  return it->second;
}

std::optional<std::string> fixture_for_preset(std::string_view preset_label) {
  for (const auto& [name, preset] : preset_by_fixture())
    if (preset == preset_label) return name;
  return std::nullopt;
}

namespace {

class Aligner {
 public:
  Aligner(const CharacterTableFixture& f, const ClassData& cd, const StructureTensor& t,
          std::vector<ClassIndex> squares)
      : f_(f), cd_(cd), t_(t), squares_(std::move(squares)), k_(f.num_classes()),
        map_(k_, kUnset), used_(k_, false) {}

  bool search(std::size_t col) {
    if (col == k_) return homomorphic();
    for (ClassIndex c = 0; c < k_; ++c) {
      if (used_[c] || cd_.sizes[c] != f_.class_sizes[col] ||
          cd_.element_orders[c] != f_.element_orders[col])
        continue;
      map_[col] = c;
      used_[c] = true;
      if (squares_consistent(col) && search(col + 1)) return true;
      used_[c] = false;
      map_[col] = kUnset;
    }
    return false;
  }

  std::vector<ClassIndex> result() const { return map_; }

 private:
  static constexpr ClassIndex kUnset = ~ClassIndex{0};

  bool squares_consistent(std::size_t col) const {
    for (std::size_t c = 0; c <= col; ++c) {
      const std::size_t sq = f_.square_map[c];
      if (map_[c] == kUnset || map_[sq] == kUnset) continue;
      if (squares_[map_[c]] != map_[sq]) return false;
    }
    return true;
  }

  // |C| chi(C) |D| chi(D) = chi(1) sum_E a(C,D,E) |E| chi(E) for all chi, C, D.
  bool homomorphic() const {
    for (std::size_t chi = 0; chi < k_; ++chi) {
      const auto& row = f_.values[chi];
      const Cyclotomic deg = row[0];
      for (std::size_t c = 0; c < k_; ++c)
        for (std::size_t d = 0; d < k_; ++d) {
          const Cyclotomic lhs = Cyclotomic(static_cast<long>(f_.class_sizes[c] *
                                                              f_.class_sizes[d])) *
                                 row[c] * row[d];
          Cyclotomic rhs(0L);
          for (std::size_t e = 0; e < k_; ++e) {
            const BigInt& a = t_(map_[c], map_[d], map_[e]);
            if (sgn(a) == 0) continue;
            rhs = rhs + Cyclotomic(Rational(a * static_cast<unsigned long>(f_.class_sizes[e]))) *
                            row[e];
          }
          if (!(lhs == deg * rhs)) return false;
        }
    }
    return true;
  }

  const CharacterTableFixture& f_;
  const ClassData& cd_;
  const StructureTensor& t_;
  std::vector<ClassIndex> squares_;
  std::size_t k_;
  std::vector<ClassIndex> map_;
  std::vector<bool> used_;
};

}  // namespace

std::vector<ClassIndex> align_fixture(const CharacterTableFixture& f, const Group& g,
                                      const ClassData& cd, const StructureTensor& t) {
  if (f.order != g.order() || f.num_classes() != cd.num_classes())
    throw InputError("fixture " + f.name + " does not match the group: order " +
                     std::to_string(f.order) + " vs " + std::to_string(g.order()) +
                     ", classes " + std::to_string(f.num_classes()) + " vs " +
                     std::to_string(cd.num_classes()));
  Aligner aligner(f, cd, t, cd.power_map(g, 2));
  if (!aligner.search(0))
    throw InputError("class-matching failure: fixture " + f.name +
                     " cannot be aligned with the computed classes");
  return aligner.result();
}

std::vector<BigInt> higher_indicators(const CharacterTableFixture& f,
                                      const std::vector<ClassIndex>& alignment,
                                      const Group& g, const ClassData& cd, unsigned long k) {
  std::vector<std::size_t> column_of(cd.num_classes());
  for (std::size_t col = 0; col < alignment.size(); ++col) column_of[alignment[col]] = col;
  const auto powers = cd.power_map(g, k);

  std::vector<BigInt> eps;
  for (std::size_t chi = 0; chi < f.num_classes(); ++chi) {
    Cyclotomic sum(0L);
    for (std::size_t col = 0; col < f.num_classes(); ++col)
      sum = sum + Cyclotomic(static_cast<long>(f.class_sizes[col])) *
                      f.values[chi][column_of[powers[alignment[col]]]];
    const auto r = sum.as_rational();
    if (!r) throw InconsistencyError("fixture " + f.name + ": indicator sum is irrational");
    Rational e = *r / static_cast<unsigned long>(f.order);
    if (e.get_den() != 1)
      throw InconsistencyError("fixture " + f.name + ": indicator " + e.get_str() +
                               " is not an integer");
    eps.push_back(e.get_num());
  }
  return eps;
}

IndicatorMultiset fixture_indicator_multiset(const CharacterTableFixture& f, const Group& g,
                                             const ClassData& cd, const StructureTensor& t) {
  const auto alignment = align_fixture(f, g, cd, t);
  const auto eps = higher_indicators(f, alignment, g, cd, 2);
  std::vector<BigInt> entries;
  for (std::size_t chi = 0; chi < eps.size(); ++chi) {
    if (abs(eps[chi]) > 1)
      throw InconsistencyError("fixture " + f.name + ": Frobenius-Schur indicator " +
                               eps[chi].get_str() + " outside {-1, 0, 1}");
    if (sgn(eps[chi]) != 0) entries.push_back(f.degree(chi) * eps[chi]);
  }
  return IndicatorMultiset(std::move(entries));
}

IndicatorMultiset fixture_indicator_multiset(std::string_view fixture_name) {
  const auto& f = builtin_fixture(fixture_name);
  const Group g = enumerate_group(preset(fixture_preset(fixture_name)));
  const ClassData cd = conjugacy_classes(g);
  return fixture_indicator_multiset(f, g, cd, structure_constants(g, cd));
}

}  // namespace fsi::oracle
