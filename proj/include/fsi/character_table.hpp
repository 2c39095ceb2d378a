#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fsi/bigint.hpp"
#include "fsi/class_algebra.hpp"
#include "fsi/classes.hpp"
#include "fsi/cyclotomic.hpp"
#include "fsi/group.hpp"
#include "fsi/newton.hpp"

namespace fsi::oracle {

// Hand-transcribed character table, used only to evaluate indicators
// independently of the recovery pipeline.
//
// Text format:
//   name order num_classes
//   class sizes
//   element orders of the class representatives
//   square map (0-based class index of x^2 for x in each class)
//   one row of values per irreducible character (column 0 is the identity)
// Values are integers, rationals, or sums of roots of unity such as
// "E(5)^2+E(5)^3". Lines starting with '#' are comments.
struct CharacterTableFixture {
  std::string name;
  std::size_t order = 0;
  std::vector<std::size_t> class_sizes;
  std::vector<unsigned long> element_orders;
  std::vector<std::size_t> square_map;
  std::vector<std::vector<Cyclotomic>> values;  // [character][class]

  std::size_t num_classes() const { return class_sizes.size(); }
  BigInt degree(std::size_t chi) const;
};

// Parses and validates (class sizes sum to the order, sum of squared
// degrees is the order, row orthogonality). Throws InputError.
CharacterTableFixture parse_fixture(std::string_view text);
void validate_fixture(const CharacterTableFixture& f);

std::vector<std::string> builtin_fixture_names();
const CharacterTableFixture& builtin_fixture(std::string_view name);

// Preset descriptor the fixture describes, e.g. "Q8" -> "quaternion:8".
std::string fixture_preset(std::string_view fixture_name);
// Inverse lookup by preset label; nullopt if no fixture exists.
std::optional<std::string> fixture_for_preset(std::string_view preset_label);

// column[c] = computed class matching fixture column c. Columns are matched
// by (class size, element order), consistently with the square map, and the
// whole alignment must make every character's central character a
// homomorphism of the computed class algebra. Throws InputError when no
// such alignment exists.
std::vector<ClassIndex> align_fixture(const CharacterTableFixture& f, const Group& g,
                                      const ClassData& cd, const StructureTensor& t);

// eps_k(chi) = (1/|G|) sum_g chi(g^k), one per fixture character, using the
// k-th power map of the actual group. Throws InconsistencyError if a value
// is not an integer.
std::vector<BigInt> higher_indicators(const CharacterTableFixture& f,
                                      const std::vector<ClassIndex>& alignment,
                                      const Group& g, const ClassData& cd, unsigned long k);

// {chi(1) eps(chi) : eps(chi) != 0} with eps evaluated from the definition.
IndicatorMultiset fixture_indicator_multiset(const CharacterTableFixture& f, const Group& g,
                                             const ClassData& cd, const StructureTensor& t);
IndicatorMultiset fixture_indicator_multiset(std::string_view fixture_name);

}  // namespace fsi::oracle
