#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "fsi/permutation.hpp"

namespace fsi {

using Element = std::uint32_t;

enum class InputFormat { gens, multtable, preset };

struct GroupSpec {
  struct Generators {
    std::size_t degree = 0;
    std::vector<Permutation> gens;
  };
  // Row-major Cayley table; entry [a * order + b] is the index of a*b.
  struct Table {
    std::size_t order = 0;
    std::vector<Element> entries;
  };

  std::variant<Generators, Table> source;
  std::string label;
};

// Parses the .gens / .multtable formats, or a preset descriptor such as
// "cyclic:5" or "sl23". Throws InputError on malformed text.
GroupSpec parse_group_spec(std::string_view text, InputFormat format);

// Named small groups as faithful permutation groups:
//   cyclic:n, dihedral:n (order 2n), symmetric:n, alternating:n,
//   quaternion:n (generalized quaternion of order n = 2^m >= 8),
//   dicyclic:n (order 4n), sl23, elementary_abelian_2:r (order 2^r).
GroupSpec preset(std::string_view name, std::span<const long> params);
GroupSpec preset(std::string_view descriptor);

inline constexpr std::size_t kDefaultOrderCap = 20000;
// Groups up to this order memoize the full Cayley table.
inline constexpr std::size_t kProductTableLimit = 4096;

// FSIKIT_ORDER_CAP if set to a positive integer, else kDefaultOrderCap.
std::size_t order_cap_from_env();

// A finite group with elements indexed 0..order-1 and element 0 the
// identity. Immutable after enumeration; safe to share across threads.
class Group {
 public:
  std::size_t order() const { return order_; }
  std::size_t degree() const { return degree_; }
  const std::string& label() const { return label_; }

  static constexpr Element identity() { return 0; }

  Element product(Element a, Element b) const;
  Element inverse(Element a) const { return inverses_[a]; }
  Element power(Element a, unsigned long k) const;
  // y^-1 x y
  Element conjugate(Element x, Element y) const;
  unsigned long element_order(Element a) const;

  // out[j] = a * bs[j]
  void left_products(Element a, std::span<const Element> bs,
                     std::span<Element> out) const;

  std::span<const Element> generators() const { return generators_; }
  std::span<const Point> images(Element a) const {
    return {images_.data() + std::size_t{a} * degree_, degree_};
  }
  std::optional<Element> find(std::span<const Point> images) const;
  bool has_product_table() const { return !table_.empty(); }

 private:
  friend Group enumerate_group(const GroupSpec& spec, std::size_t order_cap);

  Element append(std::span<const Point> images);
  void build_index(std::size_t capacity);
  std::size_t slot_of(std::span<const Point> images) const;
  Element product_by_composition(Element a, Element b) const;
  void finish(std::vector<Element> table);

  std::string label_;
  std::size_t order_ = 0;
  std::size_t degree_ = 0;
  std::vector<Point> images_;
  std::vector<Element> slots_;
  std::vector<Element> inverses_;
  std::vector<Element> generators_;
  std::vector<Element> table_;
};

// BFS closure from the identity, right-multiplying discovered elements by
// the generators in input order. Deterministic for a given spec. Table
// specs keep their own indexing and are checked for the group axioms.
// Throws InputError when the order exceeds order_cap.
Group enumerate_group(const GroupSpec& spec, std::size_t order_cap = kDefaultOrderCap);

}  // namespace fsi
