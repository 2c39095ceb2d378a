#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "fsi/group.hpp"

namespace fsi {

using ClassIndex = std::uint32_t;

// Conjugacy class partition. Classes are ordered by the order of their
// elements, ties broken by representative index, so class 0 is {1}.
struct ClassData {
  std::vector<ClassIndex> class_of;        // element -> class
  std::vector<Element> reps;               // minimal element index in the class
  std::vector<std::size_t> sizes;
  std::vector<ClassIndex> inverse_class;
  std::vector<unsigned long> element_orders;  // per class
  std::vector<std::vector<Element>> members;  // ascending element indices

  std::size_t num_classes() const { return reps.size(); }
  bool is_real(ClassIndex c) const { return inverse_class[c] == c; }
  std::size_t num_real_classes() const;

  // Class of reps[c]^k, for every class c.
  std::vector<ClassIndex> power_map(const Group& g, unsigned long k) const;
};

ClassData conjugacy_classes(const Group& g);

// Elements of the subgroup generated by gens, in discovery order.
std::vector<Element> subgroup_closure(const Group& g, std::span<const Element> gens);

// [G : N] where N = <g^2 : g in G>. Always a power of two.
std::size_t squares_subgroup_index(const Group& g);

}  // namespace fsi
