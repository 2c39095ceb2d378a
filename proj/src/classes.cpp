#include "fsi/classes.hpp"

#include <algorithm>
#include <numeric>

namespace fsi {

std::size_t ClassData::num_real_classes() const {
  std::size_t n = 0;
  for (ClassIndex c = 0; c < num_classes(); ++c) n += is_real(c);
  return n;
}

std::vector<ClassIndex> ClassData::power_map(const Group& g, unsigned long k) const {
  std::vector<ClassIndex> map(num_classes());
  for (ClassIndex c = 0; c < num_classes(); ++c) map[c] = class_of[g.power(reps[c], k)];
  return map;
}

ClassData conjugacy_classes(const Group& g) {
  const std::size_t n = g.order();
  constexpr ClassIndex kUnset = ~ClassIndex{0};
  std::vector<ClassIndex> orbit_of(n, kUnset);
  std::vector<std::vector<Element>> orbits;

  // Orbits under conjugation by the generators; elements visited in index
  // order, so each orbit's first element is its minimum.
  for (Element x = 0; x < n; ++x) {
    if (orbit_of[x] != kUnset) continue;
    const auto id = static_cast<ClassIndex>(orbits.size());
    std::vector<Element> orbit{x};
    orbit_of[x] = id;
    for (std::size_t i = 0; i < orbit.size(); ++i)
      for (Element s : g.generators()) {
        const Element y = g.conjugate(orbit[i], s);
        if (orbit_of[y] == kUnset) {
          orbit_of[y] = id;
          orbit.push_back(y);
        }
      }
    std::sort(orbit.begin(), orbit.end());
    orbits.push_back(std::move(orbit));
  }

  std::vector<unsigned long> orders(orbits.size());
  for (std::size_t i = 0; i < orbits.size(); ++i) orders[i] = g.element_order(orbits[i][0]);

  std::vector<std::size_t> perm(orbits.size());
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  std::sort(perm.begin(), perm.end(), [&](std::size_t a, std::size_t b) {
    if (orders[a] != orders[b]) return orders[a] < orders[b];
    return orbits[a][0] < orbits[b][0];
  });

  ClassData cd;
  cd.class_of.resize(n);
  for (std::size_t c = 0; c < perm.size(); ++c) {
    auto& orbit = orbits[perm[c]];
    for (Element x : orbit) cd.class_of[x] = static_cast<ClassIndex>(c);
    cd.reps.push_back(orbit[0]);
    cd.sizes.push_back(orbit.size());
    cd.element_orders.push_back(orders[perm[c]]);
    cd.members.push_back(std::move(orbit));
  }
  cd.inverse_class.resize(cd.reps.size());
  for (std::size_t c = 0; c < cd.reps.size(); ++c)
    cd.inverse_class[c] = cd.class_of[g.inverse(cd.reps[c])];
  return cd;
}

std::vector<Element> subgroup_closure(const Group& g, std::span<const Element> gens) {
  std::vector<bool> in(g.order(), false);
  std::vector<Element> members{Group::identity()};
  in[Group::identity()] = true;
  std::vector<Element> used;
  // Add generators one at a time, skipping those already inside, and
  // re-close with the growing generating set.
  for (Element s : gens) {
    if (in[s]) continue;
    used.push_back(s);
    for (std::size_t i = 0; i < members.size(); ++i)
      for (Element t : used) {
        const Element y = g.product(members[i], t);
        if (!in[y]) {
          in[y] = true;
          members.push_back(y);
        }
      }
  }
  return members;
}

std::size_t squares_subgroup_index(const Group& g) {
  std::vector<bool> is_square(g.order(), false);
  std::vector<Element> squares;
  for (Element x = 0; x < g.order(); ++x) {
    const Element sq = g.product(x, x);
    if (!is_square[sq]) {
      is_square[sq] = true;
      squares.push_back(sq);
    }
  }
  return g.order() / subgroup_closure(g, squares).size();
}

}  // namespace fsi
