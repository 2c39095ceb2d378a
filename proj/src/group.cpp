#include "fsi/group.hpp"

#include <bit>
#include <cstdlib>
#include <random>

#include "fsi/error.hpp"
#include "fsi/simd/kernels.hpp"

namespace fsi {

namespace {

constexpr Element kEmpty = ~Element{0};

std::uint64_t hash_images(std::span<const Point> images) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (Point x : images) {
    h ^= x;
    h *= 0x100000001b3ull;
    h ^= h >> 29;
  }
  return h ^ (h >> 32);
}

}  // namespace

std::size_t Group::slot_of(std::span<const Point> images) const {
  const std::size_t mask = slots_.size() - 1;
  std::size_t slot = hash_images(images) & mask;
  while (true) {
    const Element e = slots_[slot];
    if (e == kEmpty || simd::equal(this->images(e), images)) return slot;
    slot = (slot + 1) & mask;
  }
}

void Group::build_index(std::size_t capacity) {
  slots_.assign(std::bit_ceil(std::max<std::size_t>(16, 2 * capacity)), kEmpty);
  for (Element e = 0; e < order_; ++e) slots_[slot_of(images(e))] = e;
}

Element Group::append(std::span<const Point> images) {
  if (2 * (order_ + 1) > slots_.size()) build_index(2 * (order_ + 1));
  const auto e = static_cast<Element>(order_);
  images_.insert(images_.end(), images.begin(), images.end());
  ++order_;
  slots_[slot_of(images)] = e;
  return e;
}

std::optional<Element> Group::find(std::span<const Point> images) const {
  if (images.size() != degree_ || slots_.empty()) return std::nullopt;
  const Element e = slots_[slot_of(images)];
  if (e == kEmpty) return std::nullopt;
  return e;
}

Element Group::product_by_composition(Element a, Element b) const {
  thread_local std::vector<Point> scratch;
  scratch.resize(degree_);
  simd::gather(images(b), images(a), scratch);
  const Element e = slots_[slot_of(scratch)];
  if (e == kEmpty) throw InconsistencyError("group is not closed under products");
  return e;
}

Element Group::product(Element a, Element b) const {
  if (!table_.empty()) return table_[std::size_t{a} * order_ + b];
  return product_by_composition(a, b);
}

void Group::left_products(Element a, std::span<const Element> bs,
                          std::span<Element> out) const {
  if (!table_.empty()) {
    simd::gather({table_.data() + std::size_t{a} * order_, order_}, bs, out);
    return;
  }
  for (std::size_t j = 0; j < bs.size(); ++j) out[j] = product_by_composition(a, bs[j]);
}

Element Group::power(Element a, unsigned long k) const {
  Element result = identity();
  Element base = a;
  while (k) {
    if (k & 1) result = product(result, base);
    k >>= 1;
    if (k) base = product(base, base);
  }
  return result;
}

Element Group::conjugate(Element x, Element y) const {
  return product(product(inverse(y), x), y);
}

unsigned long Group::element_order(Element a) const {
  unsigned long n = 1;
  for (Element x = a; x != identity(); x = product(x, a)) ++n;
  return n;
}

void Group::finish(std::vector<Element> table) {
  table_ = std::move(table);
  inverses_.resize(order_);
  std::vector<Point> inv(degree_);
  for (Element a = 0; a < order_; ++a) {
    const auto im = images(a);
    for (Point x = 0; x < degree_; ++x) inv[im[x]] = x;
    const auto found = find(inv);
    if (!found) throw InconsistencyError("group is not closed under inverses");
    inverses_[a] = *found;
  }
}

Group enumerate_group(const GroupSpec& spec, std::size_t order_cap) {
  Group g;
  g.label_ = spec.label;

  if (const auto* gens = std::get_if<GroupSpec::Generators>(&spec.source)) {
    if (gens->degree == 0) throw InputError("degree must be positive");
    for (const auto& s : gens->gens)
      if (s.degree() != gens->degree) throw InputError("generator degrees disagree");
    g.degree_ = gens->degree;
    g.build_index(64);
    g.append(Permutation::identity(g.degree_).images());

    const std::size_t ngens = gens->gens.size();
    // right_mult[e * ngens + s] = e * gen_s, filled in BFS order
    std::vector<Element> right_mult;
    std::vector<Element> parent{0};
    std::vector<std::uint32_t> parent_gen{0};
    std::vector<Point> scratch(g.degree_);
    for (std::size_t e = 0; e < g.order_; ++e) {
      for (std::size_t s = 0; s < ngens; ++s) {
        simd::gather(gens->gens[s].images(), g.images(static_cast<Element>(e)), scratch);
        Element next;
        if (auto found = g.find(scratch)) {
          next = *found;
        } else {
          if (g.order_ >= order_cap)
            throw InputError("group order exceeds the cap of " + std::to_string(order_cap) +
                             " (raise it with --order-cap or FSIKIT_ORDER_CAP)");
          next = g.append(scratch);
          parent.push_back(static_cast<Element>(e));
          parent_gen.push_back(static_cast<std::uint32_t>(s));
        }
        right_mult.push_back(next);
      }
    }
    for (const auto& s : gens->gens) g.generators_.push_back(*g.find(s.images()));

    std::vector<Element> table;
    if (g.order_ <= kProductTableLimit) {
      // a * e = (a * parent(e)) * gen; parents precede children in BFS order.
      const std::size_t n = g.order_;
      table.resize(n * n);
      for (std::size_t a = 0; a < n; ++a) {
        Element* row = table.data() + a * n;
        row[0] = static_cast<Element>(a);
        for (std::size_t e = 1; e < n; ++e)
          row[e] = right_mult[std::size_t{row[parent[e]]} * ngens + parent_gen[e]];
      }
    }
    g.finish(std::move(table));
    return g;
  }

  const auto& tab = std::get<GroupSpec::Table>(spec.source);
  const std::size_t n = tab.order;
  if (n == 0) throw InputError("order must be positive");
  if (tab.entries.size() != n * n) throw InputError("multiplication table is not square");
  if (n > order_cap)
    throw InputError("group order exceeds the cap of " + std::to_string(order_cap));
  auto at = [&](std::size_t a, std::size_t b) { return tab.entries[a * n + b]; };
  for (std::size_t a = 0; a < n; ++a)
    if (at(0, a) != a || at(a, 0) != a)
      throw InputError("row 0 and column 0 must be the identity");
  {
    std::vector<std::uint32_t> seen(n, ~0u);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) {
        if (seen[at(a, b)] == a) throw InputError("table row " + std::to_string(a) +
                                                  " is not a permutation");
        seen[at(a, b)] = static_cast<std::uint32_t>(a);
      }
    std::fill(seen.begin(), seen.end(), ~0u);
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t a = 0; a < n; ++a) {
        if (seen[at(a, b)] == b) throw InputError("table column " + std::to_string(b) +
                                                  " is not a permutation");
        seen[at(a, b)] = static_cast<std::uint32_t>(b);
      }
  }
  auto check_assoc = [&](std::size_t a, std::size_t b, std::size_t c) {
    if (at(at(a, b), c) != at(a, at(b, c)))
      throw InputError("multiplication table is not associative at (" + std::to_string(a) +
                       "," + std::to_string(b) + "," + std::to_string(c) + ")");
  };
  if (n <= 48) {
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        for (std::size_t c = 0; c < n; ++c) check_assoc(a, b, c);
  } else {
    std::mt19937_64 rng(0x5eed);
    std::uniform_int_distribution<std::size_t> pick(0, n - 1);
    for (int i = 0; i < 4096; ++i) check_assoc(pick(rng), pick(rng), pick(rng));
  }

  // Right regular representation: element a acts as x -> x*a.
  g.degree_ = n;
  g.images_.resize(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t x = 0; x < n; ++x) g.images_[a * n + x] = at(x, a);
  g.order_ = n;
  g.build_index(n);

  // Greedy generating set: add the first element outside the current span.
  std::vector<bool> in_span(n, false);
  in_span[0] = true;
  std::vector<Element> members{0};
  for (Element a = 1; a < n; ++a) {
    if (in_span[a]) continue;
    g.generators_.push_back(a);
    for (std::size_t i = 0; i < members.size(); ++i)
      for (Element s : g.generators_) {
        const Element next = at(members[i], s);
        if (!in_span[next]) {
          in_span[next] = true;
          members.push_back(next);
        }
      }
  }
  g.finish(n <= kProductTableLimit ? tab.entries : std::vector<Element>{});
  return g;
}

}  // namespace fsi
