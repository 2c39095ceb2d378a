#pragma once

#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace fsi {

using Point = std::uint32_t;

// A bijection of {0, ..., degree-1}. Products act on the right: p.then(q)
// maps x to q(p(x)).
class Permutation {
 public:
  Permutation() = default;

  // Throws InputError unless images is a bijection.
  explicit Permutation(std::vector<Point> images);

  static Permutation identity(std::size_t degree);

  // Cycle notation, e.g. from_cycles(4, {{0, 1}, {2, 3}}).
  static Permutation from_cycles(std::size_t degree,
                                 std::initializer_list<std::initializer_list<Point>> cycles);

  std::size_t degree() const { return images_.size(); }
  std::span<const Point> images() const { return images_; }
  Point operator()(Point x) const { return images_[x]; }

  Permutation then(const Permutation& q) const;
  Permutation inverse() const;
  bool is_identity() const;

  std::string to_string() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<Point> images_;
};

}  // namespace fsi
