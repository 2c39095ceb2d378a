#include "fsi/permutation.hpp"

#include <numeric>
#include <sstream>

#include "fsi/error.hpp"
#include "fsi/simd/kernels.hpp"

namespace fsi {

Permutation::Permutation(std::vector<Point> images) : images_(std::move(images)) {
  std::vector<bool> hit(images_.size(), false);
  for (Point x : images_) {
    if (x >= images_.size() || hit[x])
      throw InputError("not a permutation: " + to_string());
    hit[x] = true;
  }
}

Permutation Permutation::identity(std::size_t degree) {
  std::vector<Point> images(degree);
  std::iota(images.begin(), images.end(), Point{0});
  return Permutation(std::move(images));
}

Permutation Permutation::from_cycles(
    std::size_t degree, std::initializer_list<std::initializer_list<Point>> cycles) {
  std::vector<Point> images(degree);
  std::iota(images.begin(), images.end(), Point{0});
  for (const auto& cycle : cycles) {
    if (cycle.size() < 2) continue;
    const Point* c = cycle.begin();
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      if (c[i] >= degree) throw InputError("cycle point out of range");
      images[c[i]] = c[(i + 1) % cycle.size()];
    }
  }
  return Permutation(std::move(images));
}

Permutation Permutation::then(const Permutation& q) const {
  if (q.degree() != degree()) throw InputError("degree mismatch in composition");
  std::vector<Point> out(degree());
  simd::gather(q.images_, images_, out);
  Permutation r;
  r.images_ = std::move(out);
  return r;
}

Permutation Permutation::inverse() const {
  Permutation r;
  r.images_.resize(degree());
  for (Point x = 0; x < degree(); ++x) r.images_[images_[x]] = x;
  return r;
}

bool Permutation::is_identity() const {
  for (Point x = 0; x < degree(); ++x)
    if (images_[x] != x) return false;
  return true;
}

std::string Permutation::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < images_.size(); ++i) os << (i ? " " : "") << images_[i];
  os << ']';
  return os.str();
}

}  // namespace fsi
