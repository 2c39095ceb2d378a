#include "fsi/cyclotomic.hpp"

#include <map>
#include <mutex>
#include <numeric>

#include "fsi/error.hpp"

namespace fsi::oracle {

namespace {

using IntPoly = std::vector<long>;  // ascending

// Phi_n, from x^n - 1 = prod_{d | n} Phi_d.
const IntPoly& cyclotomic_polynomial(unsigned n) {
  static std::recursive_mutex mu;
  static std::map<unsigned, IntPoly> cache;
  std::lock_guard lock(mu);
  if (auto it = cache.find(n); it != cache.end()) return it->second;

  IntPoly num(n + 1, 0);
  num[0] = -1;
  num[n] = 1;
  for (unsigned d = 1; d < n; ++d) {
    if (n % d) continue;
    const IntPoly& div = cyclotomic_polynomial(d);
    // exact monic division num / div
    IntPoly q(num.size() - div.size() + 1, 0);
    for (std::size_t i = q.size(); i-- > 0;) {
      q[i] = num[i + div.size() - 1];
      for (std::size_t j = 0; j < div.size(); ++j) num[i + j] -= q[i] * div[j];
    }
    num = std::move(q);
  }
  return cache.emplace(n, std::move(num)).first->second;
}

}  // namespace

Cyclotomic::Cyclotomic(unsigned n, std::vector<Rational> c) : n_(n), c_(std::move(c)) {
  reduce();
}

void Cyclotomic::reduce() {
  const IntPoly& phi = cyclotomic_polynomial(n_);
  const std::size_t deg = phi.size() - 1;
  for (std::size_t i = c_.size(); i-- > deg;) {
    if (c_[i] == 0) continue;
    const Rational lead = c_[i];
    for (std::size_t j = 0; j <= deg; ++j) c_[i - deg + j] -= lead * phi[j];
  }
  c_.resize(std::max<std::size_t>(deg, 1));
  for (auto& v : c_) v.canonicalize();
}

Cyclotomic Cyclotomic::root_of_unity(unsigned n, long j) {
  if (n == 0) throw InputError("E(0) is undefined");
  std::vector<Rational> c(n, 0);
  c[static_cast<std::size_t>(((j % static_cast<long>(n)) + n) % n)] = 1;
  return Cyclotomic(n, std::move(c));
}

Cyclotomic Cyclotomic::lifted(unsigned m) const {
  if (m == n_) return *this;
  const unsigned step = m / n_;
  std::vector<Rational> c(m, 0);
  for (std::size_t j = 0; j < c_.size(); ++j) c[j * step] = c_[j];
  return Cyclotomic(m, std::move(c));
}

Cyclotomic Cyclotomic::operator+(const Cyclotomic& o) const {
  const unsigned m = std::lcm(n_, o.n_);
  auto a = lifted(m), b = o.lifted(m);
  std::vector<Rational> c(m, 0);
  for (std::size_t j = 0; j < a.c_.size(); ++j) c[j] += a.c_[j];
  for (std::size_t j = 0; j < b.c_.size(); ++j) c[j] += b.c_[j];
  return Cyclotomic(m, std::move(c));
}

Cyclotomic Cyclotomic::operator-() const {
  std::vector<Rational> c = c_;
  for (auto& v : c) v = -v;
  return Cyclotomic(n_, std::move(c));
}

Cyclotomic Cyclotomic::operator-(const Cyclotomic& o) const { return *this + (-o); }

Cyclotomic Cyclotomic::operator*(const Cyclotomic& o) const {
  const unsigned m = std::lcm(n_, o.n_);
  auto a = lifted(m), b = o.lifted(m);
  std::vector<Rational> c(m, 0);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) c[(i + j) % m] += a.c_[i] * b.c_[j];
  }
  return Cyclotomic(m, std::move(c));
}

Cyclotomic Cyclotomic::conj() const {
  std::vector<Rational> c(n_, 0);
  for (std::size_t j = 0; j < c_.size(); ++j) c[(n_ - j) % n_] += c_[j];
  return Cyclotomic(n_, std::move(c));
}

bool Cyclotomic::operator==(const Cyclotomic& o) const { return (*this - o).is_zero(); }

bool Cyclotomic::is_zero() const {
  for (const auto& v : c_)
    if (v != 0) return false;
  return true;
}

std::optional<Rational> Cyclotomic::as_rational() const {
  for (std::size_t j = 1; j < c_.size(); ++j)
    if (c_[j] != 0) return std::nullopt;
  return c_[0];
}

std::string Cyclotomic::to_string() const {
  std::string out;
  for (std::size_t j = 0; j < c_.size(); ++j) {
    if (c_[j] == 0) continue;
    std::string coef = c_[j].get_str();
    std::string term;
    if (j == 0) {
      term = coef;
    } else {
      const std::string root = "E(" + std::to_string(n_) + ")" +
                               (j > 1 ? "^" + std::to_string(j) : std::string{});
      if (c_[j] == 1) term = root;
      else if (c_[j] == -1) term = "-" + root;
      else term = coef + "*" + root;
    }
    if (!out.empty() && term[0] != '-') out += "+";
    out += term;
  }
  return out.empty() ? "0" : out;
}

namespace {

class ValueParser {
 public:
  explicit ValueParser(std::string_view s) : s_(s) {}

  Cyclotomic parse() {
    if (s_.empty()) fail("empty value");
    Cyclotomic total(0L);
    bool first = true;
    while (pos_ < s_.size()) {
      bool negative = false;
      if (peek() == '+' || peek() == '-') {
        negative = s_[pos_++] == '-';
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      Cyclotomic t = term();
      total = total + (negative ? -t : t);
      first = false;
    }
    return total;
  }

 private:
  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }

  [[noreturn]] void fail(const std::string& why) const {
    throw InputError("bad character value '" + std::string(s_) + "': " + why);
  }

  long integer() {
    const std::size_t start = pos_;
    while (pos_ < s_.size() && s_[pos_] >= '0' && s_[pos_] <= '9') ++pos_;
    if (start == pos_) fail("expected a number");
    return std::stol(std::string(s_.substr(start, pos_ - start)));
  }

  Cyclotomic root() {
    if (s_.substr(pos_, 2) != "E(") fail("expected E(n)");
    pos_ += 2;
    const long n = integer();
    if (peek() != ')') fail("expected ')'");
    ++pos_;
    long j = 1;
    if (peek() == '^') {
      ++pos_;
      j = integer();
    }
    if (n <= 0) fail("E(n) needs n > 0");
    return Cyclotomic::root_of_unity(static_cast<unsigned>(n), j);
  }

  Cyclotomic term() {
    if (peek() == 'E') return root();
    const long num = integer();
    Rational coef(num);
    if (peek() == '/') {
      ++pos_;
      const long den = integer();
      if (den == 0) fail("zero denominator");
      coef = Rational(num, den);
      coef.canonicalize();
    }
    if (peek() == '*') {
      ++pos_;
      return Cyclotomic(coef) * root();
    }
    return Cyclotomic(coef);
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

Cyclotomic Cyclotomic::parse(std::string_view text) { return ValueParser(text).parse(); }

}  // namespace fsi::oracle
