#include "phipoly/polynomial.hpp"

#include <algorithm>

#include "phipoly/error.hpp"

namespace phipoly {

const Int IntPolynomial::zero_(0);

IntPolynomial::IntPolynomial(std::vector<Int> coeffs) : coeffs_(std::move(coeffs)) {
  normalize();
}

IntPolynomial::IntPolynomial(std::initializer_list<long> coeffs) {
  coeffs_.reserve(coeffs.size());
  for (long c : coeffs) coeffs_.emplace_back(c);
  normalize();
}

void IntPolynomial::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

IntPolynomial IntPolynomial::x() { return monomial(Int(1), 1); }

IntPolynomial IntPolynomial::constant(Int c) {
  std::vector<Int> v;
  if (c != 0) v.push_back(std::move(c));
  return IntPolynomial(std::move(v));
}

IntPolynomial IntPolynomial::monomial(Int c, std::size_t power) {
  if (c == 0) return IntPolynomial();
  std::vector<Int> v(power + 1, Int(0));
  v[power] = std::move(c);
  return IntPolynomial(std::move(v));
}

const Int& IntPolynomial::coefficient(std::size_t i) const {
  return i < coeffs_.size() ? coeffs_[i] : zero_;
}

const Int& IntPolynomial::leading_coefficient() const {
  return coeffs_.empty() ? zero_ : coeffs_.back();
}

bool IntPolynomial::is_monic() const {
  return !coeffs_.empty() && coeffs_.back() == 1;
}

IntPolynomial IntPolynomial::operator+(const IntPolynomial& o) const {
  std::vector<Int> out(std::max(coeffs_.size(), o.coeffs_.size()), Int(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) out[i] = coeffs_[i];
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) out[i] += o.coeffs_[i];
  return IntPolynomial(std::move(out));
}

IntPolynomial IntPolynomial::operator-(const IntPolynomial& o) const {
  std::vector<Int> out(std::max(coeffs_.size(), o.coeffs_.size()), Int(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) out[i] = coeffs_[i];
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) out[i] -= o.coeffs_[i];
  return IntPolynomial(std::move(out));
}

IntPolynomial IntPolynomial::operator-() const {
  std::vector<Int> out(coeffs_);
  for (Int& c : out) c = -c;
  return IntPolynomial(std::move(out));
}

IntPolynomial IntPolynomial::operator*(const IntPolynomial& o) const {
  if (is_zero() || o.is_zero()) return IntPolynomial();
  std::vector<Int> out(coeffs_.size() + o.coeffs_.size() - 1, Int(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j)
      out[i + j] += coeffs_[i] * o.coeffs_[j];
  }
  return IntPolynomial(std::move(out));
}

IntPolynomial IntPolynomial::operator*(const Int& c) const {
  if (c == 0) return IntPolynomial();
  std::vector<Int> out(coeffs_);
  for (Int& v : out) v *= c;
  return IntPolynomial(std::move(out));
}

IntPolynomial IntPolynomial::pow(unsigned e) const {
  IntPolynomial result = constant(Int(1));
  IntPolynomial base = *this;
  while (e) {
    if (e & 1u) result = result * base;
    e >>= 1u;
    if (e) base = base * base;
  }
  return result;
}

IntPolynomial IntPolynomial::derivative() const {
  if (coeffs_.size() <= 1) return IntPolynomial();
  std::vector<Int> out(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) out[i - 1] = coeffs_[i] * Int(static_cast<long>(i));
  return IntPolynomial(std::move(out));
}

Int IntPolynomial::eval(const Int& x) const {
  Int acc(0);
  for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * x + coeffs_[i];
  return acc;
}

IntPolynomial IntPolynomial::compose_shift(const Int& c) const {
  IntPolynomial acc;
  IntPolynomial shift({0, 1});  // x
  shift = shift + constant(c);
  for (std::size_t i = coeffs_.size(); i-- > 0;)
    acc = acc * shift + constant(coeffs_[i]);
  return acc;
}

Int IntPolynomial::content() const {
  Int g(0);
  for (const Int& c : coeffs_) g = int_gcd(g, c);
  return g;
}

IntPolynomial IntPolynomial::primitive_part() const {
  if (is_zero()) return IntPolynomial();
  Int g = content();
  std::vector<Int> out(coeffs_);
  for (Int& c : out) c /= g;
  return IntPolynomial(std::move(out));
}

void divmod_monic(const IntPolynomial& num, const IntPolynomial& den,
                  IntPolynomial& quotient, IntPolynomial& remainder) {
  if (!den.is_monic()) throw domain_error("divmod_monic: divisor must be monic");
  const int dd = den.degree();
  std::vector<Int> rem(num.coefficients());
  std::vector<Int> quot;
  if (num.degree() >= dd) quot.assign(static_cast<std::size_t>(num.degree() - dd) + 1, Int(0));
  for (int i = num.degree(); i >= dd; --i) {
    Int c = rem[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    quot[static_cast<std::size_t>(i - dd)] = c;
    for (int j = 0; j <= dd; ++j)
      rem[static_cast<std::size_t>(i - dd + j)] -= c * den.coefficient(static_cast<std::size_t>(j));
  }
  quotient = IntPolynomial(std::move(quot));
  remainder = IntPolynomial(std::move(rem));
}

IntPolynomial gcd_over_q(const IntPolynomial& a, const IntPolynomial& b) {
  // Monic Euclid over Q; coefficient growth is irrelevant at desk scale.
  using QPoly = std::vector<Rat>;
  auto to_q = [](const IntPolynomial& f) {
    QPoly out(f.coefficients().size());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = Rat(f.coefficients()[i]);
    return out;
  };
  auto norm = [](QPoly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
  };
  auto rem_q = [&norm](QPoly r, const QPoly& d) {
    const std::size_t dd = d.size() - 1;
    while (r.size() > dd) {
      Rat c = r.back() / d.back();
      c.canonicalize();
      const std::size_t shift = r.size() - 1 - dd;
      for (std::size_t j = 0; j < d.size(); ++j) {
        r[shift + j] -= c * d[j];
        r[shift + j].canonicalize();
      }
      norm(r);
      if (r.size() <= dd) break;
    }
    norm(r);
    return r;
  };

  QPoly u = to_q(a), v = to_q(b);
  norm(u);
  norm(v);
  while (!v.empty()) {
    QPoly r = rem_q(u, v);
    u = std::move(v);
    v = std::move(r);
  }
  if (u.empty()) return IntPolynomial();
  // Clear denominators, strip content, fix the sign.
  Int den(1);
  for (const Rat& c : u) den = int_lcm(den, c.get_den());
  std::vector<Int> zc(u.size());
  for (std::size_t i = 0; i < u.size(); ++i) {
    Rat scaled = u[i] * Rat(den);
    scaled.canonicalize();
    zc[i] = scaled.get_num();
  }
  IntPolynomial g = IntPolynomial(std::move(zc)).primitive_part();
  if (g.leading_coefficient() < 0) g = -g;
  return g;
}

bool is_squarefree_over_q(const IntPolynomial& f) {
  if (f.is_zero()) return false;
  if (f.degree() == 0) return true;
  return gcd_over_q(f, f.derivative()).degree() == 0;
}

}  // namespace phipoly
