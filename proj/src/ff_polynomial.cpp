#include "phipoly/ff_polynomial.hpp"

#include "phipoly/error.hpp"

namespace phipoly {

namespace {

void require_same_field(const FfPolynomial& a, const FfPolynomial& b) {
  if (a.modulus() != b.modulus()) {
    throw domain_error("ff arithmetic: mixed moduli");
  }
}

}  // namespace

std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t q) {
  return static_cast<std::uint64_t>(
      static_cast<unsigned __int128>(a) * b % q);
}

std::uint64_t powmod_u64(std::uint64_t a, std::uint64_t e, std::uint64_t q) {
  std::uint64_t r = 1 % q;
  a %= q;
  while (e != 0) {
    if (e & 1) r = mulmod_u64(r, a, q);
    a = mulmod_u64(a, a, q);
    e >>= 1;
  }
  return r;
}

std::uint64_t invmod_u64(std::uint64_t a, std::uint64_t q) {
  a %= q;
  if (a == 0) throw domain_error("invmod: division by zero");
  // q prime, so Fermat works and avoids signed extended-gcd juggling.
  return powmod_u64(a, q - 2, q);
}

FfPolynomial::FfPolynomial(std::uint64_t q) : q_(q) {
  if (q_ < 2) throw domain_error("FfPolynomial: modulus must be at least 2");
}

FfPolynomial::FfPolynomial(std::uint64_t q, std::vector<std::uint64_t> coeffs)
    : q_(q), coeffs_(std::move(coeffs)) {
  if (q_ < 2) throw domain_error("FfPolynomial: modulus must be at least 2");
  for (std::uint64_t& c : coeffs_) c %= q_;
  normalize();
}

FfPolynomial FfPolynomial::x(std::uint64_t q) {
  return FfPolynomial(q, {0, 1});
}

FfPolynomial FfPolynomial::constant(std::uint64_t q, std::uint64_t c) {
  return FfPolynomial(q, {c});
}

std::uint64_t FfPolynomial::coefficient(int i) const {
  if (i < 0 || i >= static_cast<int>(coeffs_.size())) return 0;
  return coeffs_[static_cast<std::size_t>(i)];
}

std::uint64_t FfPolynomial::leading() const {
  if (is_zero()) throw domain_error("leading coefficient of zero polynomial");
  return coeffs_.back();
}

void FfPolynomial::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

FfPolynomial FfPolynomial::monic() const {
  if (is_zero()) throw domain_error("monic(): zero polynomial");
  if (leading() == 1) return *this;
  std::uint64_t inv = invmod_u64(leading(), q_);
  std::vector<std::uint64_t> out(coeffs_.size());
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    out[i] = mulmod_u64(coeffs_[i], inv, q_);
  }
  return FfPolynomial(q_, std::move(out));
}

FfPolynomial FfPolynomial::derivative() const {
  if (degree() < 1) return FfPolynomial(q_);
  std::vector<std::uint64_t> out(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) {
    out[i - 1] = mulmod_u64(coeffs_[i], i % q_, q_);
  }
  return FfPolynomial(q_, std::move(out));
}

std::uint64_t FfPolynomial::eval(std::uint64_t point) const {
  point %= q_;
  std::uint64_t acc = 0;
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    acc = (mulmod_u64(acc, point, q_) + coeffs_[i]) % q_;
  }
  return acc;
}

FfPolynomial operator+(const FfPolynomial& a, const FfPolynomial& b) {
  require_same_field(a, b);
  std::uint64_t q = a.modulus();
  std::vector<std::uint64_t> out(std::max(a.coeffs_.size(), b.coeffs_.size()), 0);
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] = (a.coefficient(static_cast<int>(i)) +
              b.coefficient(static_cast<int>(i))) % q;
  }
  return FfPolynomial(q, std::move(out));
}

FfPolynomial operator-(const FfPolynomial& a, const FfPolynomial& b) {
  require_same_field(a, b);
  std::uint64_t q = a.modulus();
  std::vector<std::uint64_t> out(std::max(a.coeffs_.size(), b.coeffs_.size()), 0);
  for (std::size_t i = 0; i < out.size(); ++i) {
    std::uint64_t x = a.coefficient(static_cast<int>(i));
    std::uint64_t y = b.coefficient(static_cast<int>(i));
    out[i] = (x + q - y) % q;
  }
  return FfPolynomial(q, std::move(out));
}

FfPolynomial operator*(const FfPolynomial& a, const FfPolynomial& b) {
  require_same_field(a, b);
  std::uint64_t q = a.modulus();
  if (a.is_zero() || b.is_zero()) return FfPolynomial(q);
  std::vector<std::uint64_t> out(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      out[i + j] = (out[i + j] + mulmod_u64(a.coeffs_[i], b.coeffs_[j], q)) % q;
    }
  }
  return FfPolynomial(q, std::move(out));
}

bool operator==(const FfPolynomial& a, const FfPolynomial& b) {
  return a.q_ == b.q_ && a.coeffs_ == b.coeffs_;
}

bool operator!=(const FfPolynomial& a, const FfPolynomial& b) {
  return !(a == b);
}

FfPolynomial ff_rem(const FfPolynomial& a, const FfPolynomial& b) {
  require_same_field(a, b);
  if (b.is_zero()) throw domain_error("ff_rem: division by zero polynomial");
  std::uint64_t q = a.modulus();
  std::vector<std::uint64_t> r(a.coefficients());
  std::uint64_t lead_inv = invmod_u64(b.leading(), q);
  int db = b.degree();
  for (int i = static_cast<int>(r.size()) - 1; i >= db; --i) {
    std::uint64_t c = r[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    std::uint64_t scale = mulmod_u64(c, lead_inv, q);
    for (int j = 0; j <= db; ++j) {
      std::uint64_t& slot = r[static_cast<std::size_t>(i - db + j)];
      std::uint64_t sub = mulmod_u64(scale, b.coefficient(j), q);
      slot = (slot + q - sub) % q;
    }
  }
  return FfPolynomial(q, std::move(r));
}

void ff_divmod(const FfPolynomial& a, const FfPolynomial& b,
               FfPolynomial& quotient, FfPolynomial& remainder) {
  require_same_field(a, b);
  if (b.is_zero()) throw domain_error("ff_divmod: division by zero polynomial");
  std::uint64_t q = a.modulus();
  std::vector<std::uint64_t> r(a.coefficients());
  int db = b.degree();
  int dq = static_cast<int>(r.size()) - 1 - db;
  std::vector<std::uint64_t> qc(dq >= 0 ? static_cast<std::size_t>(dq) + 1 : 0, 0);
  std::uint64_t lead_inv = invmod_u64(b.leading(), q);
  for (int i = static_cast<int>(r.size()) - 1; i >= db; --i) {
    std::uint64_t c = r[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    std::uint64_t scale = mulmod_u64(c, lead_inv, q);
    qc[static_cast<std::size_t>(i - db)] = scale;
    for (int j = 0; j <= db; ++j) {
      std::uint64_t& slot = r[static_cast<std::size_t>(i - db + j)];
      std::uint64_t sub = mulmod_u64(scale, b.coefficient(j), q);
      slot = (slot + q - sub) % q;
    }
  }
  quotient = FfPolynomial(q, std::move(qc));
  remainder = FfPolynomial(q, std::move(r));
}

FfPolynomial ff_gcd(FfPolynomial a, FfPolynomial b) {
  require_same_field(a, b);
  while (!b.is_zero()) {
    FfPolynomial r = ff_rem(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  if (a.is_zero()) return a;
  return a.monic();
}

FfPolynomial ff_powmod(const FfPolynomial& base, std::uint64_t e,
                       const FfPolynomial& m) {
  require_same_field(base, m);
  std::uint64_t q = base.modulus();
  FfPolynomial acc = ff_rem(FfPolynomial::constant(q, 1), m);
  FfPolynomial cur = ff_rem(base, m);
  while (e != 0) {
    if (e & 1) acc = ff_rem(acc * cur, m);
    cur = ff_rem(cur * cur, m);
    e >>= 1;
  }
  return acc;
}

FfPolynomial reduce_mod_p(const IntPolynomial& f, std::uint64_t q) {
  if (q < 2) throw domain_error("reduce_mod_p: modulus must be at least 2");
  std::vector<std::uint64_t> out;
  out.reserve(static_cast<std::size_t>(f.degree() + 1));
  for (int i = 0; i <= f.degree(); ++i) {
    Int r = f.coefficient(i);
    mpz_fdiv_r_ui(r.get_mpz_t(), r.get_mpz_t(), q);
    out.push_back(mpz_get_ui(r.get_mpz_t()));
  }
  return FfPolynomial(q, std::move(out));
}

}  // namespace phipoly
