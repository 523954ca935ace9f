#include "gaussq/cyclotomic.hpp"

#include "gaussq/arithmetic.hpp"

#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>

namespace gaussq {

namespace {

// Exact division of integer polynomials, q must divide p.
std::vector<int64_t> poly_divide_exact(std::vector<int64_t> p, const std::vector<int64_t>& q) {
  if (q.empty() || q.back() == 0) throw std::logic_error("poly_divide_exact: bad divisor");
  if (p.size() < q.size()) throw std::logic_error("poly_divide_exact: degree underflow");
  std::vector<int64_t> out(p.size() - q.size() + 1, 0);
  for (size_t i = out.size(); i-- > 0;) {
    int64_t lead = p[i + q.size() - 1];
    if (lead % q.back() != 0) throw std::logic_error("poly_divide_exact: not divisible");
    int64_t c = lead / q.back();
    out[i] = c;
    for (size_t j = 0; j < q.size(); ++j) p[i + j] -= c * q[j];
  }
  for (int64_t r : p)
    if (r != 0) throw std::logic_error("poly_divide_exact: nonzero remainder");
  return out;
}

std::vector<int64_t> compute_cyclotomic(uint64_t n) {
  if (n == 1) return {-1, 1}; // x - 1
  std::vector<int64_t> num(n + 1, 0);
  num[0] = -1;
  num[n] = 1; // x^n - 1
  std::vector<int64_t> acc = num;
  for (uint64_t d : divisors(factorize(n))) {
    if (d == n) continue;
    acc = poly_divide_exact(std::move(acc), cyclotomic_polynomial(d));
  }
  return acc;
}

int64_t checked_add(int64_t a, int64_t b) {
  int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("cyclotomic: add overflow");
  return r;
}

int64_t checked_mul(int64_t a, int64_t b) {
  int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("cyclotomic: mul overflow");
  return r;
}

} // namespace

const std::vector<int64_t>& cyclotomic_polynomial(uint64_t n) {
  static std::mutex mu;
  static std::map<uint64_t, std::vector<int64_t>> cache;
  {
    std::lock_guard lk(mu);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
  }
  auto val = compute_cyclotomic(n);
  std::lock_guard lk(mu);
  return cache.emplace(n, std::move(val)).first->second;
}

CyclotomicElement CyclotomicElement::zero(uint64_t n) {
  CyclotomicElement e;
  e.n_ = n;
  e.coeffs_.assign(euler_phi(n), 0);
  return e;
}

CyclotomicElement CyclotomicElement::integer(uint64_t n, int64_t value, int64_t den) {
  CyclotomicElement e = zero(n);
  e.coeffs_[0] = value;
  e.den_ = den;
  e.normalize();
  return e;
}

CyclotomicElement CyclotomicElement::root_power(uint64_t n, uint64_t k) {
  std::vector<int64_t> raw(n, 0);
  raw[k % n] = 1;
  return from_coeffs(n, std::move(raw));
}

CyclotomicElement CyclotomicElement::from_coeffs(uint64_t n, std::vector<int64_t> raw, int64_t den) {
  const auto& phi_n = cyclotomic_polynomial(n);
  const size_t deg = phi_n.size() - 1;
  // reduce mod x^n - 1 first (indices wrap), then mod Phi_n
  if (raw.size() > n) {
    for (size_t i = raw.size(); i-- > n;) {
      raw[i % n] = checked_add(raw[i % n], raw[i]);
      raw[i] = 0;
    }
    raw.resize(n);
  }
  for (size_t i = raw.size(); i-- > deg;) {
    int64_t c = raw[i];
    if (c == 0) continue;
    for (size_t j = 0; j < phi_n.size(); ++j)
      raw[i - deg + j] = checked_add(raw[i - deg + j], -checked_mul(c, phi_n[j]));
  }
  CyclotomicElement e;
  e.n_ = n;
  raw.resize(deg, 0);
  e.coeffs_ = std::move(raw);
  e.den_ = den;
  e.normalize();
  return e;
}

void CyclotomicElement::normalize() {
  if (den_ == 0) throw std::invalid_argument("cyclotomic: zero denominator");
  if (den_ < 0) {
    den_ = -den_;
    for (auto& c : coeffs_) c = -c;
  }
  int64_t g = den_;
  for (int64_t c : coeffs_) g = std::gcd(g, c < 0 ? -c : c);
  if (g > 1) {
    den_ /= g;
    for (auto& c : coeffs_) c /= g;
  }
  if (is_zero()) den_ = 1;
}

bool CyclotomicElement::is_zero() const {
  for (int64_t c : coeffs_)
    if (c != 0) return false;
  return true;
}

CyclotomicElement& CyclotomicElement::operator+=(const CyclotomicElement& o) {
  if (n_ != o.n_) throw std::invalid_argument("cyclotomic: order mismatch");
  int64_t g = std::gcd(den_, o.den_);
  int64_t la = o.den_ / g, lb = den_ / g;
  for (size_t i = 0; i < coeffs_.size(); ++i)
    coeffs_[i] = checked_add(checked_mul(coeffs_[i], la), checked_mul(o.coeffs_[i], lb));
  den_ = checked_mul(den_, la);
  normalize();
  return *this;
}

CyclotomicElement& CyclotomicElement::operator-=(const CyclotomicElement& o) {
  return *this += o.scaled(-1, 1);
}

CyclotomicElement operator*(const CyclotomicElement& a, const CyclotomicElement& b) {
  if (a.n_ != b.n_) throw std::invalid_argument("cyclotomic: order mismatch");
  std::vector<int64_t> raw(2 * a.coeffs_.size(), 0);
  for (size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (size_t j = 0; j < b.coeffs_.size(); ++j)
      raw[i + j] = checked_add(raw[i + j], checked_mul(a.coeffs_[i], b.coeffs_[j]));
  }
  return CyclotomicElement::from_coeffs(a.n_, std::move(raw), checked_mul(a.den_, b.den_));
}

CyclotomicElement CyclotomicElement::scaled(int64_t num, int64_t den) const {
  CyclotomicElement e = *this;
  for (auto& c : e.coeffs_) c = checked_mul(c, num);
  e.den_ = checked_mul(e.den_, den);
  e.normalize();
  return e;
}

bool operator==(const CyclotomicElement& a, const CyclotomicElement& b) {
  return a.n_ == b.n_ && a.den_ == b.den_ && a.coeffs_ == b.coeffs_;
}

} // namespace gaussq
