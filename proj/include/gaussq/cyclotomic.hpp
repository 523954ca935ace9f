#pragma once

#include <cstdint>
#include <vector>

namespace gaussq {

/// Coefficients of the n-th cyclotomic polynomial (monic, integer),
/// coeffs[i] multiplying x^i, size phi(n) + 1. Memoized.
const std::vector<int64_t>& cyclotomic_polynomial(uint64_t n);

/// Element of (1/d) Z[zeta_n] in canonical reduced form: an integer
/// coefficient vector of length phi(n) on the basis 1, zeta, ...,
/// zeta^{phi(n)-1} after reduction mod the n-th cyclotomic polynomial,
/// together with a positive scalar denominator in lowest terms.
class CyclotomicElement {
 public:
  static CyclotomicElement zero(uint64_t n);
  static CyclotomicElement integer(uint64_t n, int64_t value, int64_t den = 1);
  /// zeta_n^k
  static CyclotomicElement root_power(uint64_t n, uint64_t k);
  /// From a raw coefficient list (any length, entry i on zeta^i) over den.
  static CyclotomicElement from_coeffs(uint64_t n, std::vector<int64_t> raw, int64_t den = 1);

  uint64_t order() const { return n_; }
  const std::vector<int64_t>& coeffs() const { return coeffs_; }
  int64_t denominator() const { return den_; }
  bool is_zero() const;

  CyclotomicElement& operator+=(const CyclotomicElement& o);
  CyclotomicElement& operator-=(const CyclotomicElement& o);
  friend CyclotomicElement operator+(CyclotomicElement a, const CyclotomicElement& b) { return a += b; }
  friend CyclotomicElement operator-(CyclotomicElement a, const CyclotomicElement& b) { return a -= b; }
  friend CyclotomicElement operator*(const CyclotomicElement& a, const CyclotomicElement& b);
  /// Multiply by the rational num/den.
  CyclotomicElement scaled(int64_t num, int64_t den) const;

  friend bool operator==(const CyclotomicElement& a, const CyclotomicElement& b);

 private:
  CyclotomicElement() = default;
  void normalize();

  uint64_t n_ = 1;
  std::vector<int64_t> coeffs_; // length phi(n)
  int64_t den_ = 1;
};

} // namespace gaussq
