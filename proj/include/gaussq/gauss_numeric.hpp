#pragma once

#include <cstdint>
#include <optional>
#include <vector>

namespace gaussq {

/// High-precision complex accumulator (long double, Kahan-compensated).
struct ComplexSum {
  long double re = 0.0L;
  long double im = 0.0L;

  long double abs2() const { return re * re + im * im; }
};

/// F_q with q = p^f <= 2^20: elements are integers encoding coefficient
/// vectors base p against the lexicographically least monic irreducible
/// defining polynomial, with full discrete-log and trace tables.
struct SmallField {
  uint64_t p = 0;
  unsigned f = 0;
  uint64_t q = 0;
  std::vector<uint64_t> poly;    // c_0..c_{f-1} of x^f + sum c_i x^i
  uint64_t generator = 0;
  std::vector<uint32_t> dlog;    // size q, dlog[0] = UINT32_MAX
  std::vector<uint32_t> trace;   // size q, values in [0, p)

  uint64_t mul(uint64_t a, uint64_t b) const;
  uint64_t pow(uint64_t a, uint64_t e) const;
};

static constexpr uint64_t kFieldCap = uint64_t(1) << 20;

/// Smallest prime p = pbar (mod m) with p <= bound, or nullopt.
std::optional<uint64_t> find_prime_in_class(uint64_t m, uint64_t pbar, uint64_t bound);

SmallField build_field(uint64_t p, unsigned f);

/// G(eta^a) = sum over nonzero x of eta^a(x) psi(x), with eta(g) = zeta_m.
/// Requires m | q - 1.
ComplexSum gauss_sum_numeric(const SmallField& fld, uint64_t m, uint64_t a);

/// Direct quadratic-character Gauss sum over F_{p^h} (odd p), computed as a
/// trace quadratic form; no field tables, works past the SmallField cap.
ComplexSum quadratic_gauss_sum(uint64_t p, unsigned h);

struct BasicPropertyReport {
  long double max_dev_modulus = 0.0L;      // | |G|^2 - q | / q over a != 0
  long double max_dev_frobenius = 0.0L;    // |G(eta^{ap}) - G(eta^a)|
  long double max_dev_conjugation = 0.0L;  // |G(eta^{-a}) - eta^a(-1) conj G(eta^a)|
  bool pass(long double tol_modulus, long double tol_other) const {
    return max_dev_modulus <= tol_modulus && max_dev_frobenius <= tol_other &&
           max_dev_conjugation <= tol_other;
  }
};

/// Checks |G|^2 = q, invariance under a -> a p, and the conjugation rule,
/// for all a != 0 mod m. Requires m | q - 1, m >= 2.
BasicPropertyReport check_basic_properties(const SmallField& fld, uint64_t m);

/// Lifting check: the norm-lifted character sum over the degree-s extension
/// equals (-1)^{s-1} times the s-th power of the base sum, for every
/// primitive exponent a. Rejects mismatched towers.
bool check_davenport_hasse(const SmallField& fld_small, const SmallField& fld_big, uint64_t m,
                           unsigned s, long double rel_tol);

/// For a quadratic classification witness E0: every phase ratio
/// (G(eta^t)/G(eta))^{m w} with t in E0 returns to 1 (w = lcm(2, m)), and
/// some t outside E0 does not.
bool conjugate_two_value_test(const SmallField& fld, uint64_t m, const std::vector<uint64_t>& e0);

} // namespace gaussq
