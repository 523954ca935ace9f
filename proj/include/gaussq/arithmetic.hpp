#pragma once

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <vector>

namespace gaussq {

// ---------------------------------------------------------------------------
// Basic modular helpers (64-bit, overflow-safe for the moduli we handle).
// ---------------------------------------------------------------------------

uint64_t mul_mod(uint64_t a, uint64_t b, uint64_t m);
uint64_t pow_mod(uint64_t base, uint64_t exp, uint64_t m);

/// Deterministic Miller-Rabin, valid for all n < 2^64.
bool is_prime_u64(uint64_t n);

struct PrimePower {
  uint64_t p = 0;     // prime
  unsigned u = 0;     // exponent
  uint64_t value = 0; // p^u
};

struct Factorization {
  uint64_t m = 1;
  std::vector<PrimePower> factors; // primes strictly increasing (2 first)

  unsigned v2() const;       // exponent of the 2-part, 0 if absent
  uint64_t odd_part() const; // m / 2^{v2}
};

/// Prime-power decomposition by trial division. Total on m >= 1;
/// factorize(1) has an empty factor list.
Factorization factorize(uint64_t m);

/// Factorization that falls back to Pollard rho for large cofactors.
/// Used for numbers like 2^{4f}-1 that exceed comfortable trial division.
Factorization factorize_u64(uint64_t n);

/// All divisors of m, ascending.
std::vector<uint64_t> divisors(const Factorization& f);

uint64_t euler_phi(uint64_t m);

/// Smallest f >= 1 with p^f = 1 (mod m). Rejects gcd(p, m) != 1.
/// m in {1, 2} gives the trivial order 1.
uint64_t mult_order(uint64_t p, uint64_t m);

// ---------------------------------------------------------------------------
// Unit group (Z/mZ)^x with canonical generators.
// ---------------------------------------------------------------------------

struct UnitGroupComponent {
  enum class Kind { Cyclic, TwoPart };
  Kind kind = Kind::Cyclic;
  uint64_t prime = 0;
  unsigned exponent = 0;
  uint64_t modulus = 0; // p^u
  // Cyclic: gens = {g}, orders = {phi(p^u)}.  g is the smallest primitive
  // root mod p^u (g = 3 for modulus 4, g = 1 for modulus 2).
  // TwoPart (2^u, u >= 3): gens = {2^u - 1, 5}, orders = {2, 2^{u-2}}.
  std::vector<uint64_t> gens;
  std::vector<uint64_t> orders;
};

/// Decomposition of (Z/mZ)^x as a product of cyclic factors on canonical
/// generators, with discrete-log tables per prime-power component.
/// Factors are listed in component order (2-part first, odd primes
/// ascending); a 2^u component with u >= 3 contributes two factors, the
/// class of -1 (order 2) first and the class of 5 second.
class UnitGroupStructure {
 public:
  explicit UnitGroupStructure(uint64_t m);

  uint64_t modulus() const { return m_; }
  uint64_t phi() const { return phi_; }
  const std::vector<UnitGroupComponent>& components() const { return components_; }

  size_t factor_count() const { return factor_orders_.size(); }
  uint64_t factor_order(size_t j) const { return factor_orders_[j]; }
  /// CRT-lifted generator of factor j (a unit mod m).
  uint64_t factor_generator(size_t j) const { return factor_gens_[j]; }
  /// lcm of the factor orders (exponent of the group).
  uint64_t exponent_lcm() const { return exponent_lcm_; }

  bool is_unit(uint64_t x) const;

  /// Exponent vector of x on the canonical factor generators.
  /// Rejects non-units.
  std::vector<uint64_t> dlog(uint64_t x) const;

  /// Inverse of dlog: prod_j gen_j^{e_j} mod m.
  uint64_t from_exponents(const std::vector<uint64_t>& e) const;

  const std::vector<uint64_t>& dlog_of_minus_one() const { return dlog_minus_one_; }

 private:
  uint64_t m_ = 0;
  uint64_t phi_ = 1;
  uint64_t exponent_lcm_ = 1;
  std::vector<UnitGroupComponent> components_;
  // flattened cyclic factors
  std::vector<uint64_t> factor_orders_;
  std::vector<uint64_t> factor_gens_;
  std::vector<size_t> factor_component_; // factor index -> component index
  // per-component dlog tables; for TwoPart the entry packs (t << 1) | s
  // where x = (-1)^s 5^t, UINT32_MAX marks non-units
  std::vector<std::vector<uint32_t>> tables_;
  std::vector<uint64_t> dlog_minus_one_;

  friend std::vector<uint64_t> component_dlog(const UnitGroupStructure&, size_t, uint64_t);
};

/// Cached accessor; m >= 3. Results are immutable and shareable.
std::shared_ptr<const UnitGroupStructure> unit_group(uint64_t m);

std::vector<uint64_t> dlog_components(uint64_t x, const UnitGroupStructure& g);

/// Exactly { x in (Z/mZ)^x : x^f = 1 }, built componentwise, ascending.
std::vector<uint64_t> elements_of_order_dividing(uint64_t f, const UnitGroupStructure& g);

} // namespace gaussq
