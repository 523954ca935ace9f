#pragma once

#include "gaussq/arithmetic.hpp"
#include "gaussq/cyclotomic.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace gaussq {

/// exp(2*pi*i * num / den), reduced, 0 <= num < den (1 is {0, 1}).
struct RootOfUnity {
  uint64_t num = 0;
  uint64_t den = 1;

  static RootOfUnity one() { return {0, 1}; }
  static RootOfUnity make(uint64_t num, uint64_t den);
  RootOfUnity times(const RootOfUnity& o) const;
  RootOfUnity pow(uint64_t e) const;
  bool is_one() const { return num == 0; }
  bool is_minus_one() const { return den == 2 && num == 1; }
  /// As an element of Z[zeta_n]; requires den | n.
  CyclotomicElement to_cyclotomic(uint64_t n) const;
  friend bool operator==(const RootOfUnity&, const RootOfUnity&) = default;
};

/// Dirichlet character modulo m as an exponent vector on the canonical
/// unit-group factor generators. For a 2^u component (u >= 3) the two
/// entries are the exponents on the odd generator (class of -1) and on
/// the class of 5, in that order.
struct DirichletCharacter {
  uint64_t modulus = 0;
  std::vector<uint32_t> exponents;
  uint64_t order = 1;
  int parity = 1;         // evaluate(-1): +1 even, -1 odd
  uint64_t conductor = 1;

  bool is_principal() const;
  friend bool operator==(const DirichletCharacter&, const DirichletCharacter&) = default;
};

/// Builds the character with cached order/parity/conductor from raw exponents.
DirichletCharacter make_character(uint64_t m, std::vector<uint32_t> exponents);

/// All phi(m) characters mod m in lexicographic exponent order. m >= 3.
std::vector<DirichletCharacter> character_group(uint64_t m);

/// Zero (nullopt) iff gcd(x, m) > 1.
std::optional<RootOfUnity> evaluate(const DirichletCharacter& chi, uint64_t x);

/// Value of the primitive character of conductor c attached to chi at y;
/// Zero iff gcd(y, c) > 1.
std::optional<RootOfUnity> evaluate_primitive(const DirichletCharacter& chi, uint64_t y);

uint64_t conductor(const DirichletCharacter& chi);

/// The unique nontrivial character of order 2 with kernel exactly e0.
/// Rejects sets that are not index-2 subgroups of (Z/mZ)^x.
DirichletCharacter annihilator_of(uint64_t m, const std::vector<uint64_t>& e0);

/// Odd characters chi mod m with chi(p) = 1, in enumeration order.
std::vector<DirichletCharacter> odd_trivial_on_p(uint64_t m, uint64_t p);

/// Members of odd_trivial_on_p whose conductor every prime of m divides.
std::vector<DirichletCharacter> x_minus(uint64_t m, uint64_t p);

/// True iff some prime l | m with l not dividing the conductor has
/// primitive value 1 (making the product over (1 - chi(l)) vanish).
/// The principal character reports false: as a character mod m its value
/// at a prime of m is the zero marker, never 1.
bool product_vanishes(const DirichletCharacter& chi);

struct CriterionResult {
  bool quadratic = false;
  std::optional<DirichletCharacter> annihilator; // present iff quadratic
  std::vector<uint64_t> e0;                      // kernel witness, sorted
};

/// Character-side test that some power of the Gauss sum lands in a
/// quadratic field (and none in Q): searches index-2 subgroups containing
/// <p> as kernels of order-2 characters, first qualifying witness in
/// enumeration order.
CriterionResult criterion_quadratic(uint64_t m, uint64_t p);

/// Exact first generalized Bernoulli number B_{1,chi} of the primitive
/// character, as an element of (1/c) Z[zeta_order]. Rejects the principal
/// character.
CyclotomicElement bernoulli_b1(const DirichletCharacter& chi);

/// Exact check of (1/m) sum_{x in G} x chi(x) = B_{1,chi} prod (1 - chi(l))
/// over primes l | m away from the conductor.
bool verify_ber_identity(uint64_t m, const DirichletCharacter& chi);

/// Fundamental discriminant -conductor of the imaginary quadratic field cut
/// out by an odd order-2 character. Rejects even or higher-order input.
int64_t field_discriminant(const DirichletCharacter& chi_ann);

/// Kernel of an order-2 character, sorted ascending.
std::vector<uint64_t> character_kernel(const DirichletCharacter& chi);

} // namespace gaussq
