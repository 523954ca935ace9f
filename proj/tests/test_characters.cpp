#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gaussq/characters.hpp"

#include <numeric>

using namespace gaussq;

namespace {

// Brute-force conductor straight from the definition: smallest c | m such
// that chi is trivial on every unit congruent to 1 mod c.
uint64_t conductor_brute(const DirichletCharacter& chi) {
  uint64_t m = chi.modulus;
  for (uint64_t c : divisors(factorize(m))) {
    bool ok = true;
    for (uint64_t x = 1; x < m && ok; ++x) {
      if (std::gcd(x, m) != 1 || x % c != 1) continue;
      if (!evaluate(chi, x)->is_one()) ok = false;
    }
    if (ok) return c;
  }
  return m;
}

// The same by the divisor-ascending residue-class test: chi constant on
// residue classes mod c intersected with the units.
uint64_t conductor_residue_classes(const DirichletCharacter& chi) {
  uint64_t m = chi.modulus;
  for (uint64_t c : divisors(factorize(m))) {
    bool ok = true;
    for (uint64_t x = 1; x < m && ok; ++x) {
      if (std::gcd(x, m) != 1) continue;
      for (uint64_t y = x + c; y < m; y += c) {
        if (std::gcd(y, m) != 1) continue;
        if (!(*evaluate(chi, x) == *evaluate(chi, y))) { ok = false; break; }
      }
    }
    if (ok) return c;
  }
  return m;
}

DirichletCharacter odd_mod4_lifted_to_20() {
  for (const auto& chi : character_group(20))
    if (chi.exponents == std::vector<uint32_t>{1, 0}) return chi;
  throw std::logic_error("character not found");
}

} // namespace

TEST_CASE("character group sizes and closure") {
  CHECK(character_group(4).size() == 2);
  CHECK(character_group(20).size() == 8);
  auto g3 = character_group(3);
  REQUIRE(g3.size() == 2);
  CHECK(g3[0].is_principal());
  CHECK(evaluate(g3[1], 2)->is_minus_one());
  CHECK_THROWS_AS(character_group(2), std::invalid_argument);
}

TEST_CASE("evaluation basics") {
  auto chars20 = character_group(20);
  for (const auto& chi : chars20) {
    CHECK(!evaluate(chi, 10).has_value()); // non-unit maps to the zero marker
    if (chi.is_principal())
      for (uint64_t x : {1, 3, 7, 9}) CHECK(evaluate(chi, x)->is_one());
  }
  auto ann = annihilator_of(20, {1, 3, 7, 9});
  CHECK(evaluate(ann, 19)->is_minus_one());
  CHECK(evaluate(ann, 11)->is_minus_one());
  CHECK(evaluate(ann, 13)->is_minus_one());
  CHECK(evaluate(ann, 17)->is_minus_one());
  CHECK(evaluate(ann, 3)->is_one());
}

TEST_CASE("conductors") {
  for (const auto& chi : character_group(20))
    if (chi.is_principal()) CHECK(chi.conductor == 1);
  for (const auto& chi : character_group(7))
    if (chi.order == 2) CHECK(chi.conductor == 7);
  auto ann = annihilator_of(20, {1, 3, 7, 9});
  CHECK(ann.conductor == 20);
  CHECK(odd_mod4_lifted_to_20().conductor == 4);
}

TEST_CASE("conductor agrees with the definition and divisor-ascending scan") {
  bool ok = true;
  for (uint64_t m = 3; m <= 200 && ok; ++m) {
    for (const auto& chi : character_group(m)) {
      if (chi.conductor != conductor_brute(chi) ||
          chi.conductor != conductor_residue_classes(chi)) {
        CAPTURE(m);
        ok = false;
        break;
      }
    }
  }
  CHECK(ok);
}

TEST_CASE("annihilator examples") {
  auto a20 = annihilator_of(20, {1, 3, 7, 9});
  CHECK(a20.order == 2);
  CHECK(a20.parity == -1);
  auto a4 = annihilator_of(4, {1});
  CHECK(a4.parity == -1);
  CHECK(a4.conductor == 4);
  auto a3 = annihilator_of(3, {1});
  CHECK(evaluate(a3, 2)->is_minus_one());
  CHECK_THROWS_AS(annihilator_of(20, {1, 3, 7, 11}), std::invalid_argument);
  CHECK_THROWS_AS(annihilator_of(20, {1, 3, 7}), std::invalid_argument);
}

TEST_CASE("annihilator of a kernel returns the character") {
  bool ok = true;
  for (uint64_t m = 3; m <= 200 && ok; ++m) {
    for (const auto& chi : character_group(m)) {
      if (chi.order != 2) continue;
      if (!(annihilator_of(m, character_kernel(chi)) == chi)) {
        CAPTURE(m);
        ok = false;
        break;
      }
    }
  }
  CHECK(ok);
}

TEST_CASE("odd characters trivial on p") {
  auto o20 = odd_trivial_on_p(20, 9);
  REQUIRE(o20.size() == 2);
  CHECK(o20[0].exponents == std::vector<uint32_t>{1, 0});
  CHECK(o20[1].exponents == std::vector<uint32_t>{1, 2});

  CHECK(odd_trivial_on_p(5, 2).empty()); // -1 in <2> mod 5
  CHECK(odd_trivial_on_p(4, 1).size() == 1);
}

TEST_CASE("x_minus keeps only full-conductor members") {
  auto x20 = x_minus(20, 9);
  REQUIRE(x20.size() == 1);
  CHECK(x20[0].conductor == 20);
  auto x39 = x_minus(39, 16);
  REQUIRE(x39.size() == 1);
  CHECK(x39[0].order == 2);
  CHECK(x_minus(5, 2).empty());
}

TEST_CASE("product_vanishes conventions") {
  auto lifted = odd_mod4_lifted_to_20();
  CHECK(product_vanishes(lifted)); // primitive value 1 at 5

  auto ann = annihilator_of(20, {1, 3, 7, 9});
  CHECK_FALSE(product_vanishes(ann)); // conductor 20, empty product

  auto chars6 = character_group(6);
  CHECK_FALSE(product_vanishes(chars6[0])); // principal: zero marker, never 1
}

TEST_CASE("criterion examples") {
  auto r20 = criterion_quadratic(20, 9);
  CHECK(r20.quadratic);
  CHECK(r20.e0 == std::vector<uint64_t>{1, 3, 7, 9});
  CHECK(r20.annihilator->conductor == 20);

  CHECK_FALSE(criterion_quadratic(5, 2).quadratic);

  auto r7 = criterion_quadratic(7, 2);
  CHECK(r7.quadratic);
  CHECK(r7.e0 == std::vector<uint64_t>{1, 2, 4}); // quadratic residues mod 7
}

TEST_CASE("criterion implies x_minus within the annihilator") {
  bool ok = true;
  for (uint64_t m = 3; m <= 120 && ok; ++m) {
    for (uint64_t p = 1; p < m && ok; ++p) {
      if (std::gcd(p, m) != 1) continue;
      auto crit = criterion_quadratic(m, p);
      if (!crit.quadratic) continue;
      for (const auto& chi : x_minus(m, p))
        if (!(chi == *crit.annihilator)) ok = false;
    }
  }
  CHECK(ok);
}

TEST_CASE("generalized Bernoulli values") {
  auto odd4 = character_group(4)[1];
  REQUIRE(odd4.parity == -1);
  CHECK(bernoulli_b1(odd4) == CyclotomicElement::integer(2, -1, 2));

  auto quad3 = character_group(3)[1];
  CHECK(bernoulli_b1(quad3) == CyclotomicElement::integer(2, -1, 3));

  bool evens_vanish = true;
  for (uint64_t m = 3; m <= 40; ++m)
    for (const auto& chi : character_group(m))
      if (!chi.is_principal() && chi.parity == 1 && !bernoulli_b1(chi).is_zero())
        evens_vanish = false;
  CHECK(evens_vanish);

  CHECK_THROWS_AS(bernoulli_b1(character_group(4)[0]), std::invalid_argument);
}

TEST_CASE("ber identity pinned cases") {
  auto odd4 = character_group(4)[1];
  CHECK(verify_ber_identity(4, odd4));

  auto lifted = odd_mod4_lifted_to_20();
  CHECK(verify_ber_identity(20, lifted));
  // both sides vanish there
  CHECK(bernoulli_b1(lifted) == CyclotomicElement::integer(2, -1, 2));

  for (const auto& chi : character_group(6))
    if (!chi.is_principal()) {
      CHECK(chi.conductor == 3);
      CHECK(verify_ber_identity(6, chi));
    }
}

TEST_CASE("orthogonality up to 200") {
  bool ok = true;
  for (uint64_t m = 3; m <= 200 && ok; ++m) {
    auto g = unit_group(m);
    auto chars = character_group(m);
    uint64_t ex = g->exponent_lcm();
    for (uint64_t x = 1; x < m && ok; ++x) {
      if (std::gcd(x, m) != 1) continue;
      CyclotomicElement acc = CyclotomicElement::zero(ex);
      for (const auto& chi : chars) acc += evaluate(chi, x)->to_cyclotomic(ex);
      CyclotomicElement want = CyclotomicElement::integer(ex, x == 1 ? int64_t(g->phi()) : 0);
      if (!(acc == want)) {
        CAPTURE(m);
        CAPTURE(x);
        ok = false;
      }
    }
  }
  CHECK(ok);
}

TEST_CASE("field discriminants") {
  CHECK(field_discriminant(annihilator_of(20, {1, 3, 7, 9})) == -20);
  CHECK(field_discriminant(character_group(4)[1]) == -4);
  CHECK(field_discriminant(character_group(3)[1]) == -3);
  CHECK_THROWS_AS(field_discriminant(character_group(5)[1]), std::invalid_argument);
}
