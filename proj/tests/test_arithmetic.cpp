#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gaussq/arithmetic.hpp"

#include <numeric>

using namespace gaussq;

TEST_CASE("factorize small values") {
  auto f = factorize(20);
  REQUIRE(f.factors.size() == 2);
  CHECK(f.factors[0].p == 2);
  CHECK(f.factors[0].u == 2);
  CHECK(f.factors[1].p == 5);
  CHECK(f.factors[1].u == 1);
  CHECK(f.v2() == 2);
  CHECK(f.odd_part() == 5);

  CHECK(factorize(1).factors.empty());

  auto f39 = factorize(39);
  REQUIRE(f39.factors.size() == 2);
  CHECK(f39.factors[0].p == 3);
  CHECK(f39.factors[1].p == 13);
}

TEST_CASE("factorize invariants up to 2000") {
  bool ok = true;
  for (uint64_t m = 1; m <= 2000 && ok; ++m) {
    auto f = factorize(m);
    uint64_t prod = 1, last = 0;
    for (const auto& pp : f.factors) {
      if (pp.p <= last || !is_prime_u64(pp.p) || pp.u < 1) ok = false;
      last = pp.p;
      prod *= pp.value;
    }
    if (prod != m) ok = false;
  }
  CHECK(ok);
}

TEST_CASE("factorize_u64 handles mersenne-style composites") {
  uint64_t n = (uint64_t(1) << 52) - 1;
  auto f = factorize_u64(n);
  uint64_t prod = 1;
  for (const auto& pp : f.factors) {
    CHECK(is_prime_u64(pp.p));
    for (unsigned i = 0; i < pp.u; ++i) prod *= pp.p;
  }
  CHECK(prod == n);
}

TEST_CASE("euler phi") {
  CHECK(euler_phi(1) == 1);
  CHECK(euler_phi(20) == 8);
  for (uint64_t p : {2ull, 3ull, 5ull, 97ull, 101ull}) CHECK(euler_phi(p) == p - 1);
}

TEST_CASE("phi divisor sum identity up to 2000") {
  bool ok = true;
  for (uint64_t m = 1; m <= 2000; ++m) {
    uint64_t s = 0;
    for (uint64_t d : divisors(factorize(m))) s += euler_phi(d);
    if (s != m) ok = false;
  }
  CHECK(ok);
}

TEST_CASE("mult_order examples") {
  CHECK(mult_order(9, 20) == 2);
  CHECK(mult_order(1, 20) == 1);
  CHECK(mult_order(1, 7) == 1);
  CHECK(mult_order(2, 7) == 3);
  CHECK_THROWS_AS(mult_order(5, 20), std::invalid_argument);
}

TEST_CASE("mult_order against brute force up to 500") {
  bool ok = true;
  for (uint64_t m = 3; m <= 500 && ok; ++m) {
    for (uint64_t p = 1; p < m; ++p) {
      if (std::gcd(p, m) != 1) continue;
      uint64_t f = mult_order(p, m);
      uint64_t x = 1;
      for (uint64_t i = 1; i < f; ++i) {
        x = x * p % m;
        if (x == 1) { ok = false; break; } // a smaller exponent worked
      }
      if (x * p % m != 1 || euler_phi(m) % f != 0) ok = false;
      if (!ok) {
        CAPTURE(m);
        CAPTURE(p);
        break;
      }
    }
  }
  CHECK(ok);
}

TEST_CASE("unit_group canonical generators") {
  auto g20 = unit_group(20);
  REQUIRE(g20->components().size() == 2);
  CHECK(g20->components()[0].modulus == 4);
  CHECK(g20->components()[0].gens == std::vector<uint64_t>{3});
  CHECK(g20->components()[0].orders == std::vector<uint64_t>{2});
  CHECK(g20->components()[1].modulus == 5);
  CHECK(g20->components()[1].gens == std::vector<uint64_t>{2});
  CHECK(g20->components()[1].orders == std::vector<uint64_t>{4});
  CHECK(g20->phi() == 8);

  auto g16 = unit_group(16);
  REQUIRE(g16->components().size() == 1);
  CHECK(g16->components()[0].kind == UnitGroupComponent::Kind::TwoPart);
  CHECK(g16->components()[0].gens == std::vector<uint64_t>{15, 5});
  CHECK(g16->components()[0].orders == std::vector<uint64_t>{2, 4});

  auto g9 = unit_group(9);
  CHECK(g9->components()[0].gens == std::vector<uint64_t>{2});
  CHECK(g9->components()[0].orders == std::vector<uint64_t>{6});

  CHECK_THROWS_AS(unit_group(2), std::invalid_argument);
}

TEST_CASE("dlog examples mod 20") {
  auto g = unit_group(20);
  CHECK(g->dlog(9) == std::vector<uint64_t>{0, 2});
  CHECK(g->dlog(1) == std::vector<uint64_t>{0, 0});
  CHECK(g->dlog(19) == std::vector<uint64_t>{1, 2});
  CHECK_THROWS_AS(g->dlog(10), std::invalid_argument);
}

TEST_CASE("dlog reconstruction is the identity up to 2000") {
  bool ok = true;
  for (uint64_t m = 3; m <= 2000 && ok; ++m) {
    auto g = unit_group(m);
    uint64_t count = 0;
    uint64_t order_product = 1;
    for (size_t j = 0; j < g->factor_count(); ++j) order_product *= g->factor_order(j);
    if (order_product != g->phi() || euler_phi(m) != g->phi()) ok = false;
    for (uint64_t x = 1; x < m; ++x) {
      if (std::gcd(x, m) != 1) continue;
      ++count;
      if (g->from_exponents(g->dlog(x)) != x) { ok = false; break; }
    }
    if (count != g->phi()) ok = false;
  }
  CHECK(ok);
}

TEST_CASE("elements_of_order_dividing examples") {
  auto g20 = unit_group(20);
  CHECK(elements_of_order_dividing(1, *g20) == std::vector<uint64_t>{1});
  CHECK(elements_of_order_dividing(2, *g20) == std::vector<uint64_t>{1, 9, 11, 19});
  auto g7 = unit_group(7);
  CHECK(elements_of_order_dividing(3, *g7) == std::vector<uint64_t>{1, 2, 4});
}

TEST_CASE("elements_of_order_dividing equals the brute-force filter") {
  bool ok = true;
  for (uint64_t m = 3; m <= 500 && ok; ++m) {
    auto g = unit_group(m);
    for (uint64_t f = 1; f <= 12 && ok; ++f) {
      std::vector<uint64_t> brute;
      for (uint64_t x = 1; x < m; ++x) {
        if (std::gcd(x, m) != 1) continue;
        if (pow_mod(x, f, m) == 1) brute.push_back(x);
      }
      if (elements_of_order_dividing(f, *g) != brute) {
        CAPTURE(m);
        CAPTURE(f);
        ok = false;
      }
    }
  }
  CHECK(ok);
}

TEST_CASE("deterministic primality") {
  CHECK(is_prime_u64(2));
  CHECK(is_prime_u64((uint64_t(1) << 61) - 1)); // mersenne prime
  CHECK_FALSE(is_prime_u64(3215031751ull));     // strong pseudoprime to bases 2,3,5,7
  CHECK_FALSE(is_prime_u64(1));
}
