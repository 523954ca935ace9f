#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gaussq/cyclotomic.hpp"

using namespace gaussq;

TEST_CASE("cyclotomic polynomials") {
  CHECK(cyclotomic_polynomial(1) == std::vector<int64_t>{-1, 1});
  CHECK(cyclotomic_polynomial(2) == std::vector<int64_t>{1, 1});
  CHECK(cyclotomic_polynomial(3) == std::vector<int64_t>{1, 1, 1});
  CHECK(cyclotomic_polynomial(4) == std::vector<int64_t>{1, 0, 1});
  CHECK(cyclotomic_polynomial(6) == std::vector<int64_t>{1, -1, 1});
  CHECK(cyclotomic_polynomial(12) == std::vector<int64_t>{1, 0, -1, 0, 1});
  // the first index with a coefficient outside {-1, 0, 1}
  auto c105 = cyclotomic_polynomial(105);
  CHECK(c105[7] == -2);
}

TEST_CASE("root powers sum to zero") {
  for (uint64_t n : {3ull, 4ull, 5ull, 6ull, 12ull, 20ull}) {
    CyclotomicElement acc = CyclotomicElement::zero(n);
    for (uint64_t k = 0; k < n; ++k) acc += CyclotomicElement::root_power(n, k);
    CHECK(acc.is_zero());
  }
}

TEST_CASE("root power arithmetic wraps") {
  auto z = CyclotomicElement::root_power(6, 1);
  auto z5 = CyclotomicElement::root_power(6, 5);
  CHECK(z * z5 == CyclotomicElement::integer(6, 1));
  CHECK(CyclotomicElement::root_power(6, 3) == CyclotomicElement::integer(6, -1));
}

TEST_CASE("denominators reduce to lowest terms") {
  auto half = CyclotomicElement::integer(4, 2, 4);
  CHECK(half == CyclotomicElement::integer(4, 1, 2));
  CHECK(half.denominator() == 2);
  auto zero = CyclotomicElement::integer(4, 0, 7);
  CHECK(zero.is_zero());
  CHECK(zero.denominator() == 1);
  CHECK(CyclotomicElement::integer(4, 1, -2) == CyclotomicElement::integer(4, -1, 2));
}

TEST_CASE("mixed denominator addition") {
  auto a = CyclotomicElement::integer(3, 1, 2);
  auto b = CyclotomicElement::integer(3, 1, 3);
  CHECK(a + b == CyclotomicElement::integer(3, 5, 6));
  CHECK(a - a == CyclotomicElement::zero(3));
}

TEST_CASE("multiplication respects the minimal polynomial") {
  // (1 + zeta_5 + zeta_5^2 + zeta_5^3 + zeta_5^4) = 0
  CyclotomicElement s = CyclotomicElement::zero(5);
  for (uint64_t k = 0; k < 5; ++k) s += CyclotomicElement::root_power(5, k);
  CHECK(s.is_zero());
  // zeta_8^2 = i, (zeta_8^2)^2 = -1
  auto i = CyclotomicElement::root_power(8, 2);
  CHECK(i * i == CyclotomicElement::integer(8, -1));
}
