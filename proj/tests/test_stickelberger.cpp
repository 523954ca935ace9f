#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gaussq/stickelberger.hpp"

#include "gaussq/arithmetic.hpp"

#include <numeric>

using namespace gaussq;

TEST_CASE("coset_sum examples") {
  CHECK(coset_sum(1, 9, 2, 20) == 10);
  CHECK(coset_sum(11, 9, 2, 20) == 30);
  CHECK(coset_sum(7, 3, 1, 10) == 7); // f = 1 single-term sum
  CHECK_THROWS_AS(coset_sum(5, 9, 2, 20), std::invalid_argument);
  CHECK_THROWS_AS(coset_sum(1, 4, 1, 20), std::invalid_argument);
}

TEST_CASE("profile examples") {
  auto pr = profile(20, 9);
  CHECK(pr.f == 2);
  CHECK(pr.h == 4);
  CHECK(pr.values == std::vector<uint64_t>{10, 30});
  REQUIRE(pr.classes.size() == 2);
  CHECK(pr.classes[0] == std::vector<uint64_t>{1, 3, 7, 9});
  CHECK(pr.classes[1] == std::vector<uint64_t>{11, 13, 17, 19});

  auto pr52 = profile(5, 2);
  CHECK(pr52.values == std::vector<uint64_t>{10});
  CHECK(pr52.classes[0] == std::vector<uint64_t>{1, 2, 3, 4});

  auto pr31 = profile(3, 1);
  CHECK(pr31.values == std::vector<uint64_t>{1, 2});
  CHECK(pr31.classes[0] == std::vector<uint64_t>{1});
  CHECK(pr31.classes[1] == std::vector<uint64_t>{2});
}

TEST_CASE("is_pure examples") {
  CHECK(is_pure(5, 2));
  CHECK_FALSE(is_pure(20, 9));
  for (uint64_t m : {5ull, 7ull, 9ull, 11ull, 24ull})
    CHECK(is_pure(m, m - 1)); // p = -1 is semi-primitive with s = 1
}

TEST_CASE("quadratic_partition examples") {
  auto q = quadratic_partition(20, 9);
  REQUIRE(q.has_value());
  CHECK(q->e0 == std::vector<uint64_t>{1, 3, 7, 9});
  CHECK(q->e1 == std::vector<uint64_t>{11, 13, 17, 19});
  CHECK(q->s1 == 11);
  CHECK(q->a0 == 10);
  CHECK(q->a1 == 30);

  CHECK_FALSE(quadratic_partition(5, 2).has_value());

  auto q39 = quadratic_partition(39, 16);
  REQUIRE(q39.has_value());
  CHECK(q39->a0 + q39->a1 == 3 * 39);
}

TEST_CASE("profile invariants up to 300") {
  bool ok = true;
  for (uint64_t m = 3; m <= 300 && ok; ++m) {
    for (uint64_t p = 1; p < m; ++p) {
      if (std::gcd(p, m) != 1) continue;
      uint64_t f = mult_order(p, m);
      auto pr = profile(m, p);

      // S is an integer in (0, f m), constant on cosets, and pairs to f m
      uint64_t total = 0;
      for (size_t i = 0; i < pr.values.size(); ++i) {
        if (pr.values[i] == 0 || pr.values[i] >= f * m) ok = false;
        total += pr.values[i] * pr.classes[i].size();
      }
      if (total * 2 != f * m * euler_phi(m)) ok = false;

      auto s_of = [&](uint64_t t) {
        for (size_t i = 0; i < pr.classes.size(); ++i)
          if (std::binary_search(pr.classes[i].begin(), pr.classes[i].end(), t))
            return pr.values[i];
        return uint64_t(0);
      };
      for (uint64_t t = 1; t < m; ++t) {
        if (std::gcd(t, m) != 1) continue;
        if (s_of(t) + s_of(m - t) != f * m) ok = false;
        if (s_of(t) != s_of(t * p % m)) ok = false;
      }

      // purity and the quadratic split are mutually exclusive
      bool pure = is_pure(m, p);
      auto part = quadratic_partition(m, p);
      if (pure && part.has_value()) ok = false;

      if (part) {
        if (part->a0 == part->a1 || part->a0 + part->a1 != f * m) ok = false;
        // -1 lands in E1
        if (!std::binary_search(part->e1.begin(), part->e1.end(), m - 1)) ok = false;
        // <p> inside E0
        if (!std::binary_search(part->e0.begin(), part->e0.end(), p % m)) ok = false;
      }
      if (!ok) {
        CAPTURE(m);
        CAPTURE(p);
        break;
      }
    }
  }
  CHECK(ok);
}

TEST_CASE("profile invariant under p -> p^i with gcd(i, f) = 1") {
  bool ok = true;
  for (uint64_t m = 3; m <= 150 && ok; ++m) {
    for (uint64_t p = 2; p < m && ok; ++p) {
      if (std::gcd(p, m) != 1) continue;
      uint64_t f = mult_order(p, m);
      auto base = profile(m, p);
      for (uint64_t i = 2; i < f; ++i) {
        if (std::gcd(i, f) != 1) continue;
        auto other = profile(m, pow_mod(p, i, m));
        if (base.values != other.values || base.classes != other.classes) {
          CAPTURE(m);
          CAPTURE(p);
          CAPTURE(i);
          ok = false;
          break;
        }
      }
    }
  }
  CHECK(ok);
}

TEST_CASE("two_value_scan agrees with the partition") {
  for (uint64_t m = 3; m <= 100; ++m) {
    for (uint64_t p = 1; p < m; ++p) {
      if (std::gcd(p, m) != 1) continue;
      auto scan = two_value_scan(m, p);
      auto part = quadratic_partition(m, p);
      REQUIRE((scan.shape == ValueShape::QuadraticSplit) == part.has_value());
      if (part) {
        REQUIRE(scan.a0 == part->a0);
        REQUIRE(scan.a1 == part->a1);
      }
      REQUIRE((scan.shape == ValueShape::Pure) == is_pure(m, p));
    }
  }
}
