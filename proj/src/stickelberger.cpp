#include "gaussq/stickelberger.hpp"

#include "gaussq/arithmetic.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace gaussq {

uint64_t coset_sum(uint64_t t, uint64_t p, uint64_t f, uint64_t m) {
  t %= m;
  p %= m;
  if (t == 0 || std::gcd(t, m) != 1 || p == 0 || std::gcd(p, m) != 1)
    throw std::invalid_argument("coset_sum: t and p must be units mod m");
  uint64_t s = 0, x = t;
  for (uint64_t j = 0; j < f; ++j) {
    s += x;
    x = mul_mod(x, p, m);
  }
  return s;
}

namespace {

struct ScanContext {
  uint64_t m, p, f, fm, phi;
  std::shared_ptr<const UnitGroupStructure> g;
};

ScanContext make_context(uint64_t m, uint64_t p) {
  if (m < 3) throw std::invalid_argument("stickelberger: m must be >= 3");
  p %= m;
  if (p == 0 || std::gcd(p, m) != 1)
    throw std::invalid_argument("stickelberger: p must be a unit mod m");
  ScanContext c;
  c.m = m;
  c.p = p;
  c.f = mult_order(p, m);
  c.fm = c.f * m;
  c.g = unit_group(m);
  c.phi = c.g->phi();
  return c;
}

} // namespace

StickelbergerProfile profile(uint64_t m, uint64_t p) {
  ScanContext c = make_context(m, p);
  StickelbergerProfile pr;
  pr.m = c.m;
  pr.p = c.p;
  pr.f = c.f;
  pr.h = c.phi / c.f;

  std::vector<bool> seen(m, false);
  std::map<uint64_t, std::vector<uint64_t>> by_value;
  for (uint64_t t = 1; t < m; ++t) {
    if (seen[t] || std::gcd(t, m) != 1) continue;
    uint64_t s = 0, x = t, rep = t;
    do {
      seen[x] = true;
      s += x;
      rep = std::min(rep, x);
      x = mul_mod(x, c.p, m);
    } while (x != t);
    pr.entries.emplace_back(rep, s);
    auto& cls = by_value[s];
    x = t;
    do {
      cls.push_back(x);
      x = mul_mod(x, c.p, m);
    } while (x != t);
  }
  std::sort(pr.entries.begin(), pr.entries.end());
  for (auto& [value, cls] : by_value) {
    std::sort(cls.begin(), cls.end());
    pr.values.push_back(value);
    pr.classes.push_back(std::move(cls));
  }
  return pr;
}

TwoValueScan two_value_scan(uint64_t m, uint64_t p) {
  ScanContext c = make_context(m, p);
  TwoValueScan out;

  const uint64_t a0 = coset_sum(1, c.p, c.f, m);
  const uint64_t a1 = c.fm - a0;
  const bool pure_candidate = (a0 == a1);

  // Candidate index-2 character from the factor generators: the split, if it
  // is one, must be the kernel of a +-1 homomorphism determined there.
  const size_t k = c.g->factor_count();
  std::vector<uint8_t> bits(k, 0);
  for (size_t j = 0; j < k; ++j) {
    uint64_t s = coset_sum(c.g->factor_generator(j), c.p, c.f, m);
    if (s == a0) {
      bits[j] = 0;
    } else if (s == a1 && !pure_candidate) {
      bits[j] = 1;
      if (c.g->factor_order(j) % 2 != 0) return out; // no -1 in odd-order factors
    } else {
      return out;
    }
  }
  // p itself must land in the kernel.
  {
    auto dp = c.g->dlog(c.p);
    uint64_t s = 0;
    for (size_t j = 0; j < k; ++j) s += bits[j] * dp[j];
    if (s & 1) return out;
  }

  // One pass over all cosets: every S must hit {a0, a1} and agree with the
  // candidate homomorphism (checked on the coset representative).
  std::vector<bool> seen(m, false);
  bool saw_a1 = false;
  for (uint64_t t = 1; t < m; ++t) {
    if (seen[t] || std::gcd(t, m) != 1) continue;
    uint64_t s = 0, x = t;
    do {
      seen[x] = true;
      s += x;
      x = mul_mod(x, c.p, m);
    } while (x != t);
    uint8_t sign;
    if (s == a0) sign = 0;
    else if (s == a1 && !pure_candidate) { sign = 1; saw_a1 = true; }
    else return out;
    if (!pure_candidate) {
      auto dt = c.g->dlog(t);
      uint64_t acc = 0;
      for (size_t j = 0; j < k; ++j) acc += bits[j] * dt[j];
      if ((acc & 1) != sign) return out;
    }
  }

  if (pure_candidate) {
    out.shape = ValueShape::Pure;
    out.a0 = out.a1 = a0;
    return out;
  }
  if (!saw_a1) throw std::logic_error("two_value_scan: single value off f m / 2");
  out.shape = ValueShape::QuadraticSplit;
  out.a0 = a0;
  out.a1 = a1;
  out.sign_bits = std::move(bits);
  return out;
}

bool is_pure(uint64_t m, uint64_t p) {
  return two_value_scan(m, p).shape == ValueShape::Pure;
}

std::optional<QuadraticPartition> quadratic_partition(uint64_t m, uint64_t p) {
  TwoValueScan scan = two_value_scan(m, p);
  if (scan.shape != ValueShape::QuadraticSplit) return std::nullopt;
  ScanContext c = make_context(m, p);

  QuadraticPartition q;
  q.a0 = scan.a0;
  q.a1 = scan.a1;
  q.sign_bits = scan.sign_bits;
  const size_t k = c.g->factor_count();
  for (uint64_t t = 1; t < m; ++t) {
    if (std::gcd(t, m) != 1) continue;
    auto dt = c.g->dlog(t);
    uint64_t acc = 0;
    for (size_t j = 0; j < k; ++j) acc += q.sign_bits[j] * dt[j];
    (acc & 1 ? q.e1 : q.e0).push_back(t);
  }
  q.s1 = q.e1.front();

  // Contract checks: sizes, partition sums, the exact A_i formula.
  if (q.e0.size() != q.e1.size() || q.e0.size() * 2 != c.phi)
    throw std::logic_error("quadratic_partition: split sizes are wrong");
  if (q.a0 + q.a1 != c.fm || q.a0 == q.a1)
    throw std::logic_error("quadratic_partition: value pair is inconsistent");
  for (int i = 0; i < 2; ++i) {
    const auto& side = i ? q.e1 : q.e0;
    unsigned __int128 sum = 0;
    for (uint64_t t : side) sum += t;
    unsigned __int128 lhs = (unsigned __int128)(i ? q.a1 : q.a0) * c.phi;
    if (lhs != (unsigned __int128)2 * c.f * sum)
      throw std::logic_error("quadratic_partition: A_i formula violated");
  }
  return q;
}

} // namespace gaussq
