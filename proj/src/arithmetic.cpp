#include "gaussq/arithmetic.hpp"

#include <algorithm>
#include <list>
#include <map>
#include <mutex>
#include <numeric>

namespace gaussq {

uint64_t mul_mod(uint64_t a, uint64_t b, uint64_t m) {
  if (m <= (uint64_t(1) << 32)) return (a % m) * (b % m) % m;
  return uint64_t((unsigned __int128)(a % m) * (b % m) % m);
}

uint64_t pow_mod(uint64_t base, uint64_t exp, uint64_t m) {
  if (m == 1) return 0;
  uint64_t r = 1;
  base %= m;
  while (exp) {
    if (exp & 1) r = mul_mod(r, base, m);
    base = mul_mod(base, base, m);
    exp >>= 1;
  }
  return r;
}

bool is_prime_u64(uint64_t n) {
  if (n < 2) return false;
  for (uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n % p == 0) return n == p;
  }
  uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) { d >>= 1; ++s; }
  // Sinclair's 7-base set, deterministic below 2^64.
  for (uint64_t a : {2ull, 325ull, 9375ull, 28178ull, 450775ull, 9780504ull, 1795265022ull}) {
    uint64_t x = pow_mod(a % n, d, n);
    if (x <= 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 0; i < s - 1; ++i) {
      x = mul_mod(x, x, n);
      if (x == n - 1) { composite = false; break; }
    }
    if (composite) return false;
  }
  return true;
}

unsigned Factorization::v2() const {
  return (!factors.empty() && factors.front().p == 2) ? factors.front().u : 0;
}

uint64_t Factorization::odd_part() const {
  return (!factors.empty() && factors.front().p == 2) ? m / factors.front().value : m;
}

namespace {

void push_factor(Factorization& f, uint64_t p, unsigned u) {
  uint64_t v = 1;
  for (unsigned i = 0; i < u; ++i) v *= p;
  f.factors.push_back({p, u, v});
}

uint64_t pollard_rho(uint64_t n) {
  // Brent's cycle detection; deterministic parameter sequence.
  for (uint64_t c = 1;; ++c) {
    uint64_t x = 2, y = 2, d = 1;
    uint64_t power = 1, lam = 1;
    while (d == 1) {
      if (power == lam) { x = y; power <<= 1; lam = 0; }
      y = (mul_mod(y, y, n) + c) % n;
      ++lam;
      uint64_t diff = x > y ? x - y : y - x;
      d = std::gcd(diff, n);
    }
    if (d != n) return d;
  }
}

void factor_rec(uint64_t n, std::map<uint64_t, unsigned>& acc) {
  if (n == 1) return;
  if (is_prime_u64(n)) { ++acc[n]; return; }
  uint64_t d = pollard_rho(n);
  factor_rec(d, acc);
  factor_rec(n / d, acc);
}

} // namespace

Factorization factorize(uint64_t m) {
  if (m < 1) throw std::invalid_argument("factorize: m must be >= 1");
  Factorization f;
  f.m = m;
  uint64_t n = m;
  for (uint64_t d = 2; d * d <= n; d += (d == 2) ? 1 : 2) {
    if (n % d) continue;
    unsigned u = 0;
    while (n % d == 0) { n /= d; ++u; }
    push_factor(f, d, u);
  }
  if (n > 1) push_factor(f, n, 1);
  return f;
}

Factorization factorize_u64(uint64_t n) {
  if (n < 1) throw std::invalid_argument("factorize_u64: n must be >= 1");
  Factorization f;
  f.m = n;
  uint64_t rest = n;
  for (uint64_t d = 2; d < 100000 && d * d <= rest; d += (d == 2) ? 1 : 2) {
    if (rest % d) continue;
    unsigned u = 0;
    while (rest % d == 0) { rest /= d; ++u; }
    push_factor(f, d, u);
  }
  if (rest > 1) {
    std::map<uint64_t, unsigned> acc;
    factor_rec(rest, acc);
    for (auto& [p, u] : acc) push_factor(f, p, u);
  }
  std::sort(f.factors.begin(), f.factors.end(),
            [](const PrimePower& a, const PrimePower& b) { return a.p < b.p; });
  return f;
}

std::vector<uint64_t> divisors(const Factorization& f) {
  std::vector<uint64_t> ds{1};
  for (const auto& pp : f.factors) {
    size_t n = ds.size();
    uint64_t q = 1;
    for (unsigned i = 1; i <= pp.u; ++i) {
      q *= pp.p;
      for (size_t j = 0; j < n; ++j) ds.push_back(ds[j] * q);
    }
  }
  std::sort(ds.begin(), ds.end());
  return ds;
}

uint64_t euler_phi(uint64_t m) {
  Factorization f = factorize(m);
  uint64_t phi = 1;
  for (const auto& pp : f.factors) phi *= pp.value / pp.p * (pp.p - 1);
  return phi;
}

uint64_t mult_order(uint64_t p, uint64_t m) {
  if (m == 0) throw std::invalid_argument("mult_order: m must be >= 1");
  p %= m;
  if (std::gcd(p == 0 ? m : p, m) != 1)
    throw std::invalid_argument("mult_order: p must be a unit mod m");
  if (m <= 2) return 1;
  uint64_t e = euler_phi(m);
  for (const auto& pp : factorize(e).factors) {
    for (unsigned i = 0; i < pp.u; ++i) {
      if (pow_mod(p, e / pp.p, m) == 1) e /= pp.p;
      else break;
    }
  }
  return e;
}

namespace {

// Smallest primitive root mod p^u (p odd prime), cached.
uint64_t smallest_primitive_root(uint64_t pu, uint64_t phi) {
  static std::mutex mu;
  static std::map<uint64_t, uint64_t> cache;
  {
    std::lock_guard lk(mu);
    auto it = cache.find(pu);
    if (it != cache.end()) return it->second;
  }
  Factorization pf = factorize(phi);
  uint64_t g = 2;
  for (;; ++g) {
    if (std::gcd(g, pu) != 1) continue;
    bool ok = true;
    for (const auto& pp : pf.factors) {
      if (pow_mod(g, phi / pp.p, pu) == 1) { ok = false; break; }
    }
    if (ok) break;
  }
  std::lock_guard lk(mu);
  cache.emplace(pu, g);
  return g;
}

uint64_t crt_pair(uint64_t r1, uint64_t m1, uint64_t r2, uint64_t m2) {
  // gcd(m1, m2) == 1
  uint64_t m = m1 * m2;
  uint64_t inv = pow_mod(m1 % m2, euler_phi(m2) - 1, m2);
  uint64_t t = mul_mod((r2 + m2 - r1 % m2) % m2, inv, m2);
  return (r1 + m1 * t) % m;
}

} // namespace

UnitGroupStructure::UnitGroupStructure(uint64_t m) : m_(m) {
  if (m < 3) throw std::invalid_argument("unit_group: m must be >= 3");
  Factorization fac = factorize(m);
  for (const auto& pp : fac.factors) {
    UnitGroupComponent c;
    c.prime = pp.p;
    c.exponent = pp.u;
    c.modulus = pp.value;
    if (pp.p == 2 && pp.u >= 3) {
      c.kind = UnitGroupComponent::Kind::TwoPart;
      c.gens = {pp.value - 1, 5};
      c.orders = {2, pp.value / 4};
    } else {
      c.kind = UnitGroupComponent::Kind::Cyclic;
      uint64_t phi_c = pp.value / pp.p * (pp.p - 1);
      uint64_t g;
      if (pp.value == 2) g = 1;
      else if (pp.value == 4) g = 3;
      else g = smallest_primitive_root(pp.value, phi_c);
      c.gens = {g};
      c.orders = {phi_c};
    }
    components_.push_back(std::move(c));
  }

  // dlog tables per component
  for (const auto& c : components_) {
    std::vector<uint32_t> table(c.modulus, UINT32_MAX);
    if (c.kind == UnitGroupComponent::Kind::Cyclic) {
      uint64_t x = 1;
      for (uint64_t k = 0; k < c.orders[0]; ++k) {
        table[x] = uint32_t(k);
        x = x * c.gens[0] % c.modulus;
      }
    } else {
      uint64_t x = 1;
      for (uint64_t t = 0; t < c.orders[1]; ++t) {
        table[x] = uint32_t(t << 1);
        table[c.modulus - x] = uint32_t(t << 1 | 1);
        x = x * 5 % c.modulus;
      }
    }
    tables_.push_back(std::move(table));
  }

  // flattened factors with CRT-lifted generators
  for (size_t ci = 0; ci < components_.size(); ++ci) {
    const auto& c = components_[ci];
    uint64_t rest = m_ / c.modulus;
    for (size_t gi = 0; gi < c.gens.size(); ++gi) {
      uint64_t lifted = (rest == 1) ? c.gens[gi] % c.modulus
                                    : crt_pair(c.gens[gi] % c.modulus, c.modulus, 1, rest);
      factor_orders_.push_back(c.orders[gi]);
      factor_gens_.push_back(lifted);
      factor_component_.push_back(ci);
      phi_ *= c.orders[gi];
      exponent_lcm_ = std::lcm(exponent_lcm_, c.orders[gi]);
    }
  }

  dlog_minus_one_ = dlog(m_ - 1);
}

bool UnitGroupStructure::is_unit(uint64_t x) const {
  x %= m_;
  return x != 0 && std::gcd(x, m_) == 1;
}

std::vector<uint64_t> UnitGroupStructure::dlog(uint64_t x) const {
  x %= m_;
  if (!is_unit(x)) throw std::invalid_argument("dlog: x must be a unit mod m");
  std::vector<uint64_t> e;
  e.reserve(factor_orders_.size());
  for (size_t ci = 0; ci < components_.size(); ++ci) {
    const auto& c = components_[ci];
    uint32_t entry = tables_[ci][x % c.modulus];
    if (c.kind == UnitGroupComponent::Kind::Cyclic) {
      e.push_back(entry);
    } else {
      e.push_back(entry & 1);  // exponent on the -1 class
      e.push_back(entry >> 1); // exponent on the 5 class
    }
  }
  return e;
}

uint64_t UnitGroupStructure::from_exponents(const std::vector<uint64_t>& e) const {
  if (e.size() != factor_orders_.size())
    throw std::invalid_argument("from_exponents: wrong vector length");
  uint64_t x = 1;
  for (size_t j = 0; j < e.size(); ++j)
    x = mul_mod(x, pow_mod(factor_gens_[j], e[j] % factor_orders_[j], m_), m_);
  return x;
}

std::shared_ptr<const UnitGroupStructure> unit_group(uint64_t m) {
  // Bounded cache: sweeps touch moduli in order, so a small window wins.
  static std::mutex mu;
  static std::map<uint64_t, std::shared_ptr<const UnitGroupStructure>> cache;
  static std::list<uint64_t> fifo;
  {
    std::lock_guard lk(mu);
    auto it = cache.find(m);
    if (it != cache.end()) return it->second;
  }
  auto g = std::make_shared<const UnitGroupStructure>(m);
  std::lock_guard lk(mu);
  auto [it, inserted] = cache.emplace(m, g);
  if (inserted) {
    fifo.push_back(m);
    while (fifo.size() > 48) {
      cache.erase(fifo.front());
      fifo.pop_front();
    }
  }
  return it->second;
}

std::vector<uint64_t> dlog_components(uint64_t x, const UnitGroupStructure& g) {
  return g.dlog(x);
}

std::vector<uint64_t> elements_of_order_dividing(uint64_t f, const UnitGroupStructure& g) {
  if (f < 1) throw std::invalid_argument("elements_of_order_dividing: f must be >= 1");
  const size_t k = g.factor_count();
  // Each factor of order n contributes the gcd(f, n) exponents that are
  // multiples of n / gcd(f, n).
  std::vector<uint64_t> steps(k), counts(k);
  for (size_t j = 0; j < k; ++j) {
    uint64_t n = g.factor_order(j);
    uint64_t d = std::gcd(f, n);
    steps[j] = n / d;
    counts[j] = d;
  }
  std::vector<uint64_t> out;
  std::vector<uint64_t> idx(k, 0);
  for (;;) {
    uint64_t x = 1;
    for (size_t j = 0; j < k; ++j)
      x = mul_mod(x, pow_mod(g.factor_generator(j), idx[j] * steps[j], g.modulus()), g.modulus());
    out.push_back(x);
    size_t j = k;
    while (j > 0) {
      --j;
      if (++idx[j] < counts[j]) break;
      idx[j] = 0;
      if (j == 0) { std::sort(out.begin(), out.end()); return out; }
    }
    if (k == 0) break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

} // namespace gaussq
