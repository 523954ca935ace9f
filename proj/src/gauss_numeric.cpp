#include "gaussq/gauss_numeric.hpp"

#include "gaussq/arithmetic.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>

namespace gaussq {

namespace {

constexpr long double kTwoPi = 2.0L * std::numbers::pi_v<long double>;

struct Kahan {
  long double sum = 0.0L, comp = 0.0L;
  void add(long double v) {
    long double y = v - comp;
    long double t = sum + y;
    comp = (t - sum) - y;
    sum = t;
  }
};

// Unit-circle table exp(2 pi i k / n), k = 0..n-1.
struct RootTable {
  std::vector<long double> cs, sn;
  explicit RootTable(uint64_t n) : cs(n), sn(n) {
    for (uint64_t k = 0; k < n; ++k) {
      long double ang = kTwoPi * (long double)k / (long double)n;
      cs[k] = std::cos(ang);
      sn[k] = std::sin(ang);
    }
  }
};

using Poly = std::vector<uint64_t>; // coefficient i on x^i

Poly poly_mul_mod(const Poly& a, const Poly& b, const Poly& monic_tail, uint64_t p) {
  const size_t f = monic_tail.size();
  std::vector<uint64_t> prod(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i) {
    if (!a[i]) continue;
    for (size_t j = 0; j < b.size(); ++j) prod[i + j] = (prod[i + j] + a[i] * b[j]) % p;
  }
  for (size_t i = prod.size(); i-- > f;) {
    uint64_t c = prod[i];
    if (!c) continue;
    prod[i] = 0;
    for (size_t j = 0; j < f; ++j)
      prod[i - f + j] = (prod[i - f + j] + (p - monic_tail[j] % p) * c) % p;
  }
  prod.resize(f);
  return prod;
}

Poly poly_pow_mod(Poly base, uint64_t e, const Poly& monic_tail, uint64_t p) {
  Poly r(monic_tail.size(), 0);
  r[0] = 1;
  while (e) {
    if (e & 1) r = poly_mul_mod(r, base, monic_tail, p);
    base = poly_mul_mod(base, base, monic_tail, p);
    e >>= 1;
  }
  return r;
}

bool poly_is_zero(const Poly& a) {
  return std::all_of(a.begin(), a.end(), [](uint64_t c) { return c == 0; });
}

int poly_degree(const Poly& a) {
  for (size_t i = a.size(); i-- > 0;)
    if (a[i]) return int(i);
  return -1;
}

Poly poly_gcd(Poly a, Poly b, uint64_t p) {
  while (!poly_is_zero(b)) {
    int db = poly_degree(b);
    uint64_t inv = pow_mod(b[db], p - 2, p);
    int da = poly_degree(a);
    while (da >= db) {
      uint64_t c = mul_mod(a[da], inv, p);
      if (c)
        for (int j = 0; j <= db; ++j)
          a[da - db + j] = (a[da - db + j] + p - mul_mod(c, b[j], p)) % p;
      while (da >= 0 && a[da] == 0) --da;
    }
    std::swap(a, b);
  }
  return a;
}

// Rabin test for the monic candidate x^f + sum tail_i x^i over F_p.
bool is_irreducible(const Poly& tail, unsigned f, uint64_t p) {
  if (f == 1) return true;
  Poly x(f, 0);
  x[1] = 1;
  for (const auto& pp : factorize(f).factors) {
    uint64_t e = 1;
    for (unsigned i = 0; i < f / pp.p; ++i) e *= p;
    Poly diff = poly_pow_mod(x, e, tail, p);
    diff[1] = (diff[1] + p - 1) % p;
    Poly full = tail;
    full.push_back(1);
    if (poly_degree(poly_gcd(full, diff, p)) != 0) return false;
  }
  uint64_t e = 1;
  for (unsigned i = 0; i < f; ++i) e *= p;
  Poly diff = poly_pow_mod(x, e, tail, p);
  diff[1] = (diff[1] + p - 1) % p;
  return poly_is_zero(diff);
}

std::vector<uint64_t> decode(uint64_t x, uint64_t p, unsigned f) {
  std::vector<uint64_t> d(f);
  for (unsigned i = 0; i < f; ++i) {
    d[i] = x % p;
    x /= p;
  }
  return d;
}

uint64_t encode(const std::vector<uint64_t>& d, uint64_t p) {
  uint64_t x = 0;
  for (size_t i = d.size(); i-- > 0;) x = x * p + d[i] % p;
  return x;
}

// Lexicographically least monic irreducible of degree f (comparing the
// coefficient tuple (c_{f-1}, ..., c_0), which is ascending integer order
// of the base-p encoding).
Poly least_irreducible(uint64_t p, unsigned f, uint64_t q) {
  if (f == 1) return {0};
  for (uint64_t n = 0; n < q; ++n) {
    Poly cand = decode(n, p, f);
    if (is_irreducible(cand, f, p)) return cand;
  }
  throw std::logic_error("least_irreducible: none found");
}

// Power sums p_k = Tr(x^k) of the roots of the monic polynomial with the
// given tail, via Newton's identities, for k = 0 .. 2h-2, all mod p.
std::vector<uint64_t> power_traces(const Poly& tail, unsigned h, uint64_t p) {
  std::vector<uint64_t> e(h + 1, 0); // elementary symmetric, e_i = (-1)^i c_{h-i}
  e[0] = 1;
  for (unsigned i = 1; i <= h; ++i) {
    uint64_t c = (h == 1 && i == 1) ? tail[0] % p : tail[h - i] % p;
    e[i] = (i % 2 == 0) ? c : (p - c) % p;
  }
  std::vector<uint64_t> pt(2 * h - 1, 0);
  pt[0] = h % p;
  for (unsigned k = 1; k < 2 * h - 1; ++k) {
    uint64_t acc = 0;
    for (unsigned i = 1; i <= std::min<unsigned>(k - 1, h); ++i) {
      uint64_t term = mul_mod(e[i], pt[k - i], p);
      acc = (i % 2 == 1) ? (acc + term) % p : (acc + p - term) % p;
    }
    if (k <= h) {
      uint64_t term = mul_mod(e[k], k % p, p);
      acc = (k % 2 == 1) ? (acc + term) % p : (acc + p - term) % p;
    }
    pt[k] = acc;
  }
  return pt;
}

} // namespace

uint64_t SmallField::mul(uint64_t a, uint64_t b) const {
  if (f == 1) return mul_mod(a, b, p);
  auto da = decode(a, p, f), db = decode(b, p, f);
  std::vector<uint64_t> prod(2 * f - 1, 0);
  for (unsigned i = 0; i < f; ++i) {
    if (!da[i]) continue;
    for (unsigned j = 0; j < f; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p;
  }
  for (size_t i = prod.size(); i-- > f;) {
    uint64_t c = prod[i];
    if (!c) continue;
    prod[i] = 0;
    for (unsigned j = 0; j < f; ++j) prod[i - f + j] = (prod[i - f + j] + (p - poly[j] % p) * c) % p;
  }
  prod.resize(f);
  return encode(prod, p);
}

uint64_t SmallField::pow(uint64_t a, uint64_t e) const {
  uint64_t r = 1;
  while (e) {
    if (e & 1) r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}

std::optional<uint64_t> find_prime_in_class(uint64_t m, uint64_t pbar, uint64_t bound) {
  pbar %= m;
  if (std::gcd(pbar == 0 ? m : pbar, m) != 1)
    throw std::invalid_argument("find_prime_in_class: pbar must be a unit mod m");
  for (uint64_t c = pbar; c <= bound; c += m)
    if (is_prime_u64(c)) return c;
  return std::nullopt;
}

SmallField build_field(uint64_t p, unsigned f) {
  if (!is_prime_u64(p)) throw std::invalid_argument("build_field: p must be prime");
  if (f < 1) throw std::invalid_argument("build_field: f must be >= 1");
  uint64_t q = 1;
  for (unsigned i = 0; i < f; ++i) {
    q *= p;
    if (q > kFieldCap) throw std::invalid_argument("build_field: q exceeds the 2^20 cap");
  }

  SmallField fld;
  fld.p = p;
  fld.f = f;
  fld.q = q;
  fld.poly = least_irreducible(p, f, q);

  Factorization qm1 = factorize(q - 1);
  for (uint64_t g = 2; g < q; ++g) {
    bool ok = true;
    for (const auto& pp : qm1.factors)
      if (fld.pow(g, (q - 1) / pp.p) == 1) { ok = false; break; }
    if (ok) { fld.generator = g; break; }
  }

  fld.dlog.assign(q, UINT32_MAX);
  uint64_t x = 1;
  for (uint64_t k = 0; k + 1 < q; ++k) {
    fld.dlog[x] = uint32_t(k);
    x = fld.mul(x, fld.generator);
  }

  std::vector<uint64_t> basis_trace = power_traces(fld.poly, f, p);
  fld.trace.assign(q, 0);
  for (uint64_t enc = 0; enc < q; ++enc) {
    auto d = decode(enc, p, f);
    uint64_t t = 0;
    for (unsigned j = 0; j < f; ++j) t = (t + d[j] * basis_trace[j]) % p;
    fld.trace[enc] = uint32_t(t);
  }
  return fld;
}

ComplexSum gauss_sum_numeric(const SmallField& fld, uint64_t m, uint64_t a) {
  if (m == 0 || (fld.q - 1) % m != 0)
    throw std::invalid_argument("gauss_sum_numeric: m must divide q - 1");
  a %= m;
  RootTable zm(m), zp(fld.p);
  Kahan re, im;
  uint64_t x = 1;
  for (uint64_t k = 0; k + 1 < fld.q; ++k) {
    uint64_t cm = a * (k % m) % m;
    uint64_t tp = fld.trace[x];
    re.add(zm.cs[cm] * zp.cs[tp] - zm.sn[cm] * zp.sn[tp]);
    im.add(zm.cs[cm] * zp.sn[tp] + zm.sn[cm] * zp.cs[tp]);
    x = fld.mul(x, fld.generator);
  }
  return {re.sum, im.sum};
}

ComplexSum quadratic_gauss_sum(uint64_t p, unsigned h) {
  if (p == 2 || !is_prime_u64(p))
    throw std::invalid_argument("quadratic_gauss_sum: p must be an odd prime");
  uint64_t q = 1;
  for (unsigned i = 0; i < h; ++i) q *= p;
  Poly tail = (h == 1) ? Poly{0} : least_irreducible(p, h, q);
  std::vector<uint64_t> pt = power_traces(tail, h, p);

  // G = sum over all y in F_q of zeta_p^{Tr(y^2)}; Tr(y^2) is a quadratic
  // form in the digit vector with matrix Tr(x^{i+j}).
  RootTable zp(p);
  Kahan re, im;
  std::vector<uint64_t> digits(h, 0);
  for (;;) {
    uint64_t tr = 0;
    for (unsigned i = 0; i < h; ++i) {
      if (!digits[i]) continue;
      for (unsigned j = 0; j < h; ++j) tr = (tr + digits[i] * digits[j] % p * pt[i + j]) % p;
    }
    re.add(zp.cs[tr]);
    im.add(zp.sn[tr]);
    unsigned j = h;
    bool carried = false;
    while (j-- > 0) {
      if (++digits[j] < p) { carried = true; break; }
      digits[j] = 0;
    }
    if (!carried) break;
  }
  return {re.sum, im.sum};
}

BasicPropertyReport check_basic_properties(const SmallField& fld, uint64_t m) {
  if (m < 2 || (fld.q - 1) % m != 0)
    throw std::invalid_argument("check_basic_properties: need m >= 2 and m | q - 1");
  std::vector<ComplexSum> g(m);
  for (uint64_t a = 0; a < m; ++a) g[a] = gauss_sum_numeric(fld, m, a);

  BasicPropertyReport rep;
  const long double rq = std::sqrt((long double)fld.q);
  const uint64_t k_minus1 = (fld.p == 2) ? 0 : ((fld.q - 1) / 2) % m;
  for (uint64_t a = 1; a < m; ++a) {
    rep.max_dev_modulus =
        std::max(rep.max_dev_modulus, std::fabs(g[a].abs2() - (long double)fld.q) / (long double)fld.q);

    const ComplexSum& gp = g[a * (fld.p % m) % m];
    long double dre = gp.re - g[a].re, dim = gp.im - g[a].im;
    rep.max_dev_frobenius = std::max(rep.max_dev_frobenius, std::sqrt(dre * dre + dim * dim) / rq);

    const ComplexSum& gm = g[(m - a) % m];
    long double ang = kTwoPi * (long double)(a * k_minus1 % m) / (long double)m;
    long double cr = std::cos(ang), ci = std::sin(ang);
    long double er = cr * g[a].re + ci * g[a].im; // (cr + i ci) * conj(G)
    long double ei = ci * g[a].re - cr * g[a].im;
    long double d2re = gm.re - er, d2im = gm.im - ei;
    rep.max_dev_conjugation =
        std::max(rep.max_dev_conjugation, std::sqrt(d2re * d2re + d2im * d2im) / rq);
  }
  return rep;
}

bool check_davenport_hasse(const SmallField& fld_small, const SmallField& fld_big, uint64_t m,
                           unsigned s, long double rel_tol) {
  if (fld_small.p != fld_big.p || fld_big.f != s * fld_small.f)
    throw std::invalid_argument("check_davenport_hasse: not a degree-s tower");
  if (m < 2 || (fld_small.q - 1) % m != 0)
    throw std::invalid_argument("check_davenport_hasse: m must divide the base group order");

  const uint64_t qs = fld_small.q, qb = fld_big.q, p = fld_big.p;
  // The subfield of order qs inside the big field is generated by
  // gamma = g_big^{(qb-1)/(qs-1)}, and the norm maps g_big^k to gamma^k.
  // Defining the base character by eta(gamma) = zeta_m makes the lift the
  // order-m character of the big field with the same exponent.
  const uint64_t gamma = fld_big.pow(fld_big.generator, (qb - 1) / (qs - 1));

  auto subfield_trace = [&](uint64_t y) -> uint64_t {
    std::vector<uint64_t> sum(fld_big.f, 0);
    uint64_t z = y;
    for (unsigned i = 0; i < fld_small.f; ++i) {
      uint64_t x = z;
      for (unsigned t = 0; t < fld_big.f; ++t) {
        sum[t] = (sum[t] + x % p) % p;
        x /= p;
      }
      z = fld_big.pow(z, p);
    }
    for (unsigned t = 1; t < fld_big.f; ++t)
      if (sum[t] != 0) throw std::logic_error("check_davenport_hasse: subfield trace escaped F_p");
    return sum[0];
  };

  RootTable zm(m), zp(p);
  const long double scale = std::sqrt((long double)qb);
  for (uint64_t a = 1; a < m; ++a) {
    if (std::gcd(a, m) != 1) continue;
    Kahan sre, sim;
    uint64_t y = 1;
    for (uint64_t k = 0; k + 1 < qs; ++k) {
      uint64_t cm = a * (k % m) % m;
      uint64_t tp = subfield_trace(y);
      sre.add(zm.cs[cm] * zp.cs[tp] - zm.sn[cm] * zp.sn[tp]);
      sim.add(zm.cs[cm] * zp.sn[tp] + zm.sn[cm] * zp.cs[tp]);
      y = fld_big.mul(y, gamma);
    }
    ComplexSum big = gauss_sum_numeric(fld_big, m, a);

    long double rr = 1.0L, ri = 0.0L;
    for (unsigned i = 0; i < s; ++i) {
      long double nr = rr * sre.sum - ri * sim.sum;
      long double ni = rr * sim.sum + ri * sre.sum;
      rr = nr;
      ri = ni;
    }
    if (s % 2 == 0) { rr = -rr; ri = -ri; }
    long double dre = big.re - rr, dim = big.im - ri;
    if (std::sqrt(dre * dre + dim * dim) > rel_tol * scale) return false;
  }
  return true;
}

bool conjugate_two_value_test(const SmallField& fld, uint64_t m, const std::vector<uint64_t>& e0) {
  if (m < 3 || (fld.q - 1) % m != 0)
    throw std::invalid_argument("conjugate_two_value_test: m must divide q - 1");
  const uint64_t phi = euler_phi(m);
  std::vector<uint64_t> sorted = e0;
  std::sort(sorted.begin(), sorted.end());
  if (sorted.size() * 2 != phi || std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end() ||
      !std::binary_search(sorted.begin(), sorted.end(), uint64_t(1)))
    throw std::invalid_argument("conjugate_two_value_test: witness is not an index-2 subgroup");
  for (uint64_t a : sorted) {
    if (std::gcd(a, m) != 1)
      throw std::invalid_argument("conjugate_two_value_test: non-unit member");
    for (uint64_t b : sorted)
      if (!std::binary_search(sorted.begin(), sorted.end(), mul_mod(a, b, m)))
        throw std::invalid_argument("conjugate_two_value_test: witness is not closed");
  }

  const uint64_t w = std::lcm<uint64_t>(2, m);
  const long double tol = (long double)(m * w) * 1e-10L;

  ComplexSum g1 = gauss_sum_numeric(fld, m, 1);
  const long double base = std::atan2(g1.im, g1.re);
  bool inside_ok = true, outside_violates = false;
  for (uint64_t t = 1; t < m; ++t) {
    if (std::gcd(t, m) != 1) continue;
    ComplexSum gt = gauss_sum_numeric(fld, m, t);
    long double phase = std::atan2(gt.im, gt.re) - base;
    long double dev = 2.0L * std::fabs(std::sin((long double)(m * w) * phase / 2.0L));
    bool returns_to_one = dev < tol;
    if (std::binary_search(sorted.begin(), sorted.end(), t)) {
      if (!returns_to_one) inside_ok = false;
    } else {
      if (!returns_to_one) outside_violates = true;
    }
  }
  return inside_ok && outside_violates;
}

} // namespace gaussq
