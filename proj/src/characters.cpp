#include "gaussq/characters.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace gaussq {

namespace {

uint64_t crt_pair(uint64_t r1, uint64_t m1, uint64_t r2, uint64_t m2) {
  uint64_t inv = pow_mod(m1 % m2, euler_phi(m2) - 1, m2);
  uint64_t t = mul_mod((r2 + m2 - r1 % m2) % m2, inv, m2);
  return (r1 + m1 * t) % (m1 * m2);
}

// Conductor of the component piece of a character, by the standard
// prime-power formulas.
uint64_t component_conductor(const UnitGroupComponent& c, const uint32_t* exps) {
  if (c.kind == UnitGroupComponent::Kind::Cyclic) {
    uint64_t n = c.orders[0];
    uint64_t a = exps[0] % n;
    if (a == 0) return 1;
    uint64_t o = n / std::gcd(n, a);
    if (c.modulus == 2) return 1;
    if (c.modulus == 4) return 4;
    unsigned s = 0;
    while (o % c.prime == 0) { o /= c.prime; ++s; }
    uint64_t cond = c.prime;
    for (unsigned i = 0; i < s; ++i) cond *= c.prime;
    return cond;
  }
  uint64_t n1 = c.orders[1];
  uint64_t e0 = exps[0] % 2, e1 = exps[1] % n1;
  uint64_t o1 = n1 / std::gcd(n1, e1);
  if (o1 == 1) return e0 ? 4 : 1;
  unsigned s = 0;
  while ((o1 >> s) > 1) ++s; // o1 = 2^s
  return uint64_t(4) << s;
}

struct GroupView {
  std::shared_ptr<const UnitGroupStructure> g;
  uint64_t L = 1;                 // exponent of the group
  std::vector<uint64_t> weights;  // L / n_j per factor
  explicit GroupView(uint64_t m) : g(unit_group(m)) {
    L = g->exponent_lcm();
    for (size_t j = 0; j < g->factor_count(); ++j) weights.push_back(L / g->factor_order(j));
  }
};

// Value numerator of chi at x over denominator L.
uint64_t value_numerator(const GroupView& v, const std::vector<uint32_t>& exps,
                         const std::vector<uint64_t>& dl) {
  uint64_t t = 0;
  for (size_t j = 0; j < exps.size(); ++j)
    t = (t + mul_mod(exps[j] % v.g->factor_order(j), v.weights[j] * (dl[j] % v.g->factor_order(j)) % v.L, v.L)) % v.L;
  return t;
}

// Deterministic odometer over all exponent vectors in lexicographic order
// (index 0 most significant), with running value numerators at p and -1.
// fn(exps, t_p, t_minus1) with numerators over denominator L.
template <typename Fn>
void for_each_character(const GroupView& v, const std::vector<uint64_t>& dp, Fn&& fn) {
  const size_t k = v.g->factor_count();
  std::vector<uint32_t> digits(k, 0);
  std::vector<uint64_t> add_p(k), add_m1(k);
  const auto& dm1 = v.g->dlog_of_minus_one();
  for (size_t j = 0; j < k; ++j) {
    add_p[j] = v.weights[j] * (dp[j] % v.g->factor_order(j)) % v.L;
    add_m1[j] = v.weights[j] * (dm1[j] % v.g->factor_order(j)) % v.L;
  }
  uint64_t t_p = 0, t_m1 = 0;
  for (;;) {
    if (!fn(digits, t_p, t_m1)) return;
    size_t j = k;
    bool carried = false;
    while (j-- > 0) {
      t_p = (t_p + add_p[j]) % v.L;
      t_m1 = (t_m1 + add_m1[j]) % v.L;
      if (++digits[j] < v.g->factor_order(j)) { carried = true; break; }
      digits[j] = 0; // n_j * add_j is 0 mod L, so the running sums wrapped too
    }
    if (!carried) return;
  }
}

uint64_t conductor_of_exponents(const UnitGroupStructure& g, const std::vector<uint32_t>& exps) {
  uint64_t cond = 1;
  size_t j = 0;
  for (const auto& c : g.components()) {
    cond *= component_conductor(c, exps.data() + j);
    j += c.gens.size();
  }
  return cond;
}

std::optional<RootOfUnity> primitive_value(const GroupView& v, const DirichletCharacter& chi,
                                           uint64_t y) {
  uint64_t c = chi.conductor;
  if (c == 1) return RootOfUnity::one();
  y %= c;
  if (y == 0 || std::gcd(y, c) != 1) return std::nullopt;
  // CRT lift of y to a unit mod m congruent to y mod c
  uint64_t x = 0, mod = 1;
  for (const auto& comp : v.g->components()) {
    uint64_t r;
    if (c % comp.prime == 0) {
      uint64_t cw = 1;
      while (c % (cw * comp.prime) == 0 && cw * comp.prime <= c) cw *= comp.prime;
      r = y % cw;
    } else {
      r = 1;
    }
    x = (mod == 1) ? r % comp.modulus : crt_pair(x, mod, r % comp.modulus, comp.modulus);
    mod *= comp.modulus;
  }
  return evaluate(chi, x);
}

bool product_vanishes_impl(const GroupView& v, const DirichletCharacter& chi) {
  if (chi.is_principal()) return false;
  for (const auto& comp : v.g->components()) {
    if (chi.conductor % comp.prime == 0) continue;
    auto val = primitive_value(v, chi, comp.prime);
    if (val && val->is_one()) return true;
  }
  return false;
}

} // namespace

RootOfUnity RootOfUnity::make(uint64_t num, uint64_t den) {
  if (den == 0) throw std::invalid_argument("RootOfUnity: zero denominator");
  num %= den;
  uint64_t g = std::gcd(num, den);
  if (num == 0) return {0, 1};
  return {num / g, den / g};
}

RootOfUnity RootOfUnity::times(const RootOfUnity& o) const {
  uint64_t l = std::lcm(den, o.den);
  return make(num * (l / den) + o.num * (l / o.den), l);
}

RootOfUnity RootOfUnity::pow(uint64_t e) const {
  return make(mul_mod(num, e % den, den), den);
}

CyclotomicElement RootOfUnity::to_cyclotomic(uint64_t n) const {
  if (n % den != 0) throw std::invalid_argument("RootOfUnity: order does not embed");
  return CyclotomicElement::root_power(n, num * (n / den));
}

bool DirichletCharacter::is_principal() const {
  return std::all_of(exponents.begin(), exponents.end(), [](uint32_t a) { return a == 0; });
}

DirichletCharacter make_character(uint64_t m, std::vector<uint32_t> exponents) {
  GroupView v(m);
  if (exponents.size() != v.g->factor_count())
    throw std::invalid_argument("make_character: wrong exponent count");
  DirichletCharacter chi;
  chi.modulus = m;
  for (size_t j = 0; j < exponents.size(); ++j) exponents[j] %= uint32_t(v.g->factor_order(j));
  chi.exponents = std::move(exponents);
  chi.order = 1;
  for (size_t j = 0; j < chi.exponents.size(); ++j) {
    uint64_t n = v.g->factor_order(j);
    chi.order = uint32_t(std::lcm<uint64_t>(chi.order, n / std::gcd<uint64_t>(n, chi.exponents[j])));
  }
  uint64_t t = value_numerator(v, chi.exponents, v.g->dlog_of_minus_one());
  if (t != 0 && 2 * t != v.L) throw std::logic_error("make_character: parity not +-1");
  chi.parity = (t == 0) ? 1 : -1;
  chi.conductor = conductor_of_exponents(*v.g, chi.exponents);
  return chi;
}

std::vector<DirichletCharacter> character_group(uint64_t m) {
  GroupView v(m);
  std::vector<DirichletCharacter> out;
  out.reserve(v.g->phi());
  std::vector<uint64_t> dzero(v.g->factor_count(), 0);
  for_each_character(v, dzero, [&](const std::vector<uint32_t>& exps, uint64_t, uint64_t) {
    out.push_back(make_character(m, exps));
    return true;
  });
  return out;
}

std::optional<RootOfUnity> evaluate(const DirichletCharacter& chi, uint64_t x) {
  GroupView v(chi.modulus);
  x %= chi.modulus;
  if (x == 0 || std::gcd(x, chi.modulus) != 1) return std::nullopt;
  return RootOfUnity::make(value_numerator(v, chi.exponents, v.g->dlog(x)), v.L);
}

std::optional<RootOfUnity> evaluate_primitive(const DirichletCharacter& chi, uint64_t y) {
  GroupView v(chi.modulus);
  return primitive_value(v, chi, y);
}

uint64_t conductor(const DirichletCharacter& chi) { return chi.conductor; }

DirichletCharacter annihilator_of(uint64_t m, const std::vector<uint64_t>& e0) {
  GroupView v(m);
  if (e0.size() * 2 != v.g->phi())
    throw std::invalid_argument("annihilator_of: set is not half the unit group");
  std::vector<std::vector<uint64_t>> dlogs;
  dlogs.reserve(e0.size());
  for (uint64_t t : e0) {
    if (!v.g->is_unit(t)) throw std::invalid_argument("annihilator_of: non-unit member");
    dlogs.push_back(v.g->dlog(t));
  }
  const size_t k = v.g->factor_count();
  std::vector<size_t> evens;
  for (size_t j = 0; j < k; ++j)
    if (v.g->factor_order(j) % 2 == 0) evens.push_back(j);
  for (uint64_t mask = 1; mask < (uint64_t(1) << evens.size()); ++mask) {
    std::vector<uint32_t> exps(k, 0);
    for (size_t i = 0; i < evens.size(); ++i)
      if (mask >> (evens.size() - 1 - i) & 1) exps[evens[i]] = uint32_t(v.g->factor_order(evens[i]) / 2);
    bool trivial_on_e0 = true;
    for (const auto& dl : dlogs) {
      uint64_t s = 0;
      for (size_t i = 0; i < evens.size(); ++i)
        if (exps[evens[i]]) s += dl[evens[i]];
      if (s & 1) { trivial_on_e0 = false; break; }
    }
    if (trivial_on_e0) return make_character(m, exps);
  }
  throw std::invalid_argument("annihilator_of: set is not an index-2 subgroup");
}

std::vector<DirichletCharacter> odd_trivial_on_p(uint64_t m, uint64_t p) {
  GroupView v(m);
  if (!v.g->is_unit(p)) throw std::invalid_argument("odd_trivial_on_p: p must be a unit mod m");
  auto dp = v.g->dlog(p % m);
  std::vector<DirichletCharacter> out;
  for_each_character(v, dp, [&](const std::vector<uint32_t>& exps, uint64_t t_p, uint64_t t_m1) {
    if (t_p == 0 && 2 * t_m1 == v.L) out.push_back(make_character(m, exps));
    return true;
  });
  return out;
}

std::vector<DirichletCharacter> x_minus(uint64_t m, uint64_t p) {
  GroupView v(m);
  std::vector<DirichletCharacter> out;
  for (auto& chi : odd_trivial_on_p(m, p)) {
    bool full = true;
    for (const auto& comp : v.g->components())
      if (chi.conductor % comp.prime != 0) { full = false; break; }
    if (full) out.push_back(std::move(chi));
  }
  return out;
}

bool product_vanishes(const DirichletCharacter& chi) {
  GroupView v(chi.modulus);
  return product_vanishes_impl(v, chi);
}

std::vector<uint64_t> character_kernel(const DirichletCharacter& chi) {
  if (chi.order > 2) throw std::invalid_argument("character_kernel: order must divide 2");
  GroupView v(chi.modulus);
  const size_t k = v.g->factor_count();
  std::vector<uint8_t> bits(k, 0);
  for (size_t j = 0; j < k; ++j) bits[j] = chi.exponents[j] != 0;
  std::vector<uint64_t> kernel;
  std::vector<uint32_t> digits(k, 0);
  uint64_t x = 1, parity = 0;
  for (;;) {
    if ((parity & 1) == 0) kernel.push_back(x);
    size_t j = k;
    bool carried = false;
    while (j-- > 0) {
      x = mul_mod(x, v.g->factor_generator(j), v.g->modulus());
      parity += bits[j];
      if (++digits[j] < v.g->factor_order(j)) { carried = true; break; }
      digits[j] = 0;
    }
    if (!carried) break;
  }
  std::sort(kernel.begin(), kernel.end());
  return kernel;
}

CriterionResult criterion_quadratic(uint64_t m, uint64_t p) {
  if (m < 3) throw std::invalid_argument("criterion_quadratic: m must be >= 3");
  GroupView v(m);
  if (!v.g->is_unit(p)) throw std::invalid_argument("criterion_quadratic: p must be a unit");
  auto dp = v.g->dlog(p % m);
  const auto& dm1 = v.g->dlog_of_minus_one();
  const size_t k = v.g->factor_count();

  std::vector<size_t> evens;
  for (size_t j = 0; j < k; ++j)
    if (v.g->factor_order(j) % 2 == 0) evens.push_back(j);

  for (uint64_t mask = 1; mask < (uint64_t(1) << evens.size()); ++mask) {
    uint64_t sp = 0, sm = 0;
    std::vector<uint32_t> exps(k, 0);
    for (size_t i = 0; i < evens.size(); ++i) {
      if (!(mask >> (evens.size() - 1 - i) & 1)) continue;
      size_t j = evens[i];
      exps[j] = uint32_t(v.g->factor_order(j) / 2);
      sp += dp[j];
      sm += dm1[j];
    }
    if (sp & 1) continue;      // chi(p) != 1
    if (!(sm & 1)) continue;   // chi not odd
    DirichletCharacter cand = make_character(m, exps);

    // (1) primitive value -1 at every prime of m away from the conductor
    bool cond1 = true;
    for (const auto& comp : v.g->components()) {
      if (cand.conductor % comp.prime == 0) continue;
      auto val = primitive_value(v, cand, comp.prime);
      if (!val || !val->is_minus_one()) { cond1 = false; break; }
    }
    if (!cond1) continue;

    // (2) every other odd character trivial on p kills its product
    bool cond2 = true;
    for_each_character(v, dp, [&](const std::vector<uint32_t>& e, uint64_t t_p, uint64_t t_m1) {
      if (t_p != 0 || 2 * t_m1 != v.L) return true;
      if (e == cand.exponents) return true;
      DirichletCharacter chi = make_character(m, e);
      if (!product_vanishes_impl(v, chi)) { cond2 = false; return false; }
      return true;
    });
    if (!cond2) continue;

    CriterionResult res;
    res.quadratic = true;
    res.e0 = character_kernel(cand);
    res.annihilator = std::move(cand);
    return res;
  }
  return {};
}

CyclotomicElement bernoulli_b1(const DirichletCharacter& chi) {
  if (chi.is_principal()) throw std::invalid_argument("bernoulli_b1: principal character");
  GroupView v(chi.modulus);
  const uint64_t o = chi.order;
  const uint64_t c = chi.conductor;
  std::vector<int64_t> weight(o, 0); // weight[k] multiplies zeta_o^k
  for (uint64_t x = 1; x < c; ++x) {
    if (std::gcd(x, c) != 1) continue;
    auto val = primitive_value(v, chi, x);
    weight[val->num * (o / val->den) % o] += int64_t(x);
  }
  CyclotomicElement acc = CyclotomicElement::zero(o);
  for (uint64_t kk = 0; kk < o; ++kk)
    if (weight[kk] != 0)
      acc += CyclotomicElement::root_power(o, kk).scaled(weight[kk], 1);
  return acc.scaled(1, int64_t(c));
}

bool verify_ber_identity(uint64_t m, const DirichletCharacter& chi) {
  if (chi.is_principal()) throw std::invalid_argument("verify_ber_identity: principal character");
  if (chi.modulus != m) throw std::invalid_argument("verify_ber_identity: modulus mismatch");
  GroupView v(m);
  const uint64_t o = chi.order;

  // left side: (1/m) sum over units of x chi(x), walked incrementally
  std::vector<int64_t> weight(o, 0);
  const size_t k = v.g->factor_count();
  std::vector<uint32_t> digits(k, 0);
  std::vector<uint64_t> addv(k);
  for (size_t j = 0; j < k; ++j)
    addv[j] = v.weights[j] * (chi.exponents[j] % v.g->factor_order(j)) % v.L;
  uint64_t x = 1, t = 0;
  for (;;) {
    weight[t * o / v.L % o] += int64_t(x);
    size_t j = k;
    bool carried = false;
    while (j-- > 0) {
      x = mul_mod(x, v.g->factor_generator(j), m);
      t = (t + addv[j]) % v.L;
      if (++digits[j] < v.g->factor_order(j)) { carried = true; break; }
      digits[j] = 0;
    }
    if (!carried) break;
  }
  CyclotomicElement lhs = CyclotomicElement::zero(o);
  for (uint64_t kk = 0; kk < o; ++kk)
    if (weight[kk] != 0)
      lhs += CyclotomicElement::root_power(o, kk).scaled(weight[kk], 1);
  lhs = lhs.scaled(1, int64_t(m));

  CyclotomicElement rhs = bernoulli_b1(chi);
  for (const auto& comp : v.g->components()) {
    if (chi.conductor % comp.prime == 0) continue;
    auto val = primitive_value(v, chi, comp.prime);
    CyclotomicElement factor = CyclotomicElement::integer(o, 1);
    if (val) factor -= val->to_cyclotomic(o);
    rhs = rhs * factor;
  }
  return lhs == rhs;
}

int64_t field_discriminant(const DirichletCharacter& chi_ann) {
  if (chi_ann.order != 2 || chi_ann.parity != -1)
    throw std::invalid_argument("field_discriminant: character must be odd of order 2");
  uint64_t c = chi_ann.conductor;
  if (c % 4 != 0 && c % 4 != 3)
    throw std::logic_error("field_discriminant: conductor is not a fundamental discriminant");
  return -int64_t(c);
}

} // namespace gaussq
