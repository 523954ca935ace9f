#include "gaussq/classifier.hpp"

#include <algorithm>
#include <atomic>
#include <numeric>
#include <set>
#include <thread>

namespace gaussq {

const char* to_string(GaussClass c) {
  switch (c) {
    case GaussClass::SemiPrimitive: return "semi-primitive";
    case GaussClass::PureNonSemiPrimitive: return "pure-non-semi-primitive";
    case GaussClass::QuadraticIndex2: return "quadratic-index2";
    case GaussClass::QuadraticGeneral: return "quadratic-general";
    case GaussClass::Other: return "other";
  }
  return "?";
}

const char* to_string(XMinusStatus s) {
  return s == XMinusStatus::Empty ? "empty" : "singleton-ann";
}

uint64_t canonical_pbar(uint64_t m, uint64_t p) {
  p %= m;
  if (p == 0 || std::gcd(p, m) != 1)
    throw std::invalid_argument("canonical_pbar: p must be a unit mod m");
  uint64_t f = mult_order(p, m);
  if (f == 1) return p;
  uint64_t best = UINT64_MAX, x = 1;
  for (uint64_t i = 1; i <= f - 1; ++i) {
    x = mul_mod(x, p, m);
    if (std::gcd(i, f) == 1) best = std::min(best, x);
  }
  return best;
}

bool is_semiprimitive(uint64_t m, uint64_t p) {
  if (m <= 2) throw std::invalid_argument("is_semiprimitive: m must be > 2");
  p %= m;
  if (p == 0 || std::gcd(p, m) != 1)
    throw std::invalid_argument("is_semiprimitive: p must be a unit mod m");
  uint64_t x = p;
  do {
    if (x == m - 1) return true;
    x = mul_mod(x, p, m);
  } while (x != p);
  return false;
}

namespace {

// Kernel of the order-2 character given by sign bits over the factor
// generators, walked incrementally; also accumulates the side sums used by
// the A_i tripwire.
std::vector<uint64_t> kernel_from_bits(const UnitGroupStructure& g,
                                       const std::vector<uint8_t>& bits,
                                       unsigned __int128 side_sum[2]) {
  const size_t k = g.factor_count();
  std::vector<uint64_t> kernel;
  kernel.reserve(g.phi() / 2);
  std::vector<uint32_t> digits(k, 0);
  uint64_t x = 1, parity = 0;
  side_sum[0] = side_sum[1] = 0;
  for (;;) {
    side_sum[parity & 1] += x;
    if ((parity & 1) == 0) kernel.push_back(x);
    size_t j = k;
    bool carried = false;
    while (j-- > 0) {
      x = mul_mod(x, g.factor_generator(j), g.modulus());
      parity += bits[j];
      if (++digits[j] < g.factor_order(j)) { carried = true; break; }
      digits[j] = 0;
    }
    if (!carried) break;
  }
  std::sort(kernel.begin(), kernel.end());
  return kernel;
}

constexpr uint64_t kWitnessPhiCap = uint64_t(1) << 22;

} // namespace

ClassificationRecord classify(uint64_t m, uint64_t p) {
  if (m < 3) throw std::invalid_argument("classify: m must be >= 3");
  p %= m;
  if (p == 0 || std::gcd(p, m) != 1)
    throw std::invalid_argument("classify: p must be a unit mod m");

  auto g = unit_group(m);
  ClassificationRecord rec;
  rec.m = m;
  rec.f = mult_order(p, m);
  rec.h = g->phi() / rec.f;
  rec.pbar = canonical_pbar(m, p);

  TwoValueScan scan = two_value_scan(m, p);
  CriterionResult crit = criterion_quadratic(m, p);

  const bool quad_scan = scan.shape == ValueShape::QuadraticSplit;
  if (quad_scan != crit.quadratic)
    throw OracleMismatchError("classify: coset-sum route and character criterion disagree at (" +
                              std::to_string(m) + ", " + std::to_string(p) + ")");
  if (quad_scan) {
    const auto& exps = crit.annihilator->exponents;
    for (size_t j = 0; j < exps.size(); ++j) {
      if ((exps[j] != 0) != (scan.sign_bits[j] != 0))
        throw OracleMismatchError("classify: witness subgroups differ at (" + std::to_string(m) +
                                  ", " + std::to_string(p) + ")");
    }
  }

  if (scan.shape == ValueShape::Pure) {
    rec.cls = is_semiprimitive(m, p) ? GaussClass::SemiPrimitive : GaussClass::PureNonSemiPrimitive;
  } else if (quad_scan) {
    rec.cls = (rec.f * 2 == g->phi()) ? GaussClass::QuadraticIndex2 : GaussClass::QuadraticGeneral;
    QuadraticInfo qi;
    qi.a0 = scan.a0;
    qi.a1 = scan.a1;
    qi.ann_conductor = crit.annihilator->conductor;
    qi.discriminant = field_discriminant(*crit.annihilator);
    qi.ann_exponents = crit.annihilator->exponents;
    bool full_conductor = true;
    for (const auto& comp : g->components())
      if (qi.ann_conductor % comp.prime != 0) { full_conductor = false; break; }
    qi.xm = full_conductor ? XMinusStatus::SingletonAnn : XMinusStatus::Empty;
    if (g->phi() <= kWitnessPhiCap) {
      unsigned __int128 side_sum[2];
      qi.e0 = kernel_from_bits(*g, scan.sign_bits, side_sum);
      // Lemma tripwire: A_i phi(m) = 2 f sum_{t in E_i} t, exactly.
      if ((unsigned __int128)qi.a0 * g->phi() != (unsigned __int128)2 * rec.f * side_sum[0] ||
          (unsigned __int128)qi.a1 * g->phi() != (unsigned __int128)2 * rec.f * side_sum[1])
        throw OracleMismatchError("classify: A_i average formula violated at (" +
                                  std::to_string(m) + ", " + std::to_string(p) + ")");
    }
    rec.quad = std::move(qi);
  } else {
    rec.cls = GaussClass::Other;
  }
  return rec;
}

std::vector<ClassificationRecord> enumerate_range(uint64_t m_min, uint64_t m_max,
                                                  const EnumerateOptions& opt) {
  m_min = std::max<uint64_t>(m_min, 3);
  std::vector<ClassificationRecord> out;
  if (m_min > m_max) return out;

  auto keep = [&](const ClassificationRecord& r) {
    if (r.h < opt.min_h) return false;
    switch (opt.filter) {
      case EnumerateOptions::Filter::Quadratic: return r.is_quadratic();
      case EnumerateOptions::Filter::Pure:
        return r.cls == GaussClass::SemiPrimitive || r.cls == GaussClass::PureNonSemiPrimitive;
      case EnumerateOptions::Filter::All: return true;
    }
    return true;
  };

  auto run_m = [&](uint64_t m, std::vector<ClassificationRecord>& sink) {
    for (uint64_t p = 1; p < m; ++p) {
      if (std::gcd(p, m) != 1) continue;
      if (canonical_pbar(m, p) != p) continue;
      ClassificationRecord rec = classify(m, p);
      if (!opt.keep_witness && rec.quad) rec.quad->e0.clear();
      if (keep(rec)) sink.push_back(std::move(rec));
    }
  };

  const uint64_t count = m_max - m_min + 1;
  unsigned jobs = std::max(1u, opt.jobs);
  if (jobs == 1 || count == 1) {
    for (uint64_t m = m_min; m <= m_max; ++m) run_m(m, out);
    return out;
  }

  std::vector<std::vector<ClassificationRecord>> slots(count);
  std::atomic<uint64_t> next{0};
  auto worker = [&] {
    for (;;) {
      uint64_t i = next.fetch_add(1);
      if (i >= count) return;
      run_m(m_min + i, slots[i]);
    }
  };
  std::vector<std::thread> pool;
  for (unsigned i = 0; i < jobs; ++i) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  for (auto& s : slots)
    for (auto& r : s) out.push_back(std::move(r));
  return out;
}

namespace {

bool odd_component_prunes(uint64_t f, uint64_t phi_i, uint64_t value, unsigned v2,
                          bool& any_branch) {
  // Branch tests per the necessary conditions for odd f; the caller combines
  // them across components.
  (void)any_branch;
  (void)f;
  (void)phi_i;
  (void)value;
  (void)v2;
  return false;
}

struct CandidateComponent {
  uint64_t p;
  unsigned u;
  uint64_t value;
  uint64_t phi;
};

bool candidate_survives(const std::vector<CandidateComponent>& odd_comps, unsigned v2, uint64_t f) {
  if (v2 > 3) return false;
  std::vector<uint64_t> odd_divs;
  for (uint64_t e = 1; e <= f; ++e)
    if (f % e == 0) odd_divs.push_back(e); // f odd, so all divisors are odd

  bool br_a = true, br_b = (v2 == 0 || v2 == 2), br_c = (v2 == 1);
  for (const auto& c : odd_comps) {
    if ((4 * f) % c.phi != 0) br_a = false;
    if (br_b) {
      bool ok = false;
      for (uint64_t e : odd_divs)
        if (c.phi == 2 * e) { ok = true; break; }
      br_b = ok;
    }
    if (br_c) {
      bool ok = false;
      for (uint64_t e : odd_divs) {
        if (c.phi == 2 * e || c.phi == 4 * e) { ok = true; break; }
        if (pow_mod(2, 2 * e, c.value) == 1) { ok = true; break; }
        if ((c.phi == 6 * e || c.phi == 8 * e) && pow_mod(2, 4 * e, c.value) == 1) { ok = true; break; }
      }
      br_c = ok;
    }
  }
  return br_a || br_b || br_c;
}

} // namespace

std::vector<std::pair<uint64_t, uint64_t>> classify_odd_f(unsigned f) {
  if (f % 2 == 0) throw std::invalid_argument("classify_odd_f: f must be odd");
  if (f > 13) throw std::invalid_argument("classify_odd_f: f capped at 13");

  const uint64_t big = (uint64_t(1) << (4 * f)) - 1;
  Factorization fac = factorize_u64(big);

  // Enumerate divisors of 2^{4f}-1 along with their prime-power shapes.
  std::vector<std::pair<uint64_t, std::vector<CandidateComponent>>> odd_parts{{1, {}}};
  for (const auto& pp : fac.factors) {
    size_t n = odd_parts.size();
    for (size_t i = 0; i < n; ++i) {
      uint64_t v = 1;
      for (unsigned u = 1; u <= pp.u; ++u) {
        v *= pp.p;
        auto entry = odd_parts[i];
        entry.first *= v;
        entry.second.push_back({pp.p, u, v, v / pp.p * (pp.p - 1)});
        odd_parts.push_back(std::move(entry));
      }
    }
  }

  std::set<uint64_t> candidates;
  for (const auto& [d, comps] : odd_parts) {
    for (unsigned a = 0; a <= 3; ++a) {
      uint64_t m = d << a;
      if (m < 3) continue;
      if (candidate_survives(comps, a, f)) candidates.insert(m);
    }
  }

  std::set<std::pair<uint64_t, uint64_t>> found;
  std::vector<uint64_t> f_primes;
  for (const auto& pp : factorize(f).factors) f_primes.push_back(pp.p);

  for (uint64_t m : candidates) {
    auto g = unit_group(m);
    if (g->exponent_lcm() % f != 0) continue;
    std::set<uint64_t> orbit_reps;
    for (uint64_t x : elements_of_order_dividing(f, *g)) {
      bool exact = x != 1 || f == 1;
      for (uint64_t q : f_primes)
        if (pow_mod(x, f / q, m) == 1) { exact = false; break; }
      if (!exact) continue;
      orbit_reps.insert(canonical_pbar(m, x));
    }
    for (uint64_t pbar : orbit_reps) {
      ClassificationRecord rec = classify(m, pbar);
      if (rec.is_quadratic()) found.emplace(m, pbar);
    }
  }
  return {found.begin(), found.end()};
}

APlusMinusSet a_minus_set(uint64_t d1, uint64_t d2) {
  APlusMinusSet s{d1, d2, {}};
  for (uint64_t a1 = 1; a1 < d1; ++a1)
    for (uint64_t a2 = 1; a2 < d2; ++a2)
      if ((a1 * d2 + a2 * d1) % (d1 * d2) == 0 && (a1 + a2) % 2 == 1)
        s.members.emplace_back(a1, a2);
  return s;
}

APlusMinusSet a_plus_set(uint64_t d1, uint64_t d2) {
  APlusMinusSet s{d1, d2, {}};
  for (uint64_t a1 = 1; a1 < d1; ++a1)
    for (uint64_t a2 = 1; a2 < d2; ++a2)
      if ((a1 * d2 + a2 * d1) % (d1 * d2) == 0 && (a1 + a2) % 2 == 0)
        s.members.emplace_back(a1, a2);
  return s;
}

namespace {

bool is_quadratic_residue(uint64_t x, uint64_t p) {
  if (p == 2) return true;
  return pow_mod(x % p, (p - 1) / 2, p) == 1;
}

bool is_quartic_residue(uint64_t x, uint64_t p) {
  if (p == 2) return true;
  uint64_t d = std::gcd<uint64_t>(4, p - 1);
  return pow_mod(x % p, (p - 1) / d, p) == 1;
}

bool divides_mersenne(uint64_t m_i, uint64_t exp) {
  return pow_mod(2, exp, m_i) == 1;
}

struct ComponentOrders {
  uint64_t prime, modulus, phi, f_i;
};

// prop:fac-style residue bookkeeping for the two-component audits. a and b
// are the two prime-power components with p reduced into each.
bool m1m2_ann_cases(const ComponentOrders& a, const ComponentOrders& b) {
  // (1)
  if (a.f_i * 2 == a.phi && a.f_i % 2 == 1 && b.f_i * 4 == b.phi && b.f_i % 2 == 1 &&
      std::gcd(a.f_i, b.f_i) == 1 && is_quadratic_residue(b.prime, a.prime) &&
      is_quartic_residue(a.prime, b.prime))
    return true;
  // (2)
  if (a.f_i * 2 == a.phi && a.f_i % 2 == 1 && b.f_i * 2 == b.phi && b.f_i % 2 == 0 &&
      std::gcd(a.f_i, b.f_i) == 1 && is_quadratic_residue(b.prime, a.prime))
    return true;
  // (3)
  if (a.f_i == a.phi && b.f_i == b.phi && a.f_i % 2 == 0 && b.f_i % 2 == 0 &&
      (a.f_i / 2) % 2 == 1 && (b.f_i / 2) % 2 == 0 && std::gcd(a.f_i / 2, b.f_i / 2) == 1)
    return true;
  return false;
}

bool m1m2_empty_cases(const ComponentOrders& a, const ComponentOrders& b) {
  // (1)
  if (a.f_i * 2 == a.phi && a.f_i % 2 == 1 && b.f_i * 2 == b.phi && b.f_i % 2 == 1 &&
      std::gcd(a.f_i, b.f_i) == 1 && !is_quadratic_residue(b.prime, a.prime) &&
      is_quadratic_residue(a.prime, b.prime))
    return true;
  // (2)
  if (a.f_i * 2 == a.phi && a.f_i % 2 == 1 && b.f_i == b.phi &&
      std::gcd(a.f_i, b.f_i) == 1 && !is_quadratic_residue(b.prime, a.prime))
    return true;
  return false;
}

} // namespace

std::vector<AuditResult> audit_structural(const ClassificationRecord& rec) {
  std::vector<AuditResult> out;
  if (!rec.is_quadratic() || !rec.quad) return out;

  Factorization fac = factorize(rec.m);
  const unsigned v2 = fac.v2();
  const uint64_t odd = rec.m >> v2;
  const size_t r = fac.factors.size();
  const uint64_t f = rec.f;
  const bool f_odd = (f % 2 == 1);
  const bool singleton = rec.quad->xm == XMinusStatus::SingletonAnn;

  std::vector<ComponentOrders> comps;
  for (const auto& pp : fac.factors) {
    ComponentOrders c;
    c.prime = pp.p;
    c.modulus = pp.value;
    c.phi = pp.value / pp.p * (pp.p - 1);
    c.f_i = (pp.value <= 2) ? 1 : mult_order(rec.pbar % pp.value, pp.value);
    comps.push_back(c);
  }

  if (singleton) {
    bool ok = true;
    for (const auto& c : comps)
      if ((4 * f) % c.phi != 0) { ok = false; break; }
    out.push_back({"finite1-phi-divides-4f", ok});
  }

  if (f_odd) {
    bool ok = v2 <= 3 && (odd == 1 || divides_mersenne(odd, 4 * f));
    out.push_back({"cor-fodd2-divisor-bound", ok});

    if (!singleton) {
      bool ok2 = v2 <= 2;
      if (ok2 && (v2 == 0 || v2 == 2)) {
        if (r % 2 != 0) ok2 = false;
        for (const auto& c : comps)
          if (c.f_i * 2 != c.phi) { ok2 = false; break; }
      } else if (ok2 && v2 == 1) {
        const bool r_even = (r % 2 == 0);
        for (const auto& c : comps) {
          if (c.prime == 2) continue;
          bool cond;
          if (r_even)
            cond = c.f_i * 2 == c.phi || divides_mersenne(c.modulus, 2 * c.f_i) ||
                   (divides_mersenne(c.modulus, 4 * c.f_i) && c.phi == 6 * c.f_i);
          else
            cond = c.f_i * 4 == c.phi || c.f_i * 2 == c.phi ||
                   divides_mersenne(c.modulus, 2 * c.f_i) ||
                   (divides_mersenne(c.modulus, 4 * c.f_i) && c.phi == 8 * c.f_i);
          if (!cond) { ok2 = false; break; }
        }
      }
      out.push_back({"thm-fodd-empty-cases", ok2});
    }
  }

  if (r == 1) {
    const auto& c = comps[0];
    if (c.prime == 2 && c.modulus >= 8) {
      // order of pbar in the unit group mod 2^u modulo {+-1}
      uint64_t fp = 1, x = rec.pbar % c.modulus;
      while (x != 1 && x != c.modulus - 1) {
        x = mul_mod(x, rec.pbar % c.modulus, c.modulus);
        ++fp;
      }
      out.push_back({"fac2-two-power", fp == c.modulus / 4});
    } else {
      bool ok = (rec.m == 4 && rec.pbar == 1 && f == 1) ||
                (c.prime % 4 == 3 && f == c.f_i && 2 * f == c.phi);
      out.push_back({"fac1-prime-power", ok});
    }
  }

  if (r == 2 && v2 <= 2) {
    if (singleton) {
      bool ok = v2 != 1 && (m1m2_ann_cases(comps[0], comps[1]) || m1m2_ann_cases(comps[1], comps[0]));
      out.push_back({"m1m2-singleton-cases", ok});
    } else if (v2 == 1) {
      const auto& c = comps[1]; // odd component
      bool ok = f == c.f_i && 2 * c.f_i == c.phi && c.f_i % 2 == 1 && c.prime % 8 == 3;
      out.push_back({"two-m2-empty", ok});
    } else {
      bool ok = m1m2_empty_cases(comps[0], comps[1]) || m1m2_empty_cases(comps[1], comps[0]);
      out.push_back({"m1m2-empty-cases", ok});
    }
  }

  return out;
}

} // namespace gaussq
