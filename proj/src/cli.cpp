#include "gaussq/cli.hpp"

#include "gaussq/characters.hpp"
#include "gaussq/classifier.hpp"
#include "gaussq/gauss_numeric.hpp"
#include "gaussq/output.hpp"
#include "gaussq/table_data.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <numeric>
#include <set>

namespace gaussq {

namespace {

constexpr uint64_t kDefaultMaxM = 10000;

int cmd_classify(uint64_t m_min, uint64_t m_max, const std::string& filter, uint64_t min_h,
                 const std::string& format, const std::string& out_path, unsigned jobs,
                 bool unsafe_max) {
  if (m_max > kDefaultMaxM && !unsafe_max) {
    std::cerr << "classify: --m-max above " << kDefaultMaxM
              << " needs --unsafe-max (sweeps grow quickly)\n";
    return 2;
  }
  EnumerateOptions opt;
  opt.min_h = min_h;
  opt.jobs = jobs;
  if (filter == "quadratic") opt.filter = EnumerateOptions::Filter::Quadratic;
  else if (filter == "pure") opt.filter = EnumerateOptions::Filter::Pure;

  std::vector<ClassificationRecord> records = enumerate_range(m_min, m_max, opt);

  std::ofstream file;
  std::ostream* os = &std::cout;
  if (!out_path.empty()) {
    file.open(out_path);
    if (!file) {
      std::cerr << "classify: cannot open " << out_path << "\n";
      return 2;
    }
    os = &file;
  }
  if (format == "csv") {
    *os << csv_header() << '\n';
    for (const auto& r : records) *os << to_csv_row(r) << '\n';
  } else {
    for (const auto& r : records) *os << to_json_line(r) << '\n';
  }
  return os->good() ? 0 : 1;
}

int cmd_check(uint64_t m, uint64_t p) {
  ClassificationRecord rec = classify(m, p);
  StickelbergerProfile pr = profile(m, p);

  std::cout << "pair (" << m << ", " << p << "): pbar=" << rec.pbar << " f=" << rec.f
            << " h=" << rec.h << " class=" << to_string(rec.cls) << "\n";
  std::cout << "coset-sum values:";
  for (uint64_t v : pr.values) std::cout << ' ' << v;
  std::cout << "\n";
  for (size_t i = 0; i < pr.values.size() && i < 8; ++i) {
    std::cout << "  S=" << pr.values[i] << " on {";
    const auto& cls = pr.classes[i];
    for (size_t j = 0; j < cls.size(); ++j) {
      if (j) std::cout << ", ";
      if (j == 24) { std::cout << "..."; break; }
      std::cout << cls[j];
    }
    std::cout << "}\n";
  }
  if (rec.quad) {
    std::cout << "quadratic split: A0=" << rec.quad->a0 << " A1=" << rec.quad->a1
              << " conductor=" << rec.quad->ann_conductor
              << " discriminant=" << rec.quad->discriminant << " x_minus="
              << to_string(rec.quad->xm) << "\n";
    std::cout << "E0 = {";
    for (size_t j = 0; j < rec.quad->e0.size(); ++j) {
      if (j) std::cout << ", ";
      if (j == 48) { std::cout << "..."; break; }
      std::cout << rec.quad->e0[j];
    }
    std::cout << "}\n";
  }
  auto crit = criterion_quadratic(m, p);
  std::cout << "character criterion: " << (crit.quadratic ? "quadratic" : "not quadratic") << "\n";
  std::cout << "odd characters trivial on p: " << odd_trivial_on_p(m, p).size()
            << ", full-conductor subset: " << x_minus(m, p).size() << "\n";
  auto audits = audit_structural(rec);
  for (const auto& a : audits)
    std::cout << "audit " << a.name << ": " << (a.pass ? "pass" : "FAIL") << "\n";
  for (const auto& a : audits)
    if (!a.pass) return 1;
  return 0;
}

int cmd_table(const std::string& reference, unsigned jobs) {
  if (reference != "paper1000") {
    std::cerr << "table: unknown reference '" << reference << "'\n";
    return 2;
  }
  EnumerateOptions opt;
  opt.filter = EnumerateOptions::Filter::Quadratic;
  opt.min_h = 3; // h > 2
  opt.jobs = jobs;
  std::vector<ClassificationRecord> records = enumerate_range(3, 1000, opt);

  std::set<ReferenceRow> computed;
  for (const auto& r : records)
    computed.insert({uint32_t(r.m), uint32_t(r.pbar), uint32_t(r.f), uint32_t(r.h)});
  std::set<ReferenceRow> expected(paper1000_rows().begin(), paper1000_rows().end());

  std::vector<ReferenceRow> missing, extra;
  std::set_difference(expected.begin(), expected.end(), computed.begin(), computed.end(),
                      std::back_inserter(missing));
  std::set_difference(computed.begin(), computed.end(), expected.begin(), expected.end(),
                      std::back_inserter(extra));
  for (const auto& r : missing)
    std::cout << "missing: [" << r.m << ", " << r.pbar << ", " << r.f << ", " << r.h << "]\n";
  for (const auto& r : extra)
    std::cout << "extra:   [" << r.m << ", " << r.pbar << ", " << r.f << ", " << r.h << "]\n";
  std::cout << "reference rows: " << expected.size() << ", computed rows: " << computed.size()
            << ", missing: " << missing.size() << ", extra: " << extra.size() << "\n";
  return (missing.empty() && extra.empty()) ? 0 : 1;
}

int cmd_oddf(unsigned f) {
  auto pairs = classify_odd_f(f);
  std::cout << "order " << f << ": " << pairs.size() << " pair(s)\n";
  for (const auto& [m, pbar] : pairs) std::cout << "(" << m << ", " << pbar << ")\n";
  return 0;
}

int cmd_selftest(uint64_t max_m) {
  int failures = 0;
  auto report = [&](const std::string& name, bool ok) {
    std::cout << (ok ? "pass" : "FAIL") << ": " << name << "\n";
    if (!ok) ++failures;
  };

  // exact Bernoulli identity, every nontrivial character mod every m <= 60
  {
    bool ok = true;
    for (uint64_t m = 3; m <= 60; ++m)
      for (const auto& chi : character_group(m))
        if (!chi.is_principal() && !verify_ber_identity(m, chi)) {
          ok = false;
          std::cout << "  ber identity fails at m=" << m << "\n";
        }
    report("bernoulli identity (m <= 60)", ok);
  }

  // character orthogonality, exact cyclotomic sums
  {
    bool ok = true;
    for (uint64_t m = 3; m <= std::min<uint64_t>(max_m, 200) && ok; ++m) {
      auto g = unit_group(m);
      auto chars = character_group(m);
      uint64_t ex = g->exponent_lcm();
      for (uint64_t x = 1; x < m && ok; ++x) {
        if (std::gcd(x, m) != 1) continue;
        CyclotomicElement acc = CyclotomicElement::zero(ex);
        for (const auto& chi : chars) acc += evaluate(chi, x)->to_cyclotomic(ex);
        CyclotomicElement want =
            CyclotomicElement::integer(ex, x % m == 1 ? int64_t(g->phi()) : 0);
        if (!(acc == want)) ok = false;
      }
    }
    report("character orthogonality", ok);
  }

  // the two classification routes agree, with identical witnesses
  {
    bool ok = true;
    for (uint64_t m = 3; m <= max_m && ok; ++m) {
      for (uint64_t p = 1; p < m; ++p) {
        if (std::gcd(p, m) != 1) continue;
        auto part = quadratic_partition(m, p);
        auto crit = criterion_quadratic(m, p);
        if (part.has_value() != crit.quadratic ||
            (part.has_value() && part->e0 != crit.e0)) {
          ok = false;
          std::cout << "  oracle mismatch at (" << m << ", " << p << ")\n";
          break;
        }
      }
    }
    report("oracle equivalence (m <= " + std::to_string(max_m) + ")", ok);
  }

  // parity-constrained fraction sets
  {
    bool ok = true;
    for (uint64_t d1 = 1; d1 <= 40 && ok; ++d1)
      for (uint64_t d2 = 1; d2 <= 40 && ok; ++d2) {
        uint64_t g = std::gcd(d1, d2);
        bool empty = a_minus_set(d1, d2).members.empty();
        auto v2 = [](uint64_t x) { unsigned v = 0; while (x % 2 == 0) { x /= 2; ++v; } return v; };
        if (g % 2 == 0) {
          if (empty != (v2(d1) == v2(d2))) ok = false;
        } else {
          if (empty != (g == 1)) ok = false;
        }
      }
    report("A^- emptiness lemma (d <= 40)", ok);
  }

  std::cout << (failures ? "selftest: FAILURES\n" : "selftest: all suites passed\n");
  return failures ? 1 : 0;
}

int cmd_verify_numeric(uint64_t m, uint64_t pbar, uint64_t max_q) {
  uint64_t f = mult_order(pbar, m);
  uint64_t p_bound = max_q;
  // need p^f <= max_q
  uint64_t root = uint64_t(std::pow((double)max_q, 1.0 / (double)f)) + 1;
  while (root > 1) {
    uint64_t q = 1;
    bool over = false;
    for (uint64_t i = 0; i < f; ++i) {
      q *= root;
      if (q > max_q) { over = true; break; }
    }
    if (!over) break;
    --root;
  }
  p_bound = std::max<uint64_t>(root, 2);

  auto p = find_prime_in_class(m, pbar, p_bound);
  if (!p) {
    std::cout << "no prime in the class of " << pbar << " mod " << m << " keeps q <= " << max_q
              << "\n";
    return 1;
  }
  std::cout << "prime " << *p << " = " << pbar << " (mod " << m << "), field size " << *p << "^"
            << f << "\n";
  SmallField fld = build_field(*p, unsigned(f));

  bool all_ok = true;
  BasicPropertyReport rep = check_basic_properties(fld, m);
  bool basic = rep.pass(1e-6L, 1e-8L);
  std::cout << "basic properties: " << (basic ? "pass" : "FAIL")
            << " (modulus dev " << (double)rep.max_dev_modulus << ", frobenius dev "
            << (double)rep.max_dev_frobenius << ", conjugation dev "
            << (double)rep.max_dev_conjugation << ")\n";
  all_ok = all_ok && basic;

  ClassificationRecord rec = classify(m, pbar);
  std::cout << "classification: " << to_string(rec.cls) << "\n";
  if (rec.quad && !rec.quad->e0.empty()) {
    bool conj = conjugate_two_value_test(fld, m, rec.quad->e0);
    std::cout << "conjugate two-value split: " << (conj ? "pass" : "FAIL") << "\n";
    all_ok = all_ok && conj;
  }
  return all_ok ? 0 : 1;
}

} // namespace

int run_cli(int argc, const char* const* argv) {
  CLI::App app{"exact classifier and numeric verifier for Gauss sums whose powers land in "
               "quadratic fields"};
  app.require_subcommand(1);

  // classify
  auto* classify_cmd = app.add_subcommand("classify", "enumerate and classify a modulus range");
  uint64_t m_min = 3, m_max = 100, min_h = 0;
  std::string filter = "all", format = "csv", out_path;
  unsigned jobs = 1;
  bool unsafe_max = false;
  classify_cmd->add_option("--m-min", m_min, "lower modulus bound")->capture_default_str();
  classify_cmd->add_option("--m-max", m_max, "upper modulus bound")->capture_default_str();
  classify_cmd->add_option("--filter", filter, "all|quadratic|pure")
      ->check(CLI::IsMember({"all", "quadratic", "pure"}));
  classify_cmd->add_option("--min-h", min_h, "keep records with h >= this");
  classify_cmd->add_option("--format", format, "csv|json")->check(CLI::IsMember({"csv", "json"}));
  classify_cmd->add_option("--out", out_path, "output path (default stdout)");
  classify_cmd->add_option("--jobs", jobs, "worker threads; output order is unchanged");
  classify_cmd->add_flag("--unsafe-max", unsafe_max, "allow m-max beyond 10000");

  // check
  auto* check_cmd = app.add_subcommand("check", "full report for a single pair");
  uint64_t ck_m = 0, ck_p = 0;
  check_cmd->add_option("m", ck_m, "modulus")->required();
  check_cmd->add_option("p", ck_p, "unit mod m")->required();

  // table
  auto* table_cmd = app.add_subcommand("table", "diff the m <= 1000 sweep against a reference");
  std::string reference = "paper1000";
  unsigned table_jobs = 1;
  table_cmd->add_option("--reference", reference, "reference name (paper1000)");
  table_cmd->add_option("--jobs", table_jobs, "worker threads");

  // oddf
  auto* oddf_cmd = app.add_subcommand("oddf", "complete classification for odd order f");
  unsigned oddf_f = 1;
  oddf_cmd->add_option("f", oddf_f, "odd order, f <= 13")->required();

  // selftest
  auto* self_cmd = app.add_subcommand("selftest", "exact identity and equivalence suites");
  uint64_t self_max_m = 200;
  self_cmd->add_option("--max-m", self_max_m, "bound for the equivalence sweep")
      ->capture_default_str();

  // verify-numeric
  auto* vn_cmd = app.add_subcommand("verify-numeric", "finite-field numeric verification");
  uint64_t vn_m = 0, vn_pbar = 0, vn_max_q = kFieldCap;
  vn_cmd->add_option("m", vn_m, "modulus")->required();
  vn_cmd->add_option("pbar", vn_pbar, "unit mod m")->required();
  vn_cmd->add_option("--max-q", vn_max_q, "field size cap")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*classify_cmd)
      return cmd_classify(m_min, m_max, filter, min_h, format, out_path, jobs, unsafe_max);
    if (*check_cmd) return cmd_check(ck_m, ck_p);
    if (*table_cmd) return cmd_table(reference, table_jobs);
    if (*oddf_cmd) return cmd_oddf(oddf_f);
    if (*self_cmd) return cmd_selftest(self_max_m);
    if (*vn_cmd) return cmd_verify_numeric(vn_m, vn_pbar, vn_max_q);
  } catch (const OracleMismatchError& e) {
    std::cerr << "oracle mismatch: " << e.what() << "\n";
    return 1;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}

} // namespace gaussq
