#pragma once

#include "gaussq/characters.hpp"
#include "gaussq/stickelberger.hpp"

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace gaussq {

/// Raised when the two classification routes disagree. This never fires on
/// correct code; it is the internal consistency tripwire.
class OracleMismatchError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

enum class GaussClass {
  SemiPrimitive,
  PureNonSemiPrimitive,
  QuadraticIndex2,
  QuadraticGeneral,
  Other,
};

enum class XMinusStatus { Empty, SingletonAnn };

const char* to_string(GaussClass c);
const char* to_string(XMinusStatus s);

struct QuadraticInfo {
  std::vector<uint64_t> e0;   // index-2 subgroup witness, sorted
  uint64_t a0 = 0, a1 = 0;
  uint64_t ann_conductor = 0;
  int64_t discriminant = 0;
  XMinusStatus xm = XMinusStatus::Empty;
  std::vector<uint32_t> ann_exponents;
};

struct ClassificationRecord {
  uint64_t m = 0, pbar = 0, f = 0, h = 0;
  GaussClass cls = GaussClass::Other;
  std::optional<QuadraticInfo> quad;

  bool is_quadratic() const {
    return cls == GaussClass::QuadraticIndex2 || cls == GaussClass::QuadraticGeneral;
  }
};

/// Minimum of { [p^i]_m : 1 <= i <= f-1, gcd(i, f) = 1 }; [p]_m when f = 1.
uint64_t canonical_pbar(uint64_t m, uint64_t p);

/// True iff -1 lies in <p> mod m.
bool is_semiprimitive(uint64_t m, uint64_t p);

/// Runs both the coset-sum route and the character criterion; they must
/// agree or OracleMismatchError is thrown.
ClassificationRecord classify(uint64_t m, uint64_t p);

struct EnumerateOptions {
  enum class Filter { All, Quadratic, Pure };
  Filter filter = Filter::All;
  uint64_t min_h = 0;
  unsigned jobs = 1;
  bool keep_witness = false; // drop e0 vectors to keep sweeps lean
};

/// One record per orbit { p^i : gcd(i, f) = 1 }, ascending by (m, pbar);
/// byte-identical output independent of the job count.
std::vector<ClassificationRecord> enumerate_range(uint64_t m_min, uint64_t m_max,
                                                  const EnumerateOptions& opt = {});

/// Complete set of pairs (m, pbar) of order f whose record is quadratic,
/// for odd f <= 13, by divisor-based candidate generation.
std::vector<std::pair<uint64_t, uint64_t>> classify_odd_f(unsigned f);

/// { (a1, a2) : a1/d1 + a2/d2 integral, 0 < ai < di, a1 + a2 odd } and the
/// even-sum companion set.
struct APlusMinusSet {
  uint64_t d1 = 0, d2 = 0;
  std::vector<std::pair<uint64_t, uint64_t>> members;
};
APlusMinusSet a_minus_set(uint64_t d1, uint64_t d2);
APlusMinusSet a_plus_set(uint64_t d1, uint64_t d2);

struct AuditResult {
  std::string name;
  bool pass = false;
};

/// Evaluates every applicable structural necessary condition on a quadratic
/// record; empty for non-quadratic records.
std::vector<AuditResult> audit_structural(const ClassificationRecord& rec);

} // namespace gaussq
