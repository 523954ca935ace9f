#pragma once

#include <cstdint>
#include <optional>
#include <vector>

namespace gaussq {

/// S(t) = sum_{j=0}^{f-1} [t p^j]_m with representatives in [1, m-1].
/// Rejects non-units; f must be the order of p mod m.
uint64_t coset_sum(uint64_t t, uint64_t p, uint64_t f, uint64_t m);

/// The exponent data of one (m, p) pair: S on coset representatives of
/// G/<p>, the sorted distinct value list and the value partition of G.
struct StickelbergerProfile {
  uint64_t m = 0, p = 0, f = 0, h = 0;
  std::vector<std::pair<uint64_t, uint64_t>> entries;  // (smallest coset member, S)
  std::vector<uint64_t> values;                        // distinct, ascending
  std::vector<std::vector<uint64_t>> classes;          // classes[i]: units with S = values[i]
};

StickelbergerProfile profile(uint64_t m, uint64_t p);

/// True iff S(t) = f m / 2 for every unit t.
bool is_pure(uint64_t m, uint64_t p);

/// Index-2 split of the unit group by the two S-values.
struct QuadraticPartition {
  std::vector<uint64_t> e0;         // subgroup, sorted
  std::vector<uint64_t> e1;         // complement coset, sorted
  uint64_t s1 = 0;                  // smallest member of e1
  uint64_t a0 = 0, a1 = 0;          // S on e0 resp. e1
  std::vector<uint8_t> sign_bits;   // per unit-group factor: 1 iff generator lands in e1
};

/// Present iff S takes exactly two values and the level set of S(1) is
/// multiplicatively closed (an index-2 subgroup containing <p>).
std::optional<QuadraticPartition> quadratic_partition(uint64_t m, uint64_t p);

/// Streaming form of the two-value test used by the classifier; avoids
/// materializing the partition.
enum class ValueShape {
  Pure,            // one value f m / 2
  QuadraticSplit,  // two values split along an index-2 subgroup
  Neither,
};

struct TwoValueScan {
  ValueShape shape = ValueShape::Neither;
  uint64_t a0 = 0, a1 = 0;
  std::vector<uint8_t> sign_bits;
};

TwoValueScan two_value_scan(uint64_t m, uint64_t p);

} // namespace gaussq
