#pragma once

#include <cstdint>
#include <vector>

namespace gaussq {

struct ReferenceRow {
  uint32_t m, pbar, f, h;
  friend auto operator<=>(const ReferenceRow&, const ReferenceRow&) = default;
};

/// The published m <= 1000, h > 2 reference list, stored verbatim and never
/// regenerated by the tool itself.
const std::vector<ReferenceRow>& paper1000_rows();

} // namespace gaussq
