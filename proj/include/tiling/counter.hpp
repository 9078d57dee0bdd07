#ifndef TILING_COUNTER_HPP
#define TILING_COUNTER_HPP

#include <vector>

#include "tiling/lattice.hpp"

namespace tiling {

/// widest frontier the scan-line counter accepts
inline constexpr long kFrontierCap = 64;

/// frontier width the scan-line counter would need for r
long frontier_width(const Region& r);

/// Weighted number of lozenge tilings by a scan-line dynamic program over cells in (j, i, orient) order.
/// Throws CapacityError when the frontier exceeds kFrontierCap.
Rational count_tilings(const Region& r);

/// Same quantity as |det| of a Kasteleyn-signed biadjacency matrix, per connected component.
Rational count_tilings_determinant(const Region& r);

using Tiling = std::vector<Lozenge>;

struct TilingList {
    std::vector<Tiling> tilings;
    bool truncated = false;
};

/// every tiling, unless there are more than limit of them
TilingList enumerate_tilings(const Region& r, long limit);

/// product of the lozenge weights of a tiling
Rational tiling_weight(const Region& r, const Tiling& t);

} // namespace tiling

#endif
