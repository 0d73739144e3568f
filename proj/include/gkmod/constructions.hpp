#pragma once

#include <vector>

#include "gkmod/representation.hpp"

namespace gkmod {

// The descending path a_0, ..., a_b whose start has the parity a radius-r
// orbit seed needs (a sink for even r): the root when its parity fits,
// otherwise the root's first child, followed by smallest-label steps.
std::vector<VertexAddress> canonical_center_path(const Orientation& o, int r, int b);

// Quotient of P_r(p) by the boundary simple at the far end q of the given
// length-r path: the incomplete sink module whose orbit has b = r.
Representation case_i(const Orientation& o, int r, const std::vector<VertexAddress>& path);

// Quotient of P_r(p) by the boundary simples at the tips of two arms of
// length r-b grown from the far end q of the given length-b path, leaving q
// by two different edges. The incomplete sink module whose orbit realizes
// the path, for any b < r except valence 3 with (b, r) = (0, 1), where the
// quotient degenerates to a flow module and case_iii applies instead.
Representation case_ii(const Orientation& o, int r, const std::vector<VertexAddress>& path);

// Two dimensions at a source p, one at each neighbor, the n maps lines in
// the plane that are pairwise different: the radius-1 incomplete sink module
// with b = 0, available for every valence.
Representation case_iii(const Orientation& o, const VertexAddress& p);

// The incomplete sink module of radius r whose orbit realizes the given
// center path (length b <= r): picks case_i, case_ii or case_iii as the
// parameters demand.
Representation seed_module(const Orientation& o, int r, const std::vector<VertexAddress>& path);

// Same, along the canonical center path.
Representation seed_module(const Orientation& o, int r, int b);

// A member of the one-parameter family of radius-(b+2) sink modules over the
// given length-b path: two shifted simples seeded at neighbors of p off the
// path, glued over the two-dimensional space at q to one simple behind each
// of two further neighbors of q, with gluing scalars 1, 1, 1, lambda.
// Indecomposable with pairwise different members for lambda outside {0, 1}.
Representation family_module(const Orientation& o, const std::vector<VertexAddress>& path,
                             const Scalar& lambda);

}  // namespace gkmod
