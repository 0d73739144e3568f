#pragma once

#include "gkmod/representation.hpp"

namespace gkmod {

// Simultaneous reflection at all sinks: the space at a sink x becomes the
// kernel of the combined map from the neighbor spaces into x, the new arrows
// out of x are the block rows of the kernel basis, sources keep their spaces,
// and the orientation flips. Kills every simple concentrated at a sink.
Representation sigma(const Representation& m);

// Left adjoint: cokernels at all sources, block columns of the projection as
// the new arrows in, sinks keep their spaces, orientation flips.
Representation sigma_minus(const Representation& m);

// sigma iterated t times (t > 0), sigma_minus iterated -t times (t < 0).
Representation shift_power(const Representation& m, int t);

// tau = sigma^2, the orientation-preserving translation.
Representation tau(const Representation& m);

// P_t(x): t backward shifts of the simple at x, which must be a sink of the
// orientation the seed lives in (o itself for even t, the flip for odd t).
// The result lives in o and is supported on the radius-t ball around x.
Representation projective(int t, const VertexAddress& x, const Orientation& o);

// I_t(x): t forward shifts of the simple at a source x; dual to projective.
Representation injective(int t, const VertexAddress& x, const Orientation& o);

struct SigmaFate {
    enum class Kind { Preprojective, Preinjective, Regular };
    Kind kind = Kind::Regular;
    int steps = 0;  // minimal t >= 1 with the t-th shift vanishing, for the finite kinds

    std::string str() const;
};

// Forward shifts of a sink module either die (preprojective) or reach a flow
// or source module and then survive forever; backward shifts of a source
// module behave dually. Throws on zero or decomposable input.
SigmaFate classify_fate(const Representation& m);

}  // namespace gkmod
