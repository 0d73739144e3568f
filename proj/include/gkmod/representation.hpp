#pragma once

#include "gkmod/matrix.hpp"
#include "gkmod/tree.hpp"

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace gkmod {

// A finite-dimensional representation of the oriented tree: exact-rational
// spaces on finitely many vertices, matrices on arrows. Arrows run from a
// source vertex to a sink vertex as the orientation dictates; arrows that are
// zero or touch a vertex without a space are simply absent from the map.
struct Representation {
    Orientation orient;
    std::map<VertexAddress, int> dims;                                 // positive entries only
    std::map<std::pair<VertexAddress, VertexAddress>, Matrix> arrows;  // keyed (from, to)

    int dim(const VertexAddress& v) const;
    // The arrow matrix from->to, materialized as zero when absent.
    Matrix arrow(const VertexAddress& from, const VertexAddress& to) const;
    bool is_zero() const { return dims.empty(); }
    long long total_dim() const;
    FiniteSubtree support() const;
};

using DimensionVector = std::map<VertexAddress, int>;

// Vertexwise matrices commuting with every arrow map. Components are stored
// for the vertices where both endpoint representations have a space; all
// others are zero.
struct Morphism {
    std::map<VertexAddress, Matrix> comps;

    // Component at v, materialized as zero with the given shape when absent.
    Matrix comp(const VertexAddress& v, int rows, int cols) const;
};

// The one-dimensional representation concentrated at x.
Representation simple(const VertexAddress& x, const Orientation& o);

// First violated structural constraint, or nullopt when well formed.
std::optional<std::string> validate(const Representation& m);

// Blockwise direct sum; throws on an orientation mismatch.
Representation direct_sum(const Representation& a, const Representation& b);

bool is_morphism(const Representation& a, const Representation& b, const Morphism& f);

// Canonical basis of Hom(a, b), read off the kernel of the commuting-square
// linear system.
std::vector<Morphism> hom_basis(const Representation& a, const Representation& b);

// End(m) with structure constants: table[i][j] holds the coefficients of
// basis[i] composed after basis[j] in the basis itself.
struct EndAlgebra {
    std::vector<Morphism> basis;
    std::vector<std::vector<std::vector<Scalar>>> table;
};
EndAlgebra end_algebra(const Representation& m);

// True iff End(m) modulo its radical is one-dimensional. The radical is the
// kernel of the trace form of the left-regular representation, which is valid
// over the rationals. Throws on the zero representation.
bool is_indecomposable(const Representation& m);

// Quotient of b by the image of the morphism f: a -> b, which must be
// injective at every vertex. Spaces pass to echelon-complement coordinates;
// arrow matrices are induced through the projections.
Representation quotient_by_image(const Representation& a, const Representation& b,
                                 const Morphism& f);

enum class IsoCheck { Isomorphic, DimensionMismatch, NotFound };

// Isomorphic is certified by an explicit invertible morphism. NotFound means
// the deterministic search through small Hom-basis combinations failed; it is
// not a proof of non-isomorphism.
IsoCheck are_isomorphic(const Representation& a, const Representation& b);

}  // namespace gkmod
