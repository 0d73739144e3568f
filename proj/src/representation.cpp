#include "gkmod/representation.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace gkmod {

int Representation::dim(const VertexAddress& v) const {
    auto it = dims.find(v);
    return it == dims.end() ? 0 : it->second;
}

Matrix Representation::arrow(const VertexAddress& from, const VertexAddress& to) const {
    auto it = arrows.find({from, to});
    if (it != arrows.end()) return it->second;
    return Matrix(dim(to), dim(from));
}

long long Representation::total_dim() const {
    long long t = 0;
    for (const auto& [v, d] : dims) t += d;
    return t;
}

FiniteSubtree Representation::support() const {
    std::vector<VertexAddress> verts;
    verts.reserve(dims.size());
    for (const auto& [v, d] : dims) verts.push_back(v);
    return FiniteSubtree{orient.n, std::move(verts)};
}

Matrix Morphism::comp(const VertexAddress& v, int rows, int cols) const {
    auto it = comps.find(v);
    if (it == comps.end()) return Matrix(rows, cols);
    if (it->second.rows() != static_cast<std::size_t>(rows) ||
        it->second.cols() != static_cast<std::size_t>(cols))
        throw std::invalid_argument("morphism component shape mismatch at '" + v.str() + "'");
    return it->second;
}

Representation simple(const VertexAddress& x, const Orientation& o) {
    check_address(x, o.n);
    Representation m;
    m.orient = o;
    m.dims[x] = 1;
    return m;
}

std::optional<std::string> validate(const Representation& m) {
    if (m.orient.n < 2) return "valence below 2";
    for (const auto& [v, d] : m.dims) {
        try {
            check_address(v, m.orient.n);
        } catch (const std::exception& e) {
            return std::string(e.what());
        }
        if (d <= 0) return "non-positive dimension at '" + v.str() + "'";
    }
    for (const auto& [key, mat] : m.arrows) {
        const auto& [from, to] = key;
        if (distance(from, to) != 1)
            return "arrow endpoints '" + from.str() + "' -> '" + to.str() + "' are not adjacent";
        if (!is_source(from, m.orient) || !is_sink(to, m.orient))
            return "arrow '" + from.str() + "' -> '" + to.str() + "' runs against the orientation";
        if (m.dim(from) == 0 || m.dim(to) == 0)
            return "arrow '" + from.str() + "' -> '" + to.str() + "' touches a zero space";
        if (mat.rows() != static_cast<std::size_t>(m.dim(to)) ||
            mat.cols() != static_cast<std::size_t>(m.dim(from)))
            return "arrow '" + from.str() + "' -> '" + to.str() + "' has the wrong shape";
    }
    return std::nullopt;
}

Representation direct_sum(const Representation& a, const Representation& b) {
    if (!(a.orient == b.orient)) throw std::invalid_argument("direct sum across orientations");
    Representation s;
    s.orient = a.orient;
    s.dims = a.dims;
    for (const auto& [v, d] : b.dims) s.dims[v] += d;
    std::set<std::pair<VertexAddress, VertexAddress>> keys;
    for (const auto& [k, mat] : a.arrows) keys.insert(k);
    for (const auto& [k, mat] : b.arrows) keys.insert(k);
    for (const auto& [from, to] : keys) {
        int ar = a.dim(to), ac = a.dim(from);
        int br = b.dim(to), bc = b.dim(from);
        Matrix block(ar + br, ac + bc);
        Matrix am = a.arrow(from, to), bm = b.arrow(from, to);
        for (int i = 0; i < ar; ++i)
            for (int j = 0; j < ac; ++j) block.at(i, j) = am.at(i, j);
        for (int i = 0; i < br; ++i)
            for (int j = 0; j < bc; ++j) block.at(ar + i, ac + j) = bm.at(i, j);
        if (!block.is_zero()) s.arrows[{from, to}] = std::move(block);
    }
    return s;
}

namespace {

// The vertices where a morphism a -> b can have a nonzero component.
std::vector<VertexAddress> common_support(const Representation& a, const Representation& b) {
    std::vector<VertexAddress> out;
    for (const auto& [v, d] : a.dims)
        if (b.dim(v) > 0) out.push_back(v);
    return out;
}

// The arrows u -> v contributing a commuting-square constraint: a has a space
// at u and b has one at v.
std::vector<std::pair<VertexAddress, VertexAddress>> constraint_edges(const Representation& a,
                                                                      const Representation& b) {
    std::vector<std::pair<VertexAddress, VertexAddress>> out;
    for (const auto& [u, du] : a.dims) {
        if (!is_source(u, a.orient)) continue;
        for (const auto& v : neighbors(u, a.orient.n))
            if (b.dim(v) > 0) out.emplace_back(u, v);
    }
    return out;
}

}  // namespace

bool is_morphism(const Representation& a, const Representation& b, const Morphism& f) {
    if (!(a.orient == b.orient)) return false;
    for (const auto& [u, v] : constraint_edges(a, b)) {
        Matrix fu = f.comp(u, b.dim(u), a.dim(u));
        Matrix fv = f.comp(v, b.dim(v), a.dim(v));
        if (!(fv * a.arrow(u, v) == b.arrow(u, v) * fu)) return false;
    }
    return true;
}

std::vector<Morphism> hom_basis(const Representation& a, const Representation& b) {
    if (!(a.orient == b.orient)) throw std::invalid_argument("hom across orientations");
    std::vector<VertexAddress> common = common_support(a, b);
    std::map<VertexAddress, std::size_t> offset;
    std::size_t unknowns = 0;
    for (const auto& v : common) {
        offset[v] = unknowns;
        unknowns += static_cast<std::size_t>(b.dim(v)) * a.dim(v);
    }
    if (unknowns == 0) return {};

    auto edges = constraint_edges(a, b);
    std::size_t rows = 0;
    for (const auto& [u, v] : edges) rows += static_cast<std::size_t>(b.dim(v)) * a.dim(u);

    // One row per entry of each commuting square F_v M - N F_u = 0, unknowns
    // being the entries of all components in row-major order.
    Matrix sys(rows, unknowns);
    std::size_t row = 0;
    for (const auto& [u, v] : edges) {
        Matrix ma = a.arrow(u, v);  // a.dim(v) x a.dim(u)
        Matrix nb = b.arrow(u, v);  // b.dim(v) x b.dim(u)
        int adu = a.dim(u), adv = a.dim(v), bdu = b.dim(u), bdv = b.dim(v);
        for (int i = 0; i < bdv; ++i)
            for (int j = 0; j < adu; ++j, ++row) {
                if (adv > 0)
                    for (int k = 0; k < adv; ++k)
                        if (sgn(ma.at(k, j)) != 0)
                            sys.at(row, offset.at(v) + static_cast<std::size_t>(i) * adv + k) +=
                                ma.at(k, j);
                if (bdu > 0)
                    for (int l = 0; l < bdu; ++l)
                        if (sgn(nb.at(i, l)) != 0)
                            sys.at(row, offset.at(u) + static_cast<std::size_t>(l) * adu + j) -=
                                nb.at(i, l);
            }
    }

    RankKernel rk = rank_and_kernel(sys);
    std::vector<Morphism> basis;
    for (std::size_t col = 0; col < rk.kernel.cols(); ++col) {
        Morphism f;
        for (const auto& v : common) {
            int r = b.dim(v), c = a.dim(v);
            Matrix comp(r, c);
            for (int i = 0; i < r; ++i)
                for (int j = 0; j < c; ++j)
                    comp.at(i, j) = rk.kernel.at(offset.at(v) + static_cast<std::size_t>(i) * c + j, col);
            f.comps[v] = std::move(comp);
        }
        basis.push_back(std::move(f));
    }
    return basis;
}

namespace {

// Flatten a morphism over the common-support layout used by hom_basis.
Matrix flatten(const Representation& a, const Representation& b,
               const std::vector<Morphism>& ms) {
    std::vector<VertexAddress> common = common_support(a, b);
    std::size_t unknowns = 0;
    for (const auto& v : common) unknowns += static_cast<std::size_t>(b.dim(v)) * a.dim(v);
    Matrix out(unknowns, ms.size());
    for (std::size_t col = 0; col < ms.size(); ++col) {
        std::size_t pos = 0;
        for (const auto& v : common) {
            Matrix comp = ms[col].comp(v, b.dim(v), a.dim(v));
            for (std::size_t i = 0; i < comp.rows(); ++i)
                for (std::size_t j = 0; j < comp.cols(); ++j) out.at(pos++, col) = comp.at(i, j);
        }
    }
    return out;
}

Morphism compose(const Representation& m, const Morphism& g, const Morphism& f) {
    Morphism h;
    for (const auto& [v, d] : m.dims) {
        Matrix gv = g.comp(v, d, d), fv = f.comp(v, d, d);
        h.comps[v] = gv * fv;
    }
    return h;
}

}  // namespace

EndAlgebra end_algebra(const Representation& m) {
    if (m.is_zero()) throw std::invalid_argument("endomorphisms of the zero representation");
    EndAlgebra e;
    e.basis = hom_basis(m, m);
    const std::size_t k = e.basis.size();
    Matrix bmat = flatten(m, m, e.basis);
    std::vector<Morphism> prods;
    prods.reserve(k * k);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) prods.push_back(compose(m, e.basis[i], e.basis[j]));
    auto coeffs = solve(bmat, flatten(m, m, prods));
    if (!coeffs) throw std::logic_error("endomorphism composition left the Hom space");
    e.table.assign(k, std::vector<std::vector<Scalar>>(k, std::vector<Scalar>(k)));
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j)
            for (std::size_t c = 0; c < k; ++c) e.table[i][j][c] = coeffs->at(c, i * k + j);
    return e;
}

bool is_indecomposable(const Representation& m) {
    if (m.is_zero()) throw std::invalid_argument("indecomposability of the zero representation");
    EndAlgebra e = end_algebra(m);
    const std::size_t k = e.basis.size();
    if (k == 1) return true;
    // Left multiplication operators, then the Gram matrix of the trace form.
    std::vector<Matrix> left(k, Matrix(k, k));
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j)
            for (std::size_t c = 0; c < k; ++c) left[i].at(c, j) = e.table[i][j][c];
    Matrix gram(k, k);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) {
            Matrix p = left[i] * left[j];
            Scalar tr = 0;
            for (std::size_t c = 0; c < k; ++c) tr += p.at(c, c);
            gram.at(i, j) = tr;
        }
    return rank(gram) == 1;
}

Representation quotient_by_image(const Representation& a, const Representation& b,
                                 const Morphism& f) {
    if (!(a.orient == b.orient)) throw std::invalid_argument("quotient across orientations");
    if (!is_morphism(a, b, f)) throw std::invalid_argument("quotient by a non-morphism");
    for (const auto& [v, d] : a.dims) {
        Matrix fv = f.comp(v, b.dim(v), d);
        if (rank(fv) != static_cast<std::size_t>(d))
            throw std::invalid_argument("quotient morphism is not injective at '" + v.str() + "'");
    }
    // Vertexwise quotient data; vertices outside the source support keep their
    // full space through an identity projection.
    std::map<VertexAddress, QuotientBasis> qb;
    for (const auto& [v, d] : b.dims) qb[v] = quotient_basis(f.comp(v, d, a.dim(v)), d);

    Representation q;
    q.orient = b.orient;
    for (const auto& [v, d] : b.dims) {
        std::size_t nd = qb.at(v).complement.size();
        if (nd > 0) q.dims[v] = static_cast<int>(nd);
    }
    for (const auto& [key, mat] : b.arrows) {
        const auto& [from, to] = key;
        if (q.dim(from) == 0 || q.dim(to) == 0) continue;
        const QuotientBasis& qf = qb.at(from);
        const QuotientBasis& qt = qb.at(to);
        Matrix induced = qt.projection * mat * complement_section(qf.complement, b.dim(from));
        if (!induced.is_zero()) q.arrows[key] = std::move(induced);
    }
    return q;
}

IsoCheck are_isomorphic(const Representation& a, const Representation& b) {
    if (!(a.orient == b.orient)) return IsoCheck::DimensionMismatch;
    if (a.dims != b.dims) return IsoCheck::DimensionMismatch;
    if (a.is_zero()) return IsoCheck::Isomorphic;

    auto invertible = [&](const Morphism& f) {
        for (const auto& [v, d] : a.dims) {
            Matrix fv = f.comp(v, d, d);
            if (rank(fv) != static_cast<std::size_t>(d)) return false;
        }
        return true;
    };

    std::vector<Morphism> basis = hom_basis(a, b);
    for (const auto& f : basis)
        if (invertible(f)) return IsoCheck::Isomorphic;
    // Deterministic sweep through small combinations.
    const Scalar weights[] = {1, -1, 2, -2, Scalar(1, 2)};
    for (std::size_t i = 0; i < basis.size(); ++i)
        for (std::size_t j = i + 1; j < basis.size(); ++j)
            for (const Scalar& w : weights) {
                Morphism g;
                for (const auto& [v, d] : a.dims) {
                    Matrix gi = basis[i].comp(v, d, d), gj = basis[j].comp(v, d, d);
                    Matrix sum(d, d);
                    for (int r = 0; r < d; ++r)
                        for (int c = 0; c < d; ++c) sum.at(r, c) = gi.at(r, c) + w * gj.at(r, c);
                    g.comps[v] = std::move(sum);
                }
                if (invertible(g)) return IsoCheck::Isomorphic;
            }
    return IsoCheck::NotFound;
}

}  // namespace gkmod
