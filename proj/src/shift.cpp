#include "gkmod/shift.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "gkmod/analysis.hpp"
#include "gkmod/matrix.hpp"

namespace gkmod {

namespace {

// Vertices whose space can change under the reflection: members of the
// support with the wanted parity, plus neighbors of opposite-parity members.
// A zero space next to a nonzero one acquires the full kernel (resp.
// cokernel), so the support can grow by one layer per shift.
std::vector<VertexAddress> reflection_sites(const Representation& m, bool want_sink) {
    std::set<VertexAddress> sites;
    for (const auto& [v, d] : m.dims) {
        if (d <= 0) continue;
        const bool v_is_sink = is_sink(v, m.orient);
        if (v_is_sink == want_sink) {
            sites.insert(v);
        } else {
            for (const auto& w : neighbors(v, m.orient.n)) sites.insert(w);
        }
    }
    return {sites.begin(), sites.end()};
}

struct Reflected {
    int dim = 0;
    Matrix basis{0, 0};            // kernel basis (sigma) or projection (sigma_minus)
    std::vector<int> offsets;      // block offsets into the stacked neighbor space
};

}  // namespace

Representation sigma(const Representation& m) {
    const int n = m.orient.n;
    const auto sinks = reflection_sites(m, /*want_sink=*/true);

    std::vector<Reflected> refl(sinks.size());
#pragma omp parallel for schedule(dynamic) if (sinks.size() >= 8)
    for (std::ptrdiff_t idx = 0; idx < static_cast<std::ptrdiff_t>(sinks.size()); ++idx) {
        const VertexAddress& x = sinks[idx];
        const auto ys = neighbors(x, n);
        int total = 0;
        std::vector<int> offsets;
        offsets.reserve(ys.size());
        for (const auto& y : ys) {
            offsets.push_back(total);
            total += m.dim(y);
        }
        if (total == 0) continue;

        const int dx = m.dim(x);
        Matrix phi(static_cast<std::size_t>(dx), static_cast<std::size_t>(total));
        for (std::size_t j = 0; j < ys.size(); ++j) {
            const int dy = m.dim(ys[j]);
            if (dy == 0 || dx == 0) continue;
            const Matrix block = m.arrow(ys[j], x);
            for (std::size_t r = 0; r < block.rows(); ++r)
                for (std::size_t c = 0; c < block.cols(); ++c)
                    phi.at(r, static_cast<std::size_t>(offsets[j]) + c) = block.at(r, c);
        }
        auto rk = rank_and_kernel(phi);
        refl[idx].dim = static_cast<int>(rk.kernel.cols());
        refl[idx].basis = std::move(rk.kernel);
        refl[idx].offsets = std::move(offsets);
    }

    Representation out;
    out.orient = m.orient.flipped();
    for (const auto& [v, d] : m.dims)
        if (d > 0 && is_source(v, m.orient)) out.dims[v] = d;
    for (std::size_t idx = 0; idx < sinks.size(); ++idx)
        if (refl[idx].dim > 0) out.dims[sinks[idx]] = refl[idx].dim;

    for (std::size_t idx = 0; idx < sinks.size(); ++idx) {
        const Reflected& r = refl[idx];
        if (r.dim == 0) continue;
        const VertexAddress& x = sinks[idx];
        const auto ys = neighbors(x, n);
        for (std::size_t j = 0; j < ys.size(); ++j) {
            const int dy = m.dim(ys[j]);
            if (dy == 0) continue;
            Matrix block = r.basis.row_slice(static_cast<std::size_t>(r.offsets[j]),
                                             static_cast<std::size_t>(r.offsets[j] + dy));
            if (!block.is_zero()) out.arrows[{x, ys[j]}] = std::move(block);
        }
    }
    return out;
}

Representation sigma_minus(const Representation& m) {
    const int n = m.orient.n;
    const auto sources = reflection_sites(m, /*want_sink=*/false);

    std::vector<Reflected> refl(sources.size());
#pragma omp parallel for schedule(dynamic) if (sources.size() >= 8)
    for (std::ptrdiff_t idx = 0; idx < static_cast<std::ptrdiff_t>(sources.size()); ++idx) {
        const VertexAddress& x = sources[idx];
        const auto ys = neighbors(x, n);
        int total = 0;
        std::vector<int> offsets;
        offsets.reserve(ys.size());
        for (const auto& y : ys) {
            offsets.push_back(total);
            total += m.dim(y);
        }
        if (total == 0) continue;

        const int dx = m.dim(x);
        Matrix psi(static_cast<std::size_t>(total), static_cast<std::size_t>(dx));
        for (std::size_t j = 0; j < ys.size(); ++j) {
            const int dy = m.dim(ys[j]);
            if (dy == 0 || dx == 0) continue;
            const Matrix block = m.arrow(x, ys[j]);
            for (std::size_t r = 0; r < block.rows(); ++r)
                for (std::size_t c = 0; c < block.cols(); ++c)
                    psi.at(static_cast<std::size_t>(offsets[j]) + r, c) = block.at(r, c);
        }

        // The image of psi need not have independent generating columns, so
        // extract a basis (the pivot columns of psi) before forming the quotient.
        Matrix image(static_cast<std::size_t>(total), 0);
        if (dx > 0) {
            const std::vector<std::size_t> keep = rref(psi).pivots;
            if (!keep.empty()) {
                image = Matrix(static_cast<std::size_t>(total), keep.size());
                for (std::size_t k = 0; k < keep.size(); ++k)
                    for (std::size_t r = 0; r < psi.rows(); ++r)
                        image.at(r, k) = psi.at(r, keep[k]);
            }
        }

        const QuotientBasis qb = quotient_basis(image, static_cast<std::size_t>(total));
        refl[idx].dim = static_cast<int>(qb.complement.size());
        refl[idx].basis = qb.projection;
        refl[idx].offsets = std::move(offsets);
    }

    Representation out;
    out.orient = m.orient.flipped();
    for (const auto& [v, d] : m.dims)
        if (d > 0 && is_sink(v, m.orient)) out.dims[v] = d;
    for (std::size_t idx = 0; idx < sources.size(); ++idx)
        if (refl[idx].dim > 0) out.dims[sources[idx]] = refl[idx].dim;

    for (std::size_t idx = 0; idx < sources.size(); ++idx) {
        const Reflected& r = refl[idx];
        if (r.dim == 0) continue;
        const VertexAddress& x = sources[idx];
        const auto ys = neighbors(x, n);
        for (std::size_t j = 0; j < ys.size(); ++j) {
            const int dy = m.dim(ys[j]);
            if (dy == 0) continue;
            Matrix block = r.basis.col_slice(static_cast<std::size_t>(r.offsets[j]),
                                             static_cast<std::size_t>(r.offsets[j] + dy));
            if (!block.is_zero()) out.arrows[{ys[j], x}] = std::move(block);
        }
    }
    return out;
}

Representation shift_power(const Representation& m, int t) {
    Representation cur = m;
    for (; t > 0; --t) cur = sigma(cur);
    for (; t < 0; ++t) cur = sigma_minus(cur);
    return cur;
}

Representation tau(const Representation& m) { return sigma(sigma(m)); }

Representation projective(int t, const VertexAddress& x, const Orientation& o) {
    if (t < 0) throw std::invalid_argument("projective: negative shift count");
    const Orientation seed = (t % 2 == 0) ? o : o.flipped();
    if (!is_sink(x, seed))
        throw std::invalid_argument("projective: vertex parity does not match the shift count");
    Representation cur = simple(x, seed);
    for (int i = 0; i < t; ++i) cur = sigma_minus(cur);
    return cur;
}

Representation injective(int t, const VertexAddress& x, const Orientation& o) {
    if (t < 0) throw std::invalid_argument("injective: negative shift count");
    const Orientation seed = (t % 2 == 0) ? o : o.flipped();
    if (!is_source(x, seed))
        throw std::invalid_argument("injective: vertex parity does not match the shift count");
    Representation cur = simple(x, seed);
    for (int i = 0; i < t; ++i) cur = sigma(cur);
    return cur;
}

std::string SigmaFate::str() const {
    switch (kind) {
        case Kind::Preprojective: return "preprojective (vanishes after " + std::to_string(steps) + " forward shifts)";
        case Kind::Preinjective: return "preinjective (vanishes after " + std::to_string(steps) + " backward shifts)";
        case Kind::Regular: return "regular";
    }
    return "regular";
}

SigmaFate classify_fate(const Representation& m) {
    if (m.is_zero()) throw std::invalid_argument("classify_fate: zero module");
    if (auto err = validate(m)) throw std::invalid_argument("classify_fate: " + *err);
    if (!is_indecomposable(m)) throw std::invalid_argument("classify_fate: decomposable module");

    const Classification cls = classify(m);
    const int cap = 4 * cls.radius + 8;

    SigmaFate fate;
    if (cls.cls == ModuleClass::Flow) {
        fate.kind = SigmaFate::Kind::Regular;
        return fate;
    }

    const bool forward = (cls.cls == ModuleClass::Sink);
    Representation cur = m;
    for (int t = 1; t <= cap; ++t) {
        cur = forward ? sigma(cur) : sigma_minus(cur);
        if (cur.is_zero()) {
            fate.kind = forward ? SigmaFate::Kind::Preprojective : SigmaFate::Kind::Preinjective;
            fate.steps = t;
            return fate;
        }
        const Classification c = classify(cur);
        const bool still = forward ? (c.cls == ModuleClass::Sink) : (c.cls == ModuleClass::Source);
        if (!still) {
            fate.kind = SigmaFate::Kind::Regular;
            return fate;
        }
    }
    throw std::logic_error("classify_fate: no decision within " + std::to_string(cap) +
                           " shifts (radius " + std::to_string(cls.radius) + ")");
}

}  // namespace gkmod
