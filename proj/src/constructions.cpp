#include "gkmod/constructions.hpp"

#include <algorithm>
#include <stdexcept>

#include "gkmod/shift.hpp"

namespace gkmod {

namespace {

// The path must be the reduced walk between its ends and its start must have
// the parity that makes the distance-r vertices sinks.
void check_seed_path(const Orientation& o, int r, const std::vector<VertexAddress>& path,
                     const char* who) {
    if (r < 1) throw std::invalid_argument(std::string(who) + ": radius must be positive");
    if (path.empty()) throw std::invalid_argument(std::string(who) + ": empty path");
    for (const auto& v : path) check_address(v, o.n);
    const auto [dist, geodesic] = distance_and_path(path.front(), path.back());
    if (geodesic != path)
        throw std::invalid_argument(std::string(who) + ": vertex list is not a path");
    const int b = static_cast<int>(path.size()) - 1;
    if (b > r)
        throw std::invalid_argument(std::string(who) + ": path length " + std::to_string(b) +
                                    " exceeds radius " + std::to_string(r));
    if (is_sink(path.front(), o) != (r % 2 == 0))
        throw std::invalid_argument(std::string(who) + ": the path must start at a " +
                                    (r % 2 == 0 ? "sink" : "source") + " for radius " +
                                    std::to_string(r));
}

// From `cur`, repeatedly step to the first neighbor different from the
// vertex just left. Never backtracks, so it prolongs a path to a genuine
// longer path.
VertexAddress leftmost_extension(int n, VertexAddress prev, VertexAddress cur, int steps) {
    for (int i = 0; i < steps; ++i) {
        for (const auto& w : neighbors(cur, n)) {
            if (w == prev) continue;
            prev = cur;
            cur = w;
            break;
        }
    }
    return cur;
}

Morphism single_hom(const Representation& a, const Representation& b, const char* who) {
    auto basis = hom_basis(a, b);
    if (basis.size() != 1)
        throw std::logic_error(std::string(who) + ": expected a one-dimensional Hom space, got " +
                               std::to_string(basis.size()));
    return basis.front();
}

}  // namespace

std::vector<VertexAddress> canonical_center_path(const Orientation& o, int r, int b) {
    if (r < 1) throw std::invalid_argument("canonical_center_path: radius must be positive");
    if (b < 0 || b > r)
        throw std::invalid_argument("canonical_center_path: need 0 <= b <= r");
    VertexAddress a0;
    if (o.sinks_even != (r % 2 == 0)) a0 = VertexAddress{{0}};
    std::vector<VertexAddress> path{a0};
    for (int i = 0; i < b; ++i)
        path.push_back(path.back().is_root() ? path.back().child(0) : path.back().child(1));
    return path;
}

Representation case_i(const Orientation& o, int r, const std::vector<VertexAddress>& path) {
    check_seed_path(o, r, path, "case_i");
    if (static_cast<int>(path.size()) - 1 != r)
        throw std::invalid_argument("case_i: needs a path of full length r");
    const VertexAddress& p = path.front();
    const VertexAddress& q = path.back();

    const Representation big = projective(r, p, o);
    const Representation sub = simple(q, o);
    return quotient_by_image(sub, big, single_hom(sub, big, "case_i"));
}

Representation case_ii(const Orientation& o, int r, const std::vector<VertexAddress>& path) {
    check_seed_path(o, r, path, "case_ii");
    const int b = static_cast<int>(path.size()) - 1;
    if (b >= r) throw std::invalid_argument("case_ii: needs b < r");
    if (o.n == 3 && b == 0 && r == 1)
        throw std::invalid_argument("case_ii: the quotient for valence 3 with b = 0, r = 1 "
                                    "is a flow module; use case_iii");
    const VertexAddress& p = path.front();
    const VertexAddress& q = path.back();

    // Two arms leaving q by different edges, both avoiding the path edge, so
    // that each arm prolongs the path to a genuine length-r walk from p.
    std::vector<VertexAddress> starts;
    for (const auto& w : neighbors(q, o.n)) {
        if (b >= 1 && w == path[static_cast<std::size_t>(b) - 1]) continue;
        starts.push_back(w);
        if (starts.size() == 2) break;
    }
    const VertexAddress x = leftmost_extension(o.n, q, starts[0], r - b - 1);
    const VertexAddress xp = leftmost_extension(o.n, q, starts[1], r - b - 1);
    if (distance(p, x) != r || distance(p, xp) != r)
        throw std::logic_error("case_ii: arm tips are not at distance r from p");

    const Representation big = projective(r, p, o);
    const Representation sx = simple(x, o);
    const Representation sxp = simple(xp, o);
    const Morphism fx = single_hom(sx, big, "case_ii");
    const Morphism fxp = single_hom(sxp, big, "case_ii");

    const Representation pair = direct_sum(sx, sxp);
    Morphism f;
    f.comps[x] = fx.comp(x, big.dim(x), 1);
    f.comps[xp] = fxp.comp(xp, big.dim(xp), 1);
    return quotient_by_image(pair, big, f);
}

Representation case_iii(const Orientation& o, const VertexAddress& p) {
    if (o.n < 3) throw std::invalid_argument("case_iii: needs valence at least 3");
    check_address(p, o.n);
    if (!is_source(p, o)) throw std::invalid_argument("case_iii: p must be a source");

    Representation m;
    m.orient = o;
    m.dims[p] = 2;
    const auto ys = neighbors(p, o.n);
    for (std::size_t j = 0; j < ys.size(); ++j) {
        m.dims[ys[j]] = 1;
        Matrix row(1, 2);
        if (j == 0) {
            row.at(0, 0) = 1;
        } else if (j == 1) {
            row.at(0, 1) = 1;
        } else {
            row.at(0, 0) = 1;
            row.at(0, 1) = static_cast<long>(j) - 1;
        }
        m.arrows[{p, ys[j]}] = std::move(row);
    }
    return m;
}

Representation seed_module(const Orientation& o, int r,
                           const std::vector<VertexAddress>& path) {
    check_seed_path(o, r, path, "seed_module");
    const int b = static_cast<int>(path.size()) - 1;
    if (b == r) return case_i(o, r, path);
    if (o.n == 3 && b == 0 && r == 1) return case_iii(o, path.front());
    return case_ii(o, r, path);
}

Representation seed_module(const Orientation& o, int r, int b) {
    return seed_module(o, r, canonical_center_path(o, r, b));
}

Representation family_module(const Orientation& o, const std::vector<VertexAddress>& path,
                             const Scalar& lambda) {
    if (path.empty()) throw std::invalid_argument("family_module: empty path");
    for (const auto& v : path) check_address(v, o.n);
    const auto [dist, geodesic] = distance_and_path(path.front(), path.back());
    if (geodesic != path)
        throw std::invalid_argument("family_module: vertex list is not a path");
    if (lambda == 0 || lambda == 1)
        throw std::invalid_argument("family_module: lambda 0 and 1 give decomposable gluings");

    const int b = static_cast<int>(path.size()) - 1;
    const VertexAddress& p = path.front();
    const VertexAddress& q = path.back();
    if (is_sink(p, o) != (b % 2 == 0))
        throw std::invalid_argument(std::string("family_module: the path must start at a ") +
                                    (b % 2 == 0 ? "sink" : "source") + " for length " +
                                    std::to_string(b));

    // Two neighbors of p off the path carry the shifted simples; two further
    // neighbors of q past the path carry the glued simples.
    std::vector<VertexAddress> us;
    for (const auto& w : neighbors(p, o.n)) {
        if (b >= 1 && w == path[1]) continue;
        us.push_back(w);
        if (us.size() == 2) break;
    }
    std::vector<VertexAddress> xs;
    for (const auto& w : neighbors(q, o.n)) {
        if (b >= 1 && w == path[static_cast<std::size_t>(b) - 1]) continue;
        if (b == 0 && (w == us[0] || w == us[1])) continue;
        xs.push_back(w);
        if (xs.size() == 2) break;
    }
    if (us.size() < 2 || xs.size() < 2)
        throw std::invalid_argument("family_module: needs valence at least 4 when the path "
                                    "is a single vertex");

    Representation m = direct_sum(projective(b + 1, us[0], o), projective(b + 1, us[1], o));
    if (m.dim(q) != 2)
        throw std::logic_error("family_module: expected a two-dimensional space at q");
    if (m.dim(xs[0]) != 0 || m.dim(xs[1]) != 0)
        throw std::logic_error("family_module: gluing vertices already in the support");

    m.dims[xs[0]] = 1;
    m.dims[xs[1]] = 1;
    Matrix glue(2, 1), glue_p(2, 1);
    glue.at(0, 0) = 1;
    glue.at(1, 0) = 1;
    glue_p.at(0, 0) = 1;
    glue_p.at(1, 0) = lambda;
    m.arrows[{xs[0], q}] = std::move(glue);
    m.arrows[{xs[1], q}] = std::move(glue_p);
    return m;
}

}  // namespace gkmod
