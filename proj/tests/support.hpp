#pragma once

// Brute-force reference computations for the test binaries. These are kept
// deliberately naive and, where they duplicate library functionality (address
// arithmetic, adjacency), implemented from scratch so that the two sides can
// disagree.

#include <gkmod/matrix.hpp>
#include <gkmod/representation.hpp>
#include <gkmod/tree.hpp>

#include <algorithm>
#include <cstddef>
#include <queue>
#include <random>
#include <set>
#include <stdexcept>
#include <vector>

namespace testsupport {

// ---------------------------------------------------------------------------
// Exact linear algebra, the slow way.

// Determinant by Laplace expansion along the first row.
inline gkmod::Scalar det_laplace(const gkmod::Matrix& a) {
    if (a.rows() != a.cols()) throw std::invalid_argument("det of a non-square matrix");
    const std::size_t n = a.rows();
    if (n == 0) return 1;
    if (n == 1) return a.at(0, 0);
    gkmod::Scalar acc = 0;
    for (std::size_t j = 0; j < n; ++j) {
        if (a.at(0, j) == 0) continue;
        gkmod::Matrix minor(n - 1, n - 1);
        for (std::size_t r = 1; r < n; ++r) {
            std::size_t cc = 0;
            for (std::size_t c = 0; c < n; ++c)
                if (c != j) minor.at(r - 1, cc++) = a.at(r, c);
        }
        gkmod::Scalar term = a.at(0, j) * det_laplace(minor);
        if (j % 2 == 0)
            acc += term;
        else
            acc -= term;
    }
    return acc;
}

// Lexicographic successor of a k-subset of {0..n-1}; false once exhausted.
inline bool next_subset(std::vector<std::size_t>& c, std::size_t n) {
    const std::size_t k = c.size();
    std::size_t i = k;
    while (i-- > 0) {
        if (c[i] + (k - i) < n) {
            ++c[i];
            for (std::size_t j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
            return true;
        }
    }
    return false;
}

// Rank as the size of the largest square submatrix with nonzero determinant.
inline std::size_t rank_by_minors(const gkmod::Matrix& a) {
    for (std::size_t k = std::min(a.rows(), a.cols()); k >= 1; --k) {
        std::vector<std::size_t> rs(k);
        for (std::size_t i = 0; i < k; ++i) rs[i] = i;
        do {
            std::vector<std::size_t> cs(k);
            for (std::size_t i = 0; i < k; ++i) cs[i] = i;
            do {
                gkmod::Matrix sub(k, k);
                for (std::size_t i = 0; i < k; ++i)
                    for (std::size_t j = 0; j < k; ++j) sub.at(i, j) = a.at(rs[i], cs[j]);
                if (det_laplace(sub) != 0) return k;
            } while (next_subset(cs, a.cols()));
        } while (next_subset(rs, a.rows()));
    }
    return 0;
}

// ---------------------------------------------------------------------------
// Tree facts by breadth-first search, with adjacency read directly off the
// label sequences: two addresses are neighbors iff one extends the other by
// exactly one label.

inline bool adjacent_addresses(const gkmod::VertexAddress& u, const gkmod::VertexAddress& v) {
    const auto& a = u.labels;
    const auto& b = v.labels;
    if (a.size() + 1 == b.size()) return std::equal(a.begin(), a.end(), b.begin());
    if (b.size() + 1 == a.size()) return std::equal(b.begin(), b.end(), a.begin());
    return false;
}

struct BruteTreeFacts {
    int diameter = 0;
    std::vector<std::vector<int>> dist;  // all-pairs distances, t.verts order
    std::vector<int> ecc;                // eccentricity per vertex
    // The midpoint set of every maximal-length path, each sorted; a tree has
    // a well-defined center exactly when all of these agree.
    std::set<std::vector<gkmod::VertexAddress>> midpoint_sets;
};

inline BruteTreeFacts brute_tree_facts(const gkmod::FiniteSubtree& t) {
    const auto& vs = t.verts;
    const std::size_t n = vs.size();
    if (n == 0) throw std::invalid_argument("brute_tree_facts: empty subtree");

    std::vector<std::vector<std::size_t>> adj(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (adjacent_addresses(vs[i], vs[j])) {
                adj[i].push_back(j);
                adj[j].push_back(i);
            }

    BruteTreeFacts out;
    out.dist.assign(n, std::vector<int>(n, -1));
    std::vector<std::vector<std::size_t>> par(n, std::vector<std::size_t>(n, 0));
    for (std::size_t s = 0; s < n; ++s) {
        out.dist[s][s] = 0;
        std::queue<std::size_t> q;
        q.push(s);
        while (!q.empty()) {
            const std::size_t u = q.front();
            q.pop();
            for (std::size_t w : adj[u])
                if (out.dist[s][w] < 0) {
                    out.dist[s][w] = out.dist[s][u] + 1;
                    par[s][w] = u;
                    q.push(w);
                }
        }
        for (std::size_t w = 0; w < n; ++w)
            if (out.dist[s][w] < 0)
                throw std::invalid_argument("brute_tree_facts: disconnected subtree");
    }

    out.ecc.assign(n, 0);
    for (std::size_t s = 0; s < n; ++s)
        out.ecc[s] = *std::max_element(out.dist[s].begin(), out.dist[s].end());
    out.diameter = *std::max_element(out.ecc.begin(), out.ecc.end());

    const int d = out.diameter;
    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t w = 0; w < n; ++w) {
            if (out.dist[u][w] != d || vs[u] > vs[w]) continue;
            // Walk w back to u along the BFS parents rooted at u.
            std::vector<std::size_t> path{w};
            while (path.back() != u) path.push_back(par[u][path.back()]);
            std::reverse(path.begin(), path.end());
            std::vector<gkmod::VertexAddress> mid;
            if (d % 2 == 0) {
                mid.push_back(vs[path[static_cast<std::size_t>(d) / 2]]);
            } else {
                mid.push_back(vs[path[static_cast<std::size_t>(d - 1) / 2]]);
                mid.push_back(vs[path[static_cast<std::size_t>(d + 1) / 2]]);
                std::sort(mid.begin(), mid.end());
            }
            out.midpoint_sets.insert(mid);
        }
    return out;
}

// A random connected subtree of T(n) grown by repeatedly attaching a fresh
// neighbor of a uniformly chosen member, using its own label arithmetic.
inline gkmod::FiniteSubtree random_subtree(int n, std::size_t target, std::mt19937& rng) {
    std::set<gkmod::VertexAddress> got;
    std::vector<gkmod::VertexAddress> pool;
    got.insert(gkmod::VertexAddress{});
    pool.push_back(gkmod::VertexAddress{});
    while (got.size() < target) {
        const gkmod::VertexAddress& v = pool[rng() % pool.size()];
        std::vector<gkmod::VertexAddress> cand;
        if (!v.labels.empty()) {
            gkmod::VertexAddress p{v.labels};
            p.labels.pop_back();
            cand.push_back(std::move(p));
        }
        const int first = v.labels.empty() ? 0 : 1;
        for (int l = first; l < n; ++l) {
            gkmod::VertexAddress c{v.labels};
            c.labels.push_back(l);
            cand.push_back(std::move(c));
        }
        const gkmod::VertexAddress& pick = cand[rng() % cand.size()];
        if (got.insert(pick).second) pool.push_back(pick);
    }
    return gkmod::make_subtree(n, {got.begin(), got.end()});
}

// ---------------------------------------------------------------------------
// Exhaustive idempotent search in End(m) over a small coefficient alphabet.
// Whenever m splits, the projection onto a summand is an idempotent whose
// coordinates in the canonical Hom basis lie in {0, 1}, so the grid cannot
// miss it.

inline std::vector<gkmod::Scalar> identity_coefficients(const gkmod::Representation& m,
                                                        const gkmod::EndAlgebra& alg) {
    std::size_t flat = 0;
    for (const auto& [v, d] : m.dims) flat += static_cast<std::size_t>(d) * d;
    gkmod::Matrix sys(flat, alg.basis.size());
    gkmod::Matrix rhs(flat, 1);
    std::size_t row = 0;
    for (const auto& [v, d] : m.dims) {
        for (int r = 0; r < d; ++r)
            for (int c = 0; c < d; ++c) {
                for (std::size_t k = 0; k < alg.basis.size(); ++k)
                    sys.at(row, k) = alg.basis[k].comp(v, d, d).at(r, c);
                if (r == c) rhs.at(row, 0) = 1;
                ++row;
            }
    }
    const auto sol = gkmod::solve(sys, rhs);
    if (!sol) throw std::logic_error("identity_coefficients: End(m) lost its identity");
    std::vector<gkmod::Scalar> out(alg.basis.size());
    for (std::size_t k = 0; k < alg.basis.size(); ++k) out[k] = sol->at(k, 0);
    return out;
}

inline bool grid_finds_proper_idempotent(const gkmod::Representation& m) {
    const gkmod::EndAlgebra alg = gkmod::end_algebra(m);
    const std::size_t k = alg.basis.size();
    if (k > 6) throw std::invalid_argument("grid_finds_proper_idempotent: End too large");
    const std::vector<gkmod::Scalar> id = identity_coefficients(m, alg);

    const std::vector<gkmod::Scalar> alphabet = {
        gkmod::Scalar(0),     gkmod::Scalar(1),     gkmod::Scalar(-1),
        gkmod::Scalar(1, 2),  gkmod::Scalar(-1, 2), gkmod::Scalar(2)};

    std::vector<std::size_t> digit(k, 0);
    std::vector<gkmod::Scalar> c(k), sq(k);
    for (;;) {
        bool all_zero = true;
        for (std::size_t i = 0; i < k; ++i) {
            c[i] = alphabet[digit[i]];
            if (c[i] != 0) all_zero = false;
        }
        if (!all_zero && c != id) {
            for (std::size_t t = 0; t < k; ++t) sq[t] = 0;
            for (std::size_t i = 0; i < k; ++i) {
                if (c[i] == 0) continue;
                for (std::size_t j = 0; j < k; ++j) {
                    if (c[j] == 0) continue;
                    const gkmod::Scalar cij = c[i] * c[j];
                    for (std::size_t t = 0; t < k; ++t) sq[t] += cij * alg.table[i][j][t];
                }
            }
            if (sq == c) return true;
        }
        std::size_t pos = 0;
        while (pos < k && ++digit[pos] == alphabet.size()) digit[pos++] = 0;
        if (pos == k) return false;
    }
}

}  // namespace testsupport
