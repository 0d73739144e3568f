#include "gkmod/tree.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace gkmod {

VertexAddress VertexAddress::parent() const {
    if (labels.empty()) throw std::logic_error("root has no parent");
    VertexAddress p{labels};
    p.labels.pop_back();
    return p;
}

VertexAddress VertexAddress::child(int label) const {
    VertexAddress c{labels};
    c.labels.push_back(label);
    return c;
}

std::string VertexAddress::str() const {
    std::string s;
    for (std::size_t i = 0; i < labels.size(); ++i) {
        if (i) s += '.';
        s += std::to_string(labels[i]);
    }
    return s;
}

VertexAddress VertexAddress::parse(const std::string& s) {
    VertexAddress v;
    if (s.empty()) return v;
    std::size_t pos = 0;
    while (pos <= s.size()) {
        std::size_t dot = s.find('.', pos);
        std::string tok = s.substr(pos, dot == std::string::npos ? std::string::npos : dot - pos);
        if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos)
            throw std::invalid_argument("bad vertex address: '" + s + "'");
        v.labels.push_back(std::stoi(tok));
        if (dot == std::string::npos) break;
        pos = dot + 1;
    }
    return v;
}

bool is_sink(const VertexAddress& v, const Orientation& o) {
    bool even = v.depth() % 2 == 0;
    return even == o.sinks_even;
}

bool is_source(const VertexAddress& v, const Orientation& o) { return !is_sink(v, o); }

void check_address(const VertexAddress& v, int n) {
    if (n < 2) throw std::invalid_argument("valence must be at least 2");
    for (std::size_t i = 0; i < v.labels.size(); ++i) {
        int lo = i == 0 ? 0 : 1;
        if (v.labels[i] < lo || v.labels[i] >= n)
            throw std::invalid_argument("address label out of range for valence " +
                                        std::to_string(n) + ": '" + v.str() + "'");
    }
}

std::vector<VertexAddress> neighbors(const VertexAddress& v, int n) {
    check_address(v, n);
    std::vector<VertexAddress> out;
    out.reserve(n);
    if (v.is_root()) {
        for (int l = 0; l < n; ++l) out.push_back(v.child(l));
    } else {
        out.push_back(v.parent());
        for (int l = 1; l < n; ++l) out.push_back(v.child(l));
    }
    return out;
}

namespace {

std::size_t common_prefix(const VertexAddress& u, const VertexAddress& v) {
    std::size_t k = 0;
    while (k < u.labels.size() && k < v.labels.size() && u.labels[k] == v.labels[k]) ++k;
    return k;
}

}  // namespace

int distance(const VertexAddress& u, const VertexAddress& v) {
    std::size_t k = common_prefix(u, v);
    return static_cast<int>(u.labels.size() + v.labels.size() - 2 * k);
}

std::pair<int, std::vector<VertexAddress>> distance_and_path(const VertexAddress& u,
                                                             const VertexAddress& v) {
    std::size_t k = common_prefix(u, v);
    std::vector<VertexAddress> path;
    VertexAddress cur = u;
    while (cur.labels.size() > k) {
        path.push_back(cur);
        cur = cur.parent();
    }
    path.push_back(cur);  // the meeting vertex
    for (std::size_t i = k; i < v.labels.size(); ++i) {
        cur = cur.child(v.labels[i]);
        path.push_back(cur);
    }
    return {static_cast<int>(path.size()) - 1, path};
}

std::string Center::str() const {
    if (at.size() == 1) return at[0].str();
    return "{" + at[0].str() + "," + at[1].str() + "}";
}

bool FiniteSubtree::contains(const VertexAddress& v) const {
    return std::binary_search(verts.begin(), verts.end(), v);
}

bool FiniteSubtree::connected() const {
    if (verts.empty()) return false;
    std::set<VertexAddress> seen;
    std::vector<VertexAddress> stack{verts.front()};
    seen.insert(verts.front());
    while (!stack.empty()) {
        VertexAddress v = stack.back();
        stack.pop_back();
        for (const auto& w : neighbors(v, n))
            if (contains(w) && seen.insert(w).second) stack.push_back(w);
    }
    return seen.size() == verts.size();
}

std::vector<VertexAddress> FiniteSubtree::leaves() const {
    std::vector<VertexAddress> out;
    for (const auto& v : verts) {
        int deg = 0;
        for (const auto& w : neighbors(v, n))
            if (contains(w)) ++deg;
        if (deg <= 1) out.push_back(v);
    }
    return out;
}

FiniteSubtree make_subtree(int n, std::vector<VertexAddress> verts) {
    for (const auto& v : verts) check_address(v, n);
    std::sort(verts.begin(), verts.end());
    verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
    return FiniteSubtree{n, std::move(verts)};
}

FiniteSubtree ball(const std::vector<VertexAddress>& centers, int r, int n) {
    if (centers.empty() || centers.size() > 2)
        throw std::invalid_argument("ball centers must be one vertex or an adjacent pair");
    if (centers.size() == 2 && distance(centers[0], centers[1]) != 1)
        throw std::invalid_argument("two-vertex ball center must be an edge");
    for (const auto& c : centers) check_address(c, n);
    std::set<VertexAddress> seen(centers.begin(), centers.end());
    std::vector<VertexAddress> frontier(seen.begin(), seen.end());
    for (int step = 0; step < r; ++step) {
        std::vector<VertexAddress> next;
        for (const auto& v : frontier)
            for (const auto& w : neighbors(v, n))
                if (seen.insert(w).second) next.push_back(w);
        frontier = std::move(next);
    }
    return FiniteSubtree{n, std::vector<VertexAddress>(seen.begin(), seen.end())};
}

namespace {

void require_usable(const FiniteSubtree& t) {
    if (t.verts.empty()) throw std::invalid_argument("empty subtree");
    if (!t.connected()) throw std::invalid_argument("disconnected subtree");
}

}  // namespace

namespace {

// Diameter endpoints are leaves, so the diameter is the largest leaf-to-leaf
// distance. The pair scan is embarrassingly parallel.
int leaf_pair_diameter(const std::vector<VertexAddress>& lv) {
    int diam = 0;
    const long long m = static_cast<long long>(lv.size());
#pragma omp parallel for schedule(static) reduction(max : diam) if (m > 64)
    for (long long i = 0; i < m; ++i)
        for (long long j = i + 1; j < m; ++j) {
            int d = distance(lv[i], lv[j]);
            if (d > diam) diam = d;
        }
    return diam;
}

}  // namespace

std::vector<std::vector<VertexAddress>> subtree_diameter_paths(const FiniteSubtree& t) {
    require_usable(t);
    if (t.verts.size() == 1) return {{t.verts.front()}};
    const std::vector<VertexAddress> lv = t.leaves();
    const int diam = leaf_pair_diameter(lv);
    std::vector<std::vector<VertexAddress>> paths;
    for (std::size_t i = 0; i < lv.size(); ++i)
        for (std::size_t j = i + 1; j < lv.size(); ++j)
            if (distance(lv[i], lv[j]) == diam) {
                const VertexAddress& a = std::min(lv[i], lv[j]);
                const VertexAddress& b = std::max(lv[i], lv[j]);
                paths.push_back(distance_and_path(a, b).second);
            }
    std::sort(paths.begin(), paths.end());
    return paths;
}

long long subtree_diameter_path_count(const FiniteSubtree& t) {
    require_usable(t);
    if (t.verts.size() == 1) return 1;
    const std::vector<VertexAddress> lv = t.leaves();
    const int diam = leaf_pair_diameter(lv);
    long long count = 0;
    const long long m = static_cast<long long>(lv.size());
#pragma omp parallel for schedule(static) reduction(+ : count) if (m > 64)
    for (long long i = 0; i < m; ++i)
        for (long long j = i + 1; j < m; ++j)
            if (distance(lv[i], lv[j]) == diam) ++count;
    return count;
}

CenterRadius subtree_center_radius(const FiniteSubtree& t) {
    require_usable(t);
    if (t.verts.size() == 1) return CenterRadius{Center{{t.verts.front()}}, 0, 0};
    const std::vector<VertexAddress> lv = t.leaves();
    const int diam = leaf_pair_diameter(lv);
    std::vector<VertexAddress> path;
    for (std::size_t i = 0; i < lv.size() && path.empty(); ++i)
        for (std::size_t j = i + 1; j < lv.size(); ++j)
            if (distance(lv[i], lv[j]) == diam) {
                path = distance_and_path(lv[i], lv[j]).second;
                break;
            }
    const int radius = diam / 2;
    Center center;
    if (diam % 2 == 0) {
        center.at = {path[static_cast<std::size_t>(radius)]};
    } else {
        center.at = {path[static_cast<std::size_t>(radius)],
                     path[static_cast<std::size_t>(radius) + 1]};
        std::sort(center.at.begin(), center.at.end());
    }
    return CenterRadius{center, radius, diam};
}

std::vector<VertexAddress> subtree_boundary(const FiniteSubtree& t, const Center& center,
                                            int radius) {
    if (center.at.empty() || center.at.size() > 2)
        throw std::invalid_argument("boundary center must be one vertex or an edge");
    std::vector<VertexAddress> out;
    for (const auto& v : t.verts) {
        int d = distance(v, center.at.front());
        for (std::size_t k = 1; k < center.at.size(); ++k)
            d = std::min(d, distance(v, center.at[k]));
        if (d == radius) out.push_back(v);
    }
    return out;
}

long long ball_vertex_count(int n, int r) {
    if (r < 0) throw std::invalid_argument("negative radius");
    long long total = 1, shell = n;
    for (int i = 1; i <= r; ++i) {
        total += shell;
        shell *= n - 1;
    }
    return total;
}

long long ball_boundary_count(int n, int r) {
    if (r < 1) throw std::invalid_argument("boundary count needs radius >= 1");
    long long c = n;
    for (int i = 1; i < r; ++i) c *= n - 1;
    return c;
}

}  // namespace gkmod
