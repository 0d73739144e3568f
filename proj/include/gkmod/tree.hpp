#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace gkmod {

// A vertex of the n-regular tree T(n), named by the reduced edge-label path
// from a fixed root. The root is the empty sequence and its n edges carry
// labels 0..n-1; at every other vertex, label 0 names the edge back to the
// parent, so the n-1 child edges carry labels 1..n-1. Addresses therefore
// biject with vertices, and comparison is lexicographic on the label sequence.
struct VertexAddress {
    std::vector<int> labels;

    bool operator==(const VertexAddress&) const = default;
    auto operator<=>(const VertexAddress&) const = default;

    std::size_t depth() const { return labels.size(); }
    bool is_root() const { return labels.empty(); }

    VertexAddress parent() const;          // throws at the root
    VertexAddress child(int label) const;  // appends a label, unchecked range

    std::string str() const;  // "" for the root, otherwise dot-separated: "2.1.1"
    static VertexAddress parse(const std::string& s);
};

// One of the two bipartite orientations of T(n): every vertex is a sink or a
// source, and sinks_even says which parity class the sinks occupy.
struct Orientation {
    int n = 3;
    bool sinks_even = true;

    bool operator==(const Orientation&) const = default;
    Orientation flipped() const { return Orientation{n, !sinks_even}; }
};

bool is_sink(const VertexAddress& v, const Orientation& o);
bool is_source(const VertexAddress& v, const Orientation& o);

// Throws when v carries a label outside the legal range for valence n.
void check_address(const VertexAddress& v, int n);

// The n neighbors of v: parent first (when v is not the root), then children
// by ascending label.
std::vector<VertexAddress> neighbors(const VertexAddress& v, int n);

int distance(const VertexAddress& u, const VertexAddress& v);

// The unique reduced walk from u to v, inclusive; its length is the distance.
std::pair<int, std::vector<VertexAddress>> distance_and_path(const VertexAddress& u,
                                                             const VertexAddress& v);

// A vertex center (one address) or an edge center (an adjacent pair, stored in
// address order).
struct Center {
    std::vector<VertexAddress> at;  // size 1 or 2

    bool operator==(const Center&) const = default;
    bool is_vertex() const { return at.size() == 1; }
    std::string str() const;
};

// A finite induced subtree of T(n): a sorted vertex set plus the valence; the
// edges are the member pairs at distance one.
struct FiniteSubtree {
    int n = 3;
    std::vector<VertexAddress> verts;  // sorted, duplicate-free

    bool contains(const VertexAddress& v) const;
    bool connected() const;  // empty counts as disconnected
    std::vector<VertexAddress> leaves() const;
};

FiniteSubtree make_subtree(int n, std::vector<VertexAddress> verts);

// All vertices within distance r of one center vertex or of an adjacent pair.
// Throws when a two-element center is not an edge.
FiniteSubtree ball(const std::vector<VertexAddress>& centers, int r, int n);

// Every maximal-length path, reported once with its lexicographically smaller
// endpoint first, the list sorted lexicographically. Throws on an empty or
// disconnected subtree. Materializes the whole list; for large subtrees with
// many such paths prefer subtree_diameter_path_count.
std::vector<std::vector<VertexAddress>> subtree_diameter_paths(const FiniteSubtree& t);

// How many paths the list above would hold, without storing any.
long long subtree_diameter_path_count(const FiniteSubtree& t);

struct CenterRadius {
    Center center;
    int radius = 0;
    int diameter = 0;
};

// Center and radius, read off the midpoint of one maximal-length path (all of
// them share it).
CenterRadius subtree_center_radius(const FiniteSubtree& t);

// The vertices at distance exactly `radius` from the center, sorted; these
// are the endpoints of the maximal-length paths.
std::vector<VertexAddress> subtree_boundary(const FiniteSubtree& t, const Center& center,
                                            int radius);

// Closed-form vertex count of B_r(c) in T(n), n >= 3.
long long ball_vertex_count(int n, int r);

// Closed-form boundary count n(n-1)^{r-1} of a radius-r ball, r >= 1.
long long ball_boundary_count(int n, int r);

}  // namespace gkmod
