#include <doctest.h>

#include <gkmod/tree.hpp>

#include <random>
#include <set>
#include <stdexcept>
#include <vector>

#include "support.hpp"

using gkmod::Center;
using gkmod::FiniteSubtree;
using gkmod::Orientation;
using gkmod::VertexAddress;

namespace {

VertexAddress v(const std::string& s) { return VertexAddress::parse(s); }

std::vector<VertexAddress> vs(const std::vector<std::string>& ss) {
    std::vector<VertexAddress> out;
    for (const auto& s : ss) out.push_back(v(s));
    return out;
}

// Two fans of three around the ends of a length-two path through the root,
// plus the two remaining neighbors of the middle: eleven vertices of T(4).
FiniteSubtree crossing_fan_fixture() {
    return gkmod::make_subtree(
        4, vs({"", "0", "1", "2", "3", "0.1", "0.2", "0.3", "1.1", "1.2", "1.3"}));
}

}  // namespace

TEST_SUITE("tree") {

TEST_CASE("addresses print and parse round trip") {
    CHECK(v("").is_root());
    CHECK(v("").str() == "");
    CHECK(v("2.1.1").labels == std::vector<int>{2, 1, 1});
    CHECK(v("2.1.1").str() == "2.1.1");
    CHECK(VertexAddress::parse(v("0.2.1").str()) == v("0.2.1"));
    CHECK_THROWS_AS(VertexAddress::parse("x"), std::invalid_argument);
    CHECK_THROWS_AS(VertexAddress::parse("1..2"), std::invalid_argument);
    CHECK_THROWS_AS(VertexAddress::parse("1."), std::invalid_argument);
}

TEST_CASE("parent and child arithmetic") {
    CHECK(v("2.1").parent() == v("2"));
    CHECK(v("2").parent().is_root());
    CHECK(v("2").child(1) == v("2.1"));
    CHECK_THROWS_AS(v("").parent(), std::logic_error);
}

TEST_CASE("labels outside the valence are rejected") {
    CHECK_NOTHROW(gkmod::check_address(v("2.1"), 3));
    CHECK_THROWS_AS(gkmod::check_address(v("3"), 3), std::invalid_argument);
    // Label 0 always points back to the parent, so it cannot reappear deeper.
    CHECK_THROWS_AS(gkmod::check_address(v("0.0"), 3), std::invalid_argument);
    CHECK_THROWS_AS(gkmod::check_address(v("1"), 1), std::invalid_argument);
}

TEST_CASE("neighbors come parent-first in label order") {
    CHECK(gkmod::neighbors(v(""), 3) == vs({"0", "1", "2"}));
    CHECK(gkmod::neighbors(v("2.1"), 3) == vs({"2", "2.1.1", "2.1.2"}));
    CHECK(gkmod::neighbors(v("0"), 4) == vs({"", "0.1", "0.2", "0.3"}));
}

TEST_CASE("parity splits the two orientations") {
    const Orientation o{3, true};
    CHECK(gkmod::is_sink(v(""), o));
    CHECK(gkmod::is_source(v("0"), o));
    CHECK(gkmod::is_sink(v("0.1"), o));
    CHECK(gkmod::is_source(v(""), o.flipped()));
    CHECK(o.flipped().flipped() == o);
}

TEST_CASE("distance matches hand values and the metric axioms") {
    CHECK(gkmod::distance(v(""), v("2.1")) == 2);
    CHECK(gkmod::distance(v("0.1"), v("0.2")) == 2);
    CHECK(gkmod::distance(v("0.1"), v("1.1")) == 4);
    CHECK(gkmod::distance(v("0.1.2"), v("0")) == 2);
    const auto pts = vs({"", "0", "1", "0.1", "0.1.2", "2.1"});
    for (const auto& a : pts)
        for (const auto& b : pts) {
            CHECK(gkmod::distance(a, b) == gkmod::distance(b, a));
            CHECK((gkmod::distance(a, b) == 0) == (a == b));
            for (const auto& c : pts)
                CHECK(gkmod::distance(a, c) <= gkmod::distance(a, b) + gkmod::distance(b, c));
        }
}

TEST_CASE("geodesics list every vertex in order") {
    const auto [d, path] = gkmod::distance_and_path(v("0.1"), v("0.2"));
    CHECK(d == 2);
    CHECK(path == vs({"0.1", "0", "0.2"}));
    const auto [d2, path2] = gkmod::distance_and_path(v("1"), v("1"));
    CHECK(d2 == 0);
    CHECK(path2 == vs({"1"}));
    const auto [d3, path3] = gkmod::distance_and_path(v("2.1"), v("0"));
    CHECK(d3 == 3);
    CHECK(path3 == vs({"2.1", "2", "", "0"}));
}

TEST_CASE("balls match the closed-form counts") {
    for (int n : {3, 4}) {
        for (int r = 0; r <= 3; ++r) {
            const FiniteSubtree b = gkmod::ball({v("")}, r, n);
            CHECK(static_cast<long long>(b.verts.size()) == gkmod::ball_vertex_count(n, r));
            if (r >= 1) {
                const auto edge = gkmod::subtree_boundary(b, Center{{v("")}}, r);
                CHECK(static_cast<long long>(edge.size()) == gkmod::ball_boundary_count(n, r));
            }
        }
    }
    // An edge-centered ball is the union of the two vertex balls.
    const FiniteSubtree be = gkmod::ball({v(""), v("0")}, 1, 3);
    CHECK(be.verts == vs({"", "0", "0.1", "0.2", "1", "2"}));
    CHECK_THROWS_AS(gkmod::ball({v(""), v("0.1")}, 1, 3), std::invalid_argument);
}

TEST_CASE("subtree connectivity and leaves") {
    const FiniteSubtree t = gkmod::make_subtree(3, vs({"", "0", "0.1", "1"}));
    CHECK(t.connected());
    CHECK(t.contains(v("0.1")));
    CHECK_FALSE(t.contains(v("2")));
    CHECK(t.leaves() == vs({"0.1", "1"}));
    const FiniteSubtree broken = gkmod::make_subtree(3, vs({"", "0.1"}));
    CHECK_FALSE(broken.connected());
    CHECK_THROWS_AS(gkmod::subtree_center_radius(broken), std::invalid_argument);
}

TEST_CASE("diameter paths are canonical and counted") {
    // A star: three maximal paths, smaller endpoint first, list sorted.
    const FiniteSubtree star = gkmod::make_subtree(3, vs({"", "0", "1", "2"}));
    const auto paths = gkmod::subtree_diameter_paths(star);
    REQUIRE(paths.size() == 3);
    CHECK(paths[0] == vs({"0", "", "1"}));
    CHECK(paths[1] == vs({"0", "", "2"}));
    CHECK(paths[2] == vs({"1", "", "2"}));
    CHECK(gkmod::subtree_diameter_path_count(star) == 3);
}

TEST_CASE("centers of even and odd diameters") {
    const FiniteSubtree even = gkmod::make_subtree(3, vs({"0.1", "0", "", "1", "1.1"}));
    const auto ce = gkmod::subtree_center_radius(even);
    CHECK(ce.diameter == 4);
    CHECK(ce.radius == 2);
    CHECK(ce.center == Center{{v("")}});

    const FiniteSubtree odd = gkmod::make_subtree(3, vs({"0.1", "0", "", "1"}));
    const auto co = gkmod::subtree_center_radius(odd);
    CHECK(co.diameter == 3);
    CHECK(co.radius == 1);
    CHECK(co.center == Center{vs({"", "0"})});
    CHECK(co.center.str() == "{,0}");

    const FiniteSubtree single = gkmod::make_subtree(3, vs({"1"}));
    const auto cs = gkmod::subtree_center_radius(single);
    CHECK(cs.diameter == 0);
    CHECK(cs.radius == 0);
    CHECK(cs.center == Center{{v("1")}});
}

TEST_CASE("the crossing-fan fixture") {
    const FiniteSubtree t = crossing_fan_fixture();
    const auto cr = gkmod::subtree_center_radius(t);
    CHECK(cr.center == Center{{v("")}});
    CHECK(cr.radius == 2);
    CHECK(cr.diameter == 4);
    // Eight leaves, but only the six fan tips realize the diameter.
    CHECK(t.leaves().size() == 8);
    const auto boundary = gkmod::subtree_boundary(t, cr.center, cr.radius);
    CHECK(boundary == vs({"0.1", "0.2", "0.3", "1.1", "1.2", "1.3"}));
    CHECK(gkmod::subtree_diameter_path_count(t) == 9);
    CHECK(gkmod::subtree_diameter_paths(t).size() == 9);
}

TEST_CASE("boundary vertices are exactly the maximal-path endpoints") {
    std::mt19937 rng(2203);
    for (int it = 0; it < 25; ++it) {
        const int n = it % 2 ? 3 : 4;
        const FiniteSubtree t = testsupport::random_subtree(n, 2 + rng() % 16, rng);
        const auto cr = gkmod::subtree_center_radius(t);
        std::set<VertexAddress> ends;
        for (const auto& p : gkmod::subtree_diameter_paths(t)) {
            ends.insert(p.front());
            ends.insert(p.back());
        }
        const auto boundary = gkmod::subtree_boundary(t, cr.center, cr.radius);
        CHECK(boundary == std::vector<VertexAddress>(ends.begin(), ends.end()));
        CHECK(gkmod::subtree_diameter_path_count(t) ==
              static_cast<long long>(gkmod::subtree_diameter_paths(t).size()));
    }
}

TEST_CASE("breadth-first search agrees on centers and the radius bound") {
    std::mt19937 rng(424242);
    for (int it = 0; it < 20; ++it) {
        const int n = it % 2 ? 3 : 4;
        const FiniteSubtree t = testsupport::random_subtree(n, 2 + rng() % 17, rng);
        const auto facts = testsupport::brute_tree_facts(t);
        const auto cr = gkmod::subtree_center_radius(t);
        CHECK(cr.diameter == facts.diameter);
        // Every maximal path has the same midpoint set, and it is the center.
        REQUIRE(facts.midpoint_sets.size() == 1);
        CHECK(*facts.midpoint_sets.begin() == cr.center.at);
        // No vertex is farther than the radius from the center.
        for (std::size_t i = 0; i < t.verts.size(); ++i) {
            int to_center = facts.diameter + 1;
            for (const auto& c : cr.center.at) {
                const auto it2 = std::lower_bound(t.verts.begin(), t.verts.end(), c);
                const std::size_t ci = static_cast<std::size_t>(it2 - t.verts.begin());
                to_center = std::min(to_center, facts.dist[i][ci]);
            }
            CHECK(to_center <= cr.radius);
        }
    }
}

}  // TEST_SUITE
