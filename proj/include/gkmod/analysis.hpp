#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gkmod/representation.hpp"

namespace gkmod {

enum class ModuleClass { Sink, Flow, Source };

std::string to_string(ModuleClass c);

struct Classification {
    ModuleClass cls = ModuleClass::Sink;
    Center center;
    int radius = 0;
    int diameter = 0;
};

// Classifies by the endpoints of the diameter paths of the support tree:
// all sinks, all sources, or one of each (odd diameter). A single-vertex
// support is classified by that vertex. Requires nonzero connected support.
Classification classify(const Representation& m);

// A module of radius r >= 1 is complete when every backtrack-free walk of
// length r through the support into the center sees equal dimensions at its
// first two vertices; the walk's start may lie one step outside the support
// (dimension zero there). For a central edge only walks arriving from off
// the edge count. Radius-0 modules are never complete.
bool is_complete(const Representation& m);

// Walks realizing the diameter: both directions of every diameter path, or
// one walk for a single-vertex support.
long long gamma(const Representation& m);
long long gamma_undirected(const Representation& m);

// Support vertices at maximal distance from the center.
long long beta(const Representation& m);

// Half the largest distance between two (possibly equal) source leaves of
// the support; empty when the support has no source leaf.
std::optional<int> source_path_radius(const Representation& m);

// Position of m in its shift orbit, measured from the unique incomplete sink
// module: 0 there, negative at the sink modules shifted backward from it,
// positive forward. Requires a regular indecomposable module.
int orbit_index(const Representation& m);

struct OrbitSignature {
    int r0 = 0;                              // radius of the incomplete sink module
    VertexAddress p;                         // its center
    VertexAddress q;                         // center of the first source module
    int b = 0;                               // distance from p to q
    std::vector<VertexAddress> center_path;  // the path from p to q
    int index = 0;                           // orbit index of the module passed in

    bool operator==(const OrbitSignature&) const = default;
};

// Locates the incomplete sink module of the orbit of m, follows the sliding
// flow centers to the first source module, and cross-checks the collected
// center path against the tree geodesic from p to q.
OrbitSignature orbit_signature(const Representation& m);

struct OrbitStep {
    int i = 0;  // orbit index of this member
    ModuleClass cls = ModuleClass::Sink;
    Center center;
    int radius = 0;
    int diameter = 0;
    DimensionVector dims;
    long long total_dim = 0;
    long long gamma_directed = 0;
    long long gamma_undirected = 0;
    long long beta = 0;
    bool complete = false;
};

struct OrbitReport {
    OrbitSignature sig;
    int lo = 0;
    int hi = 0;
    std::vector<OrbitStep> steps;  // orbit indices lo..hi inclusive
};

OrbitReport orbit_profile(const Representation& m, int lo, int hi);

struct VerifyResult {
    bool pass = true;
    std::vector<std::string> failures;
};

// Checks an orbit window against the structure theory: the class, radius and
// center of every member as dictated by the signature, completeness on the
// sink side, and the step-to-step diameter transitions. The window must
// cover [-2, b+3].
VerifyResult verify_orbit(const OrbitSignature& sig, const std::vector<OrbitStep>& steps);

enum class RbVariant { Printed, Corrected };

// Radius offset of the orbit-index-i module within the l-th member of its
// coray. The two variants differ only beyond index b: Printed uses i + l
// there, Corrected uses i - b + l - 1, the offset that matches the radii
// source modules actually attain.
long long r_b(long long i, int l, int b, RbVariant variant);

}  // namespace gkmod
