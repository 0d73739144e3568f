#include "gkmod/analysis.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "gkmod/shift.hpp"
#include "gkmod/tree.hpp"

namespace gkmod {

namespace {

FiniteSubtree support_tree(const Representation& m) { return m.support(); }

void require_analyzable(const Representation& m, const char* who) {
    if (m.is_zero()) throw std::invalid_argument(std::string(who) + ": zero module");
    if (auto err = validate(m)) throw std::invalid_argument(std::string(who) + ": " + *err);
    if (!support_tree(m).connected())
        throw std::invalid_argument(std::string(who) + ": support is not connected");
}

// Enumerates backtrack-free walks (x0, ..., xr) through the support ending at
// `end`, with x(r-1) != banned_before_end, x1..xr inside the support and x0
// ranging over all tree neighbors. Returns false as soon as a walk with
// dim(x0) != dim(x1) shows up.
bool equal_onsets_into(const Representation& m, const FiniteSubtree& t, int r,
                      const VertexAddress& end, const VertexAddress* banned_before_end) {
    struct Frame {
        VertexAddress at;
        VertexAddress next;  // the walk vertex one step closer to `end`
    };
    // Walk positions are filled from r downward; depth-first over predecessors.
    std::vector<std::pair<Frame, int>> stack;  // frame, position of `at`
    stack.push_back({{end, end}, r});
    while (!stack.empty()) {
        auto [frame, pos] = stack.back();
        stack.pop_back();
        if (pos == 0) {
            const int d0 = m.dim(frame.at);
            const int d1 = m.dim(frame.next);
            if (d0 != d1) return false;
            continue;
        }
        for (const auto& w : neighbors(frame.at, t.n)) {
            if (pos < r && w == frame.next) continue;  // no backtracking
            if (pos == r && banned_before_end != nullptr && w == *banned_before_end) continue;
            if (pos - 1 >= 1 && !t.contains(w)) continue;
            stack.push_back({{w, frame.at}, pos - 1});
        }
    }
    return true;
}

Classification classify_in(const Representation& m, const FiniteSubtree& t) {
    const CenterRadius cr = subtree_center_radius(t);
    Classification c;
    c.center = cr.center;
    c.radius = cr.radius;
    c.diameter = cr.diameter;
    if (cr.diameter % 2 == 1) {
        c.cls = ModuleClass::Flow;
    } else {
        // Path endpoints sit at distance `radius` from the center vertex, so
        // their depth parity is the center's shifted by the radius.
        const bool endpoint_even = (cr.center.at.front().depth() + cr.radius) % 2 == 0;
        c.cls = endpoint_even == m.orient.sinks_even ? ModuleClass::Sink : ModuleClass::Source;
    }
    return c;
}

bool complete_in(const Representation& m, const FiniteSubtree& t, const Classification& c) {
    if (c.radius < 1) return false;
    if (c.center.is_vertex())
        return equal_onsets_into(m, t, c.radius, c.center.at.front(), nullptr);
    for (std::size_t k = 0; k < 2; ++k) {
        const VertexAddress& end = c.center.at[k];
        const VertexAddress& other = c.center.at[1 - k];
        if (!equal_onsets_into(m, t, c.radius, end, &other)) return false;
    }
    return true;
}

}  // namespace

std::string to_string(ModuleClass c) {
    switch (c) {
        case ModuleClass::Sink: return "sink";
        case ModuleClass::Flow: return "flow";
        case ModuleClass::Source: return "source";
    }
    return "sink";
}

Classification classify(const Representation& m) {
    require_analyzable(m, "classify");
    return classify_in(m, support_tree(m));
}

bool is_complete(const Representation& m) {
    require_analyzable(m, "is_complete");
    const FiniteSubtree t = support_tree(m);
    return complete_in(m, t, classify_in(m, t));
}

long long gamma_undirected(const Representation& m) {
    require_analyzable(m, "gamma");
    return subtree_diameter_path_count(support_tree(m));
}

long long gamma(const Representation& m) {
    require_analyzable(m, "gamma");
    const FiniteSubtree t = support_tree(m);
    const long long undirected = subtree_diameter_path_count(t);
    return t.verts.size() == 1 ? undirected : 2 * undirected;
}

long long beta(const Representation& m) {
    require_analyzable(m, "beta");
    const FiniteSubtree t = support_tree(m);
    const Classification c = classify_in(m, t);
    return static_cast<long long>(subtree_boundary(t, c.center, c.radius).size());
}

std::optional<int> source_path_radius(const Representation& m) {
    require_analyzable(m, "source_path_radius");
    const FiniteSubtree t = support_tree(m);
    std::vector<VertexAddress> source_leaves;
    for (const auto& v : t.leaves())
        if (is_source(v, m.orient)) source_leaves.push_back(v);
    if (source_leaves.empty()) return std::nullopt;
    int best = 0;
    for (std::size_t i = 0; i < source_leaves.size(); ++i)
        for (std::size_t j = i + 1; j < source_leaves.size(); ++j)
            best = std::max(best, distance(source_leaves[i], source_leaves[j]));
    return best / 2;
}

int orbit_index(const Representation& m) {
    const SigmaFate fate = classify_fate(m);
    if (fate.kind != SigmaFate::Kind::Regular)
        throw std::invalid_argument("orbit_index: module is not regular (" + fate.str() + ")");

    const Classification start = classify(m);
    if (start.cls == ModuleClass::Sink) {
        Representation cur = m;
        const int cap = start.radius + 2;
        for (int t = 0; t <= cap; ++t) {
            const Classification c = classify(cur);
            if (c.cls != ModuleClass::Sink)
                throw std::logic_error("orbit_index: sink module left the sink range "
                                       "before an incomplete member appeared");
            if (!is_complete(cur)) return -t;
            cur = sigma(cur);
        }
        throw std::logic_error("orbit_index: no incomplete sink module within " +
                               std::to_string(cap) + " forward shifts");
    }

    Representation cur = m;
    const int cap = 2 * start.radius + 4;
    for (int t = 1; t <= cap; ++t) {
        cur = sigma_minus(cur);
        const Classification c = classify(cur);
        if (c.cls == ModuleClass::Sink) {
            if (is_complete(cur))
                throw std::logic_error("orbit_index: first sink module behind the input "
                                       "is complete");
            return t;
        }
    }
    throw std::logic_error("orbit_index: no sink module within " + std::to_string(cap) +
                           " backward shifts");
}

OrbitSignature orbit_signature(const Representation& m) {
    OrbitSignature sig;
    sig.index = orbit_index(m);

    const Representation m0 = shift_power(m, -sig.index);
    const Classification c0 = classify(m0);
    sig.r0 = c0.radius;
    sig.p = c0.center.at.front();

    std::vector<VertexAddress> path{sig.p};
    Representation cur = m0;
    const int cap = sig.r0 + 2;
    bool found = false;
    for (int t = 1; t <= cap && !found; ++t) {
        cur = sigma(cur);
        const Classification c = classify(cur);
        switch (c.cls) {
            case ModuleClass::Sink:
                throw std::logic_error("orbit_signature: sink module ahead of the "
                                       "incomplete one");
            case ModuleClass::Flow: {
                const VertexAddress& a = c.center.at[0];
                const VertexAddress& b = c.center.at[1];
                if (a == path.back())
                    path.push_back(b);
                else if (b == path.back())
                    path.push_back(a);
                else
                    throw std::logic_error("orbit_signature: flow center detached from "
                                           "the path collected so far");
                break;
            }
            case ModuleClass::Source: {
                sig.q = c.center.at.front();
                sig.b = t - 1;
                if (path.back() != sig.q)
                    throw std::logic_error("orbit_signature: center path does not end at "
                                           "the source center");
                found = true;
                break;
            }
        }
    }
    if (!found)
        throw std::logic_error("orbit_signature: no source module within " +
                               std::to_string(cap) + " forward shifts");

    const auto [dist, geodesic] = distance_and_path(sig.p, sig.q);
    if (dist != sig.b || geodesic != path)
        throw std::logic_error("orbit_signature: collected center path differs from the "
                               "tree path between the end centers");
    sig.center_path = std::move(path);
    return sig;
}

namespace {

OrbitStep analyze_step(const Representation& m, int i) {
    require_analyzable(m, "orbit_profile");
    const FiniteSubtree t = support_tree(m);
    const Classification c = classify_in(m, t);
    OrbitStep s;
    s.i = i;
    s.cls = c.cls;
    s.center = c.center;
    s.radius = c.radius;
    s.diameter = c.diameter;
    for (const auto& [v, d] : m.dims)
        if (d > 0) s.dims[v] = d;
    s.total_dim = m.total_dim();
    s.gamma_undirected = subtree_diameter_path_count(t);
    s.gamma_directed = c.diameter == 0 ? s.gamma_undirected : 2 * s.gamma_undirected;
    s.beta = static_cast<long long>(subtree_boundary(t, c.center, c.radius).size());
    s.complete = complete_in(m, t, c);
    return s;
}

}  // namespace

OrbitReport orbit_profile(const Representation& m, int lo, int hi) {
    if (lo > hi) throw std::invalid_argument("orbit_profile: empty window");

    OrbitReport report;
    report.sig = orbit_signature(m);
    report.lo = lo;
    report.hi = hi;

    const Representation m0 = shift_power(m, -report.sig.index);
    std::map<int, OrbitStep> steps;
    if (0 >= lo && 0 <= hi) steps.emplace(0, analyze_step(m0, 0));

    Representation cur = m0;
    for (int i = 1; i <= hi; ++i) {
        cur = sigma(cur);
        if (i >= lo) steps.emplace(i, analyze_step(cur, i));
    }
    cur = m0;
    for (int i = -1; i >= lo; --i) {
        cur = sigma_minus(cur);
        if (i <= hi) steps.emplace(i, analyze_step(cur, i));
    }

    report.steps.reserve(steps.size());
    for (auto& [i, s] : steps) report.steps.push_back(std::move(s));
    return report;
}

namespace {

std::string describe_center(const Center& c) { return c.str(); }

}  // namespace

VerifyResult verify_orbit(const OrbitSignature& sig, const std::vector<OrbitStep>& steps) {
    if (steps.empty()) throw std::invalid_argument("verify_orbit: no steps");
    for (std::size_t k = 1; k < steps.size(); ++k)
        if (steps[k].i != steps[k - 1].i + 1)
            throw std::invalid_argument("verify_orbit: steps are not consecutive");
    if (steps.front().i > -2 || steps.back().i < sig.b + 3)
        throw std::invalid_argument("verify_orbit: window must cover [-2, b+3]");

    VerifyResult result;
    auto fail = [&result](int i, const std::string& what) {
        result.pass = false;
        result.failures.push_back("step " + std::to_string(i) + ": " + what);
    };

    for (const OrbitStep& s : steps) {
        const int i = s.i;
        ModuleClass want_cls;
        int want_radius;
        Center want_center;
        if (i <= 0) {
            want_cls = ModuleClass::Sink;
            want_radius = sig.r0 - i;
            want_center.at = {sig.p};
        } else if (i <= sig.b) {
            want_cls = ModuleClass::Flow;
            want_radius = sig.r0 - 1;
            want_center.at = {sig.center_path[static_cast<std::size_t>(i) - 1],
                              sig.center_path[static_cast<std::size_t>(i)]};
            std::sort(want_center.at.begin(), want_center.at.end());
        } else {
            want_cls = ModuleClass::Source;
            want_radius = sig.r0 + (i - sig.b - 1);
            want_center.at = {sig.q};
        }

        if (s.cls != want_cls)
            fail(i, "expected a " + to_string(want_cls) + " module, found " + to_string(s.cls));
        if (s.radius != want_radius)
            fail(i, "expected radius " + std::to_string(want_radius) + ", found " +
                        std::to_string(s.radius));
        if (!(s.center == want_center))
            fail(i, "expected center " + describe_center(want_center) + ", found " +
                        describe_center(s.center));

        const int want_diameter =
            want_cls == ModuleClass::Flow ? 2 * want_radius + 1 : 2 * want_radius;
        if (s.diameter != want_diameter)
            fail(i, "expected diameter " + std::to_string(want_diameter) + ", found " +
                        std::to_string(s.diameter));

        if (i == 0 && s.complete) fail(i, "the index-0 sink module must be incomplete");
        if (i < 0 && !s.complete) fail(i, "sink modules behind index 0 must be complete");
    }

    for (std::size_t k = 1; k < steps.size(); ++k) {
        const OrbitStep& a = steps[k - 1];
        const OrbitStep& s = steps[k];
        const int i = s.i;
        const int delta = s.diameter - a.diameter;
        if (a.cls == ModuleClass::Sink && s.cls == ModuleClass::Sink) {
            if (delta != -2)
                fail(i, "sink-to-sink step must shrink the diameter by 2, got " +
                            std::to_string(delta));
            if (!a.complete)
                fail(i, "the diameter only shrinks by 2 after a complete sink module");
        } else if (a.cls == ModuleClass::Sink && s.cls == ModuleClass::Flow) {
            if (delta != -1)
                fail(i, "sink-to-flow step must shrink the diameter by 1, got " +
                            std::to_string(delta));
            if (a.complete)
                fail(i, "a complete sink module cannot shift to a flow module");
        } else if (a.cls == ModuleClass::Sink && s.cls == ModuleClass::Source) {
            if (delta != 0)
                fail(i, "sink-to-source step must keep the diameter, got " +
                            std::to_string(delta));
            if (a.complete)
                fail(i, "a complete sink module cannot shift to a source module");
        } else if (a.cls == ModuleClass::Flow && s.cls == ModuleClass::Flow) {
            if (delta != 0)
                fail(i, "flow-to-flow step must keep the diameter, got " +
                            std::to_string(delta));
        } else if (a.cls == ModuleClass::Flow && s.cls == ModuleClass::Source) {
            if (delta != 1)
                fail(i, "flow-to-source step must grow the diameter by 1, got " +
                            std::to_string(delta));
        } else if (a.cls == ModuleClass::Source && s.cls == ModuleClass::Source) {
            if (delta != 2)
                fail(i, "source-to-source step must grow the diameter by 2, got " +
                            std::to_string(delta));
            if (!(a.center == s.center))
                fail(i, "source-to-source step must keep the center");
        } else {
            fail(i, "illegal class transition " + to_string(a.cls) + " to " + to_string(s.cls));
        }
    }
    return result;
}

long long r_b(long long i, int l, int b, RbVariant variant) {
    if (l < 1) throw std::invalid_argument("r_b: coray position must be at least 1");
    if (b < 0) throw std::invalid_argument("r_b: negative center distance");
    if (i <= 0) return -i + l;
    if (i <= b) return l - 1;
    return variant == RbVariant::Printed ? i + l : i - b + l - 1;
}

}  // namespace gkmod
