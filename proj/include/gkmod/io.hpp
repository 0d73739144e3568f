#pragma once

#include <string>

#include "gkmod/analysis.hpp"
#include "gkmod/representation.hpp"

namespace gkmod {

// JSON text with keys n, sinks_even, spaces and arrows; scalars appear as
// exact rational strings. Serialization is canonical, so parsing and
// reserializing reproduces the text byte for byte.
std::string to_json(const Representation& m);

// Parses and validates; throws invalid_argument on malformed input.
Representation from_json(const std::string& text);

// The full report as JSON: signature, window and one object per member.
std::string report_json(const OrbitReport& report);

// One line per member: step,class,radius,center,b,index,total_dim,gamma,beta.
// An edge center is written as the two vertices joined by '|'.
std::string orbit_csv(const OrbitReport& report);

// Aligned text table of the window, the sink, flow and source bands
// separated by rules.
std::string orbit_table(const OrbitReport& report);

// The radius-offset grid for center distance b over indices lo..hi and coray
// positions 1..lmax, split into its two checkerboard components.
std::string rb_grid(int b, int lo, int hi, int lmax, RbVariant variant);

}  // namespace gkmod
