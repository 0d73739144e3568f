#pragma once

#include <gmpxx.h>
#include <stdexcept>
#include <string>

namespace gkmod {

// All linear algebra in this library is exact. Scalars are arbitrary-precision
// rationals kept in lowest terms with positive denominator (gmp canonical form).
using Scalar = mpq_class;

// Parse "p/q" or "p" (q omitted when 1). Throws on malformed input or q = 0.
inline Scalar parse_scalar(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("empty scalar string");
    mpq_class v;
    if (v.set_str(s, 10) != 0)
        throw std::invalid_argument("bad scalar string: " + s);
    if (v.get_den() == 0)
        throw std::invalid_argument("zero denominator: " + s);
    v.canonicalize();
    return v;
}

// Format in lowest terms, "p/q" with "/q" dropped when the denominator is 1.
inline std::string format_scalar(const Scalar& x) {
    return x.get_str();
}

}  // namespace gkmod
