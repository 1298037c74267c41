#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace hypercore {

// Exact integer / rational scalars used by oracle-mode computations.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

enum class Mode { fast, oracle };

// Fast mode: double throughout. Geodesic counts lose exactness above
// 2^53 paths; loads carry ordinary floating-point error.
struct FastPolicy {
    using count_t = double;
    using value_t = double;
    static constexpr Mode mode = Mode::fast;
    static double to_double(double x) { return x; }
    static double value_from_weight(double w) { return w; }
};

// Oracle mode: arbitrary-precision counts, exact rational loads.
// Weights convert from double exactly (every double is a dyadic rational).
struct OraclePolicy {
    using count_t = BigInt;
    using value_t = Rational;
    static constexpr Mode mode = Mode::oracle;
    static double to_double(const Rational& x) { return static_cast<double>(x); }
    static Rational value_from_weight(double w) { return Rational(w); }
};

} // namespace hypercore
