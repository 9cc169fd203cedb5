#pragma once

#include <algorithm>
#include <stdexcept>
#include <string>

#include "rational.hpp"

namespace braidtk {

/// The crossing-ratio function behind every bound in this header:
/// f(2) = 1, f(3) = 5/3, f(n) = 2n-5 for n > 3. Defined for braid index
/// at least 2; the 1-braid case is the unknot and is routed around f by
/// every caller.
inline Rational crossing_bound_ratio(int braid_index) {
    if (braid_index < 2)
        throw std::invalid_argument("crossing_bound_ratio: braid index must be >= 2");
    if (braid_index == 2) return Rational(1);
    if (braid_index == 3) return Rational(5, 3);
    return Rational(2 * braid_index - 5);
}

/// Two-sided crossing number bounds for a link with the given maximal
/// Euler characteristic and braid index:
///   -chi + b  <=  c  <=  f(b) * (-chi + b).
struct BoundReport {
    int chi = 0;
    int braid_index = 0;
    long long lower = 0;
    Rational upper;
    std::string formula;

    friend bool operator==(const BoundReport&, const BoundReport&) = default;
};

inline BoundReport theorem_bounds(int chi, int braid_index) {
    if (braid_index < 2)
        throw std::invalid_argument("theorem_bounds: braid index must be >= 2");
    const long long base = -static_cast<long long>(chi) + braid_index;
    if (base <= 0)
        throw std::invalid_argument("theorem_bounds: requires -chi + b > 0");
    BoundReport r;
    r.chi = chi;
    r.braid_index = braid_index;
    r.lower = base;
    r.upper = crossing_bound_ratio(braid_index) * Rational(base);
    r.formula = "-chi+b <= c <= f(b)*(-chi+b)";
    return r;
}

/// Crossing number of a connected sum: the summand-wise bound together
/// with the weaker uniform bound through f of the larger braid index.
/// refined >= uniform always holds.
struct CompositeBound {
    Rational refined;  // c1/f(b1) + c2/f(b2)
    Rational uniform;  // (c1+c2)/f(max(b1,b2))

    friend bool operator==(const CompositeBound&, const CompositeBound&) = default;
};

inline CompositeBound composite_lb(long long c1, int b1, long long c2, int b2) {
    if (b1 < 2 || b2 < 2)
        throw std::invalid_argument("composite_lb: braid indices must be >= 2");
    CompositeBound r;
    r.refined = Rational(c1) / crossing_bound_ratio(b1) +
                Rational(c2) / crossing_bound_ratio(b2);
    r.uniform = Rational(c1 + c2) / crossing_bound_ratio(std::max(b1, b2));
    return r;
}

/// Every knot is (1/f(b))-regular: any knot containing it as a prime
/// factor has at least this fraction of its crossing number.
inline Rational regularity(int braid_index) {
    return Rational(1) / crossing_bound_ratio(braid_index);
}

/// Satellite with companion data (c0, b0) and winding number w:
/// c >= w^2 c0 / f(b0) - w^2 b0. May be negative (vacuous).
inline Rational satellite_lb(long long c0, int b0, long long w) {
    if (b0 < 2) throw std::invalid_argument("satellite_lb: companion braid index must be >= 2");
    if (w < 0) throw std::invalid_argument("satellite_lb: winding number must be >= 0");
    const Rational w2 = Rational(w) * Rational(w);
    return w2 * Rational(c0) / crossing_bound_ratio(b0) - w2 * Rational(b0);
}

/// Asymptotic crossing number bound: ac >= c/f(b) - b.
inline Rational asymptotic_lb(long long c, int b) {
    if (b < 2) throw std::invalid_argument("asymptotic_lb: braid index must be >= 2");
    return Rational(c) / crossing_bound_ratio(b) - Rational(b);
}

/// Braided p-cable bound c(K_p) >= p c / f(b) + (p - 1), plus the
/// dominance predicate p >= f(b), under which the cable has at least as
/// many crossings as the companion.
struct CableBound {
    Rational bound;
    bool cable_dominates = false;

    friend bool operator==(const CableBound&, const CableBound&) = default;
};

inline CableBound braided_cable_lb(long long c, int b, long long p) {
    if (b < 2) throw std::invalid_argument("braided_cable_lb: braid index must be >= 2");
    if (p < 1) throw std::invalid_argument("braided_cable_lb: cable degree must be >= 1");
    CableBound r;
    r.bound = Rational(p) * Rational(c) / crossing_bound_ratio(b) + Rational(p - 1);
    r.cable_dominates = Rational(p) >= crossing_bound_ratio(b);
    return r;
}

/// Satellite bound through the cable factor 2: c >= c0 / (76 f(b0)).
inline Rational satellite_combined_lb(long long c0, int b0) {
    if (b0 < 2)
        throw std::invalid_argument("satellite_combined_lb: companion braid index must be >= 2");
    return Rational(c0) / (Rational(76) * crossing_bound_ratio(b0));
}

}  // namespace braidtk
