#ifndef QUARTIKA_QUARTIC_HPP
#define QUARTIKA_QUARTIC_HPP

#include <functional>
#include <optional>

#include "quartika/elliptic.hpp"

namespace quartika {

struct QuarticPoint {
    Rational U, V;
    bool operator==(const QuarticPoint& o) const = default;
};

// V^2 = q4*U^4 + q3*U^3 + q2*U^2 + q1*U + q0 with a marked rational point.
struct QuarticModel {
    Rational q4, q3, q2, q1, q0;
    QuarticPoint marked;

    Rational rhs(const Rational& U) const;
    bool contains(const QuarticPoint& p) const;
};

// A quartic model tied to its Weierstrass curve by explicit rational maps.
// Maps return nothing on their exceptional sets (vanishing denominators).
struct BirationalLink {
    QuarticModel quartic;
    WeierstrassCurve curve;
    ECPoint base; // distinguished point of infinite order
    std::function<std::optional<QuarticPoint>(const ECPoint&)> forward;
    std::function<std::optional<ECPoint>(const QuarticPoint&)> backward;
};

// The two-parameter family link: quartic
//   V^2 = (5m^4n^2+4n^6)U^4 + (4m^5+8mn^4)U^3 - 2m^2n^2U^2 - 4m^3U + n^2
// with marked point (0,n), its curve E, and the point P attached to it.
// Requires m, n nonzero and of the same parity, and a nondegenerate curve.
BirationalLink theorem1_link(const Integer& m, const Integer& n);

// Fixed instance for multiplier 41: Y^2+XY+Y = X^3-X^2-27X+26 with
// generator (6,-11), quartic V^2 = U^4-108U^3-18U^2+996U+409.
BirationalLink instance41_link();

// Fixed instance for multiplier 17: Y^2 = X^3-91X+330 with generator
// (7,-6), quartic V^2 = 8U^4-50U^3+105U^2-80U+13 marked at (2,1).
BirationalLink instance17_link();

} // namespace quartika

#endif
