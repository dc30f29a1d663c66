#ifndef QUARTIKA_ELLIPTIC_HPP
#define QUARTIKA_ELLIPTIC_HPP

#include <optional>

#include "quartika/exact.hpp"

namespace quartika {

// Affine point; the identity is represented by an empty optional in the
// group-law API below.
struct ECPoint {
    Rational X, Y;
    bool operator==(const ECPoint& o) const = default;
};

using ECValue = std::optional<ECPoint>; // nullopt = point at infinity

// Y^2 + a1*XY + a3*Y = X^3 + a2*X^2 + a4*X + a6 over the rationals.
struct WeierstrassCurve {
    Rational a1, a2, a3, a4, a6;

    Rational discriminant() const;
    bool contains(const ECPoint& p) const;
    bool contains(const ECValue& p) const { return !p || contains(*p); }
};

ECValue neg(const WeierstrassCurve& c, const ECValue& p);
ECValue add(const WeierstrassCurve& c, const ECValue& p, const ECValue& q);
ECValue dbl(const WeierstrassCurve& c, const ECValue& p);
ECValue mul(const WeierstrassCurve& c, const Integer& j, const ECValue& p);

// Mazur bound: rational torsion has order at most 12, so an affine point
// is non-torsion exactly when no multiple jP with j <= 12 is the identity.
bool is_nontorsion(const WeierstrassCurve& c, const ECPoint& p);

} // namespace quartika

#endif
