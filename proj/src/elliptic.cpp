#include "quartika/elliptic.hpp"

namespace quartika {

Rational WeierstrassCurve::discriminant() const {
    Rational b2 = a1 * a1 + 4 * a2;
    Rational b4 = 2 * a4 + a1 * a3;
    Rational b6 = a3 * a3 + 4 * a6;
    Rational b8 = a1 * a1 * a6 + 4 * a2 * a6 - a1 * a3 * a4 + a2 * a3 * a3 - a4 * a4;
    return -b2 * b2 * b8 - 8 * b4 * b4 * b4 - 27 * b6 * b6 + 9 * b2 * b4 * b6;
}

bool WeierstrassCurve::contains(const ECPoint& p) const {
    Rational lhs = p.Y * p.Y + a1 * p.X * p.Y + a3 * p.Y;
    Rational rhs = p.X * p.X * p.X + a2 * p.X * p.X + a4 * p.X + a6;
    return lhs == rhs;
}

ECValue neg(const WeierstrassCurve& c, const ECValue& p) {
    if (!p) return std::nullopt;
    return ECPoint{p->X, -p->Y - c.a1 * p->X - c.a3};
}

static ECValue chord(const WeierstrassCurve& c, const ECPoint& p,
                     const Rational& lambda, const Rational& nu,
                     const Rational& x2) {
    Rational x3 = lambda * lambda + c.a1 * lambda - c.a2 - p.X - x2;
    Rational y3 = -(lambda + c.a1) * x3 - nu - c.a3;
    return ECPoint{x3, y3};
}

ECValue dbl(const WeierstrassCurve& c, const ECValue& p) {
    if (!p) return std::nullopt;
    Rational den = 2 * p->Y + c.a1 * p->X + c.a3;
    if (den == 0) return std::nullopt; // 2-torsion
    Rational lambda = (3 * p->X * p->X + 2 * c.a2 * p->X + c.a4 - c.a1 * p->Y) / den;
    Rational nu = (-p->X * p->X * p->X + c.a4 * p->X + 2 * c.a6 - c.a3 * p->Y) / den;
    return chord(c, *p, lambda, nu, p->X);
}

ECValue add(const WeierstrassCurve& c, const ECValue& p, const ECValue& q) {
    if (!p) return q;
    if (!q) return p;
    if (p->X == q->X) {
        if (p->Y == q->Y) return dbl(c, p);
        return std::nullopt; // vertical chord
    }
    Rational lambda = (q->Y - p->Y) / (q->X - p->X);
    Rational nu = p->Y - lambda * p->X;
    return chord(c, *p, lambda, nu, q->X);
}

ECValue mul(const WeierstrassCurve& c, const Integer& j, const ECValue& p) {
    if (j < 0) return mul(c, -j, neg(c, p));
    ECValue acc = std::nullopt;
    ECValue base = p;
    Integer k = j;
    while (k > 0) {
        if (mpz_odd_p(k.get_mpz_t())) acc = add(c, acc, base);
        base = dbl(c, base);
        k >>= 1;
    }
    return acc;
}

bool is_nontorsion(const WeierstrassCurve& c, const ECPoint& p) {
    ECValue acc = p;
    for (int j = 1; j <= 12; ++j) {
        if (!acc) return false;
        acc = add(c, acc, p);
    }
    return true;
}

} // namespace quartika
