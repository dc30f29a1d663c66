#include "quartika/quartic.hpp"

namespace quartika {

Rational QuarticModel::rhs(const Rational& U) const {
    return (((q4 * U + q3) * U + q2) * U + q1) * U + q0;
}

bool QuarticModel::contains(const QuarticPoint& p) const {
    return p.V * p.V == rhs(p.U);
}

BirationalLink theorem1_link(const Integer& m, const Integer& n) {
    if (m == 0 || n == 0)
        throw DegenerateFamilyError("parameters must be nonzero");
    if (mpz_odd_p(m.get_mpz_t()) != mpz_odd_p(n.get_mpz_t()))
        throw OppositeParityError();

    Rational rm(m), rn(n);
    Rational m2 = rm * rm, n2 = rn * rn;
    Rational m3 = m2 * rm, n3 = n2 * rn;
    Rational m4 = m2 * m2, n4 = n2 * n2;
    Rational m5 = m4 * rm, n5 = n4 * rn;
    Rational m6 = m4 * m2, n6 = n4 * n2;
    Rational m8 = m4 * m4, n8 = n4 * n4;
    Rational m9 = m8 * rm, n9 = n8 * rn;
    Rational m10 = m8 * m2, n10 = n8 * n2;
    Rational m12 = m8 * m4, n12 = n8 * n4;
    Rational n14 = n12 * n2;

    QuarticModel quartic{
        5 * m4 * n2 + 4 * n6,
        4 * m5 + 8 * rm * n4,
        -2 * m2 * n2,
        -4 * m3,
        n2,
        QuarticPoint{Rational(0), rn},
    };

    WeierstrassCurve curve{
        -4 * m3 / rn,
        -2 * m2 * (n4 + 2 * m4) / n2,
        8 * rn * m5 + 16 * rm * n5,
        -20 * m4 * n4 - 16 * n8,
        104 * m6 * n6 + 32 * m2 * n10 + 80 * m10 * n2,
    };
    if (curve.discriminant() == 0) throw DegenerateCurveError();

    ECPoint base{2 * m2 * (n4 + 2 * m4) / n2, -16 * rm * (-m8 + n8) / n3};
    if (!curve.contains(base))
        throw VerificationError("distinguished point left the curve");
    if (!quartic.contains(quartic.marked))
        throw VerificationError("marked point left the quartic");

    auto forward = [=](const ECPoint& p) -> std::optional<QuarticPoint> {
        if (p.Y == 0) return std::nullopt;
        Rational U = (2 * n2 * p.X - 4 * m2 * n4 - 8 * m6) / (p.Y * rn);
        Rational V = (n4 * p.X * p.X * p.X - 6 * n6 * p.X * p.X * m2 -
                      12 * p.X * p.X * m6 * n2 + 28 * n8 * m4 * p.X +
                      32 * n4 * m8 * p.X + 32 * m12 * p.X - 16 * m9 * p.Y * rn +
                      16 * n9 * rm * p.Y + 16 * n12 * p.X - 104 * n10 * m6 -
                      32 * n14 * m2 - 80 * n6 * m10) /
                     (p.Y * p.Y * n3);
        return QuarticPoint{U, V};
    };

    auto backward = [=](const QuarticPoint& p) -> std::optional<ECPoint> {
        if (p.U == 0) return std::nullopt;
        Rational U2 = p.U * p.U, U3 = U2 * p.U;
        Rational X = (2 * rn * p.V + 2 * n2 - 4 * m3 * p.U) / U2;
        Rational Y = (4 * n3 * p.V + 4 * n4 - 8 * n2 * m3 * p.U -
                      4 * n4 * m2 * U2 - 8 * m6 * U2) /
                     (U3 * rn);
        return ECPoint{X, Y};
    };

    return BirationalLink{quartic, curve, base, forward, backward};
}

BirationalLink instance41_link() {
    WeierstrassCurve curve{Rational(1), Rational(-1), Rational(1), Rational(-27), Rational(26)};
    ECPoint base{Rational(6), Rational(-11)};

    auto forward = [](const ECPoint& p) -> std::optional<QuarticPoint> {
        if (p.X == 46) return std::nullopt;
        Rational U = (4 * p.Y + 29 * p.X - 10) / (p.X - 46);
        Rational den = (p.X - 46) * (p.X - 46);
        Rational V = (16 * p.X * p.X * p.X - 2208 * p.X * p.X - 3392 * p.X +
                      13744 - 9840 * p.Y) /
                     den;
        return QuarticPoint{U, V};
    };

    auto backward = [](const QuarticPoint& p) -> std::optional<ECPoint> {
        Rational U2 = p.U * p.U, U3 = U2 * p.U;
        Rational X = (p.V + U2 - 54 * p.U + 5) / 32;
        Rational Y = (p.U * p.V + U3 - 83 * U2 + 99 * p.U - 29 * p.V + 175) / 128;
        return ECPoint{X, Y};
    };

    // The family's U=0 marked point sits at infinity in this chart, so the
    // quartic carries the generator's image instead.
    QuarticModel quartic{Rational(1), Rational(-108), Rational(-18), Rational(996),
                         Rational(409), QuarticPoint{Rational(-3), Rational(16)}};
    return BirationalLink{quartic, curve, base, forward, backward};
}

BirationalLink instance17_link() {
    WeierstrassCurve curve{Rational(0), Rational(0), Rational(0), Rational(-91), Rational(330)};
    ECPoint base{Rational(7), Rational(-6)};

    auto forward = [](const ECPoint& p) -> std::optional<QuarticPoint> {
        Rational den = p.Y + 2 * p.X - 12;
        if (den == 0) return std::nullopt;
        Rational U = (6 * p.X - 36 + 2 * p.Y) / den;
        Rational V = (p.X * p.X * p.X - 18 * p.X * p.X + 91 * p.X - 114) / (den * den);
        return QuarticPoint{U, V};
    };

    auto backward = [](const QuarticPoint& p) -> std::optional<ECPoint> {
        if (p.U == 2) return std::nullopt;
        Rational U2 = p.U * p.U, U3 = U2 * p.U;
        Rational X = (2 * p.V + 6 - U2) / (U2 - 4 * p.U + 4);
        Rational Y = (12 * p.V - 108 + 180 * p.U - 90 * U2 - 4 * p.V * p.U + 14 * U3) /
                     (U3 - 6 * U2 + 12 * p.U - 8);
        return ECPoint{X, Y};
    };

    QuarticModel quartic{Rational(8), Rational(-50), Rational(105), Rational(-80),
                         Rational(13), QuarticPoint{Rational(2), Rational(1)}};
    return BirationalLink{quartic, curve, base, forward, backward};
}

} // namespace quartika
