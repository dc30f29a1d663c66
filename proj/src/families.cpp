#include "quartika/families.hpp"

namespace quartika {

Integer family1_multiplier(const Integer& m, const Integer& n) {
    return (pow4(m) + pow4(n)) / 2;
}

Quadruple family1_closed_form(const Integer& m, const Integer& n, Family1Form which) {
    if (m == 0 || n == 0)
        throw DegenerateFamilyError("parameters must be nonzero");
    if (mpz_odd_p(m.get_mpz_t()) != mpz_odd_p(n.get_mpz_t()))
        throw OppositeParityError();

    Integer m2 = m * m, n2 = n * n;
    Integer m4 = m2 * m2, n4 = n2 * n2;
    Integer N = (m4 + n4) / 2;

    Integer x, y, z, w;
    if (which == Family1Form::TwoQ) {
        x = -n4 + 4 * m2 * n2 + m4;
        y = n4 + 4 * m2 * n2 - m4;
        z = (3 * n4 + m4) * m;
        w = (n4 + 3 * m4) * n;
    } else {
        Integer m6 = m4 * m2, n6 = n4 * n2;
        Integer m8 = m4 * m4, n8 = n4 * n4;
        Integer m10 = m8 * m2, n10 = n8 * n2;
        Integer m12 = m8 * m4, n12 = n8 * n4;
        x = m12 + 12 * n2 * m10 - 19 * m8 * n4 + 40 * n6 * m6 + 19 * m4 * n8 +
            12 * n10 * m2 - n12;
        y = -m12 + 12 * n2 * m10 + 19 * m8 * n4 + 40 * n6 * m6 - 19 * m4 * n8 +
            12 * n10 * m2 + n12;
        z = m * (m12 + 41 * m8 * n4 + 27 * m4 * n8 - 5 * n12);
        w = n * (-n12 - 41 * m4 * n8 - 27 * m8 * n4 + 5 * m12);
    }
    if (!verify(N, x, y, z, w))
        throw VerificationError("closed form fails its own multiplier");
    return normalize_quadruple(N, Rational(x), Rational(y), Rational(z), Rational(w));
}

Quadruple family2_closed_form(const Integer& m, Family2Form which) {
    if (mpz_even_p(m.get_mpz_t()))
        throw OppositeParityError("even parameter leaves this family");
    if (abs(m) < 3)
        throw DegenerateFamilyError("|m| = 1 collapses the family");

    Integer m2 = m * m, m4 = m2 * m2;
    Integer N = (m4 + 1) / 2;

    Integer x, y, z, w;
    if (which == Family2Form::First) {
        x = m4 + 4 * m2 - 1;
        y = m4 - 4 * m2 - 1;
        z = 3 * m4 + 1;
        w = (m4 + 3) * m;
    } else {
        Integer m6 = m4 * m2, m8 = m4 * m4;
        Integer m10 = m8 * m2, m12 = m8 * m4;
        x = m12 + 12 * m10 - 19 * m8 + 40 * m6 + 19 * m4 + 12 * m2 - 1;
        y = m12 - 12 * m10 - 19 * m8 - 40 * m6 + 19 * m4 - 12 * m2 - 1;
        z = 5 * m12 - 27 * m8 - 41 * m4 - 1;
        w = m * (m12 + 41 * m8 + 27 * m4 - 5);
    }
    if (!verify(N, x, y, z, w))
        throw VerificationError("closed form fails its own multiplier");
    return normalize_quadruple(N, Rational(x), Rational(y), Rational(z), Rational(w));
}

namespace {

QuarticPoint forward_multiple(const BirationalLink& link, const Integer& j) {
    ECValue pj = mul(link.curve, j, link.base);
    if (!pj) throw ExceptionalPointError("multiple of the base point is the identity");
    auto q = link.forward(*pj);
    if (!q) throw ExceptionalPointError("multiple lands on the exceptional set");
    if (!link.quartic.contains(*q))
        throw VerificationError("forward image left the quartic");
    return *q;
}

PipelineResult finish_parameterized(const Integer& N, const Integer& j,
                                    const QuarticPoint& uv, const Rational& k,
                                    const Rational& a, const Rational& b,
                                    const Rational& m, const Rational& w) {
    Rational x = k * k - 2 * m * k + 4 * a - 3 * m * m;
    Rational y = -(k * k + 2 * m * k - 4 * a + m * m);
    auto z = rat_sqrt_exact(a * x * x + b * y * y);
    if (!z) throw NotASquareError("z^2 = a x^2 + b y^2 has no rational root");
    if (w * w != b * x * x - a * y * y)
        throw VerificationError("w identity fails at the rational stage");
    Quadruple quad = normalize_quadruple(N, x, y, *z, w);
    return PipelineResult{j, uv, k, x, y, *z, w, quad};
}

} // namespace

PipelineResult pipeline_theorem1(const Integer& m, const Integer& n, const Integer& j) {
    BirationalLink link = theorem1_link(m, n);
    QuarticPoint uv = forward_multiple(link, j);
    if (uv.U == 0) throw ExceptionalPointError("U = 0 has no finite k");
    Rational k = 1 / uv.U;
    Rational a = make_rational(m * m - n * n, 2);
    Rational b = make_rational(m * m + n * n, 2);
    Rational w = abs(uv.V) * k * k;
    return finish_parameterized(family1_multiplier(m, n), j, uv, k, a, b, Rational(m), w);
}

PipelineResult pipeline_instance41(const Integer& j) {
    BirationalLink link = instance41_link();
    QuarticPoint uv = forward_multiple(link, j);
    Rational k = uv.U;
    return finish_parameterized(Integer(41), j, uv, k, Rational(4), Rational(5),
                                Rational(3), abs(uv.V));
}

PipelineResult pipeline_instance17(const Integer& j) {
    BirationalLink link = instance17_link();
    QuarticPoint uv = forward_multiple(link, j);
    Rational k = uv.U;
    Rational x = 2 * (k - 2) * (k - 3);
    Rational y = (k - 1) * (3 * k - 7);
    Rational w = abs(5 * k * k - 22 * k + 25);
    Rational z = abs(2 * uv.V);
    if (4 * z * z != -(w * w) + 17 * y * y)
        throw VerificationError("z identity fails at the rational stage");
    Quadruple quad = normalize_quadruple(Integer(17), x, y, z, w);
    return PipelineResult{j, uv, k, x, y, z, w, quad};
}

} // namespace quartika
