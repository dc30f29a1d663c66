#include "quartika/quadruple.hpp"

namespace quartika {

bool verify(const Integer& n, const Integer& x, const Integer& y,
            const Integer& z, const Integer& w) {
    return n * (pow4(x) + pow4(y)) == pow4(z) + pow4(w);
}

bool verify(const Quadruple& q) { return verify(q.n, q.x, q.y, q.z, q.w); }

Quadruple normalize_quadruple(const Integer& n, const Rational& x, const Rational& y,
                              const Rational& z, const Rational& w) {
    if (n < 1) throw VerificationError("multiplier must be positive");
    if (n * (pow4(x) + pow4(y)) != pow4(z) + pow4(w))
        throw VerificationError("rational tuple fails the equation");
    if (x == 0 && y == 0)
        throw VerificationError("zero tuple has no primitive form");

    Integer common = denominator(x);
    mpz_lcm(common.get_mpz_t(), common.get_mpz_t(), denominator(y).get_mpz_t());
    mpz_lcm(common.get_mpz_t(), common.get_mpz_t(), denominator(z).get_mpz_t());
    mpz_lcm(common.get_mpz_t(), common.get_mpz_t(), denominator(w).get_mpz_t());

    Integer xi = numerator(x * common);
    Integer yi = numerator(y * common);
    Integer zi = numerator(z * common);
    Integer wi = numerator(w * common);

    Integer g = gcd(gcd(xi, yi), gcd(zi, wi));
    Quadruple q{n, abs(xi / g), abs(yi / g), abs(zi / g), abs(wi / g)};
    if (!verify(q)) throw VerificationError("normalization broke the equation");
    return q;
}

Quadruple scale_transform(const Quadruple& q) {
    if (q.n == 1) return q;
    Integer n3 = q.n * q.n * q.n;
    return normalize_quadruple(n3, Rational(q.z), Rational(q.w),
                               Rational(q.n * q.x), Rational(q.n * q.y));
}

bool same_solution(const Quadruple& a, const Quadruple& b) {
    if (a.n != b.n) return false;
    bool xy = (a.x == b.x && a.y == b.y) || (a.x == b.y && a.y == b.x);
    bool zw = (a.z == b.z && a.w == b.w) || (a.z == b.w && a.w == b.z);
    return xy && zw;
}

} // namespace quartika
