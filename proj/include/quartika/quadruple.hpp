#ifndef QUARTIKA_QUADRUPLE_HPP
#define QUARTIKA_QUADRUPLE_HPP

#include "quartika/exact.hpp"

namespace quartika {

// Primitive nonnegative integer solution of n*(x^4+y^4) = z^4+w^4.
struct Quadruple {
    Integer n;
    Integer x, y, z, w;

    bool degenerate() const { return x == 0 || y == 0 || z == 0 || w == 0; }
    bool operator==(const Quadruple& o) const = default;
};

// Exact check of n*(x^4+y^4) = z^4+w^4; signs are irrelevant.
bool verify(const Integer& n, const Integer& x, const Integer& y,
            const Integer& z, const Integer& w);
bool verify(const Quadruple& q);

// Clears denominators, divides by the common gcd, drops signs.
// Rejects tuples that fail the rational form of the equation and the
// all-zero tuple (no primitive form exists for it).
Quadruple normalize_quadruple(const Integer& n, const Rational& x, const Rational& y,
                              const Rational& z, const Rational& w);

// n*(x^4+y^4) = z^4+w^4 times n^3 gives (nx)^4+(ny)^4 = n^3*(z^4+w^4),
// i.e. the quadruple (z, w, nx, ny) for the multiplier n^3.
Quadruple scale_transform(const Quadruple& q);

// Equality up to order within the (x,y) and (z,w) pairs.
bool same_solution(const Quadruple& a, const Quadruple& b);

} // namespace quartika

#endif
