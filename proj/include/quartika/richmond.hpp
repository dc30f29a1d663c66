#ifndef QUARTIKA_RICHMOND_HPP
#define QUARTIKA_RICHMOND_HPP

#include <array>
#include <vector>

#include "quartika/quadruple.hpp"

namespace quartika {

// This module works in the orientation x^4+y^4 = n(z^4+w^4); a seed
// (x0,y0,z0,w0) here is the pair-swapped form of a standard Quadruple.
struct RichmondSeed {
    Integer n;
    Integer x0, y0, z0, w0;
};

struct RichmondDirection {
    Rational p, q, r, s;
};

// Coefficients (c1,c2,c3,c4) of t..t^4 in
//   (x0+pt)^4 + (y0+qt)^4 - n((z0+rt)^4 + (w0+st)^4), s = 1.
// The constant term vanishes because the seed solves the equation.
std::array<Rational, 4> expand_coefficients(const RichmondSeed& seed, const Rational& p,
                                            const Rational& q, const Rational& r,
                                            const Rational& s = Rational(1));

// A direction with c1 = c2 = 0 other than the trivial tangent direction
// (x0,y0,z0)/w0. The c1 plane reduces the problem to a conic in (p,r)
// through P0 = (x0/w0, z0/w0); a split conic yields a rational line
// through P0 (evaluated at p = selector), a nondegenerate one yields the
// second intersection of the chord through P0 with slope selector.
// Seeds with y0 = 0 or w0 = 0 are first repaired by swapping inside the
// affected pair; the direction refers to the repaired seed.
RichmondDirection solve_direction(const RichmondSeed& seed, const Rational& selector);

// One tangent-line step: t = -c3/c4 along the chosen direction, returned
// in the standard n(x^4+y^4) = z^4+w^4 orientation.
Quadruple descend(const Integer& n, const Quadruple& seed, const Rational& selector);

const std::vector<Rational>& default_selectors();

// Iterated descent; each output feeds the next step. A repeated value
// stops the chain early (reported via the warning flag).
struct ChainResult {
    std::vector<Quadruple> steps;
    bool collapsed = false;
};
ChainResult chain(const Integer& n, const Quadruple& seed, int steps,
                  const std::vector<Rational>& selector_policy = default_selectors());

// Second intersection of a line through a rational point of a conic
// A p^2 + B pr + C r^2 + D p + E r + F = 0; exposed for direct testing.
struct Conic {
    Rational A, B, C, D, E, F;
};
std::optional<std::pair<Rational, Rational>> conic_chord_second_point(
    const Conic& conic, const Rational& p0, const Rational& r0, const Rational& slope);

} // namespace quartika

#endif
