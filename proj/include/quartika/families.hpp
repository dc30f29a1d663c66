#ifndef QUARTIKA_FAMILIES_HPP
#define QUARTIKA_FAMILIES_HPP

#include <vector>

#include "quartika/quadruple.hpp"
#include "quartika/quartic.hpp"

namespace quartika {

enum class Family1Form { TwoQ, ThreeQ };
enum class Family2Form { First, Second };

// Closed-form solution of N(x^4+y^4) = z^4+w^4, N = (m^4+n^4)/2, for
// nonzero same-parity m, n. TwoQ is the degree-4 polynomial family,
// ThreeQ the degree-12 one.
Quadruple family1_closed_form(const Integer& m, const Integer& n, Family1Form which);

// Closed forms for N = (m^4+1)/2, odd m with |m| >= 3. Equal to the
// family1 forms at second parameter 1.
Quadruple family2_closed_form(const Integer& m, Family2Form which);

struct PipelineResult {
    Integer j;
    QuarticPoint on_quartic; // (U,V)
    Rational k;
    Rational x, y, z, w; // rational stage, before normalization
    Quadruple quad;
};

// Multiple jP on the family curve, forward to the quartic, then through
// the parameterization k = 1/U:
//   x = k^2-2mk+4a-3m^2, y = -(k^2+2mk-4a+m^2),
//   z = sqrt(a x^2 + b y^2), w = |V| k^2,
// with (a,b) = ((m^2-n^2)/2, (m^2+n^2)/2) and N = (m^4+n^4)/2.
PipelineResult pipeline_theorem1(const Integer& m, const Integer& n, const Integer& j);

// Same chain on the multiplier-41 instance, where the quartic variable
// is k itself and (a,b,m) = (4,5,3): w = |V|.
PipelineResult pipeline_instance41(const Integer& j);

// Multiplier-17 instance: k = U, x = 2(k-2)(k-3), y = (k-1)(3k-7),
// w = |5k^2-22k+25|, z = |2V|.
PipelineResult pipeline_instance17(const Integer& j);

// The multiplier reached by the family parameters.
Integer family1_multiplier(const Integer& m, const Integer& n);

} // namespace quartika

#endif
