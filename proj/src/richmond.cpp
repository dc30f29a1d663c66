#include "quartika/richmond.hpp"

#include <algorithm>

namespace quartika {

namespace {

bool seed_holds(const RichmondSeed& s) {
    return pow4(s.x0) + pow4(s.y0) == s.n * (pow4(s.z0) + pow4(s.w0));
}

// Within-pair swaps so that y0 and w0 (the two divisor roles in the
// construction) are nonzero; any nonzero verified seed admits this.
RichmondSeed canonical_seed(RichmondSeed s) {
    if (s.y0 == 0) std::swap(s.x0, s.y0);
    if (s.w0 == 0) std::swap(s.z0, s.w0);
    return s;
}

// Conic in (p,r) obtained by substituting the c1 = 0 plane into c2 = 0,
// cleared by y0^4.
Conic conic_of(const RichmondSeed& s) {
    Integer x3 = s.x0 * s.x0 * s.x0, z3 = s.z0 * s.z0 * s.z0, w3 = s.w0 * s.w0 * s.w0;
    Integer y4 = pow4(s.y0);
    return Conic{
        Rational(s.x0 * s.x0 * y4 + x3 * x3),
        Rational(-2 * x3 * s.n * z3),
        Rational(s.n * s.n * z3 * z3 - s.n * s.z0 * s.z0 * y4),
        Rational(-2 * x3 * s.n * w3),
        Rational(2 * s.n * s.n * z3 * w3),
        Rational(s.n * s.n * w3 * w3 - s.n * s.w0 * s.w0 * y4),
    };
}

Integer ipow(const Integer& v, unsigned e) {
    Integer r;
    mpz_pow_ui(r.get_mpz_t(), v.get_mpz_t(), e);
    return r;
}

Rational conic_eval(const Conic& K, const Rational& p, const Rational& r) {
    return K.A * p * p + K.B * p * r + K.C * r * r + K.D * p + K.E * r + K.F;
}

Rational conic_det3(const Conic& K) {
    Rational b = K.B / 2, d = K.D / 2, e = K.E / 2;
    return K.A * (K.C * K.F - e * e) - b * (b * K.F - e * d) + d * (b * e - K.C * d);
}

Rational q_from_plane(const RichmondSeed& s, const Rational& p, const Rational& r) {
    Integer x3 = s.x0 * s.x0 * s.x0, y3 = s.y0 * s.y0 * s.y0;
    Integer z3 = s.z0 * s.z0 * s.z0, w3 = s.w0 * s.w0 * s.w0;
    return (s.n * z3 * r + Rational(s.n * w3) - x3 * p) / Rational(y3);
}

} // namespace

std::array<Rational, 4> expand_coefficients(const RichmondSeed& seed, const Rational& p,
                                            const Rational& q, const Rational& r,
                                            const Rational& s) {
    if (!seed_holds(seed)) throw VerificationError("descent seed fails the equation");
    const int binom[5] = {1, 4, 6, 4, 1};
    std::array<Rational, 4> out;
    Rational pp = p, qq = q, rr = r, ss = s;
    for (int i = 1; i <= 4; ++i) {
        unsigned e = 4 - i;
        out[i - 1] = binom[i] * (Rational(ipow(seed.x0, e)) * pp +
                                 Rational(ipow(seed.y0, e)) * qq -
                                 Rational(seed.n * ipow(seed.z0, e)) * rr -
                                 Rational(seed.n * ipow(seed.w0, e)) * ss);
        pp *= p;
        qq *= q;
        rr *= r;
        ss *= s;
    }
    return out;
}

RichmondDirection solve_direction(const RichmondSeed& raw, const Rational& selector) {
    RichmondSeed s = canonical_seed(raw);
    if (!seed_holds(s)) throw VerificationError("descent seed fails the equation");
    if (s.y0 == 0 || s.w0 == 0)
        throw DegenerateStepError("seed has a vanishing pair");

    Rational p0 = make_rational(s.x0, s.w0);
    Rational r0 = make_rational(s.z0, s.w0);
    Conic K = conic_of(s);
    if (conic_eval(K, p0, r0) != 0)
        throw VerificationError("trivial direction left the conic");

    Rational p1, r1;
    if (conic_det3(K) == 0) {
        Rational det2 = 4 * K.A * K.C - K.B * K.B;
        if (det2 != 0) {
            // line pair crossing at the singular point
            Rational ps = (-2 * K.C * K.D + K.B * K.E) / det2;
            Rational rs = (-2 * K.A * K.E + K.B * K.D) / det2;
            if (ps == p0 && rs == r0) {
                // crossing at the known point: line slopes solve C s^2 + B s + A = 0
                if (K.C == 0 && K.B == 0) {
                    p1 = p0; // double vertical line
                    r1 = selector;
                } else if (K.C == 0) {
                    Rational slope = -K.A / K.B;
                    p1 = selector;
                    r1 = r0 + slope * (p1 - p0);
                } else {
                    Rational dsc = K.B * K.B - 4 * K.A * K.C;
                    if (dsc < 0) throw NoNontrivialDirectionError();
                    auto sq = rat_sqrt_exact(dsc);
                    if (!sq) throw NoNontrivialDirectionError();
                    Rational slope = (-K.B - *sq) / (2 * K.C);
                    p1 = selector;
                    r1 = r0 + slope * (p1 - p0);
                }
            } else if (ps == p0) {
                // the line through P0 and the singular point is vertical
                p1 = p0;
                r1 = selector;
            } else {
                Rational slope = (rs - r0) / (ps - p0);
                p1 = selector;
                r1 = r0 + slope * (p1 - p0);
            }
        } else if (K.A != 0 || K.B != 0 || K.C != 0) {
            // parallel line pair: move along the kernel of the quadratic part
            Rational dp = (K.A == 0 && K.B == 0) ? Rational(1) : -K.B;
            Rational dr = (K.A == 0 && K.B == 0) ? Rational(0) : 2 * K.A;
            if (dp == 0 && dr == 0) throw NoNontrivialDirectionError();
            if (dp == 0) {
                p1 = p0;
                r1 = selector;
            } else {
                p1 = selector;
                r1 = r0 + (dr / dp) * (p1 - p0);
            }
        } else {
            // no quadratic part at all: the residual line itself
            if (K.E != 0) {
                p1 = selector;
                r1 = (-K.F - K.D * p1) / K.E;
            } else if (K.D != 0) {
                r1 = selector;
                p1 = (-K.F - K.E * r1) / K.D;
            } else {
                throw NoNontrivialDirectionError();
            }
        }
    } else {
        // chord through P0 with slope selector; Vieta gives the second root
        Rational mu = selector;
        Rational a2 = K.A + K.B * mu + K.C * mu * mu;
        if (a2 == 0) throw DegenerateStepError("chord meets the conic at infinity");
        Rational c = r0 - mu * p0;
        Rational a1 = K.B * c + 2 * K.C * mu * c + K.D + K.E * mu;
        p1 = -a1 / a2 - p0;
        r1 = r0 + mu * (p1 - p0);
    }

    if (p1 == p0 && r1 == r0) throw DegenerateStepError("direction reduces to the trivial one");
    return RichmondDirection{p1, q_from_plane(s, p1, r1), r1, Rational(1)};
}

Quadruple descend(const Integer& n, const Quadruple& seed, const Rational& selector) {
    RichmondSeed s = canonical_seed(RichmondSeed{n, seed.z, seed.w, seed.x, seed.y});
    RichmondDirection dir = solve_direction(s, selector);
    auto c = expand_coefficients(s, dir.p, dir.q, dir.r, dir.s);
    if (c[0] != 0 || c[1] != 0)
        throw VerificationError("direction fails to kill the low coefficients");
    if (c[3] == 0) throw ZeroQuarticError();
    Rational t = -c[2] / c[3];
    if (t == 0) throw DegenerateStepError("tangent step has length zero");

    Rational X = s.x0 + dir.p * t;
    Rational Y = s.y0 + dir.q * t;
    Rational Z = s.z0 + dir.r * t;
    Rational W = s.w0 + dir.s * t;
    Quadruple out = normalize_quadruple(n, Z, W, X, Y);
    if (same_solution(out, seed))
        throw DegenerateStepError("descent returned the seed");
    return out;
}

ChainResult chain(const Integer& n, const Quadruple& seed, int steps,
                  const std::vector<Rational>& selector_policy) {
    if (steps < 1) throw Error("BadArgument", "chain needs at least one step");
    ChainResult result;
    Quadruple cur = seed;
    for (int i = 0; i < steps; ++i) {
        Quadruple next{};
        bool got = false;
        std::exception_ptr last;
        for (const Rational& sel : selector_policy) {
            try {
                next = descend(n, cur, sel);
                got = true;
                break;
            } catch (const Error&) {
                last = std::current_exception();
            }
        }
        if (!got) std::rethrow_exception(last);
        bool dup = std::any_of(result.steps.begin(), result.steps.end(),
                               [&](const Quadruple& q) { return same_solution(q, next); });
        if (dup) {
            result.collapsed = true;
            break;
        }
        result.steps.push_back(next);
        cur = next;
    }
    return result;
}

const std::vector<Rational>& default_selectors() {
    static const std::vector<Rational> policy{
        Rational(1), Rational(2),  Rational(-1), make_rational(1, 2),
        Rational(3), Rational(-2), Rational(5),  make_rational(-3, 1)};
    return policy;
}

std::optional<std::pair<Rational, Rational>> conic_chord_second_point(
    const Conic& conic, const Rational& p0, const Rational& r0, const Rational& slope) {
    Rational a2 = conic.A + conic.B * slope + conic.C * slope * slope;
    if (a2 == 0) return std::nullopt;
    Rational c = r0 - slope * p0;
    Rational a1 = conic.B * c + 2 * conic.C * slope * c + conic.D + conic.E * slope;
    Rational p1 = -a1 / a2 - p0;
    return std::make_pair(p1, r0 + slope * (p1 - p0));
}

} // namespace quartika
