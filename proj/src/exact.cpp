#include "quartika/exact.hpp"

#include <cctype>

namespace quartika {

Rational make_rational(const Integer& num, const Integer& den) {
    if (den == 0) throw Error("ZeroDenominator", "rational with zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

Integer numerator(const Rational& q) { return Integer(q.get_num()); }

Integer denominator(const Rational& q) { return Integer(q.get_den()); }

std::optional<Integer> int_sqrt_exact(const Integer& v) {
    if (v < 0) throw NegativeRadicandError();
    Integer root, rem;
    mpz_sqrtrem(root.get_mpz_t(), rem.get_mpz_t(), v.get_mpz_t());
    if (rem != 0) return std::nullopt;
    return root;
}

std::optional<Rational> rat_sqrt_exact(const Rational& v) {
    if (v < 0) throw NegativeRadicandError();
    auto num = int_sqrt_exact(numerator(v));
    if (!num) return std::nullopt;
    auto den = int_sqrt_exact(denominator(v));
    if (!den) return std::nullopt;
    return make_rational(*num, *den);
}

std::optional<Integer> parse_integer(const std::string& text) {
    if (text.empty()) return std::nullopt;
    std::size_t start = (text[0] == '+' || text[0] == '-') ? 1 : 0;
    if (start == text.size()) return std::nullopt;
    for (std::size_t i = start; i < text.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(text[i]))) return std::nullopt;
    return Integer(text[0] == '+' ? text.substr(1) : text, 10);
}

Integer pow4(const Integer& v) {
    Integer sq = v * v;
    return sq * sq;
}

Rational pow4(const Rational& v) {
    Rational sq = v * v;
    return sq * sq;
}

} // namespace quartika
