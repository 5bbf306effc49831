#pragma once

#include <gmpxx.h>

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace mcg {

// All group-element and intersection arithmetic is exact; entries grow
// exponentially under word products, so everything is GMP-backed.
using Integer = mpz_class;
using Rational = mpq_class;

// Malformed input text (CLI-facing usage errors).
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A stated mathematical hypothesis fails for the given input
// (non-coprime slope, twist power below 4, virtually abelian input, ...).
struct HypothesisError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A bounded search (power ladder, precision ladder, cap) ran out of budget.
struct SearchExhausted : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline Integer gcd(const Integer& a, const Integer& b) {
    Integer g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

// Floor division; denominator must be positive.
inline Integer floor_div(const Integer& a, const Integer& b) {
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

inline Integer isqrt(const Integer& n) {
    Integer r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    return r;
}

inline bool is_square(const Integer& n) {
    return n >= 0 && mpz_perfect_square_p(n.get_mpz_t()) != 0;
}

inline Integer pow_ui(const Integer& base, unsigned long e) {
    Integer r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

inline Rational make_rational(const Integer& num, const Integer& den) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline double to_double(const Rational& r) { return mpq_get_d(r.get_mpq_t()); }

// Natural log of a positive integer, safe for values far beyond double range.
inline double log_double(const Integer& n) {
    if (n <= 0) throw std::invalid_argument("log of a non-positive integer");
    signed long exp2;
    double mant = mpz_get_d_2exp(&exp2, n.get_mpz_t());
    return std::log(mant) + static_cast<double>(exp2) * std::log(2.0);
}

inline double log_double(const Rational& r) {
    return log_double(r.get_num()) - log_double(r.get_den());
}

inline std::string str(const Integer& n) { return n.get_str(); }

inline std::string str(const Rational& r) {
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

// Strict integer token: optional sign, digits only.
inline Integer parse_integer(const std::string& token) {
    if (token.empty()) throw ParseError("empty integer token");
    std::size_t i = (token[0] == '-' || token[0] == '+') ? 1 : 0;
    if (i == token.size()) throw ParseError("bad integer token '" + token + "'");
    for (; i < token.size(); ++i)
        if (token[i] < '0' || token[i] > '9')
            throw ParseError("bad integer token '" + token + "'");
    return Integer(token);
}

// "n" or "n/d"; result canonicalized, d > 0.
inline Rational parse_rational(const std::string& token) {
    auto slash = token.find('/');
    if (slash == std::string::npos) return Rational(parse_integer(token));
    Integer num = parse_integer(token.substr(0, slash));
    Integer den = parse_integer(token.substr(slash + 1));
    if (den == 0) throw ParseError("zero denominator in '" + token + "'");
    return make_rational(num, den);
}

inline void hash_mix(std::size_t& seed, std::size_t v) {
    seed ^= v + 0x9e3779b97f4a7c15ull + (seed << 6) + (seed >> 2);
}

inline std::size_t hash_integer(const Integer& n) {
    std::size_t h = static_cast<std::size_t>(mpz_sgn(n.get_mpz_t()));
    const std::size_t limbs = mpz_size(n.get_mpz_t());
    for (std::size_t i = 0; i < limbs; ++i)
        hash_mix(h, static_cast<std::size_t>(mpz_getlimbn(n.get_mpz_t(), i)));
    return h;
}

}  // namespace mcg
