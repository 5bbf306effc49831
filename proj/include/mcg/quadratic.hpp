#pragma once

#include <string>
#include <utility>

#include "mcg/ints.hpp"

namespace mcg {

// Exact arithmetic in real quadratic fields: values (a + b*sqrt(D))/c with
// integer a, b, c > 0 and D >= 0.  Dilatations of hyperbolic matrices and
// their fixed points on the projective line live here; nothing is ever
// rounded to floating point except explicit decimal renderings.
//
// Normalization: square factors of D found by trial division (and a
// perfect-square residual check) are folded into b, then gcd(a, b, c) is
// cancelled and the sign of c fixed positive.  Order comparisons and
// arithmetic are closed within a fixed radicand D; mixed-radicand order
// comparisons are rejected (rationals, D = 0, compare with anything).
class QuadraticIrrational {
   public:
    QuadraticIrrational(Integer a, Integer b, Integer c, Integer d)
        : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d)) {
        if (c_ == 0) throw std::invalid_argument("quadratic irrational with c = 0");
        if (d_ < 0) throw std::invalid_argument("negative radicand");
        normalize();
    }

    static QuadraticIrrational rational(Integer num, Integer den) {
        return QuadraticIrrational(std::move(num), 0, std::move(den), 0);
    }
    static QuadraticIrrational rational(const Rational& r) {
        return QuadraticIrrational(r.get_num(), 0, r.get_den(), 0);
    }
    // sqrt(D) scaled: (b * sqrt(D)) / c
    static QuadraticIrrational root_multiple(Integer b, Integer c, Integer d) {
        return QuadraticIrrational(0, std::move(b), std::move(c), std::move(d));
    }

    const Integer& a() const { return a_; }
    const Integer& b() const { return b_; }
    const Integer& c() const { return c_; }
    const Integer& radicand() const { return d_; }

    bool is_rational() const { return b_ == 0; }
    Rational as_rational() const {
        if (!is_rational()) throw std::logic_error("value is irrational");
        return make_rational(a_, c_);
    }

    friend bool operator==(const QuadraticIrrational& x,
                           const QuadraticIrrational& y) {
        return x.a_ == y.a_ && x.b_ == y.b_ && x.c_ == y.c_ && x.d_ == y.d_;
    }
    friend bool operator!=(const QuadraticIrrational& x,
                           const QuadraticIrrational& y) {
        return !(x == y);
    }

    // sign of (a + b*sqrt(D)), over a positive denominator
    int sign() const {
        int sa = mpz_sgn(a_.get_mpz_t());
        int sb = mpz_sgn(b_.get_mpz_t());
        if (sb == 0) return sa;
        if (sa == 0) return sb;
        if (sa == sb) return sa;
        // opposite signs: compare a^2 against b^2 D
        Integer lhs = a_ * a_;
        Integer rhs = b_ * b_ * d_;
        if (lhs == rhs) return 0;  // only possible if D is a perfect square
        return (lhs > rhs) ? sa : sb;
    }

    friend bool operator<(const QuadraticIrrational& x,
                          const QuadraticIrrational& y) {
        return x.diff_sign(y) < 0;
    }
    friend bool operator>(const QuadraticIrrational& x,
                          const QuadraticIrrational& y) {
        return x.diff_sign(y) > 0;
    }
    friend bool operator<=(const QuadraticIrrational& x,
                           const QuadraticIrrational& y) {
        return x.diff_sign(y) <= 0;
    }
    friend bool operator>=(const QuadraticIrrational& x,
                           const QuadraticIrrational& y) {
        return x.diff_sign(y) >= 0;
    }

    bool operator<(const Rational& r) const { return cmp_rational(r) < 0; }
    bool operator>(const Rational& r) const { return cmp_rational(r) > 0; }
    bool operator<=(const Rational& r) const { return cmp_rational(r) <= 0; }
    bool operator>=(const Rational& r) const { return cmp_rational(r) >= 0; }

    QuadraticIrrational operator-() const {
        return QuadraticIrrational(-a_, -b_, c_, d_);
    }

    friend QuadraticIrrational operator+(const QuadraticIrrational& x,
                                         const QuadraticIrrational& y) {
        Integer d = merged_radicand(x, y);
        return QuadraticIrrational(x.a_ * y.c_ + y.a_ * x.c_,
                                   x.b_ * y.c_ + y.b_ * x.c_, x.c_ * y.c_, d);
    }
    friend QuadraticIrrational operator-(const QuadraticIrrational& x,
                                         const QuadraticIrrational& y) {
        return x + (-y);
    }
    friend QuadraticIrrational operator*(const QuadraticIrrational& x,
                                         const QuadraticIrrational& y) {
        Integer d = merged_radicand(x, y);
        return QuadraticIrrational(x.a_ * y.a_ + x.b_ * y.b_ * d,
                                   x.a_ * y.b_ + x.b_ * y.a_, x.c_ * y.c_, d);
    }
    friend QuadraticIrrational operator/(const QuadraticIrrational& x,
                                         const QuadraticIrrational& y) {
        if (y.sign() == 0) throw std::invalid_argument("division by zero");
        Integer d = merged_radicand(x, y);
        // 1/((a + b sqrt(D))/c) = c (a - b sqrt(D)) / (a^2 - b^2 D)
        Integer norm = y.a_ * y.a_ - y.b_ * y.b_ * d;
        QuadraticIrrational inv(y.c_ * y.a_, -y.c_ * y.b_, norm, d);
        return x * inv;
    }

    QuadraticIrrational conjugate() const {
        return QuadraticIrrational(a_, -b_, c_, d_);
    }

    // Exact floor of the value.
    Integer floor() const {
        if (b_ == 0) return floor_div(a_, c_);
        Integer s = isqrt(b_ * b_ * d_);
        if (b_ > 0) {
            // b sqrt(D) in [s, s+1), irrational so never equal to s
            return floor_div(a_ + s, c_);
        }
        // b sqrt(D) in (-(s+1), -s], equality impossible
        Integer t = a_ - s;
        if (mpz_divisible_p(t.get_mpz_t(), c_.get_mpz_t()))
            return t / c_ - 1;
        return floor_div(t, c_);
    }

    // floor(value * 2^k) — used to build rational neighborhoods.
    Integer floor_scaled_pow2(unsigned long k) const {
        Integer scale = 1;
        mpz_mul_2exp(scale.get_mpz_t(), scale.get_mpz_t(), k);
        return QuadraticIrrational(a_ * scale, b_ * scale, c_, d_).floor();
    }

    double to_double() const {
        return to_double_digits(18);
    }

    // Decimal rendering with `digits` digits after the point (truncated).
    std::string decimal(unsigned digits = 12) const {
        Integer scale = pow_ui(10, digits);
        Integer scaled = QuadraticIrrational(a_ * scale, b_ * scale, c_, d_).floor();
        bool neg = scaled < 0;
        if (neg) scaled = -scaled - 1;  // truncate toward zero on the digits below
        Integer ip = scaled / scale;
        Integer fp = scaled % scale;
        std::string frac = fp.get_str();
        frac.insert(frac.begin(), digits - frac.size(), '0');
        return (neg ? "-" : "") + ip.get_str() + "." + frac;
    }

    std::string str() const {
        if (b_ == 0) return a_.get_str() + "/" + c_.get_str();
        return "(" + a_.get_str() + " + " + b_.get_str() + "*sqrt(" +
               d_.get_str() + "))/" + c_.get_str();
    }

   private:
    Integer a_, b_, c_, d_;

    double to_double_digits(unsigned digits) const {
        Integer scale = pow_ui(10, digits);
        Integer scaled = QuadraticIrrational(a_ * scale, b_ * scale, c_, d_).floor();
        return mpz_get_d(scaled.get_mpz_t()) / mpz_get_d(scale.get_mpz_t());
    }

    int cmp_rational(const Rational& r) const {
        QuadraticIrrational other(r.get_num(), 0, r.get_den(), d_);
        return diff_sign(other);
    }

    int diff_sign(const QuadraticIrrational& y) const {
        Integer d = merged_radicand(*this, y);
        QuadraticIrrational diff(a_ * y.c_ - y.a_ * c_, b_ * y.c_ - y.b_ * c_,
                                 c_ * y.c_, d);
        return diff.sign();
    }

    static Integer merged_radicand(const QuadraticIrrational& x,
                                   const QuadraticIrrational& y) {
        if (x.b_ == 0) return y.d_;
        if (y.b_ == 0) return x.d_;
        if (x.d_ != y.d_)
            throw std::logic_error("mixed radicands " + x.d_.get_str() + " and " +
                                   y.d_.get_str());
        return x.d_;
    }

    void normalize() {
        if (d_ == 0 || d_ == 1 || b_ == 0) {
            if (d_ == 1) a_ += b_;
            b_ = (d_ == 1) ? Integer(0) : b_;
            if (b_ == 0) d_ = 0;
        } else {
            extract_square_part();
            if (d_ == 1) {
                a_ += b_;
                b_ = 0;
                d_ = 0;
            }
            if (b_ == 0) d_ = 0;
        }
        if (c_ < 0) {
            a_ = -a_;
            b_ = -b_;
            c_ = -c_;
        }
        Integer g = gcd(gcd(a_, b_), c_);
        if (g > 1) {
            a_ /= g;
            b_ /= g;
            c_ /= g;
        }
    }

    // Pull square factors of D into b.  Trial division up to a fixed bound,
    // then a perfect-square check on the residual; radicands beyond that are
    // kept as-is, which never affects fixed-D comparisons.
    void extract_square_part() {
        static constexpr unsigned long kTrialBound = 10000;
        Integer d = d_;
        Integer square_part = 1;
        for (unsigned long f = 2; f <= kTrialBound; f == 2 ? f = 3 : f += 2) {
            Integer ff = Integer(f) * f;
            if (ff > d) break;
            while (mpz_divisible_p(d.get_mpz_t(), ff.get_mpz_t())) {
                d /= ff;
                square_part *= f;
            }
        }
        if (d > 1 && is_square(d)) {
            Integer r = isqrt(d);
            square_part *= r;
            d = 1;
        }
        b_ *= square_part;
        d_ = d;
    }
};

}  // namespace mcg
