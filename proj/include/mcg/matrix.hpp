#pragma once

#include <array>
#include <cstdlib>
#include <string>
#include <utility>
#include <vector>

#include "mcg/ints.hpp"
#include "mcg/slope.hpp"

namespace mcg {

// A mapping class of the once-punctured torus: a determinant-1 integer
// 2x2 matrix.  Group identity is exact on entries; the action on curves
// identifies M and -M (see projectively_equal).
class MappingClass {
   public:
    MappingClass(Integer a, Integer b, Integer c, Integer d)
        : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d)) {
        if (a_ * d_ - b_ * c_ != 1)
            throw HypothesisError("matrix " + str() + " has determinant != 1");
    }

    MappingClass(long a, long b, long c, long d)
        : MappingClass(Integer(a), Integer(b), Integer(c), Integer(d)) {}

    static MappingClass identity() { return MappingClass(1, 0, 0, 1); }

    const Integer& a() const { return a_; }
    const Integer& b() const { return b_; }
    const Integer& c() const { return c_; }
    const Integer& d() const { return d_; }

    Integer trace() const { return a_ + d_; }

    friend MappingClass operator*(const MappingClass& x, const MappingClass& y) {
        return MappingClass(x.a_ * y.a_ + x.b_ * y.c_, x.a_ * y.b_ + x.b_ * y.d_,
                            x.c_ * y.a_ + x.d_ * y.c_, x.c_ * y.b_ + x.d_ * y.d_);
    }

    MappingClass inverse() const { return MappingClass(d_, -b_, -c_, a_); }

    MappingClass negated() const { return MappingClass(-a_, -b_, -c_, -d_); }

    MappingClass pow(long n) const {
        if (n < 0) return inverse().pow(-n);
        MappingClass result = identity();
        MappingClass base = *this;
        while (n > 0) {
            if (n & 1) result = result * base;
            if (n >>= 1) base = base * base;
        }
        return result;
    }

    // Action on curves: canonical slope of M * (p, q)^T.  Unimodularity
    // preserves coprimality, so the result is always a valid slope.
    Slope apply(const Slope& s) const {
        return Slope(a_ * s.p() + b_ * s.q(), c_ * s.p() + d_ * s.q());
    }

    bool is_identity() const {
        return a_ == 1 && b_ == 0 && c_ == 0 && d_ == 1;
    }
    bool is_minus_identity() const {
        return a_ == -1 && b_ == 0 && c_ == 0 && d_ == -1;
    }
    bool is_plus_minus_identity() const {
        return is_identity() || is_minus_identity();
    }

    friend bool operator==(const MappingClass& x, const MappingClass& y) {
        return x.a_ == y.a_ && x.b_ == y.b_ && x.c_ == y.c_ && x.d_ == y.d_;
    }
    friend bool operator!=(const MappingClass& x, const MappingClass& y) {
        return !(x == y);
    }
    friend bool operator<(const MappingClass& x, const MappingClass& y) {
        if (x.a_ != y.a_) return x.a_ < y.a_;
        if (x.b_ != y.b_) return x.b_ < y.b_;
        if (x.c_ != y.c_) return x.c_ < y.c_;
        return x.d_ < y.d_;
    }

    std::string str() const {
        return "[[" + a_.get_str() + "," + b_.get_str() + "],[" + c_.get_str() +
               "," + d_.get_str() + "]]";
    }

    // Canonical key for hashed element stores.
    std::string key() const {
        return a_.get_str() + "|" + b_.get_str() + "|" + c_.get_str() + "|" +
               d_.get_str();
    }

    std::size_t hash() const {
        std::size_t h = hash_integer(a_);
        hash_mix(h, hash_integer(b_));
        hash_mix(h, hash_integer(c_));
        hash_mix(h, hash_integer(d_));
        return h;
    }

    // Accepts "[[a,b],[c,d]]" (whitespace tolerated) or flat "a b c d".
    static MappingClass parse(const std::string& text) {
        std::vector<std::string> tokens;
        std::string current;
        bool bracketed = false;
        for (char ch : text) {
            if (ch == '[' || ch == ']') {
                bracketed = true;
                if (!current.empty()) tokens.push_back(std::exchange(current, {}));
            } else if (ch == ',' || ch == ' ' || ch == '\t' || ch == '\n') {
                if (!current.empty()) tokens.push_back(std::exchange(current, {}));
            } else {
                current += ch;
            }
        }
        if (!current.empty()) tokens.push_back(current);
        if (tokens.size() != 4)
            throw ParseError("matrix text '" + text + "' does not have 4 entries");
        (void)bracketed;
        return MappingClass(parse_integer(tokens[0]), parse_integer(tokens[1]),
                            parse_integer(tokens[2]), parse_integer(tokens[3]));
    }

   private:
    Integer a_, b_, c_, d_;
};

inline bool projectively_equal(const MappingClass& x, const MappingClass& y) {
    return x == y || x == y.negated();
}

inline bool commute(const MappingClass& x, const MappingClass& y) {
    return x * y == y * x;
}

// Kernel of the action on homology with Z/3 coefficients: M = I (mod 3)
// entrywise, in the determinant-1 group (not projectively).
inline bool is_pure(const MappingClass& m) {
    auto mod3_zero = [](const Integer& n) {
        Integer r;
        mpz_mod_ui(r.get_mpz_t(), n.get_mpz_t(), 3);
        return r == 0;
    };
    return mod3_zero(m.a() - 1) && mod3_zero(m.b()) && mod3_zero(m.c()) &&
           mod3_zero(m.d() - 1);
}

// Right Dehn twist about `axis`, to the n-th power:
// I + n * [[-pq, p^2], [-q^2, pq]].  Fixes the axis, has trace 2, and
// twist_matrix(axis, n) * twist_matrix(axis, m) = twist_matrix(axis, n + m).
inline MappingClass twist_matrix(const Slope& axis, const Integer& n) {
    if (n == 0) throw HypothesisError("twist power must be nonzero");
    const Integer& p = axis.p();
    const Integer& q = axis.q();
    return MappingClass(1 - n * p * q, n * p * p, -n * q * q, 1 + n * p * q);
}

struct MappingClassHash {
    std::size_t operator()(const MappingClass& m) const { return m.hash(); }
};

}  // namespace mcg
