#pragma once

#include <functional>
#include <string>
#include <utility>

#include "mcg/ints.hpp"

namespace mcg {

// A curve on the once-punctured torus: a coprime integer pair (p, q) up to
// sign.  Canonical form has q > 0, or q = 0 with p = 1.
class Slope {
   public:
    Slope(Integer p, Integer q) : p_(std::move(p)), q_(std::move(q)) {
        if (p_ == 0 && q_ == 0) throw HypothesisError("not a curve: (0, 0)");
        Integer g = gcd(p_, q_);
        if (g < 0) g = -g;
        if (g != 1)
            throw HypothesisError("not a curve: gcd(" + p_.get_str() + ", " +
                                  q_.get_str() + ") = " + g.get_str());
        if (q_ < 0 || (q_ == 0 && p_ < 0)) {
            p_ = -p_;
            q_ = -q_;
        }
    }

    Slope(long p, long q) : Slope(Integer(p), Integer(q)) {}

    const Integer& p() const { return p_; }
    const Integer& q() const { return q_; }

    std::string str() const { return p_.get_str() + "/" + q_.get_str(); }

    // "p/q" with unbounded integers; a bare integer n reads as n/1.
    static Slope parse(const std::string& text) {
        auto slash = text.find('/');
        if (slash == std::string::npos)
            return Slope(parse_integer(text), Integer(1));
        Integer p = parse_integer(text.substr(0, slash));
        Integer q = parse_integer(text.substr(slash + 1));
        return Slope(std::move(p), std::move(q));
    }

    friend bool operator==(const Slope& a, const Slope& b) {
        return a.p_ == b.p_ && a.q_ == b.q_;
    }
    friend bool operator!=(const Slope& a, const Slope& b) { return !(a == b); }
    friend bool operator<(const Slope& a, const Slope& b) {
        if (a.p_ != b.p_) return a.p_ < b.p_;
        return a.q_ < b.q_;
    }

    std::size_t hash() const {
        std::size_t h = hash_integer(p_);
        hash_mix(h, hash_integer(q_));
        return h;
    }

   private:
    Integer p_, q_;
};

// Geometric intersection number; on the torus the determinant |p1 q2 - p2 q1|.
inline Integer intersection(const Slope& a, const Slope& b) {
    Integer d = a.p() * b.q() - b.p() * a.q();
    if (d < 0) d = -d;
    return d;
}

struct SlopeHash {
    std::size_t operator()(const Slope& s) const { return s.hash(); }
};

}  // namespace mcg
