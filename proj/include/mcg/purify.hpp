#pragma once

#include <array>
#include <deque>
#include <map>
#include <span>
#include <vector>

#include "mcg/ints.hpp"
#include "mcg/matrix.hpp"

namespace mcg {

namespace detail {

// Determinant-1 matrices over Z/3, packed into a base-3 key (81 values,
// 24 of them in the group).
struct Mod3 {
    std::array<unsigned char, 4> e;  // a, b, c, d mod 3

    static Mod3 of(const MappingClass& m) {
        auto red = [](const Integer& n) {
            Integer r;
            mpz_mod_ui(r.get_mpz_t(), n.get_mpz_t(), 3);
            return static_cast<unsigned char>(mpz_get_ui(r.get_mpz_t()));
        };
        return {{red(m.a()), red(m.b()), red(m.c()), red(m.d())}};
    }

    static Mod3 identity() { return {{1, 0, 0, 1}}; }

    friend Mod3 operator*(const Mod3& x, const Mod3& y) {
        auto mul = [](unsigned a, unsigned b) { return (a * b) % 3; };
        auto add = [](unsigned a, unsigned b) { return (a + b) % 3; };
        return {{static_cast<unsigned char>(add(mul(x.e[0], y.e[0]), mul(x.e[1], y.e[2]))),
                 static_cast<unsigned char>(add(mul(x.e[0], y.e[1]), mul(x.e[1], y.e[3]))),
                 static_cast<unsigned char>(add(mul(x.e[2], y.e[0]), mul(x.e[3], y.e[2]))),
                 static_cast<unsigned char>(add(mul(x.e[2], y.e[1]), mul(x.e[3], y.e[3])))}};
    }

    int key() const { return ((e[0] * 3 + e[1]) * 3 + e[2]) * 3 + e[3]; }
};

}  // namespace detail

struct SchreierGenerator {
    MappingClass element;
    long a_length;  // length of the Schreier expression in the input letters
};

// Generators of <A> intersected with the pure subgroup, with bookkeeping.
struct PurifiedGenerators {
    std::vector<MappingClass> originals;
    long index = 1;  // [<A> : <A> n pure]  = size of the image group mod 3
    std::vector<SchreierGenerator> schreier;
};

// Coset enumeration of the image of <A> in the determinant-1 group over
// Z/3 (order 24), breadth-first over A and inverses so the transversal has
// minimal word length.  The Schreier generators t g (rep(t g))^-1 are pure,
// generate the intersection with the pure subgroup, and have A-length at
// most 2 * index - 1.
inline PurifiedGenerators purify(std::span<const MappingClass> gens) {
    if (gens.empty()) throw std::invalid_argument("purify needs generators");

    PurifiedGenerators out;
    out.originals.assign(gens.begin(), gens.end());

    std::vector<MappingClass> letters;
    for (const auto& g : gens) letters.push_back(g);
    for (const auto& g : gens) letters.push_back(g.inverse());

    struct Rep {
        MappingClass matrix;
        long length;
    };
    std::map<int, Rep> transversal;
    std::deque<int> frontier;
    transversal.emplace(detail::Mod3::identity().key(),
                        Rep{MappingClass::identity(), 0});
    frontier.push_back(detail::Mod3::identity().key());

    auto image_key = [](const MappingClass& m) { return detail::Mod3::of(m).key(); };

    while (!frontier.empty()) {
        int key = frontier.front();
        frontier.pop_front();
        Rep current = transversal.at(key);
        for (const auto& letter : letters) {
            MappingClass next = current.matrix * letter;
            int next_key = image_key(next);
            if (transversal.emplace(next_key, Rep{next, current.length + 1}).second)
                frontier.push_back(next_key);
        }
    }
    out.index = static_cast<long>(transversal.size());

    std::vector<MappingClass> seen;
    for (const auto& [key, rep] : transversal) {
        (void)key;
        for (const auto& letter : letters) {
            MappingClass moved = rep.matrix * letter;
            const Rep& target = transversal.at(image_key(moved));
            MappingClass schreier_gen = moved * target.matrix.inverse();
            if (schreier_gen.is_identity()) continue;
            bool duplicate = false;
            for (const auto& s : seen)
                if (s == schreier_gen) duplicate = true;
            if (duplicate) continue;
            seen.push_back(schreier_gen);
            out.schreier.push_back(
                {schreier_gen, rep.length + 1 + target.length});
        }
    }
    return out;
}

}  // namespace mcg
