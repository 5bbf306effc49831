#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mcg/matrix.hpp"

namespace mcg {

// Letters of the free group on two symbols, in lexicographic order.
// 0 = a, 1 = a^-1, 2 = b, 3 = b^-1; letter x cancels with x ^ 1.
using RelationWord = std::vector<int>;

inline std::string word_to_string(const RelationWord& word) {
    static const char* names[4] = {"a", "a^-1", "b", "b^-1"};
    static const char* bases[4] = {"a", "a", "b", "b"};
    static const int sign[4] = {1, -1, 1, -1};
    std::string out;
    std::size_t i = 0;
    while (i < word.size()) {
        std::size_t j = i;
        while (j < word.size() && word[j] == word[i]) ++j;
        long run = static_cast<long>(j - i);
        if (!out.empty()) out += " ";
        if (run == 1) {
            out += names[word[i]];
        } else {
            out += bases[word[i]];
            out += "^" + std::to_string(sign[word[i]] * run);
        }
        i = j;
    }
    return out;
}

namespace detail {

// Depth-first walk over freely reduced words of exactly `target` letters,
// in lexicographic order, sharing the partial product along the prefix.
inline bool relation_dfs(const MappingClass letters[4], long target,
                         RelationWord& word,
                         std::vector<MappingClass>& products,
                         RelationWord& found) {
    if (static_cast<long>(word.size()) == target) {
        if (products.back().is_plus_minus_identity()) {
            found = word;
            return true;
        }
        return false;
    }
    const int blocked = word.empty() ? -1 : (word.back() ^ 1);
    for (int letter = 0; letter < 4; ++letter) {
        if (letter == blocked) continue;
        word.push_back(letter);
        products.push_back(products.back() * letters[letter]);
        if (relation_dfs(letters, target, word, products, found)) return true;
        word.pop_back();
        products.pop_back();
    }
    return false;
}

}  // namespace detail

// Brute-force relation search: enumerate all freely reduced words in
// a^{+-1}, b^{+-1} of length <= depth, shortest first and lexicographically
// within a length, and return the first word whose matrix product is
// +-identity (the action-level identity).  Entries are exact, so a nullopt
// answer is definitive up to `depth`.
//
// This is the independent check the ping-pong certificates are validated
// against; it shares no logic with them.
inline std::optional<RelationWord> relation_oracle(const MappingClass& a,
                                                   const MappingClass& b,
                                                   long depth) {
    if (depth < 1) throw std::invalid_argument("oracle depth must be >= 1");
    const MappingClass letters[4] = {a, a.inverse(), b, b.inverse()};
    RelationWord word, found;
    std::vector<MappingClass> products;
    for (long target = 1; target <= depth; ++target) {
        word.clear();
        products.assign(1, MappingClass::identity());
        if (detail::relation_dfs(letters, target, word, products, found))
            return found;
    }
    return std::nullopt;
}

// Length of the shortest relation up to `depth`, for symmetry properties.
inline std::optional<long> shortest_relation_length(const MappingClass& a,
                                                    const MappingClass& b,
                                                    long depth) {
    auto w = relation_oracle(a, b, depth);
    if (!w) return std::nullopt;
    return static_cast<long>(w->size());
}

}  // namespace mcg
