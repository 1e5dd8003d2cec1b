#pragma once

#include <string>
#include <vector>

#include "ursa/rootsystem.hpp"

namespace ursa {

// A word in the generator alphabet 1..rank.
using Word = std::vector<int>;

inline LatticeVec word_content(const Word& w, int rank) {
    LatticeVec c = lv_zero(rank);
    for (int x : w) ++c[size_t(x - 1)];
    return c;
}

std::string word_str(const Word& w);
Word word_parse(const std::string& s);

// Lexicographically smaller than all proper right factors.
bool is_lyndon(const Word& w);

// Standard factorization: v is the longest proper right factor that is
// Lyndon, u the complementary left factor; input must be Lyndon, |w| >= 2.
std::pair<Word, Word> std_factorize(const Word& w);

// All Lyndon words with the given content, sorted lexicographically.
std::vector<Word> enumerate_lyndon(const LatticeVec& content);

// Strict version of the paper's order: u comes before w iff |u| < |w|, or
// |u| = |w| and u > w lexicographically.
bool precede(const Word& u, const Word& w);

}  // namespace ursa
