#include "ursa/words.hpp"

#include <algorithm>
#include <stdexcept>

namespace ursa {

std::string word_str(const Word& w) {
    std::string s;
    for (int x : w) s += char('0' + x);
    return s;
}

Word word_parse(const std::string& s) {
    Word w;
    for (char c : s) {
        if (c < '1' || c > '9') throw std::invalid_argument("bad word string: " + s);
        w.push_back(c - '0');
    }
    return w;
}

bool is_lyndon(const Word& w) {
    if (w.empty()) return false;
    for (size_t k = 1; k < w.size(); ++k)
        if (!std::lexicographical_compare(w.begin(), w.end(), w.begin() + long(k), w.end()))
            return false;
    return true;
}

std::pair<Word, Word> std_factorize(const Word& w) {
    if (!is_lyndon(w) || w.size() < 2)
        throw std::invalid_argument("std_factorize: input must be Lyndon of length >= 2");
    for (size_t k = 1; k < w.size(); ++k) {
        Word v(w.begin() + long(k), w.end());
        if (is_lyndon(v)) return {Word(w.begin(), w.begin() + long(k)), v};
    }
    throw std::logic_error("std_factorize: unreachable");
}

std::vector<Word> enumerate_lyndon(const LatticeVec& content) {
    std::vector<Word> out;
    int len = lv_height(content);
    if (len == 0) return out;
    Word w;
    LatticeVec rem = content;
    std::function<void()> rec = [&]() {
        if (int(w.size()) == len) {
            if (is_lyndon(w)) out.push_back(w);
            return;
        }
        for (int i = 1; i <= int(content.size()); ++i) {
            if (rem[size_t(i - 1)] == 0) continue;
            --rem[size_t(i - 1)];
            w.push_back(i);
            rec();
            w.pop_back();
            ++rem[size_t(i - 1)];
        }
    };
    rec();
    std::sort(out.begin(), out.end());
    return out;
}

bool precede(const Word& u, const Word& w) {
    if (u.size() != w.size()) return u.size() < w.size();
    return u > w;
}

}  // namespace ursa
