#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ursa/laurent.hpp"
#include "ursa/ratfn.hpp"

namespace ursa {

// Element of the root lattice in simple-root coordinates.
using LatticeVec = std::vector<int>;

inline LatticeVec lv_zero(int rank) { return LatticeVec(size_t(rank), 0); }
inline LatticeVec lv_unit(int rank, int i) {
    LatticeVec v(size_t(rank), 0);
    v[size_t(i - 1)] = 1;
    return v;
}
inline LatticeVec lv_add(const LatticeVec& a, const LatticeVec& b) {
    LatticeVec c = a;
    for (size_t i = 0; i < c.size(); ++i) c[i] += b[i];
    return c;
}
inline LatticeVec lv_sub(const LatticeVec& a, const LatticeVec& b) {
    LatticeVec c = a;
    for (size_t i = 0; i < c.size(); ++i) c[i] -= b[i];
    return c;
}
inline LatticeVec lv_neg(const LatticeVec& a) {
    LatticeVec c = a;
    for (auto& x : c) x = -x;
    return c;
}
inline int lv_height(const LatticeVec& a) {
    int h = 0;
    for (int x : a) h += x;
    return h;
}
inline bool lv_nonneg(const LatticeVec& a) {
    for (int x : a)
        if (x < 0) return false;
    return true;
}
inline bool lv_is_zero(const LatticeVec& a) {
    for (int x : a)
        if (x != 0) return false;
    return true;
}

enum class Kind { A, D, E };

Kind kind_from_char(char c);
std::string kind_str(Kind k);

// Simply-laced root datum with the two-parameter structural constants.
struct RootDatum {
    Kind kind;
    int rank = 0;
    std::vector<std::vector<int>> cartan;          // a_ij, 1-based stored 0-based
    std::vector<LatticeVec> positive_roots;        // sorted by (height, lex)
    std::vector<std::vector<int>> p_mat, q_mat;    // p_ij, q_ij
    std::vector<std::vector<Mono2>> pairing_mono;  // <w'_i, w_j> = r^{p_ji} s^{-q_ji}

    int a(int i, int j) const { return cartan[size_t(i - 1)][size_t(j - 1)]; }
    int p(int i, int j) const { return p_mat[size_t(i - 1)][size_t(j - 1)]; }
    int q(int i, int j) const { return q_mat[size_t(i - 1)][size_t(j - 1)]; }
    // <w'_i, w_j> as a monomial in r, s
    Mono2 pairing_entry(int i, int j) const {
        return pairing_mono[size_t(i - 1)][size_t(j - 1)];
    }
    RatFn pairing_entry_ratfn(int i, int j) const {
        return RatFn::from_mono(pairing_entry(i, j));
    }

    bool is_positive_root(const LatticeVec& v) const;
    std::optional<int> root_index(const LatticeVec& v) const;  // index into positive_roots

    // <w'_mu, w_nu>, extended bilinearly; a monomial for integer lattice vectors.
    Mono2 torus_pair(const LatticeVec& mu, const LatticeVec& nu) const;
    RatFn torus_pair_ratfn(const LatticeVec& mu, const LatticeVec& nu) const {
        return RatFn::from_mono(torus_pair(mu, nu));
    }

    // Kostant partition number: multisets of positive roots summing to mu.
    long kostant(const LatticeVec& mu) const;
};

// Supported: A_n (n>=1), D_n (n>=4), E6, E7, E8. Throws on anything else.
RootDatum build_root_datum(Kind kind, int rank);
RootDatum build_root_datum(const std::string& type);  // "A2", "D4", "E6", ...

// Brute-force Kostant oracle by explicit multiset enumeration (test support).
long kostant_bruteforce(const RootDatum& rd, const LatticeVec& mu);

// Psi_n(rs^{-1}) = prod_{k=1..n} (1 - (rs^{-1})^k); n = 0 gives 1.
LaurentBi psi_poly(int n);

}  // namespace ursa
