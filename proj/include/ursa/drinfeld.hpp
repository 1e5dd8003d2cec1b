#pragma once

#include "ursa/pbw.hpp"
#include "ursa/report.hpp"

namespace ursa {

// c_beta constants: eta_beta = c_beta F_beta. Simple roots get s - r; a
// composite root with standard parts (b1, b2) satisfies
// c = -<w'_{b1}, w_{b2}> (1 - <w'_{b2},w_{b1}><w'_{b1},w_{b2}>)^{-1} c_{b1} c_{b2}.
struct CBetaTable {
    std::vector<RatFn> values;  // indexed by root id
};

CBetaTable c_beta_table(const Engine& eng);

// Consistency checks on the table: nonzero values, independence from the
// iteration order, and the adjacent-pair closed form.
SuiteReport c_beta_report(const Engine& eng);

// Lemmas 3.2-3.4 through the identification eta = c F: torus conjugation,
// coproduct shape, the (i) bracket identities at the free level, and the (ii)
// Serre-type identities in the quotient.
SuiteReport verify_eta_relations(const Engine& eng);

// Theorem 3.6: the mixed double product eta_j * e_i computed from the double
// multiplication rule equals delta_ij(w_i - gamma_j) + e_i eta_j.
SuiteReport double_mixed_check(const Engine& eng);

// Truncation of the canonical element Theta: all PBW-monomial pairs with
// total height <= max_degree, coefficient 1/d_m (the inverse diagonal
// pairing value).
struct ThetaTerm {
    PBWMono mono;
    RatFn coeff;
};
struct ThetaTruncation {
    int max_degree = 0;
    std::vector<ThetaTerm> terms;  // sorted by (height, monomial)
};

ThetaTruncation theta(const Engine& eng, int max_degree);

// word-level expansion of a Theta truncation: F-words left, E-words right
TensorElement theta_expanded(const Engine& eng, const ThetaTruncation& t);

// Lemma 3.8(ii): the Gram matrix of {c-scaled F-PBW} x {E-PBW} at the weight
// is diagonal with entries prod Psi_{n_i}/(1-rs^{-1})^{n_i}, checked with the
// word-level pairing (independent of the sweep engine).
SuiteReport dual_basis_check(const Engine& eng, const LatticeVec& weight);

}  // namespace ursa
