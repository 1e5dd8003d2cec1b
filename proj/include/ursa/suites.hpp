#pragma once

#include "ursa/golden.hpp"
#include "ursa/verma.hpp"

namespace ursa {

// Named verification suites. Each returns a SuiteReport whose checks carry
// pass/fail status, witnesses, and wall time.
SuiteReport suite_matrix_a();                       // matrix A reproduction
SuiteReport suite_good_words(Engine& e6);           // 36-word table
SuiteReport suite_appendix(Engine& e6);             // Delta(E_2453) regression
SuiteReport suite_structural();                     // p/q matrices, Lemma 1.1
SuiteReport suite_serre_kernel(Engine& e6);         // Serre elements die
SuiteReport suite_dual_basis(Engine& e6);           // Lemma 3.8 diagonality
SuiteReport suite_eta(Engine& e6);                  // Lemmas 3.2-3.4
SuiteReport suite_double(Engine& e6);               // Theorem 3.6 mixed relation
SuiteReport suite_ls(Engine& e6, int max_height, int nonroot_cap);
SuiteReport suite_oracle();                         // A2/A3 graded dimensions
SuiteReport suite_rmatrix(Engine& e6, int e6_depth);
SuiteReport suite_specialize(Engine& e6);           // r -> q, s -> q^{-1}
SuiteReport suite_determinism(int threads_a, int threads_b);

// graded dimensions of the free algebra modulo the Serre ideal up to
// max_degree, by fraction-free row reduction; the independent oracle for
// the PBW monomial counts
std::vector<long> serre_quotient_dimensions(const RootDatum& rd, int max_degree);

}  // namespace ursa
