#pragma once

#include "ursa/drinfeld.hpp"

namespace ursa {

// Coefficients for the symbolic weight formalism: Laurent monomials in formal
// character units times rational functions of r, s. The units are the values
// lambda-hat(w_i), lambda-hat(w'_i) of up to two generic highest weights
// ("module tags" 0 and 1) plus the cross pairings <w'_{lambda_Y}, w_{lambda_X}>.
struct UnitBasis {
    int rank = 0;
    int dim() const { return 4 * rank + 4; }
    int omega(int tag, int i) const { return tag * 2 * rank + (i - 1); }
    int omega_prime(int tag, int i) const { return tag * 2 * rank + rank + (i - 1); }
    int cross(int tag_first, int tag_second) const {
        return 4 * rank + 2 * tag_first + tag_second;
    }
};

using UnitVec = std::vector<int>;

struct ExtScalar {
    std::map<UnitVec, RatFn> terms;

    ExtScalar() = default;
    explicit ExtScalar(int unit_dim, const RatFn& c) {
        if (!c.is_zero()) terms.emplace(UnitVec(size_t(unit_dim), 0), c);
    }
    bool is_zero() const { return terms.empty(); }
    bool operator==(const ExtScalar& o) const { return terms == o.terms; }
    void add(const UnitVec& u, const RatFn& c);
    ExtScalar& operator+=(const ExtScalar& o);
    ExtScalar operator*(const ExtScalar& o) const;
    ExtScalar scaled(const RatFn& c) const;
    ExtScalar unit_shifted(const UnitVec& u) const;  // multiply by a unit monomial
};

// Character lambda-hat for a root-lattice weight: exact monomial values.
struct Character {
    LatticeVec lambda;
    std::vector<RatFn> omega_values;        // lambda-hat(w_i)
    std::vector<RatFn> omega_prime_values;  // lambda-hat(w'_i)
};

// lambda must lie in the root lattice (integer coordinates); characters of
// fractional weights have non-integral exponents and are handled symbolically.
Character hat_lambda(const RootDatum& rd, const LatticeVec& lambda);

// Verma module with generic symbolic highest weight, truncated at `depth`:
// basis F-PBW monomials of height <= depth applied to the highest vector.
class TruncatedVerma {
  public:
    TruncatedVerma(const Engine& eng, int tag, int depth);

    int dim() const { return int(basis_.size()); }
    int depth() const { return depth_; }
    int tag() const { return tag_; }
    const PBWMono& basis(int k) const { return basis_[size_t(k)]; }
    const LatticeVec& weight_shift(int k) const { return wt_[size_t(k)]; }

    struct Column {
        std::vector<std::pair<int, ExtScalar>> entries;
        bool loss = false;  // beyond-depth terms were dropped
    };

    const Column& act_e(int i, int col) const { return e_act_[size_t(i - 1)][size_t(col)]; }
    const Column& act_f(int i, int col) const { return f_act_[size_t(i - 1)][size_t(col)]; }
    // torus actions are diagonal and never truncate
    ExtScalar omega_scalar(const LatticeVec& zeta, int col) const;
    ExtScalar omega_prime_scalar(const LatticeVec& zeta, int col) const;

    const Engine& engine() const { return eng_; }
    const UnitBasis& units() const { return units_; }

  private:
    const Engine& eng_;
    UnitBasis units_;
    int tag_, depth_;
    std::vector<PBWMono> basis_;
    std::vector<LatticeVec> wt_;
    std::map<PBWMono, int> index_;
    std::vector<std::vector<Column>> e_act_, f_act_;

    void build_actions();
};

// Prop 3.10 intertwining check: R = Theta o f-twist o P on M'(x)M against all
// generators, on every basis tensor whose images stay strictly inside the
// truncation (boundary-touching cases are excluded and counted).
SuiteReport rmatrix_check(const Engine& eng, int depth);

// Yang-Baxter at truncation: (R(x)id)(id(x)R)(R(x)id) = (id(x)R)(R(x)id)(id(x)R)
// on interior vectors of M(x)M(x)M.
SuiteReport yang_baxter_check(const Engine& eng, int depth);

// weight-shift, nilpotency and Lemma 4.1 distinctness checks
SuiteReport verma_structure_report(const Engine& eng, int depth);

}  // namespace ursa
