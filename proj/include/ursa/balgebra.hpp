#pragma once

#include <map>

#include "ursa/words.hpp"

namespace ursa {

enum class Side { E, F };

// A term key: generator word with a torus factor kept on the right.
// E-side (word, mu) denotes e_{w_1}...e_{w_n} w_mu; F-side uses w'_mu.
struct BKey {
    Word word;
    LatticeVec torus;
    auto operator<=>(const BKey&) const = default;
};

// Sparse linear combination of torus-decorated words in one Borel half.
struct BElement {
    Side side = Side::E;
    int rank = 0;
    std::map<BKey, RatFn> terms;

    BElement() = default;
    BElement(Side s, int r) : side(s), rank(r) {}

    bool is_zero() const { return terms.empty(); }
    void add(const BKey& k, const RatFn& c);
    BElement& operator+=(const BElement& o);
    BElement operator+(const BElement& o) const { BElement t = *this; t += o; return t; }
    BElement operator-() const;
    BElement operator-(const BElement& o) const { return *this + (-o); }
    BElement scaled(const RatFn& c) const;
    bool operator==(const BElement& o) const {
        return side == o.side && terms == o.terms;
    }

    // weight of a homogeneous element; throws if inhomogeneous or zero
    LatticeVec weight() const;
    bool is_homogeneous() const;
};

BElement be_one(Side s, int rank);
BElement be_gen(Side s, int rank, int i);                      // e_i or f_i
BElement be_torus(Side s, int rank, const LatticeVec& mu);     // w_mu or w'_mu
BElement be_word(Side s, int rank, const Word& w, const RatFn& c = RatFn::one());

struct TKey {
    BKey left, right;
    auto operator<=>(const TKey&) const = default;
};

// Sparse element of B (x) B (or B' (x) B'); multiplication is componentwise.
struct TensorElement {
    Side side = Side::E;
    int rank = 0;
    std::map<TKey, RatFn> terms;

    TensorElement() = default;
    TensorElement(Side s, int r) : side(s), rank(r) {}
    bool is_zero() const { return terms.empty(); }
    void add(const TKey& k, const RatFn& c);
    TensorElement& operator+=(const TensorElement& o);
    TensorElement operator-() const;
    TensorElement operator-(const TensorElement& o) const {
        TensorElement t = *this; t += -o; return t;
    }
    bool operator==(const TensorElement& o) const {
        return side == o.side && terms == o.terms;
    }
};

// Product with torus factors commuted to the right.
BElement multiply(const RootDatum& rd, const BElement& x, const BElement& y);
TensorElement multiply(const RootDatum& rd, const TensorElement& x, const TensorElement& y);

// Hopf structure maps on a Borel half.
TensorElement coproduct(const RootDatum& rd, const BElement& x);
RatFn counit(const BElement& x);
BElement antipode(const RootDatum& rd, const BElement& x);

// (ad_l e_i)^{1-a_ij}(e_j) (or the f-side analogue), torus-free form.
BElement adjoint_serre(const RootDatum& rd, Side side, int i, int j);

// (r,s)-bracketing of homogeneous elements.
// E-side: [u,v] = uv - <w'_eta, w_zeta> vu for u of weight zeta, v of weight eta.
// F-side: [u,v] = vu - <w'_zeta, w_eta>^{-1} uv.
BElement bracket(const RootDatum& rd, const BElement& u, const BElement& v);

}  // namespace ursa
