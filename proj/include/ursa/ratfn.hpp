#pragma once

#include "ursa/laurent.hpp"

namespace ursa {

// Reduced ratio of bivariate Laurent polynomials. Canonical form: num and den
// are integer-content-coprime, gcd-free, den has minimal exponents 0 and a
// positive coefficient on its lex-greatest exponent pair. Structural equality
// then coincides with equality of values.
class RatFn {
  public:
    LaurentBi num, den;

    RatFn() : num(), den(LaurentBi::one()) {}
    RatFn(const LaurentBi& n, const LaurentBi& d) : num(n), den(d) { reduce(); }
    explicit RatFn(const LaurentBi& n) : num(n), den(LaurentBi::one()) { reduce(); }
    explicit RatFn(const Rational& c) : num(LaurentBi::mono(0, 0, c)), den(LaurentBi::one()) {}
    explicit RatFn(long c) : RatFn(Rational(c)) {}
    static RatFn from_mono(const Mono2& m, const Rational& c = 1) {
        RatFn f;
        f.num = LaurentBi::mono(m.a, m.b, c);
        return f;
    }
    static RatFn one() { return RatFn(Rational(1)); }

    bool is_zero() const { return num.is_zero(); }
    bool is_one() const { return num.is_one() && den.is_one(); }
    bool operator==(const RatFn& o) const { return num == o.num && den == o.den; }

    RatFn operator+(const RatFn& o) const;
    RatFn operator-(const RatFn& o) const;
    RatFn operator*(const RatFn& o) const;
    RatFn operator/(const RatFn& o) const;
    RatFn operator-() const;
    RatFn inverse() const;
    RatFn& operator+=(const RatFn& o) { *this = *this + o; return *this; }
    RatFn& operator-=(const RatFn& o) { *this = *this - o; return *this; }
    RatFn& operator*=(const RatFn& o) { *this = *this * o; return *this; }
    RatFn& operator/=(const RatFn& o) { *this = *this / o; return *this; }

    RatFn pow(int k) const;

    // exact image under r -> q, s -> q^{-1}; den_out is 1 when the image is
    // polynomial. Throws std::domain_error("specialization pole") if the
    // denominator vanishes identically under the substitution.
    void specialize(UniLaurent& num_out, UniLaurent& den_out) const;

    std::string str() const;

  private:
    void reduce();
};

inline RatFn ratfn_r() { return RatFn::from_mono({1, 0}); }
inline RatFn ratfn_s() { return RatFn::from_mono({0, 1}); }

}  // namespace ursa
