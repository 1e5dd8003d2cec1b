#include "ursa/ratfn.hpp"

#include <sstream>

namespace ursa {

void RatFn::reduce() {
    if (den.is_zero()) throw std::domain_error("RatFn: zero denominator");
    if (num.is_zero()) { den = LaurentBi::one(); return; }
    Rational ns, ds;
    LaurentZ n = to_integer_poly(num, ns);
    LaurentZ d = to_integer_poly(den, ds);
    LaurentZ g = laurent_gcd(n, d);
    bool gtriv = g.terms.size() == 1 && g.terms[0].second == 1;
    if (!gtriv) {
        n = laurent_divexact(n, g);
        d = laurent_divexact(d, g);
    }
    // clear monomial units so den has minimal exponents 0
    int amin, amax, bmin, bmax;
    d.exp_range(amin, amax, bmin, bmax);
    d = d.shifted(-amin, -bmin);
    n = n.shifted(-amin, -bmin);
    // integer contents coprime, den lead positive; fold the rational scale
    // ns/ds into the numerator content
    Rational scale = ns / ds;
    Int sn = scale.get_num(), sd = scale.get_den();
    // n * sn / (d * sd): push sd into d, sn into n, then strip common content
    for (auto& [k, c] : n.terms) c *= sn;
    for (auto& [k, c] : d.terms) c *= sd;
    Int cn = coeff_content(n), cd = coeff_content(d);
    Int cg = gcd(cn, cd);
    if (cg > 1) {
        for (auto& [k, c] : n.terms) c /= cg;
        for (auto& [k, c] : d.terms) c /= cg;
    }
    if (d.leading_coeff() < 0) {
        for (auto& [k, c] : n.terms) c = -c;
        for (auto& [k, c] : d.terms) c = -c;
    }
    num = to_rational_poly(n);
    den = to_rational_poly(d);
}

RatFn RatFn::operator+(const RatFn& o) const {
    RatFn f;
    f.num = num * o.den + o.num * den;
    f.den = den * o.den;
    f.reduce();
    return f;
}
RatFn RatFn::operator-(const RatFn& o) const { return *this + (-o); }
RatFn RatFn::operator-() const {
    RatFn f = *this;
    f.num = -f.num;
    return f;
}
RatFn RatFn::operator*(const RatFn& o) const {
    RatFn f;
    f.num = num * o.num;
    f.den = den * o.den;
    f.reduce();
    return f;
}
RatFn RatFn::operator/(const RatFn& o) const { return *this * o.inverse(); }
RatFn RatFn::inverse() const {
    if (is_zero()) throw std::domain_error("RatFn: inverse of zero");
    RatFn f;
    f.num = den;
    f.den = num;
    f.reduce();
    return f;
}

RatFn RatFn::pow(int k) const {
    if (k < 0) return inverse().pow(-k);
    RatFn r = one(), base = *this;
    unsigned n = unsigned(k);
    while (n) {
        if (n & 1) r *= base;
        n >>= 1;
        if (n) base *= base;
    }
    return r;
}

void RatFn::specialize(UniLaurent& num_out, UniLaurent& den_out) const {
    den_out = specialize_q(den);
    if (den_out.is_zero()) throw std::domain_error("specialization pole");
    num_out = specialize_q(num);
    // normalize: if den is a single term, divide through
    if (den_out.terms.size() == 1) {
        int e = den_out.terms[0].first;
        Rational c = den_out.terms[0].second;
        UniLaurent n;
        for (const auto& [k, v] : num_out.terms) n.add_term(k - e, v / c);
        num_out = n;
        den_out.terms.assign(1, {0, Rational(1)});
    }
}

std::string RatFn::str() const {
    if (den.is_one()) return num.str();
    std::ostringstream os;
    os << "(" << num.str() << ")/(" << den.str() << ")";
    return os.str();
}

}  // namespace ursa
