#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace ursa {

using Rational = mpq_class;
using Int = mpz_class;

// Exponent pair (a,b) of a monomial r^a s^b, packed so that the numeric
// order of keys is the lexicographic order of (a,b).
inline uint64_t pack_exp(int a, int b) {
    return (uint64_t(uint32_t(a) + 0x80000000u) << 32) |
           uint64_t(uint32_t(b) + 0x80000000u);
}
inline int exp_r(uint64_t k) { return int(uint32_t(k >> 32) - 0x80000000u); }
inline int exp_s(uint64_t k) { return int(uint32_t(k) - 0x80000000u); }

// Monomial r^a s^b with integer exponents; the value of every torus pairing.
struct Mono2 {
    int a = 0, b = 0;
    Mono2 operator*(const Mono2& o) const { return {a + o.a, b + o.b}; }
    Mono2 inverse() const { return {-a, -b}; }
    Mono2 pow(int k) const { return {a * k, b * k}; }
    auto operator<=>(const Mono2& o) const = default;
};

// Sparse bivariate Laurent polynomial in r, s. Terms are kept sorted by
// exponent key with nonzero coefficients; the zero polynomial is empty.
template <class C>
class LaurentT {
  public:
    std::vector<std::pair<uint64_t, C>> terms;

    LaurentT() = default;
    static LaurentT zero() { return LaurentT(); }
    static LaurentT one() { return mono(0, 0); }
    static LaurentT mono(int a, int b, C coef = C(1)) {
        LaurentT p;
        if (coef != 0) p.terms.emplace_back(pack_exp(a, b), std::move(coef));
        return p;
    }
    static LaurentT from_mono2(const Mono2& m, C coef = C(1)) {
        return mono(m.a, m.b, std::move(coef));
    }

    bool is_zero() const { return terms.empty(); }
    bool is_one() const {
        return terms.size() == 1 && terms[0].first == pack_exp(0, 0) &&
               terms[0].second == 1;
    }
    size_t size() const { return terms.size(); }
    bool operator==(const LaurentT& o) const { return terms == o.terms; }

    void add_term(uint64_t key, const C& c) {
        if (c == 0) return;
        auto it = std::lower_bound(terms.begin(), terms.end(), key,
                                   [](const auto& t, uint64_t k) { return t.first < k; });
        if (it != terms.end() && it->first == key) {
            it->second += c;
            if (it->second == 0) terms.erase(it);
        } else {
            terms.insert(it, {key, c});
        }
    }

    LaurentT& operator+=(const LaurentT& o) {
        if (terms.empty()) { terms = o.terms; return *this; }
        std::vector<std::pair<uint64_t, C>> out;
        out.reserve(terms.size() + o.terms.size());
        size_t i = 0, j = 0;
        while (i < terms.size() && j < o.terms.size()) {
            if (terms[i].first < o.terms[j].first) out.push_back(terms[i++]);
            else if (terms[i].first > o.terms[j].first) out.push_back(o.terms[j++]);
            else {
                C c = terms[i].second + o.terms[j].second;
                if (c != 0) out.emplace_back(terms[i].first, std::move(c));
                ++i; ++j;
            }
        }
        for (; i < terms.size(); ++i) out.push_back(terms[i]);
        for (; j < o.terms.size(); ++j) out.push_back(o.terms[j]);
        terms = std::move(out);
        return *this;
    }
    LaurentT operator+(const LaurentT& o) const { LaurentT t = *this; t += o; return t; }
    LaurentT operator-() const {
        LaurentT t = *this;
        for (auto& [k, c] : t.terms) c = -c;
        return t;
    }
    LaurentT& operator-=(const LaurentT& o) { *this += -o; return *this; }
    LaurentT operator-(const LaurentT& o) const { LaurentT t = *this; t -= o; return t; }

    // this += m * o  with monomial m = (sign, a, b)
    void add_scaled(const LaurentT& o, int a, int b, const C& coef) {
        if (coef == 0) return;
        LaurentT shifted;
        shifted.terms.reserve(o.terms.size());
        for (const auto& [k, c] : o.terms)
            shifted.terms.emplace_back(pack_exp(exp_r(k) + a, exp_s(k) + b), c * coef);
        *this += shifted;
    }

    LaurentT shifted(int a, int b) const {
        LaurentT t;
        t.terms.reserve(terms.size());
        for (const auto& [k, c] : terms)
            t.terms.emplace_back(pack_exp(exp_r(k) + a, exp_s(k) + b), c);
        return t;
    }

    LaurentT operator*(const LaurentT& o) const {
        if (is_zero() || o.is_zero()) return {};
        if (o.terms.size() == 1) {
            LaurentT t = shifted(exp_r(o.terms[0].first), exp_s(o.terms[0].first));
            if (o.terms[0].second != 1)
                for (auto& [k, c] : t.terms) c *= o.terms[0].second;
            return t;
        }
        std::map<uint64_t, C> acc;
        for (const auto& [k1, c1] : terms)
            for (const auto& [k2, c2] : o.terms) {
                uint64_t k = pack_exp(exp_r(k1) + exp_r(k2), exp_s(k1) + exp_s(k2));
                auto [it, fresh] = acc.try_emplace(k, c1 * c2);
                if (!fresh) it->second += c1 * c2;
            }
        LaurentT t;
        t.terms.reserve(acc.size());
        for (auto& [k, c] : acc)
            if (c != 0) t.terms.emplace_back(k, std::move(c));
        return t;
    }
    LaurentT& operator*=(const LaurentT& o) { *this = *this * o; return *this; }

    LaurentT pow(unsigned n) const {
        LaurentT r = one(), base = *this;
        while (n) {
            if (n & 1) r *= base;
            base = (n >>= 1) ? base * base : base;
        }
        return r;
    }

    // Minimal/maximal exponents over the support; support must be nonempty.
    void exp_range(int& amin, int& amax, int& bmin, int& bmax) const {
        amin = bmin = INT32_MAX; amax = bmax = INT32_MIN;
        for (const auto& [k, c] : terms) {
            int a = exp_r(k), b = exp_s(k);
            amin = std::min(amin, a); amax = std::max(amax, a);
            bmin = std::min(bmin, b); bmax = std::max(bmax, b);
        }
    }

    const C& leading_coeff() const { return terms.back().second; }

    std::string str() const;
};

using LaurentBi = LaurentT<Rational>;
using LaurentZ = LaurentT<Int>;

LaurentZ to_integer_poly(const LaurentBi& p, Rational& scale_out);
LaurentBi to_rational_poly(const LaurentZ& p);

// gcd of two integer Laurent polynomials: a polynomial g (min exponents 0,
// positive leading coefficient) such that g divides both up to monomial units.
LaurentZ laurent_gcd(const LaurentZ& p, const LaurentZ& q);
// exact division p / q; throws if not exact.
LaurentZ laurent_divexact(const LaurentZ& p, const LaurentZ& q);
// gcd of all integer coefficients (positive); 0 for the zero polynomial.
Int coeff_content(const LaurentZ& p);

std::string laurent_str(const LaurentBi& p);
std::string laurent_str(const LaurentZ& p);

template <class C>
std::string LaurentT<C>::str() const {
    if constexpr (std::is_same_v<C, Rational>) return laurent_str(*this);
    else return laurent_str(*this);
}

// Univariate Laurent polynomial in q: the target of the r->q, s->q^{-1}
// specialization.
struct UniLaurent {
    std::vector<std::pair<int, Rational>> terms;  // sorted by exponent
    bool is_zero() const { return terms.empty(); }
    bool operator==(const UniLaurent& o) const = default;
    void add_term(int e, const Rational& c);
    std::string str() const;
};

UniLaurent specialize_q(const LaurentBi& p);

}  // namespace ursa
