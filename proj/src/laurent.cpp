#include "ursa/laurent.hpp"

#include <algorithm>
#include <sstream>

namespace ursa {

LaurentZ to_integer_poly(const LaurentBi& p, Rational& scale_out) {
    // common denominator, then divide by integer content: result primitive
    Int den = 1;
    for (const auto& [k, c] : p.terms) den = lcm(den, Int(c.get_den()));
    LaurentZ q;
    q.terms.reserve(p.terms.size());
    Int cont = 0;
    for (const auto& [k, c] : p.terms) {
        Int z = Int(c.get_num()) * (den / Int(c.get_den()));
        cont = gcd(cont, z);
        q.terms.emplace_back(k, std::move(z));
    }
    if (cont == 0) { scale_out = 1; return q; }
    for (auto& [k, z] : q.terms) z /= cont;
    scale_out = Rational(cont, den);
    scale_out.canonicalize();
    return q;
}

LaurentBi to_rational_poly(const LaurentZ& p) {
    LaurentBi q;
    q.terms.reserve(p.terms.size());
    for (const auto& [k, z] : p.terms) q.terms.emplace_back(k, Rational(z));
    return q;
}

Int coeff_content(const LaurentZ& p) {
    Int g = 0;
    for (const auto& [k, c] : p.terms) {
        g = gcd(g, c);
        if (g == 1) break;
    }
    return g;
}

namespace {

// Dense univariate polynomial over Int, used inside gcd computations.
using UPoly = std::vector<Int>;  // coefficient of s^i at index i

void utrim(UPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}
Int ucontent(const UPoly& p) {
    Int g = 0;
    for (const auto& c : p) { g = gcd(g, c); if (g == 1) break; }
    return g;
}
UPoly uscale(const UPoly& p, const Int& c) {
    UPoly q = p;
    for (auto& x : q) x *= c;
    return q;
}
void udivexact_scalar(UPoly& p, const Int& c) {
    for (auto& x : p) {
        if (x % c != 0) throw std::runtime_error("udivexact_scalar: not exact");
        x /= c;
    }
}
// pseudo-remainder of a by b (b nonzero), with per-step content stripping to
// keep integer growth in check
UPoly uprem(UPoly a, const UPoly& b) {
    utrim(a);
    if (b.empty()) throw std::runtime_error("uprem by zero");
    const Int& lb = b.back();
    while (a.size() >= b.size()) {
        Int la = a.back();
        size_t shift = a.size() - b.size();
        for (auto& x : a) x *= lb;
        for (size_t i = 0; i < b.size(); ++i) a[i + shift] -= la * b[i];
        utrim(a);
        if (a.empty()) break;
        Int c = ucontent(a);
        if (c > 1) udivexact_scalar(a, c);
    }
    return a;
}
UPoly ugcd(UPoly a, UPoly b) {
    utrim(a); utrim(b);
    if (a.empty()) return b;
    if (b.empty()) return a;
    Int ca = ucontent(a), cb = ucontent(b);
    udivexact_scalar(a, ca);
    udivexact_scalar(b, cb);
    while (true) {
        if (b.empty()) break;
        UPoly r = uprem(a, b);
        a = std::move(b);
        b = std::move(r);
        if (!b.empty()) {
            Int c = ucontent(b);
            udivexact_scalar(b, c);
        }
    }
    Int cg = gcd(ca, cb);
    for (auto& x : a) x *= cg;
    if (!a.empty() && a.back() < 0)
        for (auto& x : a) x = -x;
    return a;
}

// Recursive-dense view: polynomial in r with UPoly coefficients.
using RPoly = std::vector<UPoly>;  // coefficient of r^i at index i

void rtrim(RPoly& p) {
    while (!p.empty() && p.back().empty()) p.pop_back();
}

RPoly to_rpoly(const LaurentZ& p, int& amin, int& bmin) {
    int amax, bmax;
    if (p.is_zero()) { amin = bmin = 0; return {}; }
    p.exp_range(amin, amax, bmin, bmax);
    RPoly q(size_t(amax - amin + 1));
    for (const auto& [k, c] : p.terms) {
        auto& u = q[size_t(exp_r(k) - amin)];
        size_t j = size_t(exp_s(k) - bmin);
        if (u.size() <= j) u.resize(j + 1);
        u[j] = c;
    }
    for (auto& u : q) utrim(u);
    return q;
}

LaurentZ from_rpoly(const RPoly& p) {
    LaurentZ q;
    for (size_t i = 0; i < p.size(); ++i)
        for (size_t j = 0; j < p[i].size(); ++j)
            if (p[i][j] != 0) q.terms.emplace_back(pack_exp(int(i), int(j)), p[i][j]);
    std::sort(q.terms.begin(), q.terms.end(),
              [](const auto& x, const auto& y) { return x.first < y.first; });
    return q;
}

UPoly umul(const UPoly& a, const UPoly& b) {
    if (a.empty() || b.empty()) return {};
    UPoly c(a.size() + b.size() - 1);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j)
            c[i + j] += a[i] * b[j];
    utrim(c);
    return c;
}
UPoly usub(UPoly a, const UPoly& b) {
    if (a.size() < b.size()) a.resize(b.size());
    for (size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
    utrim(a);
    return a;
}

UPoly rcontent(const RPoly& p) {
    UPoly g;
    for (const auto& u : p) g = ugcd(g, u);
    return g;
}
// exact division of every coefficient by a UPoly divisor
bool udivexact(const UPoly& a, const UPoly& d, UPoly& out) {
    out.clear();
    if (a.empty()) return true;
    if (d.empty()) return false;
    UPoly rem = a;
    out.assign(a.size() - d.size() + 1, Int(0));
    while (!rem.empty() && rem.size() >= d.size()) {
        if (rem.back() % d.back() != 0) return false;
        Int qc = rem.back() / d.back();
        size_t shift = rem.size() - d.size();
        out[shift] = qc;
        for (size_t i = 0; i < d.size(); ++i) rem[i + shift] -= qc * d[i];
        utrim(rem);
    }
    return rem.empty();
}
RPoly rdivexact_upoly(const RPoly& p, const UPoly& d) {
    RPoly q(p.size());
    for (size_t i = 0; i < p.size(); ++i)
        if (!udivexact(p[i], d, q[i]))
            throw std::runtime_error("rdivexact_upoly: not exact");
    rtrim(q);
    return q;
}
// pseudo-remainder in the r variable: lc(b)^{deg a - deg b + 1} a mod b
RPoly rprem(RPoly a, const RPoly& b) {
    rtrim(a);
    if (b.empty()) throw std::runtime_error("rprem by zero");
    const UPoly& lb = b.back();
    size_t want = a.size() >= b.size() ? a.size() - b.size() + 1 : 0;
    size_t steps = 0;
    while (a.size() >= b.size()) {
        UPoly la = a.back();
        size_t shift = a.size() - b.size();
        for (auto& u : a) u = umul(u, lb);
        ++steps;
        for (size_t i = 0; i < b.size(); ++i)
            a[i + shift] = usub(a[i + shift], umul(la, b[i]));
        rtrim(a);
        if (a.empty()) break;
    }
    for (; steps < want; ++steps)
        for (auto& u : a) u = umul(u, lb);
    return a;
}

// subresultant PRS in the r variable: pseudo-remainders divided by the known
// subresultant factors g*h^d, which keeps coefficient degrees polynomial
RPoly rgcd_prs(RPoly a, RPoly b) {
    rtrim(a); rtrim(b);
    if (a.empty()) return b;
    if (b.empty()) return a;
    if (a.size() < b.size()) std::swap(a, b);
    UPoly g = {Int(1)}, h = {Int(1)};
    while (true) {
        size_t d = a.size() - b.size();
        RPoly r = rprem(a, b);
        if (r.empty()) break;
        if (r.size() == 1) { b = {{Int(1)}}; break; }  // unit gcd in r
        // divisor = g * h^d
        UPoly div = g;
        for (size_t k = 0; k < d; ++k) div = umul(div, h);
        RPoly nb(r.size());
        for (size_t i = 0; i < r.size(); ++i)
            if (!udivexact(r[i], div, nb[i]))
                throw std::runtime_error("subresultant division not exact");
        g = b.back();
        // h = g^d / h^{d-1}
        UPoly gpow = {Int(1)};
        for (size_t k = 0; k < d; ++k) gpow = umul(gpow, g);
        if (d == 0) h = umul(h, gpow);  // h stays (degenerate step)
        else {
            UPoly hpow = {Int(1)};
            for (size_t k = 0; k + 1 < d; ++k) hpow = umul(hpow, h);
            UPoly q;
            if (!udivexact(gpow, hpow, q))
                throw std::runtime_error("subresultant h update not exact");
            h = q;
        }
        a = std::move(b);
        b = std::move(nb);
        rtrim(b);
    }
    return b;
}

}  // namespace

LaurentZ laurent_gcd(const LaurentZ& pin, const LaurentZ& qin) {
    if (pin.is_zero() && qin.is_zero()) return {};
    if (pin.is_zero() || qin.is_zero()) {
        const LaurentZ& z = pin.is_zero() ? qin : pin;
        int amin, amax, bmin, bmax;
        z.exp_range(amin, amax, bmin, bmax);
        LaurentZ g = z.shifted(-amin, -bmin);
        if (g.leading_coeff() < 0)
            for (auto& [k, c] : g.terms) c = -c;
        return g;
    }
    int pa, pb, qa, qb;
    RPoly a = to_rpoly(pin, pa, pb);
    RPoly b = to_rpoly(qin, qa, qb);
    Int ca = coeff_content(pin), cb = coeff_content(qin);
    // gcd = gcd(contents in s) * gcd(primitive parts), all in Z[r,s]
    UPoly conta = rcontent(a), contb = rcontent(b);
    RPoly pa_ = rdivexact_upoly(a, conta);
    RPoly pb_ = rdivexact_upoly(b, contb);
    RPoly gp = rgcd_prs(std::move(pa_), std::move(pb_));
    {
        UPoly c = rcontent(gp);
        gp = rdivexact_upoly(gp, c);
    }
    UPoly contg = ugcd(conta, contb);
    for (auto& u : gp) u = umul(u, contg);
    LaurentZ g = from_rpoly(gp);
    // strip the integer content the PRS may have left, keep gcd of the inputs'
    Int ic = coeff_content(g);
    if (ic > 1)
        for (auto& [k, c] : g.terms) c /= ic;
    Int cg = gcd(ca, cb);
    if (cg > 1)
        for (auto& [k, c] : g.terms) c *= cg;
    int amin, amax, bmin, bmax;
    g.exp_range(amin, amax, bmin, bmax);
    g = g.shifted(-amin, -bmin);
    if (g.leading_coeff() < 0)
        for (auto& [k, c] : g.terms) c = -c;
    return g;
}

LaurentZ laurent_divexact(const LaurentZ& pin, const LaurentZ& d) {
    if (pin.is_zero()) return {};
    if (d.is_zero()) throw std::runtime_error("laurent_divexact by zero");
    // align supports to N^2
    int pa, pb, da, db, pamax, pbmax, damax, dbmax;
    pin.exp_range(pa, pamax, pb, pbmax);
    d.exp_range(da, damax, db, dbmax);
    LaurentZ p0 = pin.shifted(-pa, -pb);
    LaurentZ d0 = d.shifted(-da, -db);
    // long division eliminating the lex-greatest term
    LaurentZ quot;
    LaurentZ rem = p0;
    while (!rem.is_zero()) {
        uint64_t kr = rem.terms.back().first;
        uint64_t kd = d0.terms.back().first;
        int qa = exp_r(kr) - exp_r(kd), qb = exp_s(kr) - exp_s(kd);
        if (qa < 0 || qb < 0) throw std::runtime_error("laurent_divexact: not exact");
        Int qc = rem.terms.back().second;
        if (qc % d0.terms.back().second != 0)
            throw std::runtime_error("laurent_divexact: not exact");
        qc /= d0.terms.back().second;
        quot.add_term(pack_exp(qa, qb), qc);
        rem.add_scaled(d0, qa, qb, -qc);
    }
    return quot.shifted(pa - da, pb - db);
}

void UniLaurent::add_term(int e, const Rational& c) {
    if (c == 0) return;
    auto it = std::lower_bound(terms.begin(), terms.end(), e,
                               [](const auto& t, int k) { return t.first < k; });
    if (it != terms.end() && it->first == e) {
        it->second += c;
        if (it->second == 0) terms.erase(it);
    } else {
        terms.insert(it, {e, c});
    }
}

UniLaurent specialize_q(const LaurentBi& p) {
    UniLaurent u;
    for (const auto& [k, c] : p.terms) u.add_term(exp_r(k) - exp_s(k), c);
    return u;
}

namespace {
template <class C>
std::string laurent_str_impl(const LaurentT<C>& p) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    // print in decreasing lex order of exponents
    for (auto it = p.terms.rbegin(); it != p.terms.rend(); ++it) {
        const auto& [k, c] = *it;
        std::string cs;
        if constexpr (std::is_same_v<C, Rational>) cs = c.get_str();
        else cs = c.get_str();
        bool neg = !cs.empty() && cs[0] == '-';
        if (neg) cs = cs.substr(1);
        int a = exp_r(k), b = exp_s(k);
        std::string mon;
        if (a != 0) mon += "r" + (a == 1 ? std::string() : "^" + std::to_string(a));
        if (b != 0) mon += (mon.empty() ? "" : " ") + std::string("s") +
                           (b == 1 ? std::string() : "^" + std::to_string(b));
        if (first) { if (neg) os << "-"; first = false; }
        else os << (neg ? " - " : " + ");
        if (cs != "1" || mon.empty()) {
            os << cs;
            if (!mon.empty()) os << " ";
        }
        os << mon;
    }
    return os.str();
}
}  // namespace

std::string laurent_str(const LaurentBi& p) { return laurent_str_impl(p); }
std::string laurent_str(const LaurentZ& p) { return laurent_str_impl(p); }

std::string UniLaurent::str() const {
    if (terms.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
        Rational c = it->second;
        bool neg = c < 0;
        if (neg) c = -c;
        if (first) { if (neg) os << "-"; first = false; }
        else os << (neg ? " - " : " + ");
        std::string mon;
        if (it->first != 0)
            mon = "q" + (it->first == 1 ? std::string() : "^" + std::to_string(it->first));
        if (c != 1 || mon.empty()) {
            os << c.get_str();
            if (!mon.empty()) os << " ";
        }
        os << mon;
    }
    return os.str();
}

}  // namespace ursa
