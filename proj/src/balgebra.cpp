#include "ursa/balgebra.hpp"

#include <stdexcept>

namespace ursa {

void BElement::add(const BKey& k, const RatFn& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = terms.try_emplace(k, c);
    if (!fresh) {
        it->second += c;
        if (it->second.is_zero()) terms.erase(it);
    }
}

BElement& BElement::operator+=(const BElement& o) {
    if (o.side != side && !o.terms.empty() && !terms.empty())
        throw std::invalid_argument("BElement: mixed sides");
    for (const auto& [k, c] : o.terms) add(k, c);
    return *this;
}

BElement BElement::operator-() const {
    BElement t(side, rank);
    for (const auto& [k, c] : terms) t.terms.emplace(k, -c);
    return t;
}

BElement BElement::scaled(const RatFn& c) const {
    BElement t(side, rank);
    if (c.is_zero()) return t;
    for (const auto& [k, v] : terms) t.terms.emplace(k, v * c);
    return t;
}

bool BElement::is_homogeneous() const {
    if (terms.empty()) return true;
    LatticeVec w = word_content(terms.begin()->first.word, rank);
    for (const auto& [k, c] : terms)
        if (word_content(k.word, rank) != w) return false;
    return true;
}

LatticeVec BElement::weight() const {
    if (terms.empty()) throw std::logic_error("weight of zero element");
    LatticeVec w = word_content(terms.begin()->first.word, rank);
    for (const auto& [k, c] : terms)
        if (word_content(k.word, rank) != w)
            throw std::logic_error("weight of inhomogeneous element");
    return w;
}

BElement be_one(Side s, int rank) {
    BElement x(s, rank);
    x.terms.emplace(BKey{{}, lv_zero(rank)}, RatFn::one());
    return x;
}
BElement be_gen(Side s, int rank, int i) {
    BElement x(s, rank);
    x.terms.emplace(BKey{{i}, lv_zero(rank)}, RatFn::one());
    return x;
}
BElement be_torus(Side s, int rank, const LatticeVec& mu) {
    BElement x(s, rank);
    x.terms.emplace(BKey{{}, mu}, RatFn::one());
    return x;
}
BElement be_word(Side s, int rank, const Word& w, const RatFn& c) {
    BElement x(s, rank);
    if (!c.is_zero()) x.terms.emplace(BKey{w, lv_zero(rank)}, c);
    return x;
}

void TensorElement::add(const TKey& k, const RatFn& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = terms.try_emplace(k, c);
    if (!fresh) {
        it->second += c;
        if (it->second.is_zero()) terms.erase(it);
    }
}
TensorElement& TensorElement::operator+=(const TensorElement& o) {
    for (const auto& [k, c] : o.terms) add(k, c);
    return *this;
}
TensorElement TensorElement::operator-() const {
    TensorElement t(side, rank);
    for (const auto& [k, c] : terms) t.terms.emplace(k, -c);
    return t;
}

namespace {

// scalar picked up when commuting w_mu (or w'_mu) rightwards past the word w:
// E-side: w_mu e_j = <w'_j, w_mu> e_j w_mu; F-side: w'_mu f_j = <w'_mu, w_j> f_j w'_mu.
Mono2 commute_scalar(const RootDatum& rd, Side side, const LatticeVec& mu, const Word& w) {
    LatticeVec c = word_content(w, rd.rank);
    return side == Side::E ? rd.torus_pair(c, mu) : rd.torus_pair(mu, c);
}

BKey key_mul(const RootDatum& rd, Side side, const BKey& x, const BKey& y, Mono2& scalar) {
    scalar = commute_scalar(rd, side, x.torus, y.word);
    Word w = x.word;
    w.insert(w.end(), y.word.begin(), y.word.end());
    return BKey{std::move(w), lv_add(x.torus, y.torus)};
}

}  // namespace

BElement multiply(const RootDatum& rd, const BElement& x, const BElement& y) {
    if (x.side != y.side) throw std::invalid_argument("multiply: mixed sides");
    BElement out(x.side, x.rank);
    for (const auto& [kx, cx] : x.terms)
        for (const auto& [ky, cy] : y.terms) {
            Mono2 m;
            BKey k = key_mul(rd, x.side, kx, ky, m);
            out.add(k, cx * cy * RatFn::from_mono(m));
        }
    return out;
}

TensorElement multiply(const RootDatum& rd, const TensorElement& x, const TensorElement& y) {
    TensorElement out(x.side, x.rank);
    for (const auto& [kx, cx] : x.terms)
        for (const auto& [ky, cy] : y.terms) {
            Mono2 ml, mr;
            BKey l = key_mul(rd, x.side, kx.left, ky.left, ml);
            BKey r = key_mul(rd, x.side, kx.right, ky.right, mr);
            out.add(TKey{std::move(l), std::move(r)},
                    cx * cy * RatFn::from_mono(ml * mr));
        }
    return out;
}

TensorElement coproduct(const RootDatum& rd, const BElement& x) {
    TensorElement out(x.side, x.rank);
    for (const auto& [k, coef] : x.terms) {
        const Word& w = k.word;
        size_t m = w.size();
        for (uint32_t bits = 0; bits < (1u << m); ++bits) {
            Word sel, rest;
            for (size_t p = 0; p < m; ++p)
                (bits >> p & 1 ? sel : rest).push_back(w[p]);
            Mono2 kappa;
            if (x.side == Side::E) {
                // letters at S stay left, the rest contribute w_{letter} which
                // commutes rightwards past later selected letters
                for (size_t a = 0; a < m; ++a) {
                    if (bits >> a & 1) continue;
                    for (size_t p = a + 1; p < m; ++p)
                        if (bits >> p & 1) kappa = kappa * rd.pairing_entry(w[p], w[a]);
                }
                LatticeVec lt = lv_add(word_content(rest, rd.rank), k.torus);
                out.add(TKey{BKey{sel, lt}, BKey{rest, k.torus}},
                        coef * RatFn::from_mono(kappa));
            } else {
                // F-side: selected letters go left, the rest right; each
                // selected letter leaves w'_{letter} in the right slot which
                // commutes past later unselected letters
                for (size_t a = 0; a < m; ++a) {
                    if (!(bits >> a & 1)) continue;
                    for (size_t p = a + 1; p < m; ++p)
                        if (!(bits >> p & 1)) kappa = kappa * rd.pairing_entry(w[a], w[p]);
                }
                LatticeVec rt = lv_add(word_content(sel, rd.rank), k.torus);
                out.add(TKey{BKey{sel, k.torus}, BKey{rest, rt}},
                        coef * RatFn::from_mono(kappa));
            }
        }
    }
    return out;
}

RatFn counit(const BElement& x) {
    RatFn v;
    for (const auto& [k, c] : x.terms)
        if (k.word.empty()) v += c;
    return v;
}

BElement antipode(const RootDatum& rd, const BElement& x) {
    BElement out(x.side, x.rank);
    for (const auto& [k, coef] : x.terms) {
        // S is an anti-homomorphism; build the product of generator images
        // S(w_mu) = w_{-mu}, S(e_i) = -w_i^{-1} e_i, S(f_i) = -f_i w'_i^{-1}
        BElement acc = be_torus(x.side, x.rank, lv_neg(k.torus));
        for (auto it = k.word.rbegin(); it != k.word.rend(); ++it) {
            int i = *it;
            LatticeVec ai = lv_unit(x.rank, i);
            BElement g(x.side, x.rank);
            if (x.side == Side::E) {
                // -w_i^{-1} e_i = -<w'_i,w_i>^{-1} e_i w_i^{-1} in normal form
                Mono2 m = rd.torus_pair(ai, ai).inverse();
                g.terms.emplace(BKey{{i}, lv_neg(ai)}, -RatFn::from_mono(m));
            } else {
                g.terms.emplace(BKey{{i}, lv_neg(ai)}, -RatFn::one());
            }
            acc = multiply(rd, acc, g);
        }
        out += acc.scaled(coef);
    }
    return out;
}

BElement bracket(const RootDatum& rd, const BElement& u, const BElement& v) {
    if (u.side != v.side) throw std::invalid_argument("bracket: mixed sides");
    LatticeVec zeta = u.weight(), eta = v.weight();
    if (u.side == Side::E) {
        RatFn p = rd.torus_pair_ratfn(eta, zeta);
        return multiply(rd, u, v) - multiply(rd, v, u).scaled(p);
    }
    RatFn p = rd.torus_pair_ratfn(zeta, eta).inverse();
    return multiply(rd, v, u) - multiply(rd, u, v).scaled(p);
}

BElement adjoint_serre(const RootDatum& rd, Side side, int i, int j) {
    if (i == j) throw std::invalid_argument("adjoint_serre: i == j");
    // E-side: ad_l e_i (b) = e_i b - <w'_beta, w_i> b e_i for homogeneous b.
    // F-side: ad_r f_i (b) = b f_i - <w'_i, w_beta>^{-1} f_i b; its square on
    // f_j is the (E7) relation.
    int n = 1 - rd.a(i, j);
    BElement acc = be_gen(side, rd.rank, j);
    BElement gi = be_gen(side, rd.rank, i);
    for (int k = 0; k < n; ++k) {
        if (side == Side::E) {
            RatFn p = rd.torus_pair_ratfn(acc.weight(), lv_unit(rd.rank, i));
            acc = multiply(rd, gi, acc) - multiply(rd, acc, gi).scaled(p);
        } else {
            RatFn p = rd.torus_pair_ratfn(lv_unit(rd.rank, i), acc.weight()).inverse();
            acc = multiply(rd, acc, gi) - multiply(rd, gi, acc).scaled(p);
        }
    }
    return acc;
}

}  // namespace ursa
