#include "ursa/pbw.hpp"

#include <algorithm>
#include <atomic>
#include <sstream>
#include <thread>

namespace ursa {

namespace {

void zel_add(ZElem& x, int32_t wid, const LaurentZ& c) {
    if (c.is_zero()) return;
    auto it = std::lower_bound(x.begin(), x.end(), wid,
                               [](const auto& t, int32_t w) { return t.first < w; });
    if (it != x.end() && it->first == wid) {
        it->second += c;
        if (it->second.is_zero()) x.erase(it);
    } else {
        x.insert(it, {wid, c});
    }
}

// enumerate position subsets of v with the given content; calls fn(mask)
void for_each_subset(const Word& v, const LatticeVec& gamma,
                     const std::function<void(uint32_t)>& fn) {
    int L = int(v.size());
    std::vector<std::vector<int>> occ(gamma.size() + 1);
    for (int p = 0; p < L; ++p) occ[size_t(v[size_t(p)])].push_back(p);
    std::vector<int> letters;
    for (size_t l = 1; l <= gamma.size(); ++l) {
        int need = gamma[l - 1];
        if (need < 0 || need > int(occ[l].size())) return;
        if (need > 0) letters.push_back(int(l));
    }
    std::function<void(size_t, uint32_t)> rec = [&](size_t li, uint32_t mask) {
        if (li == letters.size()) { fn(mask); return; }
        int l = letters[li];
        const auto& pos = occ[size_t(l)];
        int need = gamma[size_t(l - 1)];
        int n = int(pos.size());
        std::function<void(int, int, uint32_t)> choose = [&](int start, int left, uint32_t m) {
            if (left == 0) { rec(li + 1, m); return; }
            for (int i = start; i <= n - left; ++i)
                choose(i + 1, left - 1, m | (1u << pos[size_t(i)]));
        };
        choose(0, need, mask);
    };
    rec(0, 0);
}

Mono2 kappa_of(const RootDatum& rd, const Word& v, uint32_t mask) {
    // product over a not in S, k in S, k > a of <w'_{v_k}, w_{v_a}>
    Mono2 m;
    int L = int(v.size());
    for (int a = 0; a < L; ++a) {
        if (mask >> a & 1) continue;
        for (int k = a + 1; k < L; ++k)
            if (mask >> k & 1) m = m * rd.pairing_entry(v[size_t(k)], v[size_t(a)]);
    }
    return m;
}

uint64_t pack_weight(const LatticeVec& v, int k) {
    uint64_t key = uint64_t(uint32_t(k + 1));
    for (int x : v) key = key * 41 + uint64_t(uint32_t(x + 1));
    return key;
}

}  // namespace

Engine::Engine(const RootDatum& rd, int threads)
    : rd_(rd), pairing_(rd_), threads_(threads > 0 ? threads : 1) {
    build();
}

int32_t Engine::intern(const Word& w) {
    std::lock_guard lk(pool_mu_);
    auto it = pool_idx_.find(w);
    if (it != pool_idx_.end()) return it->second;
    pool_.push_back(w);
    int32_t id = int32_t(pool_.size()) - 1;
    pool_idx_.emplace(w, id);
    return id;
}

const Word& Engine::word_of(int32_t id) const {
    std::lock_guard lk(pool_mu_);
    return pool_[size_t(id)];
}

int32_t Engine::root_id(const LatticeVec& root) const {
    auto it = root_ids_.find(root);
    return it == root_ids_.end() ? -1 : it->second;
}

std::vector<std::pair<LatticeVec, Word>> Engine::good_lyndon_words() const {
    std::vector<std::pair<LatticeVec, Word>> out;
    for (int32_t id : convex_) out.emplace_back(rv_[size_t(id)].root, rv_[size_t(id)].word);
    return out;
}

// ---------------------------------------------------------------- phi-hat

LaurentZ Engine::phi_bracket(int32_t p1, int32_t p2, const Word& v) const {
    const RootVector& r1 = rv_[size_t(p1)];
    const RootVector& r2 = rv_[size_t(p2)];
    LaurentZ out;
    Engine* self = const_cast<Engine*>(this);
    // <F_{p2} F_{p1}, v> splits with content(part2) going left
    for_each_subset(v, r2.root, [&](uint32_t mask) {
        Word sel, rest;
        for (size_t p = 0; p < v.size(); ++p)
            (mask >> p & 1 ? sel : rest).push_back(v[p]);
        LaurentZ a = phi_hat(p2, self->intern(sel));
        if (a.is_zero()) return;
        LaurentZ b = phi_hat(p1, self->intern(rest));
        if (b.is_zero()) return;
        Mono2 k = kappa_of(rd_, v, mask);
        out.add_scaled(a * b, k.a, k.b, Int(1));
    });
    // minus tp(c1,c2)^{-1} <F_{p1} F_{p2}, v>
    Mono2 t = rd_.torus_pair(r1.root, r2.root).inverse();
    for_each_subset(v, r1.root, [&](uint32_t mask) {
        Word sel, rest;
        for (size_t p = 0; p < v.size(); ++p)
            (mask >> p & 1 ? sel : rest).push_back(v[p]);
        LaurentZ a = phi_hat(p1, self->intern(sel));
        if (a.is_zero()) return;
        LaurentZ b = phi_hat(p2, self->intern(rest));
        if (b.is_zero()) return;
        Mono2 k = kappa_of(rd_, v, mask) * t;
        out.add_scaled(a * b, k.a, k.b, Int(-1));
    });
    return out;
}

const LaurentZ& Engine::phi_hat(int32_t id, int32_t wordid) const {
    static const LaurentZ kZero;
    uint64_t key = (uint64_t(uint32_t(id)) << 32) | uint64_t(uint32_t(wordid));
    {
        std::lock_guard lk(phi_mu_);
        auto it = phi_memo_.find(key);
        if (it != phi_memo_.end()) return it->second;
    }
    const RootVector& r = rv_[size_t(id)];
    Word v = word_of(wordid);
    LaurentZ val;
    if (word_content(v, rd_.rank) == r.root) {
        if (lv_height(r.root) == 1) {
            val = LaurentZ::one();  // <f_i, e_i> scaled by (s-r)
        } else {
            val = phi_bracket(r.part1, r.part2, v);
        }
    }
    std::lock_guard lk(phi_mu_);
    auto [it, fresh] = phi_memo_.try_emplace(key, std::move(val));
    return it->second;
}

// ---------------------------------------------------------------- build

void Engine::add_root_vector(const LatticeVec& root, const Word& w) {
    RootVector r;
    r.root = root;
    r.word = w;
    if (w.size() == 1) {
        r.e_expansion = {{intern(w), LaurentZ::one()}};
        r.f_expansion = {{intern(w), LaurentZ::one()}};
    } else {
        auto [u, v] = std_factorize(w);
        r.part1 = root_id(word_content(u, rd_.rank));
        r.part2 = root_id(word_content(v, rd_.rank));
        const RootVector& r1 = rv_[size_t(r.part1)];
        const RootVector& r2 = rv_[size_t(r.part2)];
        // E-side: E_u E_v - <w'_{c2}, w_{c1}> E_v E_u
        Mono2 te = rd_.torus_pair(r2.root, r1.root);
        for (const auto& [w1, c1] : r1.e_expansion)
            for (const auto& [w2, c2] : r2.e_expansion) {
                Word cat = word_of(w1);
                const Word& t2 = word_of(w2);
                cat.insert(cat.end(), t2.begin(), t2.end());
                zel_add(r.e_expansion, intern(cat), c1 * c2);
            }
        for (const auto& [w2, c2] : r2.e_expansion)
            for (const auto& [w1, c1] : r1.e_expansion) {
                Word cat = word_of(w2);
                const Word& t1 = word_of(w1);
                cat.insert(cat.end(), t1.begin(), t1.end());
                LaurentZ c = (c2 * c1).shifted(te.a, te.b);
                for (auto& [k, z] : c.terms) z = -z;
                zel_add(r.e_expansion, intern(cat), c);
            }
        // F-side: F_v F_u - <w'_{c1}, w_{c2}>^{-1} F_u F_v
        Mono2 tf = rd_.torus_pair(r1.root, r2.root).inverse();
        for (const auto& [w2, c2] : r2.f_expansion)
            for (const auto& [w1, c1] : r1.f_expansion) {
                Word cat = word_of(w2);
                const Word& t1 = word_of(w1);
                cat.insert(cat.end(), t1.begin(), t1.end());
                zel_add(r.f_expansion, intern(cat), c2 * c1);
            }
        for (const auto& [w1, c1] : r1.f_expansion)
            for (const auto& [w2, c2] : r2.f_expansion) {
                Word cat = word_of(w1);
                const Word& t2 = word_of(w2);
                cat.insert(cat.end(), t2.begin(), t2.end());
                LaurentZ c = (c1 * c2).shifted(tf.a, tf.b);
                for (auto& [k, z] : c.terms) z = -z;
                zel_add(r.f_expansion, intern(cat), c);
            }
        r.bracket_constant = rd_.torus_pair(r1.root, r2.root);
    }
    int32_t id = int32_t(rv_.size());
    rv_.push_back(std::move(r));
    root_ids_.emplace(root, id);
    convex_.push_back(id);
    std::sort(convex_.begin(), convex_.end(), [&](int32_t x, int32_t y) {
        return rv_[size_t(x)].word < rv_[size_t(y)].word;
    });
    if (w.size() == 1) {
        c_beta_.push_back(RatFn(LaurentBi::mono(0, 1) - LaurentBi::mono(1, 0)));
    } else {
        const RootVector& rr = rv_[size_t(id)];
        Mono2 t12 = rd_.torus_pair(rv_[size_t(rr.part1)].root, rv_[size_t(rr.part2)].root);
        Mono2 t21 = rd_.torus_pair(rv_[size_t(rr.part2)].root, rv_[size_t(rr.part1)].root);
        RatFn factor(-LaurentBi::from_mono2(t12),
                     LaurentBi::one() - LaurentBi::from_mono2(t21 * t12));
        c_beta_.push_back(factor * c_beta_[size_t(rr.part1)] * c_beta_[size_t(rr.part2)]);
    }
    std::lock_guard lk(feas_mu_);
    feas_memo_.clear();
}

void Engine::build() {
    for (const auto& root : rd_.positive_roots) {
        int h = lv_height(root);
        if (h == 1) {
            int i = 1;
            while (root[size_t(i - 1)] == 0) ++i;
            add_root_vector(root, Word{i});
            continue;
        }
        // candidates: concatenations of good words over root splits whose own
        // standard factorization parts are good words (any good word has this
        // shape, so the set covers every possible selection)
        std::vector<Word> cands;
        for (const auto& [r1, id1] : root_ids_) {
            LatticeVec r2 = lv_sub(root, r1);
            if (!lv_nonneg(r2) || lv_is_zero(r2)) continue;
            auto it2 = root_ids_.find(r2);
            if (it2 == root_ids_.end()) continue;
            Word w = rv_[size_t(id1)].word;
            const Word& w2 = rv_[size_t(it2->second)].word;
            w.insert(w.end(), w2.begin(), w2.end());
            if (!is_lyndon(w)) continue;
            auto [u, v] = std_factorize(w);
            int32_t pu = root_id(word_content(u, rd_.rank));
            int32_t pv = root_id(word_content(v, rd_.rank));
            if (pu < 0 || pv < 0) continue;
            if (rv_[size_t(pu)].word != u || rv_[size_t(pv)].word != v) continue;
            if (std::find(cands.begin(), cands.end(), w) == cands.end())
                cands.push_back(w);
        }
        // scan in the precede order: lexicographically decreasing
        std::sort(cands.begin(), cands.end(), std::greater<>());
        std::vector<PBWMono> monos = pbw_monomials(root);
        struct Comp { PBWMono m; Word word; };
        std::vector<Comp> comps;
        for (auto& m : monos) comps.push_back({m, mono_word(m)});

        const Word* selected = nullptr;
        for (const Word& w : cands) {
            ZElem x = {{intern(w), LaurentZ::one()}};
            auto values = sweep_all(x, root);
            std::map<PBWMono, LaurentZ> val;
            for (auto& [m, v] : values) val.emplace(m, v);
            bool indep = false;
            for (const auto& c : comps) {
                if (c.word <= w) {
                    auto it = val.find(c.m);
                    if (it != val.end() && !it->second.is_zero()) { indep = true; break; }
                }
            }
            if (!indep) {
                // residual against the candidate's own bracket functional
                auto [u, v] = std_factorize(w);
                int32_t pu = root_id(word_content(u, rd_.rank));
                int32_t pv = root_id(word_content(v, rd_.rank));
                LaurentZ aprime = phi_bracket(pu, pv, w);
                RatFn acc(to_rational_poly(aprime));
                RatFn smrh(pairing_.smr_pow(h));
                for (const auto& c : comps) {
                    if (!(c.word > w)) continue;
                    auto it = val.find(c.m);
                    if (it == val.end() || it->second.is_zero()) continue;
                    LaurentZ t;
                    for (const auto& [wid, coef] : mono_e_zelem(c.m)) {
                        LaurentZ ph = phi_bracket(pu, pv, word_of(wid));
                        if (!ph.is_zero()) t += ph * coef;
                    }
                    if (t.is_zero()) continue;
                    RatFn dhat = smrh * d_value(c.m);
                    acc -= RatFn(to_rational_poly(it->second)) *
                           RatFn(to_rational_poly(t)) / dhat;
                }
                indep = !acc.is_zero();
            }
            if (indep) { selected = &w; break; }
        }
        if (!selected)
            throw std::logic_error(
                "good_lyndon_words: no independent candidate for a root (convention bug)");
        add_root_vector(root, *selected);
    }
}

// ---------------------------------------------------------------- elements

BElement Engine::e_element(int32_t id) const {
    BElement x(Side::E, rd_.rank);
    for (const auto& [wid, c] : rv_[size_t(id)].e_expansion)
        x.add(BKey{word_of(wid), lv_zero(rd_.rank)}, RatFn(to_rational_poly(c)));
    return x;
}

BElement Engine::f_element(int32_t id) const {
    BElement x(Side::F, rd_.rank);
    for (const auto& [wid, c] : rv_[size_t(id)].f_expansion)
        x.add(BKey{word_of(wid), lv_zero(rd_.rank)}, RatFn(to_rational_poly(c)));
    return x;
}

namespace {
ZElem zel_concat(const Engine& eng, const ZElem& x, const ZElem& y) {
    ZElem out;
    Engine& e = const_cast<Engine&>(eng);
    for (const auto& [w1, c1] : x)
        for (const auto& [w2, c2] : y) {
            Word cat = eng.word_of(w1);
            const Word& t = eng.word_of(w2);
            cat.insert(cat.end(), t.begin(), t.end());
            zel_add(out, e.intern(cat), c1 * c2);
        }
    return out;
}
}  // namespace

ZElem Engine::mono_e_zelem(const PBWMono& m) const {
    ZElem out = {{const_cast<Engine*>(this)->intern(Word{}), LaurentZ::one()}};
    PBWMono s = m;
    std::sort(s.begin(), s.end(), [&](const auto& a, const auto& b) {
        return rv_[size_t(a.first)].word > rv_[size_t(b.first)].word;
    });
    for (const auto& [id, e] : s)
        for (int k = 0; k < e; ++k) out = zel_concat(*this, out, rv_[size_t(id)].e_expansion);
    return out;
}

ZElem Engine::mono_f_zelem(const PBWMono& m) const {
    ZElem out = {{const_cast<Engine*>(this)->intern(Word{}), LaurentZ::one()}};
    PBWMono s = m;
    std::sort(s.begin(), s.end(), [&](const auto& a, const auto& b) {
        return rv_[size_t(a.first)].word > rv_[size_t(b.first)].word;
    });
    for (const auto& [id, e] : s)
        for (int k = 0; k < e; ++k) out = zel_concat(*this, out, rv_[size_t(id)].f_expansion);
    return out;
}

BElement Engine::mono_e_element(const PBWMono& m) const {
    BElement x(Side::E, rd_.rank);
    for (const auto& [wid, c] : mono_e_zelem(m))
        x.add(BKey{word_of(wid), lv_zero(rd_.rank)}, RatFn(to_rational_poly(c)));
    return x;
}

BElement Engine::mono_f_element(const PBWMono& m) const {
    BElement x(Side::F, rd_.rank);
    for (const auto& [wid, c] : mono_f_zelem(m))
        x.add(BKey{word_of(wid), lv_zero(rd_.rank)}, RatFn(to_rational_poly(c)));
    return x;
}

// ---------------------------------------------------------------- monomials

LatticeVec Engine::mono_weight(const PBWMono& m) const {
    LatticeVec w = lv_zero(rd_.rank);
    for (const auto& [id, e] : m)
        for (int i = 0; i < rd_.rank; ++i)
            w[size_t(i)] += e * rv_[size_t(id)].root[size_t(i)];
    return w;
}

int Engine::mono_height(const PBWMono& m) const {
    int h = 0;
    for (const auto& [id, e] : m) h += e * lv_height(rv_[size_t(id)].root);
    return h;
}

Word Engine::mono_word(const PBWMono& m) const {
    PBWMono s = m;
    std::sort(s.begin(), s.end(), [&](const auto& a, const auto& b) {
        return rv_[size_t(a.first)].word > rv_[size_t(b.first)].word;
    });
    Word w;
    for (const auto& [id, e] : s)
        for (int k = 0; k < e; ++k) {
            const Word& t = rv_[size_t(id)].word;
            w.insert(w.end(), t.begin(), t.end());
        }
    return w;
}

bool Engine::feasible(const LatticeVec& rem, int k) const {
    if (lv_is_zero(rem)) return true;
    if (k < 0) return false;
    uint64_t key = pack_weight(rem, k);
    {
        std::lock_guard lk(feas_mu_);
        auto it = feas_memo_.find(key);
        if (it != feas_memo_.end()) return it->second;
    }
    bool ok = false;
    const LatticeVec& root = rv_[size_t(convex_[size_t(k)])].root;
    LatticeVec t = rem;
    while (true) {
        if (feasible(t, k - 1)) { ok = true; break; }
        t = lv_sub(t, root);
        if (!lv_nonneg(t)) break;
        if (lv_is_zero(t)) { ok = true; break; }
    }
    std::lock_guard lk(feas_mu_);
    feas_memo_.emplace(key, ok);
    return ok;
}

std::vector<PBWMono> Engine::pbw_monomials(const LatticeVec& weight) const {
    std::vector<PBWMono> out;
    std::vector<std::pair<int32_t, int32_t>> stack;
    std::function<void(int, LatticeVec)> rec = [&](int pos, LatticeVec rem) {
        if (lv_is_zero(rem)) {
            out.emplace_back(stack);
            return;
        }
        if (pos < 0 || !feasible(rem, pos)) return;
        rec(pos - 1, rem);
        int32_t id = convex_[size_t(pos)];
        const LatticeVec& root = rv_[size_t(id)].root;
        LatticeVec t = rem;
        int e = 0;
        while (true) {
            t = lv_sub(t, root);
            if (!lv_nonneg(t)) break;
            ++e;
            stack.emplace_back(id, e);
            if (lv_is_zero(t)) out.emplace_back(stack);
            else rec(pos - 1, t);
            stack.pop_back();
        }
    };
    rec(int(convex_.size()) - 1, weight);
    for (auto& m : out)
        std::sort(m.begin(), m.end(), [&](const auto& a, const auto& b) {
            return rv_[size_t(a.first)].word > rv_[size_t(b.first)].word;
        });
    std::sort(out.begin(), out.end());
    return out;
}

// ---------------------------------------------------------------- sweeps

ZElem Engine::apply_d(int32_t rootid, const ZElem& x) const {
    const LatticeVec& gamma = rv_[size_t(rootid)].root;
    ZElem out;
    Engine* self = const_cast<Engine*>(this);
    for (const auto& [wid, coef] : x) {
        const Word v = word_of(wid);
        for_each_subset(v, gamma, [&](uint32_t mask) {
            Word sel, rest;
            for (size_t p = 0; p < v.size(); ++p)
                (mask >> p & 1 ? sel : rest).push_back(v[p]);
            const LaurentZ& ph = phi_hat(rootid, self->intern(sel));
            if (ph.is_zero()) return;
            Mono2 k = kappa_of(rd_, v, mask);
            zel_add(out, self->intern(rest), (coef * ph).shifted(k.a, k.b));
        });
    }
    return out;
}

void Engine::sweep_rec(int pos, const LatticeVec& rem, const ZElem& cur,
                       std::vector<std::pair<int32_t, int32_t>>& stack,
                       const std::function<void(const PBWMono&, const LaurentZ&)>& cb) const {
    if (cur.empty()) return;
    auto emit = [&](const ZElem& elem) {
        for (const auto& [wid, c] : elem)
            if (word_of(wid).empty() && !c.is_zero()) {
                PBWMono m(stack);
                std::sort(m.begin(), m.end(), [&](const auto& a, const auto& b) {
                    return rv_[size_t(a.first)].word > rv_[size_t(b.first)].word;
                });
                cb(m, c);
            }
    };
    if (lv_is_zero(rem)) {
        emit(cur);
        return;
    }
    if (pos < 0 || !feasible(rem, pos)) return;
    sweep_rec(pos - 1, rem, cur, stack, cb);
    int32_t id = convex_[size_t(pos)];
    const LatticeVec& root = rv_[size_t(id)].root;
    LatticeVec t = rem;
    ZElem elem = cur;
    int e = 0;
    while (true) {
        t = lv_sub(t, root);
        if (!lv_nonneg(t)) break;
        elem = apply_d(id, elem);
        if (elem.empty()) break;
        ++e;
        stack.emplace_back(id, e);
        if (lv_is_zero(t)) emit(elem);
        else sweep_rec(pos - 1, t, elem, stack, cb);
        stack.pop_back();
    }
}

std::vector<std::pair<PBWMono, LaurentZ>> Engine::sweep_all(const ZElem& x,
                                                            const LatticeVec& weight) const {
    std::vector<std::pair<PBWMono, LaurentZ>> out;
    std::vector<std::pair<int32_t, int32_t>> stack;
    sweep_rec(int(convex_.size()) - 1, weight, x, stack,
              [&](const PBWMono& m, const LaurentZ& v) { out.emplace_back(m, v); });
    std::sort(out.begin(), out.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    return out;
}

LaurentZ Engine::sweep_value(const PBWMono& m, const ZElem& x) const {
    ZElem cur = x;
    PBWMono s = m;
    std::sort(s.begin(), s.end(), [&](const auto& a, const auto& b) {
        return rv_[size_t(a.first)].word > rv_[size_t(b.first)].word;
    });
    for (const auto& [id, e] : s)
        for (int k = 0; k < e && !cur.empty(); ++k) cur = apply_d(id, cur);
    for (const auto& [wid, c] : cur)
        if (word_of(wid).empty()) return c;
    return {};
}

// ---------------------------------------------------------------- d-values

RatFn Engine::d_value(const PBWMono& m) const {
    {
        std::lock_guard lk(dval_mu_);
        auto it = dval_memo_.find(m);
        if (it != dval_memo_.end()) return it->second;
    }
    RatFn d = RatFn::one();
    RatFn one_m_a = RatFn(LaurentBi::one() - LaurentBi::mono(1, -1));
    for (const auto& [id, e] : m) {
        d *= RatFn(psi_poly(e));
        d /= (one_m_a * c_beta_[size_t(id)]).pow(e);
    }
    std::lock_guard lk(dval_mu_);
    dval_memo_.emplace(m, d);
    return d;
}

// ---------------------------------------------------------------- columns

bool Engine::verify_column(const PBWMono& m, std::string* witness) const {
    {
        std::lock_guard lk(column_mu_);
        auto it = column_memo_.find(m);
        if (it != column_memo_.end()) {
            if (witness) *witness = it->second.witness;
            return it->second.verified;
        }
    }
    LatticeVec weight = mono_weight(m);
    int h = lv_height(weight);
    ZElem em = mono_e_zelem(m);
    auto values = sweep_all(em, weight);
    bool ok = true;
    std::string w;
    RatFn smrh(pairing_.smr_pow(h));
    for (const auto& [m2, v] : values) {
        if (m2 != m) {
            ok = false;
            w = "off-diagonal pairing <F_" + mono_str(*this, m2) + ", E_" +
                mono_str(*this, m) + "> is nonzero";
            break;
        }
        RatFn got = RatFn(to_rational_poly(v)) / smrh;
        if (!(got == d_value(m))) {
            ok = false;
            w = "diagonal pairing for m = " + mono_str(*this, m) +
                " differs from the Psi-product value";
            break;
        }
    }
    if (values.empty()) {
        ok = false;
        w = "diagonal pairing vanished for m = " + mono_str(*this, m);
    }
    std::lock_guard lk(column_mu_);
    auto [it, fresh] = column_memo_.try_emplace(m, ColumnState{ok, w});
    if (witness) *witness = it->second.witness;
    return it->second.verified;
}

// ---------------------------------------------------------------- normal form

ZElem Engine::to_zelem(const BElement& x, RatFn& scale) const {
    LaurentZ den = LaurentZ::one();
    for (const auto& [k, c] : x.terms) {
        if (!lv_is_zero(k.torus))
            throw std::invalid_argument("to_zelem: torus decorations not allowed here");
        Rational sc;
        LaurentZ d = to_integer_poly(c.den, sc);
        LaurentZ g = laurent_gcd(den, d);
        den = laurent_divexact(den * d, g);
    }
    ZElem out;
    Engine* self = const_cast<Engine*>(this);
    LaurentBi denq = to_rational_poly(den);
    for (const auto& [k, c] : x.terms) {
        RatFn scaled = c * RatFn(denq);
        if (!scaled.den.is_one())
            throw std::logic_error("to_zelem: denominator did not clear");
        Rational sc;
        LaurentZ n = to_integer_poly(scaled.num, sc);
        LaurentZ nf;
        for (auto& [key, z] : n.terms) {
            Rational q = Rational(z) * sc;
            if (q.get_den() != 1) throw std::logic_error("to_zelem: non-integral coefficient");
            nf.terms.emplace_back(key, Int(q.get_num()));
        }
        zel_add(out, self->intern(k.word), nf);
    }
    scale = RatFn(LaurentBi::one(), denq);
    return out;
}

NormalFormResult Engine::normal_form_z(const ZElem& x, const RatFn& scale,
                                       const LatticeVec& weight) const {
    NormalFormResult res;
    int h = lv_height(weight);
    auto values = sweep_all(x, weight);
    RatFn smrh(pairing_.smr_pow(h));
    res.residual_ok = true;
    for (const auto& [m, v] : values) {
        if (!verify_column(m)) res.residual_ok = false;
        RatFn c = scale * RatFn(to_rational_poly(v)) / (smrh * d_value(m));
        res.expansion.emplace_back(m, c);
    }
    return res;
}

NormalFormResult Engine::normal_form(const BElement& x) const {
    if (x.side != Side::E) throw std::invalid_argument("normal_form: E-side expected");
    if (x.is_zero()) return NormalFormResult{{}, true};
    RatFn scale;
    ZElem z = to_zelem(x, scale);
    return normal_form_z(z, scale, x.weight());
}

bool Engine::is_zero_in_quotient(const BElement& x) const {
    if (x.is_zero()) return true;
    RatFn scale;
    ZElem z = to_zelem(x, scale);
    return sweep_all(z, x.weight()).empty();
}

NormalFormResult Engine::f_normal_form(const BElement& x) const {
    if (x.side != Side::F) throw std::invalid_argument("f_normal_form: F-side expected");
    NormalFormResult res;
    res.residual_ok = true;
    if (x.is_zero()) return res;
    LatticeVec mu = x.weight();
    auto monos = pbw_monomials(mu);
    // honest diagonality of the weight's Gram, once per weight
    bool gram_ok;
    {
        std::lock_guard lk(fgram_mu_);
        auto it = fgram_memo_.find(mu);
        gram_ok = it != fgram_memo_.end() ? it->second : true;
        if (it != fgram_memo_.end()) {
            if (!gram_ok) res.residual_ok = false;
        }
    }
    bool need_check;
    {
        std::lock_guard lk(fgram_mu_);
        need_check = !fgram_memo_.count(mu);
    }
    if (need_check) {
        bool ok = true;
        for (const auto& mf : monos) {
            BElement fel = mono_f_element(mf);
            for (const auto& me : monos) {
                RatFn got = pairing_.pair(fel, mono_e_element(me));
                RatFn expect = mf == me ? d_value(mf) : RatFn();
                if (!(got == expect)) ok = false;
            }
        }
        std::lock_guard lk(fgram_mu_);
        fgram_memo_.emplace(mu, ok);
        gram_ok = ok;
    }
    if (!gram_ok) res.residual_ok = false;
    for (const auto& m : monos) {
        RatFn v = pairing_.pair(x, mono_e_element(m));
        if (v.is_zero()) continue;
        res.expansion.emplace_back(m, v / d_value(m));
    }
    return res;
}

// ---------------------------------------------------------------- LS table

LSRelation Engine::ls_relation(int32_t a, int32_t b) const {
    LSRelation rel;
    rel.a = a;
    rel.b = b;
    const RootVector& ra = rv_[size_t(a)];
    const RootVector& rb = rv_[size_t(b)];
    rel.weight = lv_add(ra.root, rb.root);
    Mono2 q = rd_.torus_pair(rb.root, ra.root);
    rel.scalar = RatFn::from_mono(q);
    // z = E_a E_b - q E_b E_a
    ZElem z = zel_concat(*this, ra.e_expansion, rb.e_expansion);
    for (const auto& [wid, c] : zel_concat(*this, rb.e_expansion, ra.e_expansion)) {
        LaurentZ t = c.shifted(q.a, q.b);
        for (auto& [k, zc] : t.terms) zc = -zc;
        zel_add(z, wid, t);
    }
    auto nf = normal_form_z(z, RatFn::one(), rel.weight);
    rel.expansion = nf.expansion;
    rel.residual_ok = nf.residual_ok;
    rel.convexity_ok = true;
    for (const auto& [m, c] : rel.expansion)
        for (const auto& [id, e] : m)
            if (!(ra.word < rv_[size_t(id)].word && rv_[size_t(id)].word < rb.word))
                rel.convexity_ok = false;
    auto monos = pbw_monomials(rel.weight);
    rel.gram_size = long(monos.size());
    rel.interval_size = 0;
    for (const auto& m : monos) {
        bool inside = true;
        for (const auto& [id, e] : m)
            if (!(ra.word < rv_[size_t(id)].word && rv_[size_t(id)].word < rb.word))
                inside = false;
        if (inside) ++rel.interval_size;
    }
    return rel;
}

std::vector<LSRelation> Engine::ls_table(int max_height, int nonroot_cap) const {
    std::vector<std::pair<int32_t, int32_t>> pairs;
    for (size_t i = 0; i < convex_.size(); ++i)
        for (size_t j = i + 1; j < convex_.size(); ++j) {
            int32_t a = convex_[i], b = convex_[j];
            LatticeVec w = lv_add(rv_[size_t(a)].root, rv_[size_t(b)].root);
            int h = lv_height(w);
            bool isroot = rd_.is_positive_root(w);
            if ((isroot && h <= max_height) || (!isroot && h <= nonroot_cap))
                pairs.emplace_back(a, b);
        }
    std::vector<LSRelation> out(pairs.size());
    std::atomic<size_t> next{0};
    auto worker = [&]() {
        while (true) {
            size_t i = next.fetch_add(1);
            if (i >= pairs.size()) break;
            out[i] = ls_relation(pairs[i].first, pairs[i].second);
        }
    };
    if (threads_ <= 1) {
        worker();
    } else {
        std::vector<std::thread> ts;
        for (int t = 0; t < threads_; ++t) ts.emplace_back(worker);
        for (auto& t : ts) t.join();
    }
    return out;
}

std::string mono_str(const Engine& eng, const PBWMono& m) {
    if (m.empty()) return "1";
    std::ostringstream os;
    bool first = true;
    for (const auto& [id, e] : m) {
        if (!first) os << ".";
        first = false;
        os << "E[" << word_str(eng.rv(id).word) << "]";
        if (e > 1) os << "^" << e;
    }
    return os.str();
}

}  // namespace ursa
