#include "ursa/pairing.hpp"

#include <fstream>
#include <sstream>

namespace ursa {

size_t Pairing::WordPairHash::operator()(const std::pair<Word, Word>& p) const {
    size_t h = 0xcbf29ce484222325ull;
    auto mix = [&h](int x) {
        h ^= size_t(uint32_t(x)) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    };
    for (int x : p.first) mix(x);
    mix(-1);
    for (int x : p.second) mix(x);
    return h;
}

LaurentZ Pairing::phat(const Word& fword, const Word& eword) const {
    if (fword.size() != eword.size()) return {};
    if (fword.empty()) return LaurentZ::one();
    {
        std::lock_guard lk(mu_);
        auto it = memo_.find({fword, eword});
        if (it != memo_.end()) return it->second;
    }
    LaurentZ out;
    int head = fword[0];
    Word rest(fword.begin() + 1, fword.end());
    for (size_t k = 0; k < eword.size(); ++k) {
        if (eword[k] != head) continue;
        Mono2 kappa;
        for (size_t a = 0; a < k; ++a)
            kappa = kappa * rd_.pairing_entry(eword[k], eword[a]);
        Word sub;
        sub.reserve(eword.size() - 1);
        for (size_t a = 0; a < eword.size(); ++a)
            if (a != k) sub.push_back(eword[a]);
        LaurentZ s = phat(rest, sub);
        out.add_scaled(s, kappa.a, kappa.b, Int(1));
    }
    std::lock_guard lk(mu_);
    memo_.try_emplace({fword, eword}, out);
    return out;
}

const LaurentBi& Pairing::smr_pow(int n) const {
    std::lock_guard lk(smr_mu_);
    if (smr_pows_.empty()) smr_pows_.push_back(LaurentBi::one());
    LaurentBi smr = LaurentBi::mono(0, 1) - LaurentBi::mono(1, 0);
    while (int(smr_pows_.size()) <= n) smr_pows_.push_back(smr_pows_.back() * smr);
    return smr_pows_[size_t(n)];
}

RatFn Pairing::pair_words(const Word& fword, const Word& eword) const {
    LaurentZ p = phat(fword, eword);
    if (p.is_zero()) return RatFn();
    return RatFn(to_rational_poly(p), smr_pow(int(fword.size())));
}

RatFn Pairing::pair(const BElement& y, const BElement& x) const {
    if (y.side != Side::F || x.side != Side::E)
        throw std::invalid_argument("pair: expects (F-side, E-side)");
    RatFn acc;
    for (const auto& [ky, cy] : y.terms)
        for (const auto& [kx, cx] : x.terms) {
            if (ky.word.size() != kx.word.size()) continue;
            LaurentZ p = phat(ky.word, kx.word);
            if (p.is_zero()) continue;
            Mono2 t = rd_.torus_pair(ky.torus, kx.torus);
            RatFn v(to_rational_poly(p).shifted(t.a, t.b), smr_pow(int(ky.word.size())));
            acc += cy * cx * v;
        }
    return acc;
}

std::vector<std::vector<RatFn>> Pairing::gram(const LatticeVec& weight,
                                              const std::vector<BElement>& fbasis,
                                              const std::vector<BElement>& ebasis) const {
    for (const auto& b : fbasis)
        if (!b.is_zero() && b.weight() != weight)
            throw std::invalid_argument("gram: weight mismatch in F basis");
    for (const auto& b : ebasis)
        if (!b.is_zero() && b.weight() != weight)
            throw std::invalid_argument("gram: weight mismatch in E basis");
    std::vector<std::vector<RatFn>> g(fbasis.size(), std::vector<RatFn>(ebasis.size()));
    for (size_t i = 0; i < fbasis.size(); ++i)
        for (size_t j = 0; j < ebasis.size(); ++j) g[i][j] = pair(fbasis[i], ebasis[j]);
    return g;
}

std::vector<RatFn> Pairing::functional_vector(const BElement& x,
                                              const std::vector<BElement>& fbasis) const {
    if (!x.is_zero() && !x.is_homogeneous())
        throw std::invalid_argument("functional_vector: inhomogeneous element");
    std::vector<RatFn> v(fbasis.size());
    for (size_t i = 0; i < fbasis.size(); ++i) v[i] = pair(fbasis[i], x);
    return v;
}

size_t Pairing::memo_size() const {
    std::lock_guard lk(mu_);
    return memo_.size();
}

namespace {
constexpr const char* kCacheVersion = "ursa-paircache-v1";
}

bool Pairing::load_cache(const std::string& path) {
    std::ifstream in(path);
    if (!in) return false;
    std::string header, type;
    if (!(in >> header >> type)) return false;
    if (header != kCacheVersion) return false;
    if (type != kind_str(rd_.kind) + std::to_string(rd_.rank)) return false;
    std::string fw, ew;
    size_t nterms;
    std::lock_guard lk(mu_);
    while (in >> fw >> ew >> nterms) {
        LaurentZ v;
        bool ok = true;
        for (size_t t = 0; t < nterms; ++t) {
            long a, b;
            std::string coef;
            if (!(in >> a >> b >> coef)) { ok = false; break; }
            v.terms.emplace_back(pack_exp(int(a), int(b)), Int(coef));
        }
        if (!ok) break;
        Word f = fw == "-" ? Word{} : word_parse(fw);
        Word e = ew == "-" ? Word{} : word_parse(ew);
        memo_.try_emplace({f, e}, std::move(v));
    }
    return true;
}

void Pairing::save_cache(const std::string& path) const {
    std::ofstream out(path);
    if (!out) return;
    out << kCacheVersion << " " << kind_str(rd_.kind) << rd_.rank << "\n";
    std::lock_guard lk(mu_);
    for (const auto& [key, v] : memo_) {
        const auto& [f, e] = key;
        out << (f.empty() ? "-" : word_str(f)) << " " << (e.empty() ? "-" : word_str(e))
            << " " << v.terms.size();
        for (const auto& [k, c] : v.terms)
            out << " " << exp_r(k) << " " << exp_s(k) << " " << c.get_str();
        out << "\n";
    }
}

}  // namespace ursa
