#include "ursa/golden.hpp"

#include <sstream>

namespace ursa {

// Matrix A as displayed after Prop 1.3: exponent pairs (a, b) meaning r^a s^b.
json golden_matrix_a() {
    auto E = [](int a, int b) { return json::array({a, b}); };
    json one = E(0, 0), d = E(1, -1), rinv = E(-1, 0), s = E(0, 1);
    json rows = json::array();
    rows.push_back(json::array({d, one, rinv, one, one, one}));
    rows.push_back(json::array({one, d, one, rinv, one, one}));
    rows.push_back(json::array({s, one, d, rinv, one, one}));
    rows.push_back(json::array({one, s, s, d, rinv, one}));
    rows.push_back(json::array({one, one, one, s, d, rinv}));
    rows.push_back(json::array({one, one, one, one, s, d}));
    return json{{"type", "E6"}, {"entries", rows}};
}

json golden_good_words_e6() {
    return json{{"type", "E6"},
                {"good_words",
                 json::array({"1", "13", "134", "1342", "1345", "13452", "134524",
                              "1345243", "13456", "134562", "1345624", "13456243",
                              "13456245", "134562453", "1345624534", "13456245342", "2",
                              "24", "243", "245", "2453", "24534", "2456", "24563",
                              "245634", "2456345", "3", "34", "345", "3456", "4", "45",
                              "456", "5", "56", "6"})}};
}

// The final display of the appendix. Coefficients are sign * (1-r^{-1}s)^k * r^a s^b;
// left factors are a root vector (good word, empty = 1) with a torus w_mu,
// right factors are products of root vectors.
json golden_appendix_delta() {
    auto term = [](int sign, int k, int a, int b, const std::string& lrv,
                   const std::vector<int>& torus, const std::vector<std::string>& rprod) {
        return json{{"coeff", {{"sign", sign}, {"one_m_ris_pow", k}, {"r", a}, {"s", b}}},
                    {"left_rv", lrv},
                    {"left_torus", torus},
                    {"right_product", rprod}};
    };
    json terms = json::array();
    terms.push_back(term(1, 0, 0, 0, "2453", {}, {}));
    terms.push_back(term(1, 1, 0, 0, "245", {3}, {"3"}));
    terms.push_back(term(1, 1, 0, 0, "243", {5}, {"5"}));
    terms.push_back(term(1, 2, 0, 0, "24", {3, 5}, {"5", "3"}));
    terms.push_back(term(1, 2, 0, 0, "2", {3, 4, 5}, {"45", "3"}));
    terms.push_back(term(-1, 1, -1, 0, "2", {3, 4, 5}, {"345"}));
    terms.push_back(term(1, 0, 0, 0, "", {2, 3, 4, 5}, {"2453"}));
    return json{{"element", "2453"}, {"terms", terms}};
}

json GoldenDiff::to_json() const {
    return json{{"empty", empty()},
                {"missing", missing},
                {"extra", extra},
                {"mismatched", mismatched}};
}

GoldenDiff diff_pairing_matrix(const RootDatum& rd) {
    GoldenDiff d;
    json g = golden_matrix_a();
    if (rd.kind != Kind::E || rd.rank != 6) {
        d.mismatched.push_back("golden matrix A is for E6");
        return d;
    }
    for (int i = 1; i <= 6; ++i)
        for (int j = 1; j <= 6; ++j) {
            const json& e = g["entries"][size_t(i - 1)][size_t(j - 1)];
            Mono2 expect{e[0].get<int>(), e[1].get<int>()};
            Mono2 got = rd.pairing_entry(i, j);
            if (!(got == expect)) {
                std::ostringstream os;
                os << "entry (" << i << "," << j << ")";
                d.mismatched.push_back(os.str());
            }
        }
    return d;
}

GoldenDiff diff_good_words(const Engine& eng) {
    GoldenDiff d;
    json g = golden_good_words_e6();
    std::vector<std::string> expect;
    for (const auto& w : g["good_words"]) expect.push_back(w.get<std::string>());
    std::sort(expect.begin(), expect.end());
    std::vector<std::string> got;
    for (const auto& [root, w] : eng.good_lyndon_words()) got.push_back(word_str(w));
    // both lists are lexicographically sorted as strings of digits
    std::sort(got.begin(), got.end());
    for (const auto& w : expect)
        if (std::find(got.begin(), got.end(), w) == got.end()) d.missing.push_back(w);
    for (const auto& w : got)
        if (std::find(expect.begin(), expect.end(), w) == expect.end()) d.extra.push_back(w);
    return d;
}

namespace {

// canonical quotient form of a tensor element: slot-wise PBW normal forms,
// with torus decorations carried along
using CanonKey = std::tuple<std::string, LatticeVec, std::string, LatticeVec>;

std::map<CanonKey, RatFn> canonicalize(const Engine& eng, const TensorElement& t) {
    std::map<CanonKey, RatFn> out;
    std::map<Word, std::vector<std::pair<PBWMono, RatFn>>> nf_cache;
    auto nf_of = [&](const Word& w) -> const std::vector<std::pair<PBWMono, RatFn>>& {
        auto it = nf_cache.find(w);
        if (it == nf_cache.end()) {
            auto res = eng.normal_form(be_word(Side::E, eng.root_datum().rank, w));
            it = nf_cache.emplace(w, res.expansion).first;
        }
        return it->second;
    };
    for (const auto& [k, c] : t.terms) {
        for (const auto& [ml, cl] : nf_of(k.left.word))
            for (const auto& [mr, cr] : nf_of(k.right.word)) {
                CanonKey key{mono_str(eng, ml), k.left.torus, mono_str(eng, mr),
                             k.right.torus};
                RatFn v = c * cl * cr;
                auto [it, fresh] = out.try_emplace(key, v);
                if (!fresh) {
                    it->second += v;
                    if (it->second.is_zero()) out.erase(it);
                }
            }
    }
    return out;
}

std::string canon_key_str(const CanonKey& k) {
    std::ostringstream os;
    os << std::get<0>(k) << " w^(";
    for (int x : std::get<1>(k)) os << x << " ";
    os << ") (x) " << std::get<2>(k) << " w^(";
    for (int x : std::get<3>(k)) os << x << " ";
    os << ")";
    return os.str();
}

TensorElement expand_golden_delta(const Engine& eng, const json& golden) {
    const RootDatum& rd = eng.root_datum();
    int n = rd.rank;
    TensorElement out(Side::E, n);
    RatFn one_m_ris(LaurentBi::one() - LaurentBi::mono(-1, 1));
    for (const auto& t : golden["terms"]) {
        const json& cj = t["coeff"];
        RatFn coeff = one_m_ris.pow(cj["one_m_ris_pow"].get<int>()) *
                      RatFn::from_mono({cj["r"].get<int>(), cj["s"].get<int>()});
        if (cj["sign"].get<int>() < 0) coeff = -coeff;
        // left factor: root vector times torus
        std::string lrv = t["left_rv"].get<std::string>();
        LatticeVec torus = lv_zero(n);
        for (const auto& i : t["left_torus"]) torus[size_t(i.get<int>() - 1)] += 1;
        BElement left = lrv.empty()
                            ? be_one(Side::E, n)
                            : eng.e_element(eng.root_id(word_content(word_parse(lrv), n)));
        left = multiply(rd, left, be_torus(Side::E, n, torus));
        // right factor: product of root vectors
        BElement right = be_one(Side::E, n);
        for (const auto& wj : t["right_product"]) {
            Word w = word_parse(wj.get<std::string>());
            right = multiply(rd, right, eng.e_element(eng.root_id(word_content(w, n))));
        }
        for (const auto& [kl, cl] : left.terms)
            for (const auto& [kr, cr] : right.terms)
                out.add(TKey{kl, kr}, coeff * cl * cr);
    }
    return out;
}

}  // namespace

GoldenDiff diff_appendix_delta_against(const Engine& eng, const json& golden) {
    GoldenDiff d;
    const RootDatum& rd = eng.root_datum();
    Word target = word_parse(golden["element"].get<std::string>());
    int32_t id = eng.root_id(word_content(target, rd.rank));
    TensorElement computed = coproduct(rd, eng.e_element(id));
    TensorElement expected = expand_golden_delta(eng, golden);
    auto cgot = canonicalize(eng, computed);
    auto cexp = canonicalize(eng, expected);
    for (const auto& [k, v] : cexp) {
        auto it = cgot.find(k);
        if (it == cgot.end()) d.missing.push_back(canon_key_str(k));
        else if (!(it->second == v)) d.mismatched.push_back(canon_key_str(k));
    }
    for (const auto& [k, v] : cgot)
        if (!cexp.count(k)) d.extra.push_back(canon_key_str(k));
    return d;
}

GoldenDiff diff_appendix_delta(const Engine& eng) {
    return diff_appendix_delta_against(eng, golden_appendix_delta());
}

}  // namespace ursa
