#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ursa/drinfeld.hpp"

using namespace ursa;

namespace {
RootDatum& rd_e6() {
    static RootDatum rd = build_root_datum(Kind::E, 6);
    return rd;
}
Engine& eng_e6() {
    static Engine eng(rd_e6(), 4);
    return eng;
}
RootDatum& rd_a2() {
    static RootDatum rd = build_root_datum(Kind::A, 2);
    return rd;
}
Engine& eng_a2() {
    static Engine eng(rd_a2());
    return eng;
}
}  // namespace

TEST_CASE("c_beta base cases and closed forms") {
    Engine& eng = eng_e6();
    RatFn smr(LaurentBi::mono(0, 1) - LaurentBi::mono(1, 0));
    for (int i = 1; i <= 6; ++i)
        CHECK(eng.c_beta(eng.root_id(lv_unit(6, i))) == smr);
    // adjacent pair: -r^{-1}(1 - s r^{-1})^{-1}(s-r)^2 = s - r
    int32_t id13 = eng.root_id(lv_add(lv_unit(6, 1), lv_unit(6, 3)));
    CHECK(eng.c_beta(id13) == smr);
    SuiteReport rep = c_beta_report(eng);
    CHECK(rep.pass());
}

TEST_CASE("eta relations suite") {
    SuiteReport rep = verify_eta_relations(eng_e6());
    for (const auto& c : rep.checks) {
        INFO(c.name, ": ", c.witness);
        CHECK(c.status == CheckStatus::Pass);
    }
}

TEST_CASE("double mixed relation for all pairs") {
    SuiteReport rep = double_mixed_check(eng_e6());
    REQUIRE(rep.checks.size() == 36);
    for (const auto& c : rep.checks) {
        INFO(c.name, ": ", c.witness);
        CHECK(c.status == CheckStatus::Pass);
    }
}

TEST_CASE("theta degree 0 and 1") {
    Engine& eng = eng_e6();
    ThetaTruncation t0 = theta(eng, 0);
    REQUIRE(t0.terms.size() == 1);
    CHECK(t0.terms[0].mono.empty());
    CHECK(t0.terms[0].coeff == RatFn::one());

    ThetaTruncation t1 = theta(eng, 1);
    REQUIRE(t1.terms.size() == 7);  // 1 + six degree-1 terms
    RatFn smr(LaurentBi::mono(0, 1) - LaurentBi::mono(1, 0));
    for (size_t i = 1; i < t1.terms.size(); ++i) {
        CHECK(eng.mono_height(t1.terms[i].mono) == 1);
        CHECK(t1.terms[i].coeff == smr);  // (1-rs^{-1})/Psi_1 * c = c = s-r
    }
    // diagonal single-root coefficient at degree n: (1-rs^{-1})^n c^n / Psi_n
    ThetaTruncation t2 = theta(eng, 2);
    RatFn one_m_a(LaurentBi::one() - LaurentBi::mono(1, -1));
    int32_t id1 = eng.root_id(lv_unit(6, 1));
    for (const auto& term : t2.terms) {
        if (term.mono == PBWMono{{id1, 2}}) {
            RatFn expect = one_m_a.pow(2) * eng.c_beta(id1).pow(2) / RatFn(psi_poly(2));
            CHECK(term.coeff == expect);
        }
    }
}

TEST_CASE("theta truncation coherence") {
    Engine& eng = eng_a2();
    ThetaTruncation t2 = theta(eng, 2), t3 = theta(eng, 3);
    std::vector<ThetaTerm> t3cut;
    for (const auto& term : t3.terms)
        if (eng.mono_height(term.mono) <= 2) t3cut.push_back(term);
    REQUIRE(t3cut.size() == t2.terms.size());
    for (size_t i = 0; i < t3cut.size(); ++i) {
        CHECK(t3cut[i].mono == t2.terms[i].mono);
        CHECK(t3cut[i].coeff == t2.terms[i].coeff);
    }
}

TEST_CASE("theta expanded tensor has balanced weights") {
    Engine& eng = eng_a2();
    TensorElement t = theta_expanded(eng, theta(eng, 3));
    for (const auto& [k, c] : t.terms)
        CHECK(word_content(k.left.word, 2) == word_content(k.right.word, 2));
}

TEST_CASE("dual basis check on small weights") {
    Engine& eng = eng_a2();
    for (const LatticeVec& mu :
         std::vector<LatticeVec>{{1, 0}, {1, 1}, {2, 1}, {2, 2}, {3, 2}}) {
        SuiteReport rep = dual_basis_check(eng, mu);
        for (const auto& c : rep.checks) {
            INFO(c.name, ": ", c.witness);
            CHECK(c.status == CheckStatus::Pass);
        }
    }
    // weight 2 alpha_1: 1x1 check Psi_2/(1-rs^{-1})^2 via <eta^2, E^2>
    SuiteReport rep = dual_basis_check(eng, {2, 0});
    CHECK(rep.pass());
}

TEST_CASE("dual basis check on E6 height <= 3") {
    Engine& eng = eng_e6();
    for (const auto& root : rd_e6().positive_roots) {
        if (lv_height(root) > 3) continue;
        CHECK(dual_basis_check(eng, root).pass());
    }
}
