#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "ursa/pairing.hpp"

using namespace ursa;

namespace {

RootDatum rd6 = build_root_datum(Kind::E, 6);
Pairing pg(rd6);

// Independent oracle: enumerate all bijections between f-letters and
// e-letters, accumulating the torus weights of skipped letters directly.
LaurentZ phat_oracle(const RootDatum& rd, const Word& u, const Word& v) {
    if (u.size() != v.size()) return {};
    LaurentZ out;
    size_t m = u.size();
    std::vector<bool> used(m, false);
    std::function<void(size_t, Mono2)> rec = [&](size_t i, Mono2 acc) {
        if (i == m) {
            out.add_scaled(LaurentZ::one(), acc.a, acc.b, Int(1));
            return;
        }
        for (size_t k = 0; k < m; ++k) {
            if (used[k] || v[k] != u[i]) continue;
            Mono2 next = acc;
            for (size_t a = 0; a < k; ++a)
                if (!used[a]) next = next * rd.pairing_entry(v[k], v[a]);
            used[k] = true;
            rec(i + 1, next);
            used[k] = false;
        }
    };
    rec(0, Mono2{});
    return out;
}

}  // namespace

TEST_CASE("base cases") {
    // <f_1, e_1> = 1/(s-r)
    RatFn got = pg.pair(be_gen(Side::F, 6, 1), be_gen(Side::E, 6, 1));
    RatFn expect(LaurentBi::one(), LaurentBi::mono(0, 1) - LaurentBi::mono(1, 0));
    CHECK(got == expect);
    CHECK(pg.pair(be_gen(Side::F, 6, 1), be_gen(Side::E, 6, 2)).is_zero());

    // <w'_1, w_3> = r^{-1}
    RatFn g2 = pg.pair(be_torus(Side::F, 6, lv_unit(6, 1)), be_torus(Side::E, 6, lv_unit(6, 3)));
    CHECK(g2 == RatFn::from_mono({-1, 0}));

    // (1.3): <w'_i, w_j^{-1}> = <w'_i, w_j>^{-1}
    RatFn g3 = pg.pair(be_torus(Side::F, 6, lv_unit(6, 1)),
                       be_torus(Side::E, 6, lv_neg(lv_unit(6, 3))));
    CHECK(g3 == RatFn::from_mono({1, 0}));

    // mixed generator pairs vanish
    CHECK(pg.pair(be_gen(Side::F, 6, 1), be_torus(Side::E, 6, lv_unit(6, 1))).is_zero());
    CHECK(pg.pair(be_torus(Side::F, 6, lv_unit(6, 1)), be_gen(Side::E, 6, 1)).is_zero());
}

TEST_CASE("<f_i, e_j w_mu> has no torus correction") {
    BElement x(Side::E, 6);
    x.terms.emplace(BKey{{1}, lv_add(lv_unit(6, 3), lv_unit(6, 4))}, RatFn::one());
    RatFn got = pg.pair(be_gen(Side::F, 6, 1), x);
    RatFn expect(LaurentBi::one(), LaurentBi::mono(0, 1) - LaurentBi::mono(1, 0));
    CHECK(got == expect);
}

TEST_CASE("<f_1 f_1, e_1 e_1> = (1 + rs^{-1})/(s-r)^2") {
    RatFn got = pg.pair(be_word(Side::F, 6, {1, 1}), be_word(Side::E, 6, {1, 1}));
    LaurentBi num = LaurentBi::one() + LaurentBi::mono(1, -1);
    LaurentBi smr = LaurentBi::mono(0, 1) - LaurentBi::mono(1, 0);
    CHECK(got == RatFn(num, smr * smr));
}

TEST_CASE("peeling equals sum-over-matchings oracle on words up to length 4") {
    std::mt19937 rng(3);
    std::uniform_int_distribution<int> letter(1, 6), len(0, 4);
    for (int trial = 0; trial < 200; ++trial) {
        Word u, v;
        int n = len(rng);
        for (int i = 0; i < n; ++i) u.push_back(letter(rng));
        v = u;
        std::shuffle(v.begin(), v.end(), rng);
        CHECK(pg.phat(u, v) == phat_oracle(rd6, u, v));
        // also some non-matching pairs
        Word w;
        for (int i = 0; i < n; ++i) w.push_back(letter(rng));
        CHECK(pg.phat(u, w) == phat_oracle(rd6, u, w));
    }
}

TEST_CASE("weight orthogonality") {
    CHECK(pg.pair(be_word(Side::F, 6, {1, 3}), be_word(Side::E, 6, {1, 4})).is_zero());
    CHECK(pg.pair(be_word(Side::F, 6, {1}), be_word(Side::E, 6, {1, 1})).is_zero());
}

TEST_CASE("group-like multiplicativity matches torus_pair") {
    std::vector<LatticeVec> vs;
    for (int i = 1; i <= 6; ++i) vs.push_back(lv_unit(6, i));
    vs.push_back(lv_add(lv_unit(6, 1), lv_unit(6, 3)));
    vs.push_back(lv_add(lv_add(lv_unit(6, 2), lv_unit(6, 4)), lv_unit(6, 5)));
    vs.push_back(lv_neg(lv_unit(6, 2)));
    for (const auto& mu : vs)
        for (const auto& nu : vs) {
            RatFn got = pg.pair(be_torus(Side::F, 6, mu), be_torus(Side::E, 6, nu));
            CHECK(got == rd6.torus_pair_ratfn(mu, nu));
        }
}

TEST_CASE("antipode compatibility <S(a), S(b)> = <a, b>") {
    std::mt19937 rng(29);
    std::uniform_int_distribution<int> letter(1, 6), len(0, 2);
    for (int trial = 0; trial < 40; ++trial) {
        int n = len(rng);
        Word u, v;
        for (int i = 0; i < n; ++i) u.push_back(letter(rng));
        v = u;
        std::shuffle(v.begin(), v.end(), rng);
        BElement a = be_word(Side::F, 6, u), b = be_word(Side::E, 6, v);
        CHECK(pg.pair(antipode(rd6, a), antipode(rd6, b)) == pg.pair(a, b));
    }
}

TEST_CASE("pairing respects the product-coproduct axiom") {
    // <y y', x> = sum <y, x_(1)><y', x_(2)> for small words
    std::mt19937 rng(43);
    std::uniform_int_distribution<int> letter(1, 6), len(0, 2);
    for (int trial = 0; trial < 30; ++trial) {
        Word wy, wy2, wx;
        for (int i = len(rng); i > 0; --i) wy.push_back(letter(rng));
        for (int i = len(rng); i > 0; --i) wy2.push_back(letter(rng));
        for (size_t i = 0; i < wy.size() + wy2.size(); ++i) wx.push_back(letter(rng));
        BElement y = be_word(Side::F, 6, wy), y2 = be_word(Side::F, 6, wy2);
        BElement x = be_word(Side::E, 6, wx);
        RatFn lhs = pg.pair(multiply(rd6, y, y2), x);
        RatFn rhs;
        for (const auto& [k, c] : coproduct(rd6, x).terms) {
            BElement l(Side::E, 6), r(Side::E, 6);
            l.terms.emplace(k.left, RatFn::one());
            r.terms.emplace(k.right, RatFn::one());
            rhs += c * pg.pair(y, l) * pg.pair(y2, r);
        }
        CHECK(lhs == rhs);
    }
}

TEST_CASE("gram matrix on weight a1+a2 is singular as expected") {
    // both matchings carry torus factor 1, all four entries equal 1/(s-r)^2
    std::vector<BElement> fb = {be_word(Side::F, 6, {1, 2}), be_word(Side::F, 6, {2, 1})};
    std::vector<BElement> eb = {be_word(Side::E, 6, {1, 2}), be_word(Side::E, 6, {2, 1})};
    auto g = pg.gram(lv_add(lv_unit(6, 1), lv_unit(6, 2)), fb, eb);
    RatFn v = g[0][0];
    CHECK(!v.is_zero());
    for (auto& row : g)
        for (auto& x : row) CHECK(x == v);
}

TEST_CASE("pair cache round trip") {
    Pairing p2(rd6);
    p2.pair(be_word(Side::F, 6, {1, 3, 4}), be_word(Side::E, 6, {4, 1, 3}));
    size_t n = p2.memo_size();
    CHECK(n > 0);
    std::string path = "/tmp/ursa_test_cache.txt";
    p2.save_cache(path);
    Pairing p3(rd6);
    CHECK(p3.load_cache(path));
    CHECK(p3.memo_size() == n);
    CHECK(p3.pair(be_word(Side::F, 6, {1, 3, 4}), be_word(Side::E, 6, {4, 1, 3})) ==
          p2.pair(be_word(Side::F, 6, {1, 3, 4}), be_word(Side::E, 6, {4, 1, 3})));
}
