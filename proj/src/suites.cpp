#include "ursa/suites.hpp"

#include <algorithm>
#include <sstream>

namespace ursa {

SuiteReport suite_matrix_a() {
    SuiteReport rep{"matrixA", {}};
    Stopwatch sw;
    RootDatum rd = build_root_datum(Kind::E, 6);
    GoldenDiff d = diff_pairing_matrix(rd);
    rep.add("pairing matrix equals matrix A", d.empty(),
            d.empty() ? "" : dump_sorted(d.to_json()), sw.millis());
    return rep;
}

SuiteReport suite_good_words(Engine& e6) {
    SuiteReport rep{"goodwords", {}};
    Stopwatch sw;
    GoldenDiff d = diff_good_words(e6);
    rep.add("good Lyndon words equal the 36-word table", d.empty(),
            d.empty() ? "" : dump_sorted(d.to_json()), sw.millis());
    Stopwatch sw2;
    bool bijective = e6.num_roots() == int(e6.root_datum().positive_roots.size());
    for (const auto& [root, w] : e6.good_lyndon_words())
        if (word_content(w, e6.root_datum().rank) != root) bijective = false;
    rep.add("one good word per positive root with matching content", bijective,
            "bijection with positive roots broken", sw2.millis());
    return rep;
}

SuiteReport suite_appendix(Engine& e6) {
    SuiteReport rep{"appendix", {}};
    Stopwatch sw;
    GoldenDiff d = diff_appendix_delta(e6);
    rep.add("coproduct of E_2453 equals the 7-term display", d.empty(),
            d.empty() ? "" : dump_sorted(d.to_json()), sw.millis());
    // negative control: corrupt one golden coefficient and expect a diff
    Stopwatch sw2;
    json bad = golden_appendix_delta();
    bad["terms"][1]["coeff"]["one_m_ris_pow"] = 2;
    GoldenDiff dbad = diff_appendix_delta_against(e6, bad);
    rep.add("corrupted golden produces a nonempty diff", !dbad.empty(),
            "negative control failed to fail", sw2.millis());
    return rep;
}

SuiteReport suite_structural() {
    SuiteReport rep{"structural", {}};
    for (const char* t : {"A2", "A3", "D4", "E6"}) {
        Stopwatch sw;
        RootDatum rd = build_root_datum(t);
        bool ok = true;
        for (int i = 1; i <= rd.rank; ++i)
            for (int j = 1; j <= rd.rank; ++j) {
                if (rd.p(i, j) + rd.q(i, j) != rd.a(i, j)) ok = false;
                if (rd.p(i, j) != rd.q(j, i)) ok = false;
                if (rd.p(i, j) < -1 || rd.p(i, j) > 1 || rd.q(i, j) < -1 || rd.q(i, j) > 1)
                    ok = false;
                if (rd.a(i, j) != 0 && i != j &&
                    ((rd.p(i, j) - rd.q(i, j) > 0) != (j - i > 0)))
                    ok = false;
            }
        rep.add(std::string("p+q = cartan, p = q^T for ") + t, ok,
                "structural constants violate Lemma 1.1", sw.millis());
    }
    return rep;
}

SuiteReport suite_serre_kernel(Engine& e6) {
    SuiteReport rep{"serre", {}};
    const RootDatum& rd = e6.root_datum();
    for (int i = 1; i <= 6; ++i)
        for (int j = 1; j <= 6; ++j) {
            if (i == j) continue;
            Stopwatch sw;
            std::string nm = "(" + std::to_string(i) + "," + std::to_string(j) + ")";
            if (rd.a(i, j) == -1) {
                auto nf = e6.normal_form(adjoint_serre(rd, Side::E, i, j));
                rep.add("serre element " + nm, nf.expansion.empty() && nf.residual_ok,
                        "adjoint Serre element has nonzero normal form", sw.millis());
            } else {
                BElement x = be_word(Side::E, 6, {i, j});
                x.add(BKey{{j, i}, lv_zero(6)}, -RatFn::one());
                auto nf = e6.normal_form(x);
                rep.add("orthogonal commutator " + nm, nf.expansion.empty() && nf.residual_ok,
                        "orthogonal commutator has nonzero normal form", sw.millis());
            }
        }
    return rep;
}

SuiteReport suite_dual_basis(Engine& e6) {
    SuiteReport rep{"dualbasis", {}};
    // all E6 weights of height <= 5
    const int rank = 6;
    std::vector<LatticeVec> weights;
    LatticeVec cur = lv_zero(rank);
    std::function<void(int, int)> gen = [&](int i, int left) {
        if (i == rank) {
            if (lv_height(cur) >= 1) weights.push_back(cur);
            return;
        }
        for (int x = 0; x <= left; ++x) {
            cur[size_t(i)] = x;
            gen(i + 1, left - x);
        }
        cur[size_t(i)] = 0;
    };
    gen(0, 5);
    for (const auto& mu : weights) {
        if (e6.pbw_monomials(mu).empty()) continue;
        SuiteReport sub = dual_basis_check(e6, mu);
        for (auto& c : sub.checks) rep.checks.push_back(c);
    }
    // A2 and A3 weights of height <= 6
    for (const char* t : {"A2", "A3"}) {
        RootDatum rd = build_root_datum(t);
        Engine eng(rd);
        std::vector<LatticeVec> ws;
        LatticeVec c2 = lv_zero(rd.rank);
        std::function<void(int, int)> gen2 = [&](int i, int left) {
            if (i == rd.rank) {
                if (lv_height(c2) >= 1) ws.push_back(c2);
                return;
            }
            for (int x = 0; x <= left; ++x) {
                c2[size_t(i)] = x;
                gen2(i + 1, left - x);
            }
            c2[size_t(i)] = 0;
        };
        gen2(0, 6);
        long done = 0, failed = 0;
        Stopwatch sw;
        for (const auto& mu : ws) {
            if (eng.pbw_monomials(mu).empty()) continue;
            SuiteReport sub = dual_basis_check(eng, mu);
            ++done;
            if (!sub.pass()) ++failed;
        }
        std::ostringstream nm;
        nm << t << " dual basis diagonal over " << done << " weights of height <= 6";
        rep.add(nm.str(), failed == 0, std::to_string(failed) + " weights failed",
                sw.millis());
    }
    return rep;
}

SuiteReport suite_eta(Engine& e6) { return verify_eta_relations(e6); }

SuiteReport suite_double(Engine& e6) { return double_mixed_check(e6); }

SuiteReport suite_ls(Engine& e6, int max_height, int nonroot_cap) {
    SuiteReport rep{"lsconvex", {}};
    Stopwatch sw;
    auto table = e6.ls_table(max_height, nonroot_cap);
    long convex_bad = 0, residual_bad = 0, maxgram = 0, maxinterval = 0;
    for (const auto& rel : table) {
        if (!rel.convexity_ok) ++convex_bad;
        if (!rel.residual_ok) ++residual_bad;
        maxgram = std::max(maxgram, rel.gram_size);
        maxinterval = std::max(maxinterval, rel.interval_size);
    }
    {
        std::ostringstream nm;
        nm << "straightening table complete (" << table.size()
           << " relations, largest Gram " << maxgram << ", largest interval solve "
           << maxinterval << ")";
        rep.add(nm.str(), !table.empty(), "table empty", sw.millis());
    }
    rep.add("zero convexity violations", convex_bad == 0,
            std::to_string(convex_bad) + " relations leave the convex interval");
    rep.add("all residual checks pass", residual_bad == 0,
            std::to_string(residual_bad) + " relations fail the full-basis residual");
    return rep;
}

// ---------------------------------------------------------------- oracle

namespace {

// fraction-free sparse row reduction over integer Laurent polynomials;
// returns the rank. Rows are maps word-index -> LaurentZ.
long sparse_rank(std::vector<std::map<int, LaurentZ>> rows) {
    long rank = 0;
    // pivot on the largest column index present (lexicographically biggest
    // word), matching the triangular structure of the rewriting system
    std::map<int, size_t> pivot_of;  // column -> row index holding its pivot
    for (size_t ri = 0; ri < rows.size(); ++ri) {
        auto& row = rows[ri];
        while (!row.empty()) {
            int col = row.rbegin()->first;
            auto pit = pivot_of.find(col);
            if (pit == pivot_of.end()) break;
            // eliminate via the pivot row, fraction-free
            const auto& prow = rows[pit->second];
            LaurentZ a = row.rbegin()->second;
            LaurentZ b = prow.rbegin()->second;
            LaurentZ g = laurent_gcd(a, b);
            LaurentZ ma = laurent_divexact(b, g);  // multiply current row
            LaurentZ mb = laurent_divexact(a, g);  // times pivot row
            std::map<int, LaurentZ> next;
            for (auto& [c, v] : row) {
                LaurentZ nv = v * ma;
                auto it = prow.find(c);
                if (it != prow.end()) nv -= it->second * mb;
                if (!nv.is_zero()) next.emplace(c, std::move(nv));
            }
            for (auto& [c, v] : prow) {
                if (row.count(c)) continue;
                LaurentZ nv = v * mb;
                if (!nv.is_zero()) {
                    for (auto& [k, z] : nv.terms) z = -z;
                    next.emplace(c, std::move(nv));
                }
            }
            // strip content to keep coefficients small
            LaurentZ cont;
            bool first = true;
            for (auto& [c, v] : next) {
                cont = first ? v : laurent_gcd(cont, v);
                first = false;
            }
            if (!first && !(cont.terms.size() == 1 && cont.terms[0].second == 1)) {
                for (auto& [c, v] : next) v = laurent_divexact(v, cont);
            }
            row = std::move(next);
        }
        if (!row.empty()) {
            pivot_of[row.rbegin()->first] = ri;
            ++rank;
        }
    }
    return rank;
}

}  // namespace

std::vector<long> serre_quotient_dimensions(const RootDatum& rd, int max_degree) {
    int n = rd.rank;
    // Serre generators as torus-free word combinations
    std::vector<BElement> gens;
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            if (i != j) gens.push_back(adjoint_serre(rd, Side::E, i, j));
    std::vector<long> dims;
    for (int d = 1; d <= max_degree; ++d) {
        // index all words of length d
        std::vector<Word> words;
        Word cur(size_t(d), 1);
        while (true) {
            words.push_back(cur);
            int i = d - 1;
            while (i >= 0 && cur[size_t(i)] == n) cur[size_t(i--)] = 1;
            if (i < 0) break;
            ++cur[size_t(i)];
        }
        std::sort(words.begin(), words.end());
        std::map<Word, int> index;
        for (size_t k = 0; k < words.size(); ++k) index.emplace(words[k], int(k));
        // ideal rows: x * g * y over words x, y with |x| + deg g + |y| = d
        std::vector<std::map<int, LaurentZ>> rows;
        for (const auto& g : gens) {
            int dg = lv_height(g.weight());
            if (dg > d) continue;
            for (int dx = 0; dx + dg <= d; ++dx) {
                int dy = d - dg - dx;
                std::vector<Word> xs, ys;
                std::function<void(Word&, int, std::vector<Word>&)> genw =
                    [&](Word& w, int left, std::vector<Word>& out) {
                        if (left == 0) { out.push_back(w); return; }
                        for (int l = 1; l <= n; ++l) {
                            w.push_back(l);
                            genw(w, left - 1, out);
                            w.pop_back();
                        }
                    };
                Word tmp;
                genw(tmp, dx, xs);
                genw(tmp, dy, ys);
                for (const auto& x : xs)
                    for (const auto& y : ys) {
                        std::map<int, LaurentZ> row;
                        for (const auto& [k, c] : g.terms) {
                            Word w = x;
                            w.insert(w.end(), k.word.begin(), k.word.end());
                            w.insert(w.end(), y.begin(), y.end());
                            // coefficients of Serre elements are integral
                            Rational sc;
                            LaurentZ z = to_integer_poly(c.num, sc);
                            Rational full = sc;  // denominator is 1
                            LaurentZ zz;
                            for (auto& [key, zc] : z.terms) {
                                Rational q = Rational(zc) * full;
                                zz.terms.emplace_back(key, Int(q.get_num()));
                            }
                            auto [it, fresh] = row.try_emplace(index[w], zz);
                            if (!fresh) {
                                it->second += zz;
                                if (it->second.is_zero()) row.erase(it);
                            }
                        }
                        if (!row.empty()) rows.push_back(std::move(row));
                    }
            }
        }
        long rank = sparse_rank(std::move(rows));
        dims.push_back(long(words.size()) - rank);
    }
    return dims;
}

SuiteReport suite_oracle() {
    SuiteReport rep{"oracle", {}};
    for (const char* t : {"A2", "A3"}) {
        Stopwatch sw;
        RootDatum rd = build_root_datum(t);
        Engine eng(rd);
        auto dims = serre_quotient_dimensions(rd, 6);
        // PBW monomial counts and Kostant sums per degree
        bool ok = true;
        std::ostringstream detail;
        for (int d = 1; d <= 6; ++d) {
            long pbw = 0, kost = 0;
            std::vector<LatticeVec> ws;
            LatticeVec cur = lv_zero(rd.rank);
            std::function<void(int, int)> gen = [&](int i, int left) {
                if (i == rd.rank) {
                    if (lv_height(cur) == d) ws.push_back(cur);
                    return;
                }
                for (int x = 0; x <= left; ++x) {
                    cur[size_t(i)] = x;
                    gen(i + 1, left - x);
                }
                cur[size_t(i)] = 0;
            };
            gen(0, d);
            for (const auto& mu : ws) {
                pbw += long(eng.pbw_monomials(mu).size());
                kost += rd.kostant(mu);
            }
            if (dims[size_t(d - 1)] != pbw || pbw != kost) {
                ok = false;
                detail << "degree " << d << ": row-reduced " << dims[size_t(d - 1)]
                       << ", pbw " << pbw << ", kostant " << kost << "; ";
            }
        }
        rep.add(std::string(t) + " graded dimensions agree (degrees 1..6)", ok,
                detail.str(), sw.millis());
    }
    return rep;
}

SuiteReport suite_rmatrix(Engine& e6, int e6_depth) {
    SuiteReport rep{"rmatrix", {}};
    {
        RootDatum rd = build_root_datum(Kind::A, 2);
        Engine eng(rd);
        SuiteReport sub = rmatrix_check(eng, 3);
        for (auto& c : sub.checks) {
            c.name = "A2 depth 3: " + c.name;
            rep.checks.push_back(c);
        }
        SuiteReport yb = yang_baxter_check(eng, 2);
        for (auto& c : yb.checks) {
            c.name = "A2 depth 2: " + c.name;
            rep.checks.push_back(c);
        }
    }
    {
        SuiteReport sub = rmatrix_check(e6, e6_depth);
        for (auto& c : sub.checks) {
            c.name = "E6 depth " + std::to_string(e6_depth) + ": " + c.name;
            rep.checks.push_back(c);
        }
    }
    return rep;
}

SuiteReport suite_specialize(Engine& e6) {
    SuiteReport rep{"specialize", {}};
    const RootDatum& rd = e6.root_datum();
    Stopwatch sw;
    bool ok = true;
    for (int i = 1; i <= 6; ++i)
        for (int j = 1; j <= 6; ++j) {
            UniLaurent n, d;
            rd.pairing_entry_ratfn(i, j).specialize(n, d);
            UniLaurent expect;
            expect.add_term(rd.a(i, j), 1);
            if (!(n == expect) || !(d.terms.size() == 1 && d.terms[0].first == 0))
                ok = false;
        }
    rep.add("pairing matrix specializes to q^{(a_i,a_j)}", ok,
            "a matrix entry misses q^{(a_i,a_j)}", sw.millis());

    Stopwatch sw2;
    RatFn smr(LaurentBi::mono(0, 1) - LaurentBi::mono(1, 0));
    UniLaurent n, d;
    smr.specialize(n, d);
    UniLaurent expect;
    expect.add_term(-1, 1);
    expect.add_term(1, -1);
    rep.add("(s - r) specializes to q^{-1} - q", n == expect && d.terms.size() == 1,
            "s - r image wrong", sw2.millis());

    Stopwatch sw3;
    ThetaTruncation t1 = theta(e6, 1);
    bool theta_ok = true;
    for (const auto& term : t1.terms) {
        if (term.mono.empty()) continue;
        UniLaurent tn, td;
        term.coeff.specialize(tn, td);
        if (!(tn == expect && td.terms.size() == 1)) theta_ok = false;
    }
    rep.add("degree-1 Theta becomes (q^{-1}-q) sum f_i (x) e_i", theta_ok,
            "degree-1 Theta coefficient image wrong", sw3.millis());
    return rep;
}

SuiteReport suite_determinism(int threads_a, int threads_b) {
    SuiteReport rep{"determinism", {}};
    auto payload = [&](int threads) {
        RootDatum rd = build_root_datum(Kind::E, 6);
        Engine eng(rd, threads);
        json j;
        j["good_words"] = good_words_json(eng);
        j["pairing_matrix"] = pairing_matrix_json(rd);
        j["theta3"] = theta_json(eng, theta(eng, 3), true);
        j["relations_h6"] = ls_table_json(eng, eng.ls_table(6, 6));
        j["serre"] = report_json(suite_serre_kernel(eng), false);
        j["eta"] = report_json(suite_eta(eng), false);
        j["double"] = report_json(suite_double(eng), false);
        j["specialize"] = report_json(suite_specialize(eng), false);
        return dump_sorted(j);
    };
    Stopwatch sw;
    std::string a = payload(threads_a);
    std::string b = payload(threads_b);
    rep.add("byte-identical reports across thread counts " + std::to_string(threads_a) +
                " and " + std::to_string(threads_b),
            a == b, "thread count changed the serialized output", sw.millis());
    return rep;
}

}  // namespace ursa
