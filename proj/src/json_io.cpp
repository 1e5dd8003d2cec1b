#include "ursa/json_io.hpp"

#include <sstream>

namespace ursa {

json to_json(const LaurentBi& p) {
    json terms = json::array();
    for (const auto& [k, c] : p.terms) {
        terms.push_back(json::array({c.get_num().get_str(), c.get_den().get_str(),
                                     exp_r(k), exp_s(k)}));
    }
    return terms;
}

json to_json(const RatFn& f) {
    return json{{"num", to_json(f.num)}, {"den", to_json(f.den)}};
}

json to_json(const UniLaurent& p) {
    json terms = json::array();
    for (const auto& [e, c] : p.terms)
        terms.push_back(json::array({c.get_num().get_str(), c.get_den().get_str(), e}));
    return terms;
}

LaurentBi laurent_from_json(const json& j) {
    LaurentBi p;
    for (const auto& t : j) {
        Rational c(Int(t[0].get<std::string>()), Int(t[1].get<std::string>()));
        c.canonicalize();
        p += LaurentBi::mono(t[2].get<int>(), t[3].get<int>(), c);
    }
    return p;
}

RatFn ratfn_from_json(const json& j) {
    return RatFn(laurent_from_json(j.at("num")), laurent_from_json(j.at("den")));
}

json to_json(const BElement& x) {
    json terms = json::array();
    for (const auto& [k, c] : x.terms) {
        terms.push_back(json{{"coeff", to_json(c)},
                             {"word", word_str(k.word)},
                             {"torus", k.torus}});
    }
    return json{{"side", x.side == Side::E ? "E" : "F"}, {"terms", terms}};
}

json to_json(const TensorElement& x) {
    json terms = json::array();
    for (const auto& [k, c] : x.terms) {
        terms.push_back(json{{"coeff", to_json(c)},
                             {"left_word", word_str(k.left.word)},
                             {"left_torus", k.left.torus},
                             {"right_word", word_str(k.right.word)},
                             {"right_torus", k.right.torus}});
    }
    return json{{"side", x.side == Side::E ? "E" : "F"}, {"terms", terms}};
}

namespace {
std::string mono2_str(const Mono2& m) {
    if (m.a == 0 && m.b == 0) return "1";
    std::string s;
    if (m.a != 0) s += "r" + (m.a == 1 ? std::string() : "^" + std::to_string(m.a));
    if (m.b != 0) {
        if (!s.empty()) s += " ";
        s += "s" + (m.b == 1 ? std::string() : "^" + std::to_string(m.b));
    }
    return s;
}
}  // namespace

json root_datum_json(const RootDatum& rd) {
    json simple = json::array();
    for (int i = 1; i <= rd.rank; ++i) simple.push_back(lv_unit(rd.rank, i));
    json roots = json::array();
    for (const auto& r : rd.positive_roots)
        roots.push_back(json{{"coords", r}, {"height", lv_height(r)}});
    return json{{"type", kind_str(rd.kind) + std::to_string(rd.rank)},
                {"rank", rd.rank},
                {"simple_roots", simple},
                {"cartan", rd.cartan},
                {"positive_roots", roots},
                {"p_matrix", rd.p_mat},
                {"q_matrix", rd.q_mat},
                {"pairing_matrix", pairing_matrix_json(rd)["entries"]}};
}

json pairing_matrix_json(const RootDatum& rd) {
    json rows = json::array();
    json pretty = json::array();
    for (int i = 1; i <= rd.rank; ++i) {
        json row = json::array();
        json prow = json::array();
        for (int j = 1; j <= rd.rank; ++j) {
            Mono2 m = rd.pairing_entry(i, j);
            row.push_back(json::array({m.a, m.b}));
            prow.push_back(mono2_str(m));
        }
        rows.push_back(row);
        pretty.push_back(prow);
    }
    return json{{"type", kind_str(rd.kind) + std::to_string(rd.rank)},
                {"entries", rows},
                {"display", pretty}};
}

json good_words_json(const Engine& eng) {
    json words = json::array();
    for (int32_t id : eng.convex_order()) {
        const RootVector& r = eng.rv(id);
        // expansions sorted by word content so the output is independent of
        // interning order (and hence of the thread count)
        auto expand = [&](const ZElem& z) {
            std::map<Word, RatFn> sorted;
            for (const auto& [wid, c] : z)
                sorted.emplace(eng.word_of(wid), RatFn(to_rational_poly(c)));
            json arr = json::array();
            for (const auto& [w, c] : sorted)
                arr.push_back(json{{"word", word_str(w)}, {"coeff", to_json(c)}});
            return arr;
        };
        words.push_back(json{{"word", word_str(r.word)},
                             {"root", r.root},
                             {"e_expansion", expand(r.e_expansion)},
                             {"f_expansion", expand(r.f_expansion)}});
    }
    return json{{"type", kind_str(eng.root_datum().kind) + std::to_string(eng.root_datum().rank)},
                {"count", words.size()},
                {"good_words", words}};
}

json ls_table_json(const Engine& eng, const std::vector<LSRelation>& table) {
    json rels = json::array();
    for (const auto& rel : table) {
        json expansion = json::array();
        for (const auto& [m, c] : rel.expansion) {
            json mono = json::array();
            for (const auto& [id, e] : m)
                mono.push_back(json{{"word", word_str(eng.rv(id).word)}, {"exp", e}});
            expansion.push_back(json{{"mono", mono}, {"coeff", to_json(c)}});
        }
        rels.push_back(json{{"a", word_str(eng.rv(rel.a).word)},
                            {"b", word_str(eng.rv(rel.b).word)},
                            {"weight", rel.weight},
                            {"scalar", to_json(rel.scalar)},
                            {"expansion", expansion},
                            {"gram_size", rel.gram_size},
                            {"interval_size", rel.interval_size},
                            {"convexity_ok", rel.convexity_ok},
                            {"residual_ok", rel.residual_ok}});
    }
    return json{{"relations", rels}, {"count", rels.size()}};
}

json theta_json(const Engine& eng, const ThetaTruncation& t, bool expand_words) {
    json terms = json::array();
    for (const auto& term : t.terms) {
        json mono = json::array();
        for (const auto& [id, e] : term.mono)
            mono.push_back(json{{"word", word_str(eng.rv(id).word)}, {"exp", e}});
        json jt{{"mono", mono},
                {"coeff", to_json(term.coeff)},
                {"degree", eng.mono_height(term.mono)}};
        if (expand_words) {
            auto expand = [&](const ZElem& z) {
                std::map<Word, RatFn> sorted;
                for (const auto& [wid, c] : z)
                    sorted.emplace(eng.word_of(wid), RatFn(to_rational_poly(c)));
                json arr = json::array();
                for (const auto& [w, c] : sorted)
                    arr.push_back(json{{"word", word_str(w)}, {"coeff", to_json(c)}});
                return arr;
            };
            jt["f_words"] = expand(eng.mono_f_zelem(term.mono));
            jt["e_words"] = expand(eng.mono_e_zelem(term.mono));
        }
        terms.push_back(jt);
    }
    return json{{"max_degree", t.max_degree}, {"terms", terms}};
}

json report_json(const SuiteReport& rep, bool with_timing) {
    json checks = json::array();
    for (const auto& c : rep.checks) {
        json jc{{"name", c.name},
                {"status", c.status == CheckStatus::Pass   ? "pass"
                           : c.status == CheckStatus::Fail ? "fail"
                                                           : "skipped"}};
        if (!c.witness.empty()) jc["witness"] = c.witness;
        if (c.truncation_loss) jc["truncation_loss"] = c.truncation_loss;
        if (with_timing) jc["millis"] = c.millis;
        checks.push_back(jc);
    }
    return json{{"suite", rep.suite}, {"pass", rep.pass()}, {"checks", checks}};
}

std::string dump_sorted(const json& j) {
    // nlohmann::json objects iterate in key order already; fixed indentation
    return j.dump(2);
}

std::string report_csv(const SuiteReport& rep) {
    std::ostringstream os;
    os << "suite,check,status,millis,truncation_loss,witness\n";
    for (const auto& c : rep.checks) {
        std::string w = c.witness;
        for (auto& ch : w)
            if (ch == ',') ch = ';';
        os << rep.suite << "," << c.name << ","
           << (c.status == CheckStatus::Pass   ? "pass"
               : c.status == CheckStatus::Fail ? "fail"
                                               : "skipped")
           << "," << c.millis << "," << c.truncation_loss << "," << w << "\n";
    }
    return os.str();
}

}  // namespace ursa
