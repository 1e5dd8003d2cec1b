#include <CLI11.hpp>
#include <fstream>
#include <iostream>

#include "ursa/suites.hpp"

using namespace ursa;

namespace {

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text << "\n";
    } else {
        std::ofstream out(out_path);
        out << text << "\n";
    }
}

std::string render_report(const SuiteReport& rep, const std::string& format) {
    if (format == "csv") return report_csv(rep);
    return dump_sorted(report_json(rep));
}

std::vector<Rational> parse_coords(const std::string& s) {
    std::vector<Rational> out;
    std::string cur;
    for (char c : s + ",") {
        if (c == ',') {
            if (!cur.empty()) {
                out.emplace_back(cur);
                out.back().canonicalize();
            }
            cur.clear();
        } else cur += c;
    }
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"two-parameter quantum group engine for simply-laced types"};
    app.require_subcommand(1);

    std::string type = "E6", format = "json", out_path, cache_path;
    int threads = 1;
    auto common = [&](CLI::App* sub) {
        sub->add_option("--type", type, "root system type, e.g. A2, D4, E6")
            ->capture_default_str();
        sub->add_option("--format", format, "output format: json or csv")
            ->check(CLI::IsMember({"json", "csv"}))
            ->capture_default_str();
        sub->add_option("--out", out_path, "write output to a file instead of stdout");
        sub->add_option("--cache", cache_path, "persistent pairing cache file");
        sub->add_option("--threads", threads, "worker threads for table construction")
            ->capture_default_str();
        return sub;
    };

    auto* cmd_roots = common(app.add_subcommand("roots", "emit the root datum"));
    auto* cmd_pm =
        common(app.add_subcommand("pairing-matrix", "emit the structural-constant matrix"));
    auto* cmd_gw = common(app.add_subcommand("good-words", "emit the good Lyndon words"));
    auto* cmd_rel = common(app.add_subcommand("relations", "emit the straightening table"));
    int max_height = 11;
    cmd_rel->add_option("--max-height", max_height,
                        "height bound for root pair sums (non-root sums get +1, capped at 12)")
        ->capture_default_str();
    auto* cmd_theta =
        common(app.add_subcommand("theta", "emit a truncation of the canonical element"));
    int max_degree = 3;
    cmd_theta->add_option("--max-degree", max_degree, "height bound for Theta terms")
        ->capture_default_str();
    auto* cmd_rm =
        common(app.add_subcommand("rmatrix-check", "verify the R-matrix intertwining"));
    int depth = 2;
    std::string lambdaA, lambdaB;
    bool yang_baxter = false;
    cmd_rm->add_option("--depth", depth, "Verma truncation depth")->capture_default_str();
    cmd_rm->add_option("--lambdaA", lambdaA, "comma-separated rational coordinates");
    cmd_rm->add_option("--lambdaB", lambdaB, "comma-separated rational coordinates");
    cmd_rm->add_flag("--yang-baxter", yang_baxter, "also run the Yang-Baxter variant");
    auto* cmd_verify = common(app.add_subcommand("verify", "run a verification suite"));
    std::string suite = "all";
    cmd_verify->add_option("--suite", suite,
                           "matrixA|goodwords|appendix|structural|serre|dualbasis|eta|"
                           "double|lsconvex|oracle|rmatrix|specialize|determinism|all")
        ->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        auto make_engine = [&](const std::string& t) {
            RootDatum rd = build_root_datum(t);
            auto eng = std::make_unique<Engine>(rd, threads);
            if (!cache_path.empty()) eng->pairing().load_cache(cache_path);
            return eng;
        };
        auto save_cache = [&](Engine& eng) {
            if (!cache_path.empty()) eng.pairing().save_cache(cache_path);
        };

        if (*cmd_roots) {
            RootDatum rd = build_root_datum(type);
            emit(dump_sorted(root_datum_json(rd)), out_path);
            return 0;
        }
        if (*cmd_pm) {
            RootDatum rd = build_root_datum(type);
            emit(dump_sorted(pairing_matrix_json(rd)), out_path);
            return 0;
        }
        if (*cmd_gw) {
            RootDatum rd = build_root_datum(type);
            Engine eng(rd, threads);
            emit(dump_sorted(good_words_json(eng)), out_path);
            return 0;
        }
        if (*cmd_rel) {
            RootDatum rd = build_root_datum(type);
            Engine eng(rd, threads);
            if (!cache_path.empty()) eng.pairing().load_cache(cache_path);
            int cap = std::min(max_height + 1, 12);
            auto table = eng.ls_table(max_height, cap);
            bool all_ok = true;
            for (const auto& rel : table)
                if (!rel.convexity_ok || !rel.residual_ok) all_ok = false;
            emit(dump_sorted(ls_table_json(eng, table)), out_path);
            save_cache(eng);
            return all_ok ? 0 : 1;
        }
        if (*cmd_theta) {
            auto eng = make_engine(type);
            emit(dump_sorted(theta_json(*eng, theta(*eng, max_degree), true)), out_path);
            return 0;
        }
        if (*cmd_rm) {
            RootDatum rd = build_root_datum(type);
            Engine eng(rd, threads);
            SuiteReport rep = rmatrix_check(eng, depth);
            if (yang_baxter) {
                SuiteReport yb = yang_baxter_check(eng, std::max(1, depth - 1));
                for (auto& c : yb.checks) rep.checks.push_back(c);
            }
            json j = report_json(rep);
            // the verification is symbolic in generic highest weights; explicit
            // root-lattice weights additionally get their exact characters
            for (auto& [flag, name] : std::vector<std::pair<std::string*, std::string>>{
                     {&lambdaA, "lambdaA"}, {&lambdaB, "lambdaB"}}) {
                if (flag->empty()) continue;
                auto coords = parse_coords(*flag);
                bool integral = true;
                LatticeVec lv(size_t(rd.rank), 0);
                for (size_t i = 0; i < coords.size() && i < size_t(rd.rank); ++i) {
                    if (coords[i].get_den() != 1) integral = false;
                    else lv[i] = int(coords[i].get_num().get_si());
                }
                if (integral) {
                    Character ch = hat_lambda(rd, lv);
                    json vals = json::array();
                    for (int i = 0; i < rd.rank; ++i)
                        vals.push_back(json{{"omega", to_json(ch.omega_values[size_t(i)])},
                                            {"omega_prime",
                                             to_json(ch.omega_prime_values[size_t(i)])}});
                    j["characters"][name] = vals;
                } else {
                    j["characters"][name] =
                        "non-integral coordinates: covered by the symbolic verification";
                }
            }
            emit(format == "csv" ? report_csv(rep) : dump_sorted(j), out_path);
            return rep.pass() ? 0 : 1;
        }
        if (*cmd_verify) {
            std::vector<SuiteReport> reps;
            auto want = [&](const char* s) { return suite == s || suite == "all"; };
            std::unique_ptr<Engine> e6;
            auto get_e6 = [&]() -> Engine& {
                if (!e6) e6 = make_engine("E6");
                return *e6;
            };
            if (want("matrixA")) reps.push_back(suite_matrix_a());
            if (want("structural")) reps.push_back(suite_structural());
            if (want("goodwords")) reps.push_back(suite_good_words(get_e6()));
            if (want("appendix")) reps.push_back(suite_appendix(get_e6()));
            if (want("serre")) reps.push_back(suite_serre_kernel(get_e6()));
            if (want("eta")) reps.push_back(suite_eta(get_e6()));
            if (want("double")) reps.push_back(suite_double(get_e6()));
            if (want("dualbasis")) reps.push_back(suite_dual_basis(get_e6()));
            if (want("specialize")) reps.push_back(suite_specialize(get_e6()));
            if (want("oracle")) reps.push_back(suite_oracle());
            if (want("rmatrix")) reps.push_back(suite_rmatrix(get_e6(), 2));
            if (want("lsconvex")) reps.push_back(suite_ls(get_e6(), max_height, 12));
            if (want("determinism"))
                reps.push_back(suite_determinism(1, threads > 1 ? threads : 2));
            if (reps.empty()) {
                std::cerr << "unknown suite: " << suite << "\n";
                return 2;
            }
            bool all = true;
            json out = json::array();
            std::string csv;
            for (const auto& r : reps) {
                all = all && r.pass();
                out.push_back(report_json(r));
                csv += report_csv(r);
            }
            if (e6) save_cache(*e6);
            emit(format == "csv" ? csv : dump_sorted(out), out_path);
            return all ? 0 : 1;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
