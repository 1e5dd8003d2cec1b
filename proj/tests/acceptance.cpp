// Acceptance suite: runs every acceptance criterion, prints one line per
// criterion with wall time and budget, and exits nonzero on any failure.
#include <cstdlib>
#include <iomanip>
#include <iostream>

#include "ursa/suites.hpp"

using namespace ursa;

namespace {

int failures = 0;

void line(int num, const std::string& name, bool pass, double seconds, double budget,
          const std::string& witness = "") {
    bool in_budget = seconds <= budget;
    bool ok = pass && in_budget;
    if (!ok) ++failures;
    std::cout << "[" << std::setw(2) << num << "] " << (ok ? "PASS" : "FAIL") << " "
              << name << " (" << std::fixed << std::setprecision(2) << seconds
              << " s, budget " << std::setprecision(0) << budget << " s)";
    if (!pass && !witness.empty()) std::cout << "\n     witness: " << witness;
    if (pass && !in_budget) std::cout << "\n     over budget";
    std::cout << "\n" << std::flush;
}

std::string first_witness(const SuiteReport& rep) {
    for (const auto& c : rep.checks)
        if (c.status == CheckStatus::Fail) return c.name + ": " + c.witness;
    return "";
}

}  // namespace

int main() {
    int threads = 8;
    if (const char* env = std::getenv("URSA_THREADS")) threads = std::max(1, atoi(env));
    std::cout << "acceptance suite, " << threads << " threads\n";

    // 1. Matrix A reproduction
    {
        Stopwatch sw;
        SuiteReport rep = suite_matrix_a();
        line(1, "matrix A reproduction", rep.pass(), sw.millis() / 1000, 1, first_witness(rep));
    }

    // 2. Good-word table (engine build included; pairing caches cold)
    RootDatum rd6 = build_root_datum(Kind::E, 6);
    std::unique_ptr<Engine> e6;
    {
        Stopwatch sw;
        e6 = std::make_unique<Engine>(rd6, threads);
        SuiteReport rep = suite_good_words(*e6);
        line(2, "E6 good-word table", rep.pass(), sw.millis() / 1000, 600, first_witness(rep));
    }

    // 3. Appendix regression
    {
        Stopwatch sw;
        SuiteReport rep = suite_appendix(*e6);
        line(3, "appendix Delta(E_2453) regression", rep.pass(), sw.millis() / 1000, 5,
             first_witness(rep));
    }

    // 4. Structural constants
    {
        Stopwatch sw;
        SuiteReport rep = suite_structural();
        line(4, "Lemma 1.1 structural constants (A2, A3, D4, E6)", rep.pass(),
             sw.millis() / 1000, 1, first_witness(rep));
    }

    // 5. Serre kernel
    {
        Stopwatch sw;
        SuiteReport rep = suite_serre_kernel(*e6);
        line(5, "Serre-kernel normal forms", rep.pass(), sw.millis() / 1000, 60,
             first_witness(rep));
    }

    // 6. Dual-basis diagonal
    {
        Stopwatch sw;
        SuiteReport rep = suite_dual_basis(*e6);
        line(6, "dual-basis diagonal (E6 h<=5; A2, A3 h<=6)", rep.pass(),
             sw.millis() / 1000, 600, first_witness(rep));
    }

    // 7. Eta relations
    {
        Stopwatch sw;
        SuiteReport rep = suite_eta(*e6);
        line(7, "eta relations (Lemmas 3.2-3.4)", rep.pass(), sw.millis() / 1000, 60,
             first_witness(rep));
    }

    // 8. Double mixed relation
    {
        Stopwatch sw;
        SuiteReport rep = suite_double(*e6);
        line(8, "double mixed relation, 36 pairs", rep.pass(), sw.millis() / 1000, 60,
             first_witness(rep));
    }

    // 9. LS convexity at full height
    {
        Stopwatch sw;
        SuiteReport rep = suite_ls(*e6, 11, 12);
        std::string name = "LS straightening (max-height 11)";
        for (const auto& c : rep.checks)
            if (c.name.rfind("straightening table complete", 0) == 0)
                name += " [" + c.name.substr(name.size() > 0 ? 29 : 0) + "]";
        line(9, name, rep.pass(), sw.millis() / 1000, 3600, first_witness(rep));
    }

    // 10. Desk-scale oracle equivalence
    {
        Stopwatch sw;
        SuiteReport rep = suite_oracle();
        line(10, "free-algebra row reduction vs PBW counts vs Kostant (A2, A3)", rep.pass(),
             sw.millis() / 1000, 300, first_witness(rep));
    }

    // 11. R-matrix intertwining
    {
        Stopwatch sw;
        SuiteReport rep = suite_rmatrix(*e6, 2);
        line(11, "R-matrix intertwining (A2 depth 3, E6 depth 2, Yang-Baxter)", rep.pass(),
             sw.millis() / 1000, 1800, first_witness(rep));
    }

    // 12. Specialization
    {
        Stopwatch sw;
        SuiteReport rep = suite_specialize(*e6);
        line(12, "specialization r->q, s->q^{-1}", rep.pass(), sw.millis() / 1000, 1,
             first_witness(rep));
    }

    // 13. Determinism across thread counts
    {
        Stopwatch sw;
        SuiteReport rep = suite_determinism(1, threads > 1 ? threads : 2);
        line(13, "byte-identical reports across thread counts", rep.pass(),
             sw.millis() / 1000, 3600, first_witness(rep));
    }

    std::cout << (failures == 0 ? "ALL CRITERIA PASS" : "FAILURES PRESENT") << "\n";
    return failures == 0 ? 0 : 1;
}
