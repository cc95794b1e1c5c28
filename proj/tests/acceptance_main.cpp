// Acceptance runner: one line per criterion, exit code = failure count.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "hriesz/report.hpp"
#include "hriesz/suites.hpp"

using namespace hriesz;

namespace {

int failures = 0;

std::string worst_of(const std::vector<CheckRow>& rows) {
    double worst = 0.0;
    std::string where;
    for (const CheckRow& row : rows) {
        if (!row.tolerance || !row.checked_defect) continue;
        if (*row.checked_defect >= worst) {
            worst = *row.checked_defect;
            where = row.check;
        }
    }
    std::ostringstream os;
    os << "worst defect " << worst << " @ " << where;
    return os.str();
}

void report(int id, const std::string& label, bool pass, double seconds,
            const std::string& detail) {
    std::printf("%s  criterion %2d: %s (%.2fs; %s)\n", pass ? "PASS" : "FAIL", id, label.c_str(),
                seconds, detail.c_str());
    std::fflush(stdout);
    if (!pass) ++failures;
}

void run(int id, const std::string& label, double time_limit_s,
         const std::function<std::vector<CheckRow>()>& fn) {
    const auto t0 = std::chrono::steady_clock::now();
    std::vector<CheckRow> rows;
    bool ok = true;
    std::string detail;
    try {
        rows = fn();
        ok = all_pass(rows);
        detail = worst_of(rows);
    } catch (const std::exception& e) {
        ok = false;
        detail = std::string("exception: ") + e.what();
    }
    double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (time_limit_s > 0.0 && dt >= time_limit_s) {
        ok = false;
        detail += "; over the time limit";
    }
    report(id, label, ok, dt, detail);
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

}  // namespace

int main() {
    RunConfig cfg;

    run(1, "Lemma-ratio closed form, n = 1..20", 10.0, [&] { return suite_lemma34(20, cfg); });

    run(2, "kernel bound equals the Gamma ratio, n = 1..10", 30.0,
        [&] { return suite_kernel_bound(10, cfg); });

    run(3, "square-function identity, 100 vectors per (n, lambda)", 5.0,
        [&] { return suite_riesz_l2_matrix(100, cfg); });

    run(4, "ladder factorization identity", 5.0, [&] { return suite_factorize_matrix(cfg); });

    run(5, "commutator measurement and lambda scaling", 0.0, [&] {
        std::vector<CheckRow> rows;
        for (double lambda : {0.5, 1.0, 2.0}) {
            const auto cell = suite_commutator(lambda, cfg.trunc, cfg);
            rows.insert(rows.end(), cell.begin(), cell.end());
        }
        return rows;
    });

    run(6, "dual-path intertwining, K = 20, 100 samples", 60.0,
        [&] { return suite_intertwine_matrix(20, 100, cfg); });

    run(7, "multiple Laguerre orthonormality, n <= 3", 20.0,
        [&] { return suite_ortho_matrix(cfg); });

    run(8, "exact L2 contraction by enumeration", 0.0,
        [&] { return suite_contraction_enumeration(cfg); });

    run(9, "twisted projection algebra on the 128x128 grid", 0.0,
        [&] { return suite_projection(4, 128, cfg); });

    run(10, "radial coefficient scaling exponents", 0.0, [&] { return suite_hecke_scaling(cfg); });

    run(11, "periodization norm comparison", 0.0, [&] {
        std::vector<CheckRow> rows;
        for (double p : {2.0, 4.0}) {
            const auto cell = suite_transference("hilbert", p, cfg.seed, cfg);
            rows.insert(rows.end(), cell.begin(), cell.end());
        }
        const auto id2 = suite_transference("identity", 2.0, cfg.seed, cfg);
        rows.insert(rows.end(), id2.begin(), id2.end());
        return rows;
    });

    // criterion 12: the CLI emits byte-identical CSV across two runs
    {
        const auto t0 = std::chrono::steady_clock::now();
        bool ok = true;
        std::string detail;
#ifdef HRIESZ_CLI_PATH
        const std::string cli = HRIESZ_CLI_PATH;
        const std::string f1 = "hriesz_accept_run1.csv";
        const std::string f2 = "hriesz_accept_run2.csv";
        const std::string base = "\"" + cli + "\" all --seed 42 --out ";
        const int rc1 = std::system((base + f1).c_str());
        const int rc2 = std::system((base + f2).c_str());
        (void)rc1;
        (void)rc2;
        const std::string a = slurp(f1);
        const std::string b = slurp(f2);
        std::remove(f1.c_str());
        std::remove(f2.c_str());
        if (a.empty() || a != b) {
            ok = false;
            detail = "outputs differ or are empty";
        } else {
            detail = std::to_string(a.size()) + " bytes, identical";
        }
#else
        ok = false;
        detail = "CLI path not configured";
#endif
        const double dt =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        report(12, "byte-identical CSV from two `all --seed 42` runs", ok, dt, detail);
    }

    std::printf("%s: %d criterion(s) failed\n", failures == 0 ? "ALL PASS" : "FAILURES", failures);
    return failures == 0 ? 0 : 1;
}
