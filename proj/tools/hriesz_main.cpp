#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "hriesz/report.hpp"
#include "hriesz/suites.hpp"

namespace {

hriesz::MultiIndex parse_m(const std::string& text, int n) {
    if (text.empty()) return hriesz::MultiIndex::zero(n);
    std::vector<int> entries;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) entries.push_back(std::stoi(item));
    if (static_cast<int>(entries.size()) != n)
        throw CLI::ValidationError("--m must list exactly n entries");
    for (int e : entries)
        if (e < 0) throw CLI::ValidationError("--m entries must be >= 0");
    return hriesz::MultiIndex(entries);
}

int check_axis(int j, int n) {
    if (j < 1 || j > n) throw CLI::ValidationError("--j must be in 1..n");
    return j - 1;
}

}  // namespace

int main(int argc, char** argv) {
    using namespace hriesz;

    RunConfig cfg;
    try {
        cfg = config_from_env();
    } catch (const std::exception& e) {
        std::cerr << "hriesz: " << e.what() << "\n";
        return 2;
    }

    CLI::App app{"hriesz - verification tables for Riesz-transform operator identities"};
    app.require_subcommand(1);

    std::string out_path;
    app.add_option("--format", cfg.format, "output format: csv or json")
        ->check(CLI::IsMember({"csv", "json"}));
    app.add_option("--out", out_path, "write the table to FILE instead of stdout");
    app.add_option("--seed", cfg.seed, "seed for randomized sweeps");
    app.add_option("--quad", cfg.quad_points, "quadrature points per axis");
    app.add_option("--trunc", cfg.trunc, "truncation order K");

    int n_max = 10, n = 1, K = -1, quad = -1, trials = 100, samples = 100;
    int p_int = 1, q_int = 1, j_axis = 1;
    double lambda = 1.0, p_exp = 2.0;
    std::string m_text, multiplier = "hilbert";

    std::vector<CheckRow> rows;

    auto* gamma = app.add_subcommand("gamma-ratio", "closed-form Gamma-ratio table");
    gamma->add_option("--n-max", n_max, "largest dimension");
    gamma->fallthrough();
    gamma->callback([&] { rows = suite_gamma_ratio(n_max, cfg); });

    auto* kernel = app.add_subcommand("kernel-bound", "kernel bound vs the Gamma ratio");
    kernel->add_option("--n-max", n_max, "largest dimension");
    kernel->fallthrough();
    kernel->callback([&] { rows = suite_kernel_bound(n_max, cfg); });

    auto* lemma = app.add_subcommand("lemma34", "radial-integral ratio and beta factors");
    lemma->add_option("--n-max", n_max, "largest dimension");
    lemma->fallthrough();
    lemma->callback([&] { rows = suite_lemma34(n_max, cfg); });

    auto* ortho = app.add_subcommand("ortho", "multiple Laguerre orthonormality sweep");
    ortho->add_option("--n", n, "dimension")->required();
    ortho->add_option("--m", m_text, "type vector, comma separated");
    ortho->add_option("--trunc", K, "truncation order");
    ortho->add_option("--quad", quad, "quadrature points per axis");
    ortho->fallthrough();
    ortho->callback([&] {
        rows = suite_ortho(n, parse_m(m_text, n), K > 0 ? K : 6, quad > 0 ? quad : cfg.quad_points,
                           cfg);
    });

    auto* riesz = app.add_subcommand("riesz-l2", "square-function identity sweep");
    riesz->add_option("--n", n, "dimension")->required();
    riesz->add_option("--trunc", K, "truncation order");
    riesz->add_option("--trials", trials, "random vectors per lambda");
    riesz->fallthrough();
    riesz->callback([&] {
        rows = suite_riesz_l2(n, K > 0 ? K : cfg.trunc, trials, cfg.seed, cfg);
    });

    auto* fact = app.add_subcommand("factorize", "ladder factorization identity");
    fact->add_option("--p", p_int, "annihilation order")->required();
    fact->add_option("--q", q_int, "creation order")->required();
    fact->add_option("--n", n, "dimension")->required();
    fact->add_option("--trunc", K, "truncation order");
    fact->fallthrough();
    fact->callback([&] { rows = suite_factorize(p_int, q_int, n, K > 0 ? K : cfg.trunc, cfg); });

    auto* comm = app.add_subcommand("commutator", "ladder commutator measurement");
    comm->add_option("--lambda", lambda, "spectral parameter > 0");
    comm->add_option("--trunc", K, "truncation order");
    comm->fallthrough();
    comm->callback([&] { rows = suite_commutator(lambda, K > 0 ? K : cfg.trunc, cfg); });

    auto* inter = app.add_subcommand("intertwine", "dual-path intertwining defect");
    inter->add_option("--n", n, "dimension")->required();
    inter->add_option("--m", m_text, "type vector, comma separated");
    inter->add_option("--j", j_axis, "axis, 1-based");
    inter->add_option("--trunc", K, "truncation order");
    inter->add_option("--samples", samples, "seeded sample points");
    inter->fallthrough();
    inter->callback([&] {
        rows = suite_intertwine(n, parse_m(m_text, n), check_axis(j_axis, n),
                                K > 0 ? K : cfg.trunc, samples, cfg.seed, cfg);
    });

    auto* weighted = app.add_subcommand("weighted-probe", "weighted norm ratio probe");
    weighted->add_option("--n", n, "dimension")->required();
    weighted->add_option("--m", m_text, "type vector, comma separated");
    weighted->add_option("--j", j_axis, "axis, 1-based");
    weighted->add_option("--p", p_exp, "exponent p > 1");
    weighted->fallthrough();
    weighted->callback([&] {
        rows = suite_weighted_probe(n, parse_m(m_text, n), check_axis(j_axis, n), p_exp, cfg);
    });

    auto* transfer = app.add_subcommand("transference", "line vs circle multiplier norms");
    transfer->add_option("--multiplier", multiplier, "identity, shift, or hilbert")
        ->check(CLI::IsMember({"identity", "shift", "hilbert"}));
    transfer->add_option("--p", p_exp, "exponent p > 1");
    transfer->fallthrough();
    transfer->callback([&] { rows = suite_transference(multiplier, p_exp, cfg.seed, cfg); });

    auto* all = app.add_subcommand("all", "full verification suite");
    all->fallthrough();
    all->callback([&] { rows = run_all(cfg); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        std::cerr << app.help();
        return 2;
    }
    const std::string table = cfg.format == "json" ? to_json(rows) : to_csv(rows);
    if (out_path.empty()) {
        std::cout << table;
    } else {
        std::ofstream out(out_path, std::ios::binary);
        if (!out) {
            std::cerr << "hriesz: cannot open " << out_path << "\n";
            return 2;
        }
        out << table;
    }
    return all_pass(rows) ? 0 : 1;
}
