#include <pybind11/complex.h>
#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "hriesz/hermite_ops.hpp"
#include "hriesz/kernel_bounds.hpp"
#include "hriesz/laguerre_riesz.hpp"
#include "hriesz/quadrature.hpp"
#include "hriesz/report.hpp"
#include "hriesz/rng.hpp"
#include "hriesz/special_fn.hpp"
#include "hriesz/special_hermite.hpp"
#include "hriesz/suites.hpp"
#include "hriesz/transference.hpp"

namespace py = pybind11;
using namespace hriesz;

namespace {

MultiIndex to_index(const std::vector<int>& v) { return MultiIndex(v); }

double py_square_function_sweep(int n, double lambda, int K, int trials, std::uint64_t seed) {
    Rng rng(seed);
    double worst = 0.0;
    for (int t = 0; t < trials; ++t)
        worst = std::max(worst, square_function_defect(random_coeff_vec(n, K, lambda, K - 1, rng)));
    return worst;
}

double py_factorization_sweep(int p, int q, int n, int K, double lambda, std::uint64_t seed) {
    Rng rng(seed);
    double worst = 0.0;
    for (int t = 0; t < 10; ++t)
        worst = std::max(worst, factorization_defect(p, q, random_coeff_vec(n, K, lambda, K - q, rng)));
    return worst;
}

py::dict py_commutator(double lambda, int K) {
    const CommutatorReport rep = commutator_measure(1, 0, lambda, K);
    py::dict d;
    d["c_star"] = rep.c_star;
    d["residual"] = rep.max_residual;
    d["shift_defect"] = rep.shift_defect;
    return d;
}

py::dict py_lemma34(int n) {
    const Lemma34Result lem = lemma34_numeric(n);
    py::dict d;
    d["ratio"] = lem.ratio.value;
    d["converged"] = lem.ratio.converged;
    d["numerator"] = lem.numerator_quad;
    d["numerator_closed"] = lem.numerator_closed;
    d["t_factor"] = lem.t_factor_quad;
    d["u_factor"] = lem.u_factor_quad;
    d["u_factor_closed"] = lem.u_factor_closed;
    return d;
}

double py_intertwine(int n, const std::vector<int>& m, int j, const std::string& profile, int K,
                     int samples, std::uint64_t seed) {
    const MultiIndex mi = to_index(m);
    const MHomogeneous g = intertwine_profile(profile, mi);
    return intertwine_defect(j - 1, g, annulus_samples(n, samples, seed), K);
}

std::pair<double, double> py_norm_compare(const std::string& multiplier, double p,
                                          std::uint64_t seed) {
    MultiplierSpec mspec;
    if (multiplier == "identity") mspec = identity_multiplier();
    else if (multiplier == "shift") mspec = shift_multiplier(1.0);
    else if (multiplier == "hilbert") mspec = hilbert_multiplier();
    else throw std::invalid_argument("unknown multiplier: " + multiplier);
    const NormComparison r = norm_compare(mspec, p, seed);
    return {r.line_norm_est, r.circle_norm_est};
}

py::dict py_riesz_laguerre(const std::vector<int>& m, const std::vector<int>& alpha, int j) {
    const MultiIndex mi = to_index(m);
    const MultiIndex ai = to_index(alpha);
    LagCoeffs c;
    c.spec = LaguerreBasisSpec::make(mi, ai.order() + 1, 8);
    c.data[ai] = 1.0;
    const LaguerreRieszImage image = riesz_laguerre(j - 1, c);
    py::dict out;
    for (const auto& [beta, v] : image.coeffs.data) {
        py::tuple key(beta.size());
        for (int i = 0; i < beta.size(); ++i) key[static_cast<size_t>(i)] = beta[i];
        out[key] = v;
    }
    return out;
}

double py_projection_defect(int k, int l, int grid, double R) {
    const PlaneGridFn F = PlaneGridFn::sample(R, grid, [](Complex z) {
        return phi_special(MultiIndex{0}, MultiIndex{0}, {z}) +
               0.5 * phi_special(MultiIndex{1}, MultiIndex{1}, {z});
    });
    const PlaneGridFn pl = project_k(F, l);
    const PlaneGridFn pkl = project_k(pl, k);
    return k == l ? pkl.sup_distance(pl) : pkl.max_abs();
}

std::string py_run_all_csv(std::uint64_t seed) {
    RunConfig cfg;
    cfg.seed = seed;
    return to_csv(run_all(cfg));
}

}  // namespace

PYBIND11_MODULE(_hriesz, mod) {
    mod.doc() = "Ladder-operator calculus and kernel bounds for Hermite/Laguerre Riesz transforms";

    mod.def("laguerre_poly", &laguerre_poly, py::arg("k"), py::arg("nu"), py::arg("x"),
            "generalized Laguerre polynomial L_k^nu(x)");
    mod.def("laguerre_fn", &laguerre_fn, py::arg("k"), py::arg("nu"), py::arg("lam"), py::arg("r"),
            "Laguerre function L_k^nu(lam r^2/2) e^{-lam r^2/4}");
    mod.def("hermite_fn", &hermite_fn, py::arg("k"), py::arg("lam"), py::arg("x"),
            "L2-normalized Hermite function");
    mod.def("gamma_ratio", &gamma_ratio, py::arg("n"),
            "pi^{-1/2} Gamma(n/2) / Gamma((n+1)/2)");
    mod.def(
        "psi",
        [](const std::vector<int>& alpha, const std::vector<int>& m, const std::vector<double>& r) {
            return psi(to_index(alpha), to_index(m), r);
        },
        py::arg("alpha"), py::arg("m"), py::arg("r"), "multiple Laguerre function Psi_alpha^m");
    mod.def(
        "gauss_laguerre",
        [](int count, double mu) {
            const QuadGrid g = gauss_laguerre(count, mu);
            return std::make_pair(g.nodes, g.weights);
        },
        py::arg("count"), py::arg("mu"), "generalized Gauss-Laguerre nodes and weights");

    mod.def("folland_c", &folland_c, py::arg("n"));
    mod.def("folland_phi0", &folland_phi0, py::arg("n"), py::arg("r"), py::arg("t"));
    mod.def("kernel_K", &kernel_K, py::arg("n"), py::arg("r"), py::arg("t"));
    mod.def("christ_bound", &christ_bound, py::arg("n"));
    mod.def("lemma34", &py_lemma34, py::arg("n"),
            "radial-integral ratio of the kernel bound with its closed-form factors");
    mod.def("hecke_radial_coeff", &hecke_radial_coeff, py::arg("f"), py::arg("k"), py::arg("pdeg"),
            py::arg("qdeg"), py::arg("n"), py::arg("lam"));

    mod.def("square_function_defect", &py_square_function_sweep, py::arg("n"), py::arg("lam"),
            py::arg("K") = 10, py::arg("trials") = 25, py::arg("seed") = 1,
            "max relative defect of the square-function identity over random interior vectors");
    mod.def("factorization_defect", &py_factorization_sweep, py::arg("p"), py::arg("q"),
            py::arg("n"), py::arg("K") = 12, py::arg("lam") = 1.0, py::arg("seed") = 1);
    mod.def("commutator_measure", &py_commutator, py::arg("lam") = 1.0, py::arg("K") = 10);

    mod.def("riesz_laguerre_indicator", &py_riesz_laguerre, py::arg("m"), py::arg("alpha"),
            py::arg("j"), "image coefficients of a single basis mode (axes 1-based)");
    mod.def("intertwine_defect", &py_intertwine, py::arg("n"), py::arg("m"), py::arg("j"),
            py::arg("profile") = "gaussian-wide", py::arg("K") = 16, py::arg("samples") = 40,
            py::arg("seed") = 1, "dual-path defect of the intertwining identity (j 1-based)");

    mod.def("norm_compare", &py_norm_compare, py::arg("multiplier"), py::arg("p"),
            py::arg("seed") = 42, "(line, circle) empirical multiplier norm estimates");
    mod.def("projection_defect", &py_projection_defect, py::arg("k"), py::arg("l"),
            py::arg("grid") = 96, py::arg("R") = 8.0,
            "idempotence (k == l) or cross-orthogonality (k != l) defect of P_k P_l");

    mod.def("kernel_km",
            [](int p, int q, int n, double r, int K) {
                const KernelSeriesResult res = kernel_km(p, q, n, r, K);
                py::dict d;
                d["value"] = res.value;
                d["converged"] = res.converged;
                d["terms"] = res.terms;
                d["last_term"] = res.last_term;
                return d;
            },
            py::arg("pdeg"), py::arg("qdeg"), py::arg("n"), py::arg("r"), py::arg("K"));

    mod.def("run_all_csv", &py_run_all_csv, py::arg("seed") = 42,
            "full verification table as CSV text");
}
