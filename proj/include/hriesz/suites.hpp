#pragma once

#include <string>
#include <vector>

#include "hriesz/multi_index.hpp"
#include "hriesz/report.hpp"
#include "hriesz/special_hermite.hpp"

namespace hriesz {

// Check suites shared by the CLI and the acceptance runner.  Every suite is
// deterministic for a fixed RunConfig.

std::vector<CheckRow> suite_gamma_ratio(int n_max, const RunConfig& cfg);
std::vector<CheckRow> suite_kernel_bound(int n_max, const RunConfig& cfg);
std::vector<CheckRow> suite_lemma34(int n_max, const RunConfig& cfg);

std::vector<CheckRow> suite_ortho(int n, const MultiIndex& m, int K, int quad,
                                  const RunConfig& cfg);
// n <= 3, every m with entries <= 3, |alpha| <= 6
std::vector<CheckRow> suite_ortho_matrix(const RunConfig& cfg);

std::vector<CheckRow> suite_riesz_l2(int n, int K, int trials, std::uint64_t seed,
                                     const RunConfig& cfg);
std::vector<CheckRow> suite_riesz_l2_matrix(int trials, const RunConfig& cfg);

std::vector<CheckRow> suite_factorize(int p, int q, int n, int K, const RunConfig& cfg);
std::vector<CheckRow> suite_factorize_matrix(const RunConfig& cfg);

std::vector<CheckRow> suite_commutator(double lambda, int K, const RunConfig& cfg);

std::vector<CheckRow> suite_intertwine(int n, const MultiIndex& m, int axis, int K,
                                       int samples, std::uint64_t seed, const RunConfig& cfg);
// n in {1,2}, m entries <= 2, every axis, all three profiles
std::vector<CheckRow> suite_intertwine_matrix(int K, int samples, const RunConfig& cfg);

std::vector<CheckRow> suite_weighted_probe(int n, const MultiIndex& m, int axis, double p,
                                           const RunConfig& cfg);
std::vector<CheckRow> suite_weighted_probe_matrix(const RunConfig& cfg);

std::vector<CheckRow> suite_transference(const std::string& multiplier, double p,
                                         std::uint64_t seed, const RunConfig& cfg);

std::vector<CheckRow> suite_projection(int kmax, int grid_points, const RunConfig& cfg);

std::vector<CheckRow> suite_hecke_scaling(const RunConfig& cfg);

std::vector<CheckRow> suite_contraction_enumeration(const RunConfig& cfg);

// Full suite in a fixed order; the reproducibility gate runs this twice.
std::vector<CheckRow> run_all(const RunConfig& cfg);

// ---- shared building blocks ---------------------------------------------------

// max |<Psi_alpha, Psi_beta> - delta| over |alpha|,|beta| <= K via the per-axis
// Gram factorization of the tensor quadrature (same rule as inner_mu).
double ortho_max_defect(int n, const MultiIndex& m, int K, int quad);

// seeded points of C^n with every |z_j| in [0.2, 3]
std::vector<CPoint> annulus_samples(int n, int count, std::uint64_t seed);

// "gaussian" (width-matched e^{-|r|^2/4}), "gaussian-wide" (e^{-|r|^2/8}),
// or "finite-psi" (a fixed Psi mixture touching every axis)
MHomogeneous intertwine_profile(const std::string& name, const MultiIndex& m);

}  // namespace hriesz
