#include "hriesz/special_fn.hpp"

#include <cmath>

namespace hriesz {

double log_gamma(double x) { return std::lgamma(x); }

double log_factorial(int k) { return std::lgamma(k + 1.0); }

double laguerre_poly(int k, double nu, double x) {
    if (k < 0) throw std::invalid_argument("laguerre_poly: k must be >= 0");
    if (nu <= -1.0) throw std::domain_error("laguerre_poly: nu must be > -1");
    double prev = 1.0;            // L_0
    if (k == 0) return prev;
    double cur = nu + 1.0 - x;    // L_1
    for (int j = 1; j < k; ++j) {
        const double next = ((2.0 * j + nu + 1.0 - x) * cur - (j + nu) * prev) / (j + 1.0);
        prev = cur;
        cur = next;
    }
    return cur;
}

std::vector<double> laguerre_poly_seq(int kmax, double nu, double x) {
    if (kmax < 0) throw std::invalid_argument("laguerre_poly_seq: kmax must be >= 0");
    if (nu <= -1.0) throw std::domain_error("laguerre_poly_seq: nu must be > -1");
    std::vector<double> L(static_cast<size_t>(kmax) + 1);
    L[0] = 1.0;
    if (kmax >= 1) L[1] = nu + 1.0 - x;
    for (int j = 1; j < kmax; ++j)
        L[j + 1] = ((2.0 * j + nu + 1.0 - x) * L[j] - (j + nu) * L[j - 1]) / (j + 1.0);
    return L;
}

double laguerre_fn(int k, double nu, double lambda, double r) {
    if (lambda <= 0.0) throw std::domain_error("laguerre_fn: lambda must be > 0");
    const double x = 0.5 * lambda * r * r;
    return laguerre_poly(k, nu, x) * std::exp(-0.5 * x);
}

double psi_axis(int a, int m, double r) {
    if (a < 0 || m < 0) throw std::invalid_argument("psi_axis: indices must be >= 0");
    const double lognorm =
        0.5 * (-m * std::log(2.0) + log_factorial(a) - log_factorial(a + m));
    return std::exp(lognorm) * laguerre_fn(a, m, 1.0, r);
}

double psi(const MultiIndex& alpha, const MultiIndex& m, const std::vector<double>& r) {
    const int n = alpha.size();
    if (m.size() != n || static_cast<int>(r.size()) != n)
        throw std::invalid_argument("psi: alpha, m, r lengths differ");
    double value = 1.0;
    for (int j = 0; j < n; ++j) value *= psi_axis(alpha[j], m[j], r[static_cast<size_t>(j)]);
    return value;
}

double hermite_fn(int k, double lambda, double x) {
    if (k < 0) throw std::invalid_argument("hermite_fn: k must be >= 0");
    if (lambda <= 0.0) throw std::domain_error("hermite_fn: lambda must be > 0");
    const double y = std::sqrt(lambda) * x;
    // normalized recurrence:  h_{k+1} = y sqrt(2/(k+1)) h_k - sqrt(k/(k+1)) h_{k-1}
    double prev = 0.0;
    double cur = std::pow(3.141592653589793238463, -0.25) * std::exp(-0.5 * y * y);
    for (int j = 0; j < k; ++j) {
        const double next =
            y * std::sqrt(2.0 / (j + 1.0)) * cur - std::sqrt(j / (j + 1.0)) * prev;
        prev = cur;
        cur = next;
    }
    return std::pow(lambda, 0.25) * cur;
}

double gamma_ratio(int n) {
    if (n < 1) throw std::invalid_argument("gamma_ratio: n must be >= 1");
    return std::exp(log_gamma(0.5 * n) - log_gamma(0.5 * (n + 1))) /
           std::sqrt(3.141592653589793238463);
}

std::vector<QuadGrid> grids_for(const MultiIndex& m, int count) {
    std::vector<QuadGrid> grids;
    grids.reserve(static_cast<size_t>(m.size()));
    for (int j = 0; j < m.size(); ++j) grids.push_back(gauss_laguerre(count, m[j]));
    return grids;
}

double inner_mu(const RadialEvaluator& f, const RadialEvaluator& g, const MultiIndex& m,
                const std::vector<QuadGrid>& grids) {
    const int n = m.size();
    if (static_cast<int>(grids.size()) != n)
        throw std::invalid_argument("inner_mu: one grid per axis required");
    double scale = 1.0;
    for (int j = 0; j < n; ++j) {
        if (grids[static_cast<size_t>(j)].mu != static_cast<double>(m[j]))
            throw std::invalid_argument("inner_mu: grid exponent does not match m");
        scale *= std::pow(2.0, m[j]);  // r^{2m+1} dr = 2^m s^m ds
    }

    std::vector<double> r(static_cast<size_t>(n));
    double sum = 0.0;
    // tensor loop, axis 0 outermost; deterministic accumulation order
    std::vector<int> idx(static_cast<size_t>(n), 0);
    for (;;) {
        double w = 1.0;
        for (int j = 0; j < n; ++j) {
            const QuadGrid& gr = grids[static_cast<size_t>(j)];
            const int i = idx[static_cast<size_t>(j)];
            w *= gr.total_weights[static_cast<size_t>(i)];
            r[static_cast<size_t>(j)] = std::sqrt(2.0 * gr.nodes[static_cast<size_t>(i)]);
        }
        sum += w * f(r) * g(r);
        int j = n - 1;
        for (; j >= 0; --j) {
            if (++idx[static_cast<size_t>(j)] < grids[static_cast<size_t>(j)].count()) break;
            idx[static_cast<size_t>(j)] = 0;
        }
        if (j < 0) break;
    }
    return scale * sum;
}

}  // namespace hriesz
