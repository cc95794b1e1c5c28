#include "hriesz/kernel_bounds.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>

#include "hriesz/quadrature.hpp"
#include "hriesz/special_fn.hpp"

namespace hriesz {

double log_sphere_area(int real_dim) {
    return std::log(2.0) + 0.5 * real_dim * std::log(3.141592653589793238463) -
           log_gamma(0.5 * real_dim);
}

namespace {

// int_0^inf int_0^inf (1+t^2+r^4)^{-(n+4)/2} r^{2n+1} dr dt
AdaptiveResult norm_integral_2d(int n, double target = 1e-11) {
    return tanh_sinh_2d(
        [n](double r, double t) {
            return std::pow(1.0 + t * t + std::pow(r, 4), -0.5 * (n + 4)) *
                   std::pow(r, 2 * n + 1);
        },
        target);
}

}  // namespace

double folland_c(int n) {
    if (n < 1) throw std::invalid_argument("folland_c: n must be >= 1");
    static std::map<int, double> cache;
    static std::mutex mutex;
    {
        std::lock_guard<std::mutex> lock(mutex);
        const auto it = cache.find(n);
        if (it != cache.end()) return it->second;
    }
    const AdaptiveResult den = norm_integral_2d(n);
    if (!den.converged)
        throw QuadratureError("folland_c: normalization quadrature did not converge");
    const double omega = std::exp(log_sphere_area(2 * n));
    const double value = 1.0 / (n * (n + 2.0) * omega * den.value);
    std::lock_guard<std::mutex> lock(mutex);
    cache[n] = value;
    return value;
}

double folland_phi0(int n, double r, double t) {
    if (r < 0.0) throw std::invalid_argument("folland_phi0: r must be >= 0");
    if (r == 0.0 && t == 0.0)
        throw std::domain_error("folland_phi0: kernel singular at the origin");
    return folland_c(n) * std::pow(std::pow(r, 4) + t * t, -0.5 * n);
}

double kernel_K(int n, double r, double t) {
    if (r < 0.0) throw std::invalid_argument("kernel_K: r must be >= 0");
    if (r == 0.0 && t == 0.0)
        throw std::domain_error("kernel_K: kernel singular at the origin");
    if (t == 0.0) return 0.0;
    return -n * folland_c(n) * t * std::pow(std::pow(r, 4) + t * t, -0.5 * n - 1.0);
}

double christ_bound(int n) {
    if (n < 1) throw std::invalid_argument("christ_bound: n must be >= 1");
    const AdaptiveResult num = tanh_sinh_semi_infinite(
        [n](double r) {
            return std::pow(1.0 + std::pow(r, 4), -0.5 * n - 1.0) * std::pow(r, 2 * n - 1);
        },
        1e-11);
    if (!num.converged) throw QuadratureError("christ_bound: quadrature did not converge");
    return n * folland_c(n) * std::exp(log_sphere_area(2 * n)) * num.value;
}

Lemma34Result lemma34_numeric(int n) {
    if (n < 1) throw std::invalid_argument("lemma34_numeric: n must be >= 1");
    Lemma34Result out;

    const AdaptiveResult num = tanh_sinh_semi_infinite(
        [n](double r) {
            return std::pow(1.0 + std::pow(r, 4), -0.5 * n - 1.0) * std::pow(r, 2 * n - 1);
        },
        1e-11);
    const AdaptiveResult tf = tanh_sinh_semi_infinite(
        [](double t) { return std::pow(1.0 + t * t, -1.5); }, 1e-11);
    const AdaptiveResult uf = tanh_sinh_semi_infinite(
        [n](double u) {
            return std::pow(1.0 + std::pow(u, 4), -0.5 * (n + 4)) * std::pow(u, 2 * n + 1);
        },
        1e-11);
    const AdaptiveResult den = norm_integral_2d(n);

    out.numerator_quad = num.value;
    out.numerator_closed = std::exp(log_gamma(1.0) + log_gamma(0.5 * n) -
                                    std::log(4.0) - log_gamma(0.5 * n + 1.0));
    out.t_factor_quad = tf.value;
    out.t_factor_closed = std::exp(log_gamma(0.5) + log_gamma(1.0) - std::log(2.0) -
                                   log_gamma(1.5));
    out.u_factor_quad = uf.value;
    out.u_factor_closed = std::exp(log_gamma(1.5) + log_gamma(0.5 * (n + 1)) -
                                   std::log(4.0) - log_gamma(0.5 * (n + 4)));
    out.denominator_quad = den.value;

    out.ratio.n = n;
    out.ratio.value = num.value / ((n + 2.0) * den.value);
    out.ratio.est_error =
        std::abs(out.ratio.value) *
        (num.est_error / std::max(num.value, 1e-300) + den.est_error / std::max(den.value, 1e-300));
    out.ratio.node_count = num.evaluations + den.evaluations;
    out.ratio.converged = num.converged && tf.converged && uf.converged && den.converged &&
                          out.ratio.est_error <= 1e-8 * std::max(1.0, std::abs(out.ratio.value));
    return out;
}

double hecke_radial_coeff(const std::function<double(double)>& f, int k, int pdeg, int qdeg,
                          int n, double lambda) {
    if (n < 1) throw std::invalid_argument("hecke_radial_coeff: n must be >= 1");
    if (pdeg < 0 || qdeg < 0)
        throw std::invalid_argument("hecke_radial_coeff: degrees must be >= 0");
    if (k < pdeg) throw std::domain_error("hecke_radial_coeff: requires k >= pdeg");
    if (lambda <= 0.0) throw std::domain_error("hecke_radial_coeff: lambda must be > 0");

    const int d = n + pdeg + qdeg;  // complex dimension of the lifted integral
    const double nu = d - 1.0;
    const double prefactor =
        std::exp(log_gamma(k - pdeg + 1.0) + log_gamma(n) - log_gamma(k + qdeg + n));
    const AdaptiveResult radial = tanh_sinh_semi_infinite(
        [&](double r) {
            return f(r) * laguerre_fn(k, nu, lambda, r) * std::pow(r, 2 * d - 1);
        },
        1e-12);
    if (!radial.converged)
        throw QuadratureError("hecke_radial_coeff: radial quadrature did not converge");
    return prefactor * std::exp(log_sphere_area(2 * d)) * radial.value;
}

}  // namespace hriesz
