#include "hriesz/quadrature.hpp"

#include <Eigen/Dense>
#include <cmath>

namespace hriesz {

QuadGrid gauss_laguerre(int count, double mu) {
    if (count < 1) throw std::invalid_argument("gauss_laguerre: count must be >= 1");
    if (mu <= -1.0) throw std::invalid_argument("gauss_laguerre: mu must be > -1");

    // Jacobi matrix of the monic generalized Laguerre recurrence:
    //   diag_i = 2i + mu + 1,  offdiag_i = sqrt(i (i + mu)).
    Eigen::VectorXd diag(count), offdiag(count > 1 ? count - 1 : 1);
    for (int i = 0; i < count; ++i) diag(i) = 2.0 * i + mu + 1.0;
    for (int i = 1; i < count; ++i) offdiag(i - 1) = std::sqrt(i * (i + mu));

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
    solver.computeFromTridiagonal(diag, offdiag.head(std::max(count - 1, 0)),
                                  Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success)
        throw QuadratureError("gauss_laguerre: tridiagonal eigensolver did not converge");

    // Christoffel weights w_i = 1 / sum_{k<count} p_k(x_i)^2 with p_k the
    // orthonormal Laguerre polynomials.  The first-eigenvector-component route
    // loses the small weights to eigenvector noise (absolute ~eps^2 floor);
    // this form keeps them relatively accurate.
    const double mass = std::exp(std::lgamma(mu + 1.0));
    QuadGrid grid;
    grid.mu = mu;
    grid.nodes.resize(count);
    grid.weights.resize(count);
    grid.total_weights.resize(count);
    for (int i = 0; i < count; ++i) {
        const double x = solver.eigenvalues()(i);  // ascending
        double prev = 0.0;
        double cur = 1.0 / std::sqrt(mass);  // p_0
        double kernel = cur * cur;
        for (int k = 0; k + 1 < count; ++k) {
            const double b_k = offdiag(k);
            const double next = ((x - diag(k)) * cur - (k > 0 ? offdiag(k - 1) : 0.0) * prev) / b_k;
            prev = cur;
            cur = next;
            kernel += cur * cur;
        }
        grid.nodes[i] = x;
        grid.weights[i] = 1.0 / kernel;
        grid.total_weights[i] = grid.weights[i] * std::exp(x);
    }
    return grid;
}

namespace {

// Nodes/weights of the tanh-sinh rule on (-1, 1) at step h = 2^-level,
// t in [-t_max, t_max]:  x = tanh((pi/2) sinh t).
struct TanhSinhLevel {
    std::vector<double> x;  // abscissae in (0, 1); used symmetrically
    std::vector<double> w;
};

const double kHalfPi = 1.5707963267948966;

TanhSinhLevel tanh_sinh_level(int level, bool odd_only) {
    TanhSinhLevel out;
    const double h = std::ldexp(1.0, -level);
    const double t_max = 6.0;
    int j = odd_only ? 1 : 0;
    const int step = odd_only ? 2 : 1;
    for (;; j += step) {
        const double t = j * h;
        if (t > t_max) break;
        const double cs = std::cosh(t);
        const double sn = std::sinh(t);
        const double x = std::tanh(kHalfPi * sn);
        const double w = kHalfPi * cs / std::pow(std::cosh(kHalfPi * sn), 2);
        if (1.0 - x < 1e-17) break;  // abscissa saturated; weights below are negligible
        out.x.push_back(x);
        out.w.push_back(w);
    }
    return out;
}

}  // namespace

AdaptiveResult tanh_sinh(const std::function<double(double)>& f, double a, double b,
                         double target_abs_err, int max_level) {
    const double mid = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    AdaptiveResult res;

    auto eval = [&](double x) {  // x in (-1, 1)
        const double v = f(mid + half * x);
        return std::isfinite(v) ? v : 0.0;
    };

    // level 2 start: sum all nodes; afterwards each level adds the odd nodes.
    // abs_sum tracks sum w |f| so the acceptance test can recognize the
    // roundoff floor of large-magnitude integrands.
    double h = std::ldexp(1.0, -2);
    TanhSinhLevel base = tanh_sinh_level(2, false);
    double sum = eval(0.0) * kHalfPi;  // j = 0 node (x = 0, w = pi/2)
    double abs_sum = std::abs(sum);
    res.evaluations = 1;
    for (size_t i = 1; i < base.x.size(); ++i) {
        const double fp = eval(base.x[i]);
        const double fm = eval(-base.x[i]);
        sum += base.w[i] * (fp + fm);
        abs_sum += base.w[i] * (std::abs(fp) + std::abs(fm));
        res.evaluations += 2;
    }
    double prev = sum * h * half;

    for (int level = 3; level <= max_level; ++level) {
        h = std::ldexp(1.0, -level);
        TanhSinhLevel lv = tanh_sinh_level(level, true);
        for (size_t i = 0; i < lv.x.size(); ++i) {
            const double fp = eval(lv.x[i]);
            const double fm = eval(-lv.x[i]);
            sum += lv.w[i] * (fp + fm);
            abs_sum += lv.w[i] * (std::abs(fp) + std::abs(fm));
            res.evaluations += 2;
        }
        const double cur = sum * h * half;
        res.est_error = std::abs(cur - prev);
        res.value = cur;
        const double floor = 1e-13 * abs_sum * h * std::abs(half);
        if (level >= 5 && res.est_error <= std::max(target_abs_err, floor)) {
            res.converged = true;
            return res;
        }
        prev = cur;
    }
    res.value = prev;
    res.converged = res.est_error <= target_abs_err;
    return res;
}

AdaptiveResult tanh_sinh_semi_infinite(const std::function<double(double)>& f,
                                       double target_abs_err, int max_level) {
    // x = tan(theta) maps (0, pi/2) onto (0, inf); sec^2 theta is the Jacobian.
    auto g = [&](double theta) {
        const double c = std::cos(theta);
        if (c < 1e-300) return 0.0;
        const double x = std::sin(theta) / c;
        const double v = f(x);
        return std::isfinite(v) ? v / (c * c) : 0.0;
    };
    return tanh_sinh(g, 0.0, kHalfPi, target_abs_err, max_level);
}

AdaptiveResult tanh_sinh_2d(const std::function<double(double, double)>& g,
                            double target_abs_err, int max_level) {
    AdaptiveResult inner_worst;
    inner_worst.converged = true;
    auto outer = [&](double x) {
        AdaptiveResult r = tanh_sinh_semi_infinite([&](double y) { return g(x, y); },
                                                   target_abs_err * 1e-2, max_level);
        if (!r.converged) inner_worst.converged = false;
        inner_worst.evaluations += r.evaluations;
        return r.value;
    };
    AdaptiveResult res = tanh_sinh_semi_infinite(outer, target_abs_err, max_level);
    res.evaluations += inner_worst.evaluations;
    res.converged = res.converged && inner_worst.converged;
    return res;
}

double trapezoid(const std::function<double(double)>& f, double a, double b, int npts) {
    if (npts < 2) throw std::invalid_argument("trapezoid: need at least 2 points");
    const double h = (b - a) / (npts - 1);
    double sum = 0.5 * (f(a) + f(b));
    for (int i = 1; i + 1 < npts; ++i) sum += f(a + i * h);
    return sum * h;
}

}  // namespace hriesz
