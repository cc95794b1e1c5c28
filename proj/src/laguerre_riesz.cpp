#include "hriesz/laguerre_riesz.hpp"

#include <cmath>
#include <stdexcept>

namespace hriesz {

LaguerreBasisSpec LaguerreBasisSpec::make(const MultiIndex& m, int K, int quad_points) {
    if (K < 0) throw std::invalid_argument("LaguerreBasisSpec: K must be >= 0");
    LaguerreBasisSpec spec;
    spec.n = m.size();
    spec.m = m;
    spec.K = K;
    spec.quad = grids_for(m, quad_points);
    return spec;
}

double LagCoeffs::norm_sq() const {
    double s = 0.0;
    for (const auto& [alpha, v] : data) s += v * v;
    return s;
}

double LagCoeffs::norm() const { return std::sqrt(norm_sq()); }

namespace {

// psi_axis values for a = 0..K at each node of one axis grid (r = sqrt(2 s)).
std::vector<std::vector<double>> axis_table(const QuadGrid& grid, int m, int K) {
    std::vector<std::vector<double>> table(grid.nodes.size());
    for (size_t i = 0; i < grid.nodes.size(); ++i) {
        const double r = std::sqrt(2.0 * grid.nodes[i]);
        table[i].resize(static_cast<size_t>(K) + 1);
        for (int a = 0; a <= K; ++a) table[i][static_cast<size_t>(a)] = psi_axis(a, m, r);
    }
    return table;
}

}  // namespace

LagCoeffs analyze(const RadialEvaluator& f, const LaguerreBasisSpec& spec) {
    const int n = spec.n;
    LagCoeffs out;
    out.spec = spec;
    const auto indices = simplex_indices(n, spec.K);
    for (const auto& alpha : indices) out.data[alpha] = 0.0;

    std::vector<std::vector<std::vector<double>>> tables(static_cast<size_t>(n));
    for (int j = 0; j < n; ++j)
        tables[static_cast<size_t>(j)] = axis_table(spec.quad[static_cast<size_t>(j)], spec.m[j], spec.K);

    double scale = 1.0;
    for (int j = 0; j < n; ++j) scale *= std::pow(2.0, spec.m[j]);

    // tensor sweep over the grid; all coefficients accumulated per point
    std::vector<int> idx(static_cast<size_t>(n), 0);
    std::vector<double> r(static_cast<size_t>(n));
    for (;;) {
        double w = 1.0;
        for (int j = 0; j < n; ++j) {
            const QuadGrid& g = spec.quad[static_cast<size_t>(j)];
            const int i = idx[static_cast<size_t>(j)];
            w *= g.total_weights[static_cast<size_t>(i)];
            r[static_cast<size_t>(j)] = std::sqrt(2.0 * g.nodes[static_cast<size_t>(i)]);
        }
        const double fw = scale * w * f(r);
        if (fw != 0.0) {
            for (const auto& alpha : indices) {
                double p = 1.0;
                for (int j = 0; j < n; ++j)
                    p *= tables[static_cast<size_t>(j)][static_cast<size_t>(idx[static_cast<size_t>(j)])]
                               [static_cast<size_t>(alpha[j])];
                out.data[alpha] += fw * p;
            }
        }
        int j = n - 1;
        for (; j >= 0; --j) {
            if (++idx[static_cast<size_t>(j)] < spec.quad[static_cast<size_t>(j)].count()) break;
            idx[static_cast<size_t>(j)] = 0;
        }
        if (j < 0) break;
    }
    return out;
}

double synthesize(const LagCoeffs& c, const std::vector<double>& r) {
    const int n = c.spec.n;
    if (static_cast<int>(r.size()) != n)
        throw std::invalid_argument("synthesize: point dimension mismatch");
    std::vector<std::vector<double>> axis(static_cast<size_t>(n));
    for (int j = 0; j < n; ++j) {
        axis[static_cast<size_t>(j)].resize(static_cast<size_t>(c.spec.K) + 1);
        for (int a = 0; a <= c.spec.K; ++a)
            axis[static_cast<size_t>(j)][static_cast<size_t>(a)] =
                psi_axis(a, c.spec.m[j], r[static_cast<size_t>(j)]);
    }
    double sum = 0.0;
    for (const auto& [alpha, v] : c.data) {
        if (v == 0.0) continue;
        double p = v;
        for (int j = 0; j < n; ++j)
            p *= axis[static_cast<size_t>(j)][static_cast<size_t>(alpha[j])];
        sum += p;
    }
    return sum;
}

double LaguerreRieszImage::evaluate(const std::vector<double>& r) const {
    return r[static_cast<size_t>(axis)] * synthesize(coeffs, r);
}

LaguerreRieszImage riesz_laguerre(int axis, const LagCoeffs& c) {
    const int n = c.spec.n;
    if (axis < 0 || axis >= n) throw std::invalid_argument("riesz_laguerre: axis out of range");
    LaguerreRieszImage image;
    image.axis = axis;
    image.coeffs.spec = LaguerreBasisSpec::make(
        c.spec.m.plus(axis), c.spec.K,
        c.spec.quad.empty() ? 64 : c.spec.quad.front().count());
    for (const auto& [alpha, v] : c.data) {
        if (alpha[axis] == 0 || v == 0.0) continue;
        const double factor =
            std::sqrt(2.0 * alpha[axis]) / std::sqrt(2.0 * alpha.order() + n);
        image.coeffs.data[alpha.minus(axis)] += factor * v;
    }
    return image;
}

namespace {

// int G(r) prod_i r_i^{2 M_i + 1} dr over R_+^n by generalized Gauss-Laguerre
// with real exponents M_i.
double weighted_integral(const RadialEvaluator& G, const std::vector<double>& M,
                         int quad_points) {
    const int n = static_cast<int>(M.size());
    std::vector<QuadGrid> grids;
    grids.reserve(M.size());
    double scale = 1.0;
    for (double mi : M) {
        if (mi <= -1.0) throw std::domain_error("weighted_integral: exponent <= -1");
        grids.push_back(gauss_laguerre(quad_points, mi));
        scale *= std::pow(2.0, mi);
    }
    std::vector<int> idx(static_cast<size_t>(n), 0);
    std::vector<double> r(static_cast<size_t>(n));
    double sum = 0.0;
    for (;;) {
        double w = 1.0;
        for (int j = 0; j < n; ++j) {
            const QuadGrid& g = grids[static_cast<size_t>(j)];
            const int i = idx[static_cast<size_t>(j)];
            w *= g.total_weights[static_cast<size_t>(i)];
            r[static_cast<size_t>(j)] = std::sqrt(2.0 * g.nodes[static_cast<size_t>(i)]);
        }
        sum += w * G(r);
        int j = n - 1;
        for (; j >= 0; --j) {
            if (++idx[static_cast<size_t>(j)] < grids[static_cast<size_t>(j)].count()) break;
            idx[static_cast<size_t>(j)] = 0;
        }
        if (j < 0) break;
    }
    return scale * sum;
}

}  // namespace

std::pair<double, double> weighted_probe(int axis, const MultiIndex& m, double p,
                                         const RadialEvaluator& f, int K, int quad_points) {
    if (p <= 1.0) throw std::domain_error("weighted_probe: p must be > 1");
    const int n = m.size();
    if (axis < 0 || axis >= n) throw std::invalid_argument("weighted_probe: axis out of range");

    // weight prod r_i^{m_i(p-2)} against dmu_m: per-axis exponent m_i p / 2
    std::vector<double> M(static_cast<size_t>(n));
    for (int j = 0; j < n; ++j) M[static_cast<size_t>(j)] = 0.5 * m[j] * p;

    const LagCoeffs coeffs = analyze(f, LaguerreBasisSpec::make(m, K, quad_points));
    const LaguerreRieszImage image = riesz_laguerre(axis, coeffs);

    auto lhs_fn = [&](const std::vector<double>& r) {
        return std::pow(std::abs(image.evaluate(r)), p);
    };
    auto rhs_fn = [&](const std::vector<double>& r) { return std::pow(std::abs(f(r)), p); };

    return {weighted_integral(lhs_fn, M, quad_points),
            weighted_integral(rhs_fn, M, quad_points)};
}

}  // namespace hriesz
