#include "hriesz/special_hermite.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <thread>

namespace hriesz {

namespace {

Complex i_power(int k) {  // i^k
    switch (((k % 4) + 4) % 4) {
        case 0: return {1.0, 0.0};
        case 1: return {0.0, 1.0};
        case 2: return {-1.0, 0.0};
        default: return {0.0, -1.0};
    }
}

Complex z_monomial(const CPoint& z, const MultiIndex& m) {
    Complex p(1.0, 0.0);
    for (int j = 0; j < m.size(); ++j)
        for (int rep = 0; rep < m[j]; ++rep) p *= z[static_cast<size_t>(j)];
    return p;
}

void parallel_rows(int rows, const std::function<void(int, int)>& work) {
    const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
    const int nthreads = static_cast<int>(std::min<unsigned>(hw, 8u));
    if (nthreads <= 1 || rows < 2 * nthreads) {
        work(0, rows);
        return;
    }
    std::vector<std::thread> pool;
    const int chunk = (rows + nthreads - 1) / nthreads;
    for (int t = 0; t < nthreads; ++t) {
        const int lo = t * chunk;
        const int hi = std::min(rows, lo + chunk);
        if (lo >= hi) break;
        pool.emplace_back(work, lo, hi);
    }
    for (auto& th : pool) th.join();
}

}  // namespace

Complex phi_special(const MultiIndex& alpha, const MultiIndex& m, const CPoint& z) {
    const int n = alpha.size();
    if (m.size() != n || static_cast<int>(z.size()) != n)
        throw std::invalid_argument("phi_special: alpha, m, z lengths differ");
    const int mtot = m.order();
    double lognorm = -0.5 * n * std::log(2.0 * 3.141592653589793238463) -
                     0.5 * mtot * std::log(2.0);
    for (int j = 0; j < n; ++j)
        lognorm += 0.5 * (log_factorial(alpha[j]) - log_factorial(alpha[j] + m[j]));
    double radial = 1.0;
    for (int j = 0; j < n; ++j)
        radial *= laguerre_fn(alpha[j], m[j], 1.0, std::abs(z[static_cast<size_t>(j)]));
    return std::exp(lognorm) * i_power(-mtot) * z_monomial(z, m) * radial;
}

Complex coeff_reduce(const MHomogeneous& g, const MultiIndex& alpha, int quad_points) {
    const int n = g.m.size();
    if (alpha.size() != n) throw std::invalid_argument("coeff_reduce: index length mismatch");
    const auto grids = grids_for(g.m, quad_points);
    auto basis = [&](const std::vector<double>& r) { return psi(alpha, g.m, r); };
    const double radial = inner_mu(g.profile, basis, g.m, grids);
    return std::pow(2.0 * 3.141592653589793238463, 0.5 * n) * i_power(g.m.order()) * radial;
}

TZbarSeries::TZbarSeries(int axis, const MHomogeneous& g, int K, int quad_points)
    : axis_(axis), m_(g.m) {
    if (axis < 0 || axis >= g.m.size())
        throw std::invalid_argument("TZbarSeries: axis out of range");
    coeffs_ = analyze(g.profile, LaguerreBasisSpec::make(g.m, K, quad_points));
}

TZbarSeries::TZbarSeries(int axis, const LagCoeffs& coeffs, const MultiIndex& m)
    : axis_(axis), m_(m), coeffs_(coeffs) {
    if (axis < 0 || axis >= m.size())
        throw std::invalid_argument("TZbarSeries: axis out of range");
}

Complex TZbarSeries::operator()(const CPoint& z) const {
    const int n = m_.size();
    if (static_cast<int>(z.size()) != n)
        throw std::invalid_argument("TZbarSeries: point dimension mismatch");
    // (g, Phi_{alpha,alpha+m}) = (2 pi)^{n/2} i^{|m|} (f, Psi_alpha^m)
    const Complex coeff_scale =
        std::pow(2.0 * 3.141592653589793238463, 0.5 * n) * i_power(m_.order());
    const MultiIndex m_shift = m_.plus(axis_);
    Complex sum(0.0, 0.0);
    for (const auto& [alpha, c] : coeffs_.data) {
        if (alpha[axis_] == 0 || c == 0.0) continue;
        const double factor =
            std::sqrt(2.0 * alpha[axis_]) / std::sqrt(2.0 * alpha.order() + n);
        sum += factor * (coeff_scale * c) * phi_special(alpha.minus(axis_), m_shift, z);
    }
    return kLoweringPhase * sum;
}

Complex t_zbar(int axis, const MHomogeneous& g, const CPoint& z, int K, int quad_points) {
    return TZbarSeries(axis, g, K, quad_points)(z);
}

double intertwine_defect(int axis, const MHomogeneous& g, const std::vector<CPoint>& samples,
                         int K, int quad_points) {
    const int n = g.m.size();
    if (axis < 0 || axis >= n) throw std::invalid_argument("intertwine_defect: axis out of range");
    for (const auto& z : samples) {
        if (static_cast<int>(z.size()) != n)
            throw std::invalid_argument("intertwine_defect: sample dimension mismatch");
        if (z[static_cast<size_t>(axis)] == Complex(0.0, 0.0))
            throw std::domain_error("intertwine_defect: sample with z_j = 0 rejected");
    }

    const LagCoeffs coeffs = analyze(g.profile, LaguerreBasisSpec::make(g.m, K, quad_points));
    const TZbarSeries series(axis, coeffs, g.m);
    const LaguerreRieszImage image = riesz_laguerre(axis, coeffs);

    double max_defect = 0.0;
    double max_left = 0.0;
    std::vector<double> r(static_cast<size_t>(n));
    for (const auto& z : samples) {
        for (int j = 0; j < n; ++j) r[static_cast<size_t>(j)] = std::abs(z[static_cast<size_t>(j)]);
        const Complex left = series(z);
        const Complex zj = z[static_cast<size_t>(axis)];
        const Complex right =
            kIntertwinePhase * z_monomial(z, g.m) * (zj / std::abs(zj)) * image.evaluate(r);
        max_defect = std::max(max_defect, std::abs(left - right));
        max_left = std::max(max_left, std::abs(left));
    }
    return max_left > 1e-12 ? max_defect / max_left : max_defect;
}

// ---- plane grid ----------------------------------------------------------------

PlaneGridFn::PlaneGridFn(double extent, int points) : R(extent), N(points) {
    if (extent <= 0.0) throw std::invalid_argument("PlaneGridFn: extent must be > 0");
    if (points < 32) throw std::invalid_argument("PlaneGridFn: need at least 32 points per axis");
    vals.assign(static_cast<size_t>(N) * N, Complex(0.0, 0.0));
}

PlaneGridFn PlaneGridFn::sample(double extent, int points,
                                const std::function<Complex(Complex)>& f) {
    PlaneGridFn g(extent, points);
    for (int iy = 0; iy < points; ++iy)
        for (int ix = 0; ix < points; ++ix)
            g.at(ix, iy) = f(Complex(g.coord(ix), g.coord(iy)));
    return g;
}

double PlaneGridFn::max_abs() const {
    double m = 0.0;
    for (const Complex& v : vals) m = std::max(m, std::abs(v));
    return m;
}

double PlaneGridFn::edge_ratio() const {
    double edge = 0.0;
    for (int i = 0; i < N; ++i) {
        edge = std::max({edge, std::abs(at(i, 0)), std::abs(at(i, N - 1)), std::abs(at(0, i)),
                         std::abs(at(N - 1, i))});
    }
    const double peak = max_abs();
    return peak > 0.0 ? edge / peak : 0.0;
}

double PlaneGridFn::sup_distance(const PlaneGridFn& other) const {
    double m = 0.0;
    for (size_t i = 0; i < vals.size(); ++i) m = std::max(m, std::abs(vals[i] - other.vals[i]));
    return m;
}

PlaneGridFn& PlaneGridFn::add_scaled(const PlaneGridFn& other, Complex factor) {
    for (size_t i = 0; i < vals.size(); ++i) vals[i] += factor * other.vals[i];
    return *this;
}

PlaneGridFn twisted_conv(const PlaneGridFn& F, const PlaneGridFn& G, TwistedConvStats* stats) {
    if (F.N != G.N || F.R != G.R)
        throw std::invalid_argument("twisted_conv: grids must match");
    const int N = F.N;
    const double h = F.spacing();

    if (stats) {
        stats->edge_ratio_f = F.edge_ratio();
        stats->edge_ratio_g = G.edge_ratio();
        stats->decay_ok = stats->edge_ratio_f * stats->edge_ratio_g <= 1e-12;
    }

    // phase(z, w) = e^{(i/2)(Y_zy X_wx - X_zx Y_wy)} = P[zy][wx] conj(P[zx][wy])
    std::vector<Complex> P(static_cast<size_t>(N) * N);
    for (int a = 0; a < N; ++a)
        for (int b = 0; b < N; ++b)
            P[static_cast<size_t>(a) * N + b] = std::polar(1.0, 0.5 * F.coord(a) * F.coord(b));

    PlaneGridFn out(F.R, N);
    const double cell = h * h;
    const int half = N / 2;

    parallel_rows(N, [&](int row_lo, int row_hi) {
        std::vector<Complex> C(static_cast<size_t>(N) * N);
        for (int zy = row_lo; zy < row_hi; ++zy) {
            const Complex* Pzy = &P[static_cast<size_t>(zy) * N];
            for (int wy = 0; wy < N; ++wy) {
                const Complex* Grow = &G.vals[static_cast<size_t>(wy) * N];
                Complex* Crow = &C[static_cast<size_t>(wy) * N];
                for (int wx = 0; wx < N; ++wx) Crow[wx] = Grow[wx] * Pzy[wx];
            }
            for (int zx = 0; zx < N; ++zx) {
                const Complex* Pzx = &P[static_cast<size_t>(zx) * N];
                Complex acc(0.0, 0.0);
                for (int wy = 0; wy < N; ++wy) {
                    const int iy = zy - wy + half;
                    if (iy < 0 || iy >= N) continue;
                    const Complex* Frow = &F.vals[static_cast<size_t>(iy) * N];
                    const Complex* Crow = &C[static_cast<size_t>(wy) * N];
                    const int wx_lo = std::max(0, zx - half + 1);
                    const int wx_hi = std::min(N - 1, zx + half);
                    Complex inner(0.0, 0.0);
                    for (int wx = wx_lo; wx <= wx_hi; ++wx)
                        inner += Frow[zx - wx + half] * Crow[wx];
                    acc += std::conj(Pzx[wy]) * inner;
                }
                out.at(zx, zy) = acc * cell;
            }
        }
    });
    return out;
}

PlaneGridFn project_k(const PlaneGridFn& F, int k, TwistedConvStats* stats) {
    if (k < 0) throw std::invalid_argument("project_k: k must be >= 0");
    const PlaneGridFn phi = PlaneGridFn::sample(F.R, F.N, [k](Complex z) {
        return Complex(laguerre_fn(k, 0.0, 1.0, std::abs(z)), 0.0);
    });
    PlaneGridFn out = twisted_conv(F, phi, stats);
    const double scale = 1.0 / (2.0 * 3.141592653589793238463);
    for (Complex& v : out.vals) v *= scale;
    return out;
}

KernelSeriesResult kernel_km(int pdeg, int qdeg, int n, double r, int K) {
    if (pdeg < 0 || qdeg < 0 || pdeg + qdeg < 1)
        throw std::invalid_argument("kernel_km: requires pdeg + qdeg >= 1");
    if (n < 1) throw std::invalid_argument("kernel_km: n must be >= 1");
    if (r < 0.0) throw std::invalid_argument("kernel_km: r must be >= 0");
    if (K < 1) throw std::invalid_argument("kernel_km: K must be >= 1");

    const double m = pdeg + qdeg;
    const double nu = n + pdeg + qdeg - 1.0;
    const double x = 0.5 * r * r;
    const double damp = std::exp(-0.5 * x);

    // recurrence on the damped values L_k^nu(x) e^{-x/2} directly
    KernelSeriesResult res;
    const int cap = std::max(4 * K, 1000);
    double prev = 0.0;
    double cur = damp;  // k = 0
    double sum = 0.0;
    for (int k = 0; k < cap; ++k) {
        const double term = std::pow(2.0 * k + 2.0 * pdeg + n, -0.5 * m) * cur;
        if (!std::isfinite(term)) break;  // reported as non-convergence
        sum += term;
        res.terms = k + 1;
        res.last_term = term;
        res.value = sum;
        if (k + 1 >= K && std::abs(term) < 1e-12 * std::abs(sum)) {
            res.converged = true;
            break;
        }
        const double next = ((2.0 * k + nu + 1.0 - x) * cur - (k + nu) * prev) / (k + 1.0);
        prev = cur;
        cur = next;
    }
    return res;
}

}  // namespace hriesz
