#include "hriesz/transference.hpp"

#include <cmath>
#include <stdexcept>

#include "hriesz/rng.hpp"

namespace hriesz {

namespace {
const double kPi = 3.141592653589793238463;

bool power_of_two(int n) { return n > 0 && (n & (n - 1)) == 0; }

void check_signal(const SampledSignal& s) {
    if (!power_of_two(s.N) || s.N < 64)
        throw std::invalid_argument("SampledSignal: N must be a power of two >= 64");
    if (s.h <= 0.0) throw std::invalid_argument("SampledSignal: h must be > 0");
    if (s.domain == SignalDomain::circle && std::abs(s.h * s.N - 2.0 * kPi) > 1e-12)
        throw std::invalid_argument("SampledSignal: circle signals need h N = 2 pi");
    if (static_cast<int>(s.samples.size()) != s.N)
        throw std::invalid_argument("SampledSignal: sample count != N");
}
}  // namespace

MultiplierSpec identity_multiplier() {
    return {[](double) { return Complex(1.0, 0.0); }, "identity", true};
}

MultiplierSpec shift_multiplier(double a) {
    return {[a](double lambda) { return std::polar(1.0, a * lambda); }, "shift", true};
}

MultiplierSpec hilbert_multiplier() {
    return {[](double lambda) {
                if (lambda > 0.0) return Complex(0.0, -1.0);
                if (lambda < 0.0) return Complex(0.0, 1.0);
                return Complex(0.0, 0.0);
            },
            "hilbert",
            // continuous at every nonzero integer; the ensemble keeps its
            // spectral mass away from 0
            true};
}

SampledSignal SampledSignal::line(int N, double h) {
    SampledSignal s;
    s.domain = SignalDomain::line;
    s.N = N;
    s.h = h;
    s.samples.assign(static_cast<size_t>(N), Complex(0.0, 0.0));
    check_signal(s);
    return s;
}

SampledSignal SampledSignal::circle(int N) {
    SampledSignal s;
    s.domain = SignalDomain::circle;
    s.N = N;
    s.h = 2.0 * kPi / N;
    s.samples.assign(static_cast<size_t>(N), Complex(0.0, 0.0));
    check_signal(s);
    return s;
}

void fft_radix2(std::vector<Complex>& a, int sign) {
    const int n = static_cast<int>(a.size());
    if (!power_of_two(n)) throw std::invalid_argument("fft_radix2: length must be a power of two");
    // bit reversal
    for (int i = 1, j = 0; i < n; ++i) {
        int bit = n >> 1;
        for (; j & bit; bit >>= 1) j ^= bit;
        j ^= bit;
        if (i < j) std::swap(a[static_cast<size_t>(i)], a[static_cast<size_t>(j)]);
    }
    for (int len = 2; len <= n; len <<= 1) {
        const double ang = sign * 2.0 * kPi / len;
        const Complex wlen = std::polar(1.0, ang);
        for (int i = 0; i < n; i += len) {
            Complex w(1.0, 0.0);
            for (int k = 0; k < len / 2; ++k) {
                const Complex u = a[static_cast<size_t>(i + k)];
                const Complex v = a[static_cast<size_t>(i + k + len / 2)] * w;
                a[static_cast<size_t>(i + k)] = u + v;
                a[static_cast<size_t>(i + k + len / 2)] = u - v;
                w *= wlen;
            }
        }
    }
}

namespace {

SampledSignal apply_multiplier(const MultiplierSpec& mspec, const SampledSignal& s,
                               double bin_to_freq) {
    std::vector<Complex> a = s.samples;
    fft_radix2(a, +1);
    const int N = s.N;
    for (int b = 0; b < N; ++b) {
        const int signed_b = b < N / 2 ? b : b - N;
        a[static_cast<size_t>(b)] *= mspec.symbol(bin_to_freq * signed_b);
    }
    fft_radix2(a, -1);
    SampledSignal out = s;
    const double inv = 1.0 / N;
    for (int i = 0; i < N; ++i) out.samples[static_cast<size_t>(i)] = a[static_cast<size_t>(i)] * inv;
    return out;
}

}  // namespace

SampledSignal apply_line(const MultiplierSpec& mspec, const SampledSignal& s, EdgeStats* stats) {
    check_signal(s);
    if (s.domain != SignalDomain::line)
        throw std::invalid_argument("apply_line: expected a line signal");
    if (stats) {
        double peak = 0.0;
        for (const Complex& v : s.samples) peak = std::max(peak, std::abs(v));
        double edge = 0.0;
        const int band = std::max(1, s.N / 64);
        for (int i = 0; i < band; ++i) {
            edge = std::max(edge, std::abs(s.samples[static_cast<size_t>(i)]));
            edge = std::max(edge, std::abs(s.samples[static_cast<size_t>(s.N - 1 - i)]));
        }
        stats->edge_ratio = peak > 0.0 ? edge / peak : 0.0;
        stats->ok = stats->edge_ratio <= 1e-10;
    }
    return apply_multiplier(mspec, s, 2.0 * kPi / (s.N * s.h));
}

SampledSignal apply_circle(const MultiplierSpec& mspec, const SampledSignal& s) {
    check_signal(s);
    if (s.domain != SignalDomain::circle)
        throw std::invalid_argument("apply_circle: expected a circle signal");
    return apply_multiplier(mspec, s, 1.0);  // bins are the integers
}

double lp_norm(const std::vector<Complex>& v, double p) {
    double sum = 0.0;
    for (const Complex& x : v) sum += std::pow(std::abs(x), p);
    return std::pow(sum, 1.0 / p);
}

// ---- versioned ensemble (v1) ----------------------------------------------------
//
// member kinds rotate: 0 band-limited, 1 wrapped modulated bump, 2 chirp.
// Frequencies stay in 2..40 so the Hilbert symbol is flat across every
// spectral packet of the enveloped line members.

namespace {

struct MemberParams {
    int kind = 0;
    std::vector<int> freqs;
    std::vector<Complex> amps;
    double k0 = 8.0, sigma_b = 0.5, t0 = 0.0, beta = 1.0, phase0 = 0.0;
};

MemberParams member_params(int index, std::uint64_t seed) {
    Rng rng(seed ^ (0x9e3779b97f4a7c15ULL * static_cast<std::uint64_t>(index + 1)));
    MemberParams p;
    p.kind = index % 3;
    if (p.kind == 0) {
        for (int c = 0; c < 8; ++c) {
            const int f = rng.uniform_int(2, 40) * (rng.uniform() < 0.5 ? -1 : 1);
            p.freqs.push_back(f);
            p.amps.emplace_back(rng.gaussian(), rng.gaussian());
        }
    } else if (p.kind == 1) {
        p.k0 = rng.uniform_int(8, 24);
        p.sigma_b = rng.uniform(0.5, 1.0);
        p.t0 = rng.uniform(0.0, 2.0 * kPi);
    } else {
        p.k0 = rng.uniform_int(8, 20);
        p.beta = rng.uniform(1.0, 4.0);
        p.phase0 = rng.uniform(0.0, 2.0 * kPi);
    }
    return p;
}

Complex periodic_value(const MemberParams& p, double t) {
    switch (p.kind) {
        case 0: {
            Complex v(0.0, 0.0);
            for (size_t c = 0; c < p.freqs.size(); ++c)
                v += p.amps[c] * std::polar(1.0, p.freqs[c] * t);
            return v;
        }
        case 1: {
            Complex v(0.0, 0.0);
            for (int rep = -3; rep <= 3; ++rep) {
                const double u = t - p.t0 + 2.0 * kPi * rep;
                v += std::exp(-u * u / (2.0 * p.sigma_b * p.sigma_b)) * std::polar(1.0, p.k0 * u);
            }
            return v;
        }
        default:
            return std::polar(1.0, p.k0 * t + p.beta * std::sin(t + p.phase0));
    }
}

}  // namespace

SampledSignal ensemble_circle_member(int index, std::uint64_t seed, int N) {
    const MemberParams p = member_params(index, seed);
    SampledSignal s = SampledSignal::circle(N);
    for (int i = 0; i < N; ++i) s.samples[static_cast<size_t>(i)] = periodic_value(p, s.coord(i));
    return s;
}

SampledSignal ensemble_line_member(int index, std::uint64_t seed, int N, double window_half) {
    const MemberParams p = member_params(index, seed);
    SampledSignal s = SampledSignal::line(N, 2.0 * window_half / N);
    const double sigma = 4.0 * kPi;  // envelope; e^{-32} at the default window edge
    for (int i = 0; i < N; ++i) {
        const double t = s.coord(i);
        s.samples[static_cast<size_t>(i)] =
            periodic_value(p, t) * std::exp(-t * t / (2.0 * sigma * sigma));
    }
    return s;
}

NormComparison norm_compare(const MultiplierSpec& mspec, double p, std::uint64_t seed) {
    if (p <= 1.0) throw std::domain_error("norm_compare: p must be > 1");
    NormComparison out;
    const int members = 200;
    for (int i = 0; i < members; ++i) {
        const SampledSignal sl = ensemble_line_member(i, seed);
        const SampledSignal sc = ensemble_circle_member(i, seed);
        const double nl = lp_norm(sl.samples, p);
        const double nc = lp_norm(sc.samples, p);
        if (nl > 0.0)
            out.line_norm_est =
                std::max(out.line_norm_est, lp_norm(apply_line(mspec, sl).samples, p) / nl);
        if (nc > 0.0)
            out.circle_norm_est =
                std::max(out.circle_norm_est, lp_norm(apply_circle(mspec, sc).samples, p) / nc);
    }
    return out;
}

}  // namespace hriesz
