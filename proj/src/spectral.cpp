#include "dressage/spectral.hpp"

#include <cmath>
#include <complex>
#include <mutex>
#include <numbers>
#include <vector>

#include <fftw3.h>

namespace dressage {

namespace {

// The FFTW planner mutates global state; execution is thread-safe.
std::mutex& planner_mutex() {
    static std::mutex m;
    return m;
}

struct RealBuf {
    explicit RealBuf(std::size_t n) : p(fftw_alloc_real(n)) {}
    ~RealBuf() { fftw_free(p); }
    RealBuf(const RealBuf&) = delete;
    RealBuf& operator=(const RealBuf&) = delete;
    double* p;
};

struct ComplexBuf {
    explicit ComplexBuf(std::size_t n) : p(fftw_alloc_complex(n)) {}
    ~ComplexBuf() { fftw_free(p); }
    ComplexBuf(const ComplexBuf&) = delete;
    ComplexBuf& operator=(const ComplexBuf&) = delete;
    fftw_complex* p;
};

std::size_t half_spectrum_size(const Lattice& lat) {
    std::size_t n = 1;
    for (int d = 0; d < lat.ndim() - 1; ++d)
        n *= static_cast<std::size_t>(lat.extent(d));
    return n * static_cast<std::size_t>(lat.extent(lat.ndim() - 1) / 2 + 1);
}

/// Stencil eigenvalue lambda(k) = sum_mu 4 sin^2(pi k_mu / N_mu) per retained
/// r2c mode, in FFTW's half-spectrum layout.
std::vector<double> half_spectrum_eigenvalues(const Lattice& lat) {
    const int rank = lat.ndim();
    std::vector<int> extent(static_cast<std::size_t>(rank));
    for (int d = 0; d < rank; ++d)
        extent[static_cast<std::size_t>(d)] = lat.extent(d);
    extent[static_cast<std::size_t>(rank - 1)] = lat.extent(rank - 1) / 2 + 1;

    std::vector<std::vector<double>> axis_eig(static_cast<std::size_t>(rank));
    for (int d = 0; d < rank; ++d) {
        auto& e = axis_eig[static_cast<std::size_t>(d)];
        e.resize(static_cast<std::size_t>(extent[static_cast<std::size_t>(d)]));
        for (int k = 0; k < extent[static_cast<std::size_t>(d)]; ++k) {
            const double s = std::sin(std::numbers::pi * k / lat.extent(d));
            e[static_cast<std::size_t>(k)] = 4.0 * s * s;
        }
    }

    std::size_t total = 1;
    for (int v : extent)
        total *= static_cast<std::size_t>(v);
    std::vector<double> eig(total);
    std::vector<int> k(static_cast<std::size_t>(rank), 0);
    for (std::size_t i = 0; i < total; ++i) {
        double lam = 0.0;
        for (int d = 0; d < rank; ++d)
            lam += axis_eig[static_cast<std::size_t>(d)][static_cast<std::size_t>(
                k[static_cast<std::size_t>(d)])];
        eig[i] = lam;
        for (int d = rank - 1; d >= 0; --d) {
            auto ud = static_cast<std::size_t>(d);
            if (++k[ud] < extent[ud])
                break;
            k[ud] = 0;
        }
    }
    return eig;
}

std::vector<std::complex<double>> forward_r2c(const Lattice& lat, std::span<const double> in) {
    const std::size_t v = static_cast<std::size_t>(lat.volume());
    const std::size_t h = half_spectrum_size(lat);
    RealBuf rin(v);
    ComplexBuf cout(h);
    std::copy(in.begin(), in.end(), rin.p);

    std::vector<int> n(static_cast<std::size_t>(lat.ndim()));
    for (int d = 0; d < lat.ndim(); ++d)
        n[static_cast<std::size_t>(d)] = lat.extent(d);

    fftw_plan plan;
    {
        std::lock_guard<std::mutex> lock(planner_mutex());
        plan = fftw_plan_dft_r2c(lat.ndim(), n.data(), rin.p, cout.p, FFTW_ESTIMATE);
    }
    fftw_execute(plan);
    {
        std::lock_guard<std::mutex> lock(planner_mutex());
        fftw_destroy_plan(plan);
    }
    std::vector<std::complex<double>> spec(h);
    for (std::size_t i = 0; i < h; ++i)
        spec[i] = {cout.p[i][0], cout.p[i][1]};
    return spec;
}

ScalarField inverse_c2r(const Lattice& lat, std::span<const std::complex<double>> spec) {
    const std::size_t v = static_cast<std::size_t>(lat.volume());
    const std::size_t h = half_spectrum_size(lat);
    ComplexBuf cin(h);
    RealBuf rout(v);
    for (std::size_t i = 0; i < h; ++i) {
        cin.p[i][0] = spec[i].real();
        cin.p[i][1] = spec[i].imag();
    }

    std::vector<int> n(static_cast<std::size_t>(lat.ndim()));
    for (int d = 0; d < lat.ndim(); ++d)
        n[static_cast<std::size_t>(d)] = lat.extent(d);

    fftw_plan plan;
    {
        std::lock_guard<std::mutex> lock(planner_mutex());
        plan = fftw_plan_dft_c2r(lat.ndim(), n.data(), cin.p, rout.p, FFTW_ESTIMATE);
    }
    fftw_execute(plan);
    {
        std::lock_guard<std::mutex> lock(planner_mutex());
        fftw_destroy_plan(plan);
    }

    ScalarField out(lat);
    const double norm = 1.0 / static_cast<double>(lat.volume());
    auto dst = out.values();
    for (std::size_t i = 0; i < v; ++i)
        dst[i] = rout.p[i] * norm;
    return out;
}

} // namespace

ScalarField solve_poisson(const ScalarField& src, double neutrality_tol) {
    const Lattice& lat = src.lattice();
    src.require_finite("poisson source");
    const double mean = src.mean();
    const double scale = std::max(1.0, src.max_abs());
    if (std::abs(mean) > neutrality_tol * scale)
        throw NonNeutralSourceError("source mean " + std::to_string(mean) +
                                    " exceeds the neutrality tolerance; a net charge has no "
                                    "periodic solution");

    auto spec = forward_r2c(lat, src.values());
    const auto eig = half_spectrum_eigenvalues(lat);
    spec[0] = 0.0; // zero mode: solution fixed to zero mean
    for (std::size_t i = 1; i < spec.size(); ++i)
        spec[i] /= -eig[i];
    return inverse_c2r(lat, spec);
}

ScalarField green_function(const Lattice& lat) {
    ScalarField src(lat, -1.0 / static_cast<double>(lat.volume()));
    src[0] += 1.0;
    return solve_poisson(src);
}

ScalarField spectral_lowpass(const ScalarField& s, double smoothness) {
    if (smoothness == 0.0)
        return s;
    auto spec = forward_r2c(s.lattice(), s.values());
    const auto eig = half_spectrum_eigenvalues(s.lattice());
    for (std::size_t i = 0; i < spec.size(); ++i)
        spec[i] *= std::exp(-smoothness * eig[i]);
    return inverse_c2r(s.lattice(), spec);
}

ScalarField spectral_convolution(const VectorField& f, const VectorField& a) {
    require_same_lattice(f.lattice(), a.lattice());
    const Lattice& lat = f.lattice();
    std::vector<std::complex<double>> acc(half_spectrum_size(lat), 0.0);
    for (int mu = 0; mu < lat.ndim(); ++mu) {
        const auto fs = forward_r2c(lat, f.component(mu));
        const auto as = forward_r2c(lat, a.component(mu));
        for (std::size_t i = 0; i < acc.size(); ++i)
            acc[i] += fs[i] * as[i];
    }
    return inverse_c2r(lat, acc);
}

} // namespace dressage
