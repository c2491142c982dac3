#include "dressage/random.hpp"

#include <cmath>
#include <numbers>

#include "dressage/parallel.hpp"
#include "dressage/spectral.hpp"
#include "dressage/summation.hpp"

namespace dressage {

namespace {

// splitmix64 finalizer; full avalanche, so (seed, stream, counter) tuples
// index into decorrelated streams without any sequential state.
std::uint64_t mix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

std::uint64_t stream_word(std::uint64_t seed, std::uint64_t stream, std::uint64_t counter) {
    return mix64(mix64(seed ^ mix64(stream + 0x632BE59BD9B4E019ULL)) + counter);
}

ScalarField white_noise(const Lattice& lat, std::uint64_t seed, std::uint64_t stream) {
    ScalarField out(lat);
    auto dst = out.values();
    parallel_for_blocks(lat.volume(), [&](Site lo, Site hi) {
        for (Site s = lo; s < hi; ++s)
            dst[static_cast<std::size_t>(s)] =
                normal_sample(seed, stream, static_cast<std::uint64_t>(s));
    });
    return out;
}

void subtract_mean(ScalarField& f) {
    const double m = f.mean();
    auto vals = f.values();
    parallel_for_blocks(f.size(), [&](Site lo, Site hi) {
        for (Site s = lo; s < hi; ++s)
            vals[static_cast<std::size_t>(s)] -= m;
    });
}

} // namespace

double normal_sample(std::uint64_t seed, std::uint64_t stream, std::uint64_t counter) {
    const std::uint64_t a = stream_word(seed, stream, 2 * counter);
    const std::uint64_t b = stream_word(seed, stream, 2 * counter + 1);
    // u1 in (0,1] keeps the log finite.
    const double u1 = (static_cast<double>(a >> 11) + 1.0) * 0x1p-53;
    const double u2 = static_cast<double>(b >> 11) * 0x1p-53;
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

ScalarField random_scalar(const Lattice& lat, std::uint64_t seed, double smoothness) {
    ScalarField noise = white_noise(lat, seed, 0);
    ScalarField out = smoothness > 0.0 ? spectral_lowpass(noise, smoothness) : std::move(noise);
    subtract_mean(out);
    return out;
}

VectorField random_vector(const Lattice& lat, std::uint64_t seed, double smoothness) {
    VectorField out(lat);
    for (int mu = 0; mu < lat.ndim(); ++mu) {
        ScalarField noise = white_noise(lat, seed, static_cast<std::uint64_t>(mu) + 1);
        ScalarField comp =
            smoothness > 0.0 ? spectral_lowpass(noise, smoothness) : std::move(noise);
        subtract_mean(comp);
        auto src = comp.values();
        auto dst = out.component(mu);
        std::copy(src.begin(), src.end(), dst.begin());
    }
    return out;
}

} // namespace dressage
