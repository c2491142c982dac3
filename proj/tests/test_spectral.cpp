#include <doctest.h>

#include <cmath>

#include "dense_oracle.hpp"
#include "dressage/calculus.hpp"
#include "dressage/random.hpp"
#include "dressage/spectral.hpp"

using namespace dressage;

TEST_CASE("two-site chain solves to the hand value") {
    const Lattice lat({2});
    const ScalarField src(lat, std::vector<double>{0.5, -0.5});

    const ScalarField g = solve_poisson(src);
    CHECK(g[0] == doctest::Approx(-0.125).epsilon(1e-14));
    CHECK(g[1] == doctest::Approx(0.125).epsilon(1e-14));

    const ScalarField dense = testing::dense_poisson_solve(src);
    CHECK(dense[0] == doctest::Approx(-0.125).epsilon(1e-14));
    CHECK(dense[1] == doctest::Approx(0.125).epsilon(1e-14));
}

TEST_CASE("zero source gives the zero solution") {
    const ScalarField zero(Lattice({4, 4}));
    CHECK(solve_poisson(zero).max_abs() == 0.0);
}

TEST_CASE("net charge is rejected") {
    const Lattice lat({4, 4});
    ScalarField src(lat, 0.25);
    CHECK_THROWS_AS(solve_poisson(src), NonNeutralSourceError);
}

TEST_CASE("neutralized delta source round-trips through the forward operator") {
    const Lattice lat({8, 8, 8});
    ScalarField src(lat, -1.0 / 512.0);
    src[0] += 1.0;
    const ScalarField g = solve_poisson(src);
    const ScalarField back = laplacian(g);
    double worst = 0.0;
    for (Site s = 0; s < lat.volume(); ++s)
        worst = std::max(worst, std::abs(back[s] - src[s]));
    CHECK(worst <= 1e-10);
}

TEST_CASE("green function has zero mean and is even") {
    const Lattice lat({5, 5, 5});
    const ScalarField g = green_function(lat);
    CHECK(std::abs(g.mean()) < 1e-15);
    for (Site s = 0; s < lat.volume(); ++s) {
        const Site reflected = lat.subtract(0, s);
        CHECK(g[reflected] == doctest::Approx(g[s]).epsilon(1e-12));
    }
}

namespace {

void check_against_dense(const Lattice& lat, std::uint64_t seed) {
    const ScalarField src = random_scalar(lat, seed, 0.0);
    const ScalarField spectral = solve_poisson(src);
    const ScalarField dense = testing::dense_poisson_solve(src);
    double worst = 0.0;
    for (Site s = 0; s < lat.volume(); ++s)
        worst = std::max(worst, std::abs(spectral[s] - dense[s]));
    INFO("lattice rank ", lat.ndim(), " volume ", lat.volume());
    CHECK(worst <= 1e-10);
}

} // namespace

TEST_CASE("spectral solution matches the dense solve on every lattice up to V=64") {
    std::uint64_t seed = 1;
    for (int n = 2; n <= 64; ++n)
        check_against_dense(Lattice({n}), seed++);
    for (int a = 2; a <= 32; ++a)
        for (int b = 2; a * b <= 64; ++b)
            check_against_dense(Lattice({a, b}), seed++);
    for (int a = 2; a <= 16; ++a)
        for (int b = 2; a * b <= 32; ++b)
            for (int c = 2; a * b * c <= 64; ++c)
                check_against_dense(Lattice({a, b, c}), seed++);
    for (int a = 2; a <= 8; ++a)
        for (int b = 2; a * b <= 16; ++b)
            for (int c = 2; a * b * c <= 32; ++c)
                for (int d = 2; a * b * c * d <= 64; ++d)
                    check_against_dense(Lattice({a, b, c, d}), seed++);
}

TEST_CASE("lowpass preserves the mean and damps amplitude") {
    const Lattice lat({8, 8});
    const ScalarField s = random_scalar(lat, 17, 0.0);
    const ScalarField filtered = spectral_lowpass(s, 1.5);
    CHECK(std::abs(filtered.mean()) < 1e-14);
    CHECK(filtered.max_abs() < s.max_abs());
}
