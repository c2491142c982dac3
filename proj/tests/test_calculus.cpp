#include <doctest.h>

#include <cmath>

#include "dressage/calculus.hpp"
#include "dressage/random.hpp"

using namespace dressage;

TEST_CASE("first differences on a four-site line") {
    const Lattice lat({4});
    const ScalarField s(lat, std::vector<double>{0.0, 1.0, 0.0, 0.0});

    const ScalarField fwd = forward_diff(s, 0);
    CHECK(fwd[0] == 1.0);
    CHECK(fwd[1] == -1.0);
    CHECK(fwd[2] == 0.0);
    CHECK(fwd[3] == 0.0);

    const ScalarField bwd = backward_diff(s, 0);
    CHECK(bwd[0] == 0.0);
    CHECK(bwd[1] == 1.0);
    CHECK(bwd[2] == -1.0);
    CHECK(bwd[3] == 0.0);

    CHECK_THROWS_AS(forward_diff(s, 1), DirectionError);
}

TEST_CASE("constants are annihilated") {
    const Lattice lat({5, 3});
    const ScalarField c(lat, 2.75);
    CHECK(forward_diff(c, 0).max_abs() == 0.0);
    CHECK(backward_diff(c, 1).max_abs() == 0.0);
}

TEST_CASE("telescoping: differences sum to zero over the torus") {
    const Lattice lat({8, 8});
    for (std::uint64_t seed = 0; seed < 4; ++seed) {
        const ScalarField s = random_scalar(lat, seed, 0.0);
        for (int mu = 0; mu < 2; ++mu)
            CHECK(std::abs(forward_diff(s, mu).sum()) < 1e-12 * s.max_abs() * 64);
        const VectorField v = random_vector(lat, seed, 0.0);
        CHECK(std::abs(divergence_fwd(v).sum()) < 1e-12 * v.max_abs() * 64);
    }
}

TEST_CASE("forward then shift equals backward") {
    const Lattice lat({4, 4});
    for (std::uint64_t seed = 0; seed < 8; ++seed) {
        const ScalarField s = random_scalar(lat, seed, 0.0);
        for (int mu = 0; mu < 2; ++mu) {
            const ScalarField f = forward_diff(s, mu);
            const ScalarField b = backward_diff(s, mu);
            for (Site z = 0; z < lat.volume(); ++z)
                CHECK(f[lat.neighbor(z, mu, -1)] == b[z]);
        }
    }
}

TEST_CASE("divergence of a backward gradient is the symmetric stencil") {
    const Lattice lat({6, 6, 6});
    const ScalarField s = random_scalar(lat, 99, 0.0);
    const ScalarField lap = divergence_fwd(gradient_bwd(s));

    // independent route: accumulate the (2D+1)-point stencil directly
    for (Site z = 0; z < lat.volume(); ++z) {
        double direct = 0.0;
        for (int mu = 0; mu < 3; ++mu)
            direct += s[lat.neighbor(z, mu, +1)] + s[lat.neighbor(z, mu, -1)] - 2.0 * s[z];
        CHECK(lap[z] == doctest::Approx(direct).epsilon(1e-12));
    }
}

TEST_CASE("divergence of the zero field is zero") {
    const Lattice lat({4, 4});
    CHECK(divergence_fwd(VectorField(lat)).max_abs() == 0.0);
    CHECK(divergence_bwd(VectorField(lat)).max_abs() == 0.0);
}

TEST_CASE("summation by parts residual") {
    const Lattice lat({8, 8, 8});

    SUBCASE("constant s") {
        const VectorField v = random_vector(lat, 5, 0.0);
        const ScalarField s(lat, 3.5);
        // grad+ of a constant vanishes and div- v telescopes against it
        CHECK(sum_by_parts_residual(v, s) < 1e-12 * v.norm2() * s.norm2());
    }

    SUBCASE("zero v") {
        const ScalarField s = random_scalar(lat, 6, 0.0);
        CHECK(sum_by_parts_residual(VectorField(lat), s) == 0.0);
    }

    SUBCASE("random pairs stay within the compensated bound") {
        for (std::uint64_t seed = 0; seed < 100; ++seed) {
            const VectorField v = random_vector(lat, 1000 + seed, 0.0);
            const ScalarField s = random_scalar(lat, 2000 + seed, 0.0);
            CHECK(sum_by_parts_residual(v, s) <= 1e-12 * v.norm2() * s.norm2());
        }
    }

    SUBCASE("mismatched lattices are rejected") {
        const VectorField v(Lattice({4, 4}));
        const ScalarField s(Lattice({4, 8}));
        CHECK_THROWS_AS(sum_by_parts_residual(v, s), LatticeMismatchError);
    }
}
