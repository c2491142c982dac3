#include <doctest.h>

#include <cmath>
#include <numbers>

#include "dense_oracle.hpp"
#include "dressage/field_io.hpp"
#include "dressage/qstates.hpp"
#include "dressage/random.hpp"

using namespace dressage;

namespace {

std::shared_ptr<const DressingKernel> shared_coulomb(const Lattice& lat) {
    return std::make_shared<const DressingKernel>(coulomb_kernel(lat));
}

const std::array<std::array<Complex, 2>, 2> bell_tensor{
    {{Complex{1.0 / std::numbers::sqrt2, 0.0}, 0.0},
     {0.0, Complex{1.0 / std::numbers::sqrt2, 0.0}}}};

const std::array<std::array<Complex, 2>, 2> product_tensor{
    {{Complex{1.0, 0.0}, 0.0}, {0.0, 0.0}}};

} // namespace

TEST_CASE("qftbit construction") {
    const Lattice lat({4, 4});
    auto k = shared_coulomb(lat);

    const QFTbit zero = make_qftbit(3, 1.0, 0.0, +1, k);
    CHECK(zero.amp_zero == Complex{1.0, 0.0});

    const double inv_sqrt2 = 1.0 / std::numbers::sqrt2;
    const QFTbit equal = make_qftbit(3, inv_sqrt2, inv_sqrt2, -1, k);
    CHECK(std::norm(equal.amp_zero) + std::norm(equal.amp_one) == doctest::Approx(1.0));

    try {
        make_qftbit(3, 0.8, 0.7, +1, k);
        FAIL("expected NormalizationError");
    } catch (const NormalizationError& e) {
        CHECK(e.deficit() == doctest::Approx(0.13).epsilon(1e-12));
    }
    CHECK_THROWS_AS(make_qftbit(99, 1.0, 0.0, +1, k), SiteError);
    CHECK_THROWS_AS(make_qftbit(3, 1.0, 0.0, +2, k), ConfigError);
}

TEST_CASE("gauge action of a dressed charge") {
    const Lattice lat({8, 8, 8});
    auto k = shared_coulomb(lat);
    const QFTbit q = make_qftbit(0, 1.0, 0.0, +1, k);
    const VectorField a = random_vector(lat, 81, 1.0);
    const auto anchors = anchor_sample(lat, 512, 9);

    SUBCASE("alpha = 0 leaves the state untouched") {
        const GaugeTransform g{ScalarField(lat), 1.0};
        const GaugeActionReport rep = gauge_action(q, a, g, anchors);
        CHECK(std::abs(rep.global_phase - Complex{1.0, 0.0}) <= 1e-12);
        CHECK(rep.max_local_deviation <= 1e-12);
    }

    SUBCASE("the central contrast: dressed flat, bare spread out") {
        const GaugeTransform g{random_scalar(lat, 82, 1.0), 1.0};
        const GaugeActionReport rep = gauge_action(q, a, g, anchors);
        // dressed multiplier is one global phase...
        CHECK(rep.max_local_deviation <= 1e-10);
        CHECK(std::abs(rep.global_phase - Complex{1.0, 0.0}) <= 1e-10);
        // ...while the undressed matter phase visibly wanders
        CHECK(bare_phase_spread(g, anchors) >= 0.1);
    }

    SUBCASE("constant offset becomes the global phase") {
        GaugeSpec spec;
        spec.seed = 83;
        spec.smoothness = 1.0;
        spec.constant_offset = 0.6;
        const GaugeTransform g = make_gauge_transform(lat, spec);
        const double mean_alpha = g.alpha.mean();

        const GaugeActionReport plus = gauge_action(q, a, g, anchors);
        CHECK(std::abs(plus.global_phase - std::polar(1.0, -mean_alpha)) <= 1e-10);

        const QFTbit qm = make_qftbit(0, 1.0, 0.0, -1, k);
        const GaugeActionReport minus = gauge_action(qm, a, g, anchors);
        CHECK(std::abs(minus.global_phase - std::polar(1.0, mean_alpha)) <= 1e-10);
    }
}

TEST_CASE("overlap phase of two dressings") {
    const Lattice lat({6, 6, 6});
    const DressingKernel k1 = coulomb_kernel(lat);
    const VectorField a = random_vector(lat, 91, 0.8);

    SUBCASE("identical kernels give phase one") {
        CHECK(std::abs(overlap_phase(k1, k1, a, 0, 1.0) - Complex{1.0, 0.0}) <= 1e-12);
    }

    SUBCASE("coulomb vs coulomb + closed loop is gauge invariant") {
        VectorField combined = k1.field();
        const DressingKernel loop = path_kernel(lat, parse_path("+x,+y,-x,-y"));
        for (int mu = 0; mu < 3; ++mu) {
            auto dst = combined.component(mu);
            const auto add = loop.field().component(mu);
            for (std::size_t i = 0; i < dst.size(); ++i)
                dst[i] += add[i];
        }
        const DressingKernel k2 = load_kernel(std::move(combined), KernelKind::custom);
        const Complex base = overlap_phase(k1, k2, a, 0, 1.0);
        for (std::uint64_t seed = 0; seed < 20; ++seed) {
            const GaugeTransform g{random_scalar(lat, 400 + seed, 1.0), 1.0};
            const Complex moved = overlap_phase(k1, k2, apply_gauge_transform(a, g), 0, 1.0);
            CHECK(std::abs(moved - base) <= 1e-10);
        }
    }

    SUBCASE("unequal charge layouts are rejected") {
        const DressingKernel k2 = path_kernel(lat, parse_path("+x"));
        CHECK_THROWS_AS(overlap_phase(k1, k2, a, 0, 1.0), DivergenceMismatchError);
    }
}

TEST_CASE("entangled pairs") {
    const Lattice lat({8, 8, 8});
    auto k = shared_coulomb(lat);
    const QFTbit q1 = make_qftbit(0, 1.0, 0.0, +1, k);
    const QFTbit q2 = make_qftbit(lat.index(std::vector<int>{4, 4, 4}), 1.0, 0.0, +1, k);

    SUBCASE("validation") {
        CHECK_THROWS_AS(entangle(q1, q1, product_tensor), SiteCollisionError);
        const std::array<std::array<Complex, 2>, 2> unnormalized{
            {{Complex{1.0, 0.0}, 0.0}, {0.0, Complex{0.5, 0.0}}}};
        CHECK_THROWS_AS(entangle(q1, q2, unnormalized), NormalizationError);
    }

    SUBCASE("product tensor is the paired basis state") {
        const MultiQubitState s = entangle(q1, q2, product_tensor);
        CHECK(s.num_qubits() == 2);
        CHECK(s.amplitudes()[0] == Complex{1.0, 0.0});
        CHECK(s.amplitudes()[3] == Complex{0.0, 0.0});
    }

    SUBCASE("charge-two sector: global phase exp(-2 i mean)") {
        const MultiQubitState s = entangle(q1, q2, bell_tensor);
        const VectorField a = random_vector(lat, 101, 1.0);
        const auto offsets = anchor_sample(lat, 64, 3);
        GaugeSpec spec;
        spec.seed = 102;
        spec.smoothness = 1.0;
        spec.constant_offset = 0.45;
        const GaugeTransform g = make_gauge_transform(lat, spec);
        const GaugeActionReport rep = gauge_action(s, a, g, offsets);
        const double mean_alpha = g.alpha.mean();
        CHECK(std::abs(rep.global_phase - std::polar(1.0, -2.0 * mean_alpha)) <= 1e-10);
        CHECK(rep.max_local_deviation <= 1e-10);
    }

    SUBCASE("neutral pair strung through a shared sink is exactly invariant") {
        // +1 at x strung one step east to w, -1 at y strung one step west to
        // the same w: the compensating sinks cancel.
        const Site x = lat.index(std::vector<int>{1, 1, 1});
        const Site y = lat.index(std::vector<int>{3, 1, 1});
        auto east = std::make_shared<const DressingKernel>(path_kernel(lat, parse_path("+x")));
        auto west = std::make_shared<const DressingKernel>(path_kernel(lat, parse_path("-x")));
        const QFTbit plus = make_qftbit(x, 1.0, 0.0, +1, east);
        const QFTbit minus = make_qftbit(y, 1.0, 0.0, -1, west);
        const MultiQubitState pair = entangle(plus, minus, product_tensor);

        const VectorField a = random_vector(lat, 103, 1.0);
        const auto offsets = anchor_sample(lat, 64, 5);
        for (std::uint64_t seed = 0; seed < 10; ++seed) {
            GaugeSpec spec;
            spec.seed = 500 + seed;
            spec.smoothness = 1.0;
            spec.constant_offset = 0.3 * static_cast<double>(seed);
            const GaugeTransform g = make_gauge_transform(lat, spec);
            const GaugeActionReport rep = gauge_action(pair, a, g, offsets);
            CHECK(std::abs(rep.global_phase - Complex{1.0, 0.0}) <= 1e-10);
            CHECK(rep.max_local_deviation <= 1e-10);
        }
    }
}

TEST_CASE("entanglement entropy") {
    const Lattice lat({2, 2});
    auto k = shared_coulomb(lat);
    const QFTbit qa = make_qftbit(0, 1.0, 0.0, +1, k);
    const QFTbit qb = make_qftbit(1, 1.0, 0.0, +1, k);

    SUBCASE("bell pair carries ln 2") {
        const MultiQubitState s = entangle(qa, qb, bell_tensor);
        CHECK(std::abs(entanglement_entropy(s, 0) - std::numbers::ln2) <= 1e-10);
        CHECK(std::abs(entanglement_entropy(s, 1) - std::numbers::ln2) <= 1e-10);
    }

    SUBCASE("product states carry nothing") {
        const MultiQubitState s = entangle(qa, qb, product_tensor);
        CHECK(entanglement_entropy(s, 0) <= 1e-10);
        CHECK(entanglement_entropy(s, 1) <= 1e-10);
    }

    SUBCASE("asymmetric tensor matches the eigendecomposition oracle") {
        const std::array<std::array<Complex, 2>, 2> asym{
            {{Complex{std::sqrt(0.25), 0.0}, 0.0}, {0.0, Complex{std::sqrt(0.75), 0.0}}}};
        const MultiQubitState s = entangle(qa, qb, asym);

        // oracle: assemble the reduced matrix and diagonalize it by power
        // iteration, nothing shared with the closed form inside the library
        Complex m[2][2] = {{s.amplitudes()[0], s.amplitudes()[1]},
                           {s.amplitudes()[2], s.amplitudes()[3]}};
        Complex rho[2][2] = {};
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j)
                for (int kk = 0; kk < 2; ++kk)
                    rho[i][j] += m[i][kk] * std::conj(m[j][kk]);
        const auto eig = testing::hermitian2_eigenvalues_power(rho);
        double expected = 0.0;
        for (double lambda : eig)
            if (lambda > 1e-15)
                expected -= lambda * std::log(lambda);
        CHECK(expected == doctest::Approx(0.5623351446188083).epsilon(1e-10));
        CHECK(entanglement_entropy(s, 0) == doctest::Approx(expected).epsilon(1e-10));
    }

    SUBCASE("entropy is symmetric across the cut for random pure states") {
        for (std::uint64_t seed = 1; seed <= 20; ++seed) {
            double parts[8];
            for (int i = 0; i < 8; ++i)
                parts[i] = normal_sample(seed, 77, static_cast<std::uint64_t>(i));
            double norm = 0.0;
            for (double p : parts)
                norm += p * p;
            norm = std::sqrt(norm);
            std::array<std::array<Complex, 2>, 2> t;
            for (int i = 0; i < 2; ++i)
                for (int j = 0; j < 2; ++j)
                    t[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                        Complex{parts[2 * (2 * i + j)], parts[2 * (2 * i + j) + 1]} / norm;
            const MultiQubitState s = entangle(qa, qb, t);
            CHECK(entanglement_entropy(s, 0) ==
                  doctest::Approx(entanglement_entropy(s, 1)).epsilon(1e-10));
        }
    }

    SUBCASE("arity validation") {
        const MultiQubitState s = entangle(qa, qb, bell_tensor);
        CHECK_THROWS_AS(entanglement_entropy(s, 2), ArityError);
        const MultiQubitState single(
            {{0, +1, k}}, std::vector<Complex>{Complex{1.0, 0.0}, Complex{0.0, 0.0}});
        CHECK_THROWS_AS(entanglement_entropy(single, 0), ArityError);
    }
}

TEST_CASE("gauge action preserves normalization") {
    // multipliers are unit-modulus, so amplitude norms cannot move
    const Lattice lat({4, 4});
    auto k = shared_coulomb(lat);
    const QFTbit q = make_qftbit(0, 0.6, Complex{0.0, 0.8}, +1, k);
    const VectorField a = random_vector(lat, 111, 0.5);
    const GaugeTransform g{random_scalar(lat, 112, 0.5), 1.0};
    const GaugeActionReport rep = gauge_action(q, a, g, anchor_sample(lat, 16, 1));
    for (const auto& [site, lambda] : rep.multipliers)
        CHECK(std::abs(std::abs(lambda) - 1.0) <= 1e-12);
}
