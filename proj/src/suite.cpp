#include "dressage/suite.hpp"

#include <chrono>
#include <cmath>
#include <ctime>
#include <numbers>

#include "dressage/calculus.hpp"
#include "dressage/field_io.hpp"
#include "dressage/observables.hpp"
#include "dressage/random.hpp"
#include "dressage/spectral.hpp"

namespace dressage {

namespace {

std::string dims_label(const std::vector<int>& dims) {
    std::string out;
    for (std::size_t i = 0; i < dims.size(); ++i) {
        if (i)
            out += "x";
        out += std::to_string(dims[i]);
    }
    return out;
}

std::string utc_timestamp() {
    const auto now = std::chrono::system_clock::now();
    const std::time_t t = std::chrono::system_clock::to_time_t(now);
    std::tm tm{};
    gmtime_r(&t, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

// Decorrelated seed streams for the different randomized inputs of one run.
std::uint64_t substream(std::uint64_t seed, std::uint64_t salt) {
    return seed * 0x9E3779B97F4A7C15ULL + salt;
}

} // namespace

CheckResult check_at_most(std::string name, double measured, double bound) {
    return {std::move(name), measured, bound, false, measured <= bound};
}

CheckResult check_at_least(std::string name, double measured, double bound) {
    return {std::move(name), measured, bound, true, measured >= bound};
}

bool Report::overall_pass() const {
    for (const CheckResult& c : checks) {
        if (!c.pass)
            return false;
    }
    return true;
}

nlohmann::json Report::to_json(bool include_timestamp) const {
    nlohmann::json doc;
    doc["schema"] = "dressage-report-1";
    if (include_timestamp)
        doc["timestamp"] = utc_timestamp();
    doc["config"] = config;
    auto& arr = doc["checks"] = nlohmann::json::array();
    for (const CheckResult& c : checks) {
        arr.push_back({{"name", c.name},
                       {"measured", c.measured},
                       {"tolerance", c.bound},
                       {"direction", c.at_least ? "at_least" : "at_most"},
                       {"pass", c.pass}});
    }
    doc["overall_pass"] = overall_pass();
    return doc;
}

std::vector<CheckResult> run_gauge_contrast(const DressingKernel& kernel,
                                            const GaugeTestConfig& cfg) {
    if (cfg.transforms < 1)
        throw ConfigError("at least one gauge transform is required");
    const Lattice& lat = kernel.lattice();
    auto kptr = std::make_shared<const DressingKernel>(kernel);
    const QFTbit qubit = make_qftbit(0, 1.0, 0.0, cfg.charge_sign, kptr);
    const auto anchors = anchor_sample(lat, cfg.anchors, substream(cfg.seed, 11));

    double worst_deviation = 0.0;
    double min_spread = std::numeric_limits<double>::infinity();
    double worst_law = 0.0;
    double worst_unity = 0.0;

    for (int i = 0; i < cfg.transforms; ++i) {
        GaugeSpec spec;
        spec.seed = substream(cfg.seed, 100) + static_cast<std::uint64_t>(i);
        spec.smoothness = cfg.smoothness;
        spec.constant_offset = cfg.constant_offset;
        spec.coupling = cfg.coupling;
        const GaugeTransform g = make_gauge_transform(lat, spec);
        const VectorField a =
            random_vector(lat, substream(cfg.seed, 200) + static_cast<std::uint64_t>(i),
                          cfg.smoothness);

        const GaugeActionReport rep = gauge_action(qubit, a, g, anchors);
        worst_deviation = std::max(worst_deviation, rep.max_local_deviation);
        min_spread = std::min(min_spread, bare_phase_spread(g, anchors));
        const double mean_alpha = g.alpha.mean();
        const Complex expected =
            std::polar(1.0, -static_cast<double>(cfg.charge_sign) * mean_alpha);
        worst_law = std::max(worst_law, std::abs(rep.global_phase - expected));
        worst_unity = std::max(worst_unity, std::abs(rep.global_phase - Complex{1.0, 0.0}));
    }

    std::vector<CheckResult> checks;
    checks.push_back(
        check_at_most("invariance.dressed_max_local_deviation", worst_deviation, cfg.tolerance));
    checks.push_back(
        check_at_least("invariance.bare_phase_spread_min", min_spread, cfg.bare_spread_min));
    checks.push_back(check_at_most("invariance.global_phase_law", worst_law, cfg.tolerance));
    if (cfg.constant_offset == 0.0)
        checks.push_back(
            check_at_most("invariance.zero_mean_global_phase", worst_unity, cfg.tolerance));
    return checks;
}

std::vector<CheckResult> run_neutral_pair_checks(const Lattice& lat,
                                                 std::span<const PathStep> steps,
                                                 const GaugeTestConfig& cfg) {
    if (cfg.transforms < 1)
        throw ConfigError("at least one gauge transform is required");
    if (steps.size() < 2)
        throw ConfigError("a neutral pair needs a string of at least two steps, so both "
                          "halves can meet at the shared sink");

    // Split the string at its midpoint w: the positive charge at one end is
    // strung to w, the negative charge at the other end is strung back to w.
    // Both compensating sinks land on w and cancel, so the pair is exactly
    // gauge invariant.
    const std::size_t half = steps.size() / 2;
    std::vector<PathStep> first(steps.begin(), steps.begin() + static_cast<std::ptrdiff_t>(half));
    std::vector<PathStep> second;
    for (std::size_t i = steps.size(); i > half; --i) {
        const PathStep& s = steps[i - 1];
        second.push_back({s.axis, -s.sign});
    }

    Site x1 = 0;
    Site x2 = 0;
    for (const PathStep& s : steps)
        x2 = lat.neighbor(x2, s.axis, s.sign);
    if (x1 == x2)
        throw ConfigError("the string is closed; the pair would sit on one site");

    auto k1 = std::make_shared<const DressingKernel>(path_kernel(lat, first));
    auto k2 = std::make_shared<const DressingKernel>(path_kernel(lat, second));
    // second is anchored at x2: shift is implicit since kernels live on
    // relative coordinates.
    const QFTbit q1 = make_qftbit(x1, 1.0, 0.0, +1, k1);
    const QFTbit q2 = make_qftbit(x2, 1.0, 0.0, -1, k2);
    const std::array<std::array<Complex, 2>, 2> product{{{Complex{1.0, 0.0}, 0.0}, {0.0, 0.0}}};
    const MultiQubitState pair = entangle(q1, q2, product);

    const auto offsets = anchor_sample(lat, cfg.anchors, substream(cfg.seed, 13));
    double worst = 0.0;
    for (int i = 0; i < cfg.transforms; ++i) {
        GaugeSpec spec;
        spec.seed = substream(cfg.seed, 300) + static_cast<std::uint64_t>(i);
        spec.smoothness = cfg.smoothness;
        spec.constant_offset = cfg.constant_offset;
        spec.coupling = cfg.coupling;
        const GaugeTransform g = make_gauge_transform(lat, spec);
        const VectorField a =
            random_vector(lat, substream(cfg.seed, 400) + static_cast<std::uint64_t>(i),
                          cfg.smoothness);
        const GaugeActionReport rep = gauge_action(pair, a, g, offsets);
        worst = std::max(worst, rep.max_local_deviation);
        worst = std::max(worst, std::abs(rep.global_phase - Complex{1.0, 0.0}));
    }
    return {check_at_most("phase_law.neutral_pair", worst, cfg.tolerance)};
}

Report run_full_suite(const SuiteConfig& cfg) {
    Report report;
    report.config = {{"seed", cfg.seed},
                     {"coupling", cfg.coupling},
                     {"smoothness", cfg.smoothness},
                     {"contrast_transforms", cfg.contrast_transforms},
                     {"phase_law_transforms", cfg.phase_law_transforms},
                     {"invariant_seeds", cfg.invariant_seeds},
                     {"sbp_pairs", cfg.sbp_pairs},
                     {"tolerance", cfg.tolerance},
                     {"include_large", cfg.include_large}};

    // --- kernel constraint: hand values on the two-site chain ---
    {
        const Lattice lat({2});
        const DressingKernel k = coulomb_kernel(lat);
        const double measured = std::max(std::abs(k.field().at(0, 0) + 0.25),
                                         std::abs(k.field().at(0, 1) - 0.25));
        report.checks.push_back(check_at_most("constraint.hand_values_1d_n2", measured, 1e-12));
    }

    // --- kernel constraint across lattices ---
    {
        std::vector<std::vector<int>> grids = {{2}, {4}, {8}, {8, 8}, {8, 8, 8}};
        if (cfg.include_large) {
            grids.push_back({16, 16, 16});
            grids.push_back({32, 32, 32});
        }
        for (const auto& dims : grids) {
            const DressingKernel k = coulomb_kernel(Lattice(dims));
            report.checks.push_back(check_at_most("constraint.coulomb." + dims_label(dims),
                                                  k.divergence_residual(), 1e-10));
        }
    }

    const Lattice lat8({8, 8, 8});

    // --- invariance contrast ---
    {
        GaugeTestConfig gc;
        gc.seed = substream(cfg.seed, 1);
        gc.transforms = cfg.contrast_transforms;
        gc.smoothness = cfg.smoothness;
        gc.coupling = cfg.coupling;
        gc.tolerance = cfg.tolerance;
        const DressingKernel k = coulomb_kernel(lat8);
        for (CheckResult& c : run_gauge_contrast(k, gc))
            report.checks.push_back(std::move(c));
    }

    // --- global phase law per charge sector ---
    {
        auto kptr = std::make_shared<const DressingKernel>(coulomb_kernel(lat8));
        const auto anchors = anchor_sample(lat8, 64, substream(cfg.seed, 21));
        double worst_plus = 0.0;
        double worst_minus = 0.0;
        double worst_pair = 0.0;
        const double inv_sqrt2 = 1.0 / std::numbers::sqrt2;
        for (int i = 0; i < cfg.phase_law_transforms; ++i) {
            GaugeSpec spec;
            spec.seed = substream(cfg.seed, 500) + static_cast<std::uint64_t>(i);
            spec.smoothness = cfg.smoothness;
            spec.constant_offset = 0.25 + 0.07 * i;
            spec.coupling = cfg.coupling;
            const GaugeTransform g = make_gauge_transform(lat8, spec);
            const VectorField a = random_vector(
                lat8, substream(cfg.seed, 600) + static_cast<std::uint64_t>(i), cfg.smoothness);
            const double mean_alpha = g.alpha.mean();

            const QFTbit plus = make_qftbit(0, 1.0, 0.0, +1, kptr);
            const QFTbit minus = make_qftbit(0, 1.0, 0.0, -1, kptr);
            const GaugeActionReport rp = gauge_action(plus, a, g, anchors);
            const GaugeActionReport rm = gauge_action(minus, a, g, anchors);
            worst_plus = std::max(
                worst_plus, std::abs(rp.global_phase - std::polar(1.0, -mean_alpha)));
            worst_minus = std::max(
                worst_minus, std::abs(rm.global_phase - std::polar(1.0, mean_alpha)));

            const QFTbit at_y = make_qftbit(lat8.index(std::vector<int>{4, 2, 6}), 1.0, 0.0, +1,
                                            kptr);
            const std::array<std::array<Complex, 2>, 2> bell{
                {{Complex{inv_sqrt2, 0.0}, 0.0}, {0.0, Complex{inv_sqrt2, 0.0}}}};
            const MultiQubitState pair = entangle(plus, at_y, bell);
            const GaugeActionReport rr = gauge_action(pair, a, g, anchors);
            worst_pair = std::max(
                worst_pair, std::abs(rr.global_phase - std::polar(1.0, -2.0 * mean_alpha)));
        }
        report.checks.push_back(
            check_at_most("phase_law.charge_plus", worst_plus, cfg.tolerance));
        report.checks.push_back(
            check_at_most("phase_law.charge_minus", worst_minus, cfg.tolerance));
        report.checks.push_back(
            check_at_most("phase_law.pair_charge_two", worst_pair, cfg.tolerance));
    }

    // --- neutral path-dressed pair ---
    {
        GaugeTestConfig gc;
        gc.seed = substream(cfg.seed, 2);
        gc.transforms = cfg.phase_law_transforms;
        gc.smoothness = cfg.smoothness;
        gc.coupling = cfg.coupling;
        gc.constant_offset = 0.4;
        gc.anchors = 64;
        gc.tolerance = cfg.tolerance;
        const std::vector<PathStep> steps = parse_path("+x,+x");
        for (CheckResult& c : run_neutral_pair_checks(lat8, steps, gc))
            report.checks.push_back(std::move(c));
    }

    // --- summation by parts ---
    {
        double worst = 0.0;
        for (int i = 0; i < cfg.sbp_pairs; ++i) {
            const VectorField v =
                random_vector(lat8, substream(cfg.seed, 700) + static_cast<std::uint64_t>(i), 0.0);
            const ScalarField s =
                random_scalar(lat8, substream(cfg.seed, 800) + static_cast<std::uint64_t>(i), 0.0);
            const double denom = std::max(1e-300, v.norm2() * s.norm2());
            worst = std::max(worst, sum_by_parts_residual(v, s) / denom);
        }
        report.checks.push_back(check_at_most("sbp.max_relative_residual", worst, 1e-12));
    }

    // --- Poisson forward/inverse round trip ---
    {
        const ScalarField src = random_scalar(lat8, substream(cfg.seed, 900), 0.0);
        const ScalarField sol = solve_poisson(src);
        const ScalarField back = laplacian(sol);
        double worst = 0.0;
        for (Site s = 0; s < src.size(); ++s)
            worst = std::max(worst, std::abs(back[s] - src[s]));
        report.checks.push_back(check_at_most("poisson.roundtrip_max_residual", worst, 1e-10));
    }

    // --- Gauss law on 16^3 ---
    if (cfg.include_large) {
        const Lattice lat16({16, 16, 16});
        const DressingKernel k = coulomb_kernel(lat16);
        const Site x = lat16.index(std::vector<int>{3, 5, 7});
        const VectorField e_field = electric_field(k, x, cfg.coupling);
        const double residual =
            gauss_residual(e_field, x, cfg.coupling,
                           1.0 / static_cast<double>(lat16.volume()));
        report.checks.push_back(check_at_most("gauss.coulomb_16x16x16", residual, 1e-10));
    }

    // --- Coulomb profile on 32^3 ---
    if (cfg.include_large) {
        const Lattice lat32({32, 32, 32});
        const DressingKernel k = coulomb_kernel(lat32);
        const VectorField e_field = electric_field(k, 0, cfg.coupling);
        const RadialProfile profile = radial_profile(e_field, 0, 16);
        double worst = 0.0;
        for (const auto& [radius, rel_dev] : coulomb_compare(profile, cfg.coupling)) {
            if (radius >= 3.0 && radius <= 8.0)
                worst = std::max(worst, rel_dev);
        }
        report.checks.push_back(check_at_most("profile.coulomb_32_shells_3_8", worst, 0.10));
    }

    // --- gauge invariants of the photon sector ---
    {
        double worst_f = 0.0;
        double worst_inv = 0.0;
        for (int i = 0; i < cfg.invariant_seeds; ++i) {
            const VectorField a = random_vector(
                lat8, substream(cfg.seed, 1000) + static_cast<std::uint64_t>(i), cfg.smoothness);
            GaugeSpec spec;
            spec.seed = substream(cfg.seed, 1100) + static_cast<std::uint64_t>(i);
            spec.smoothness = cfg.smoothness;
            spec.constant_offset = 0.15;
            spec.coupling = cfg.coupling;
            const GaugeTransform g = make_gauge_transform(lat8, spec);
            const VectorField at = apply_gauge_transform(a, g);

            const AntisymmetricTensorField f0 = field_strength(a);
            const AntisymmetricTensorField f1 = field_strength(at);
            for (int p = 0; p < f0.npairs(); ++p) {
                const auto p0 = f0.pair_plane(p);
                const auto p1 = f1.pair_plane(p);
                for (std::size_t j = 0; j < p0.size(); ++j)
                    worst_f = std::max(worst_f, std::abs(p1[j] - p0[j]));
            }

            const StueckelbergField sf{
                random_scalar(lat8, substream(cfg.seed, 1200) + static_cast<std::uint64_t>(i),
                              cfg.smoothness),
                cfg.coupling};
            const StueckelbergField sft = transform_sigma(sf, g);
            const VectorField inv0 = invariant_potential(a, sf);
            const VectorField inv1 = invariant_potential(at, sft);
            for (int mu = 0; mu < lat8.ndim(); ++mu) {
                const auto c0 = inv0.component(mu);
                const auto c1 = inv1.component(mu);
                for (std::size_t j = 0; j < c0.size(); ++j)
                    worst_inv = std::max(worst_inv, std::abs(c1[j] - c0[j]));
            }
        }
        report.checks.push_back(
            check_at_most("gauge.field_strength_max_deviation", worst_f, 1e-12));
        report.checks.push_back(
            check_at_most("gauge.invariant_potential_max_deviation", worst_inv, 1e-12));
    }

    // --- entanglement entropy ---
    {
        const Lattice tiny({2, 2});
        auto kptr = std::make_shared<const DressingKernel>(coulomb_kernel(tiny));
        const QFTbit qa = make_qftbit(0, 1.0, 0.0, +1, kptr);
        const QFTbit qb = make_qftbit(1, 1.0, 0.0, +1, kptr);
        const double inv_sqrt2 = 1.0 / std::numbers::sqrt2;

        const std::array<std::array<Complex, 2>, 2> bell{
            {{Complex{inv_sqrt2, 0.0}, 0.0}, {0.0, Complex{inv_sqrt2, 0.0}}}};
        const double s_bell = entanglement_entropy(entangle(qa, qb, bell), 0);
        report.checks.push_back(check_at_most(
            "entropy.bell", std::abs(s_bell - std::numbers::ln2), 1e-10));

        const std::array<std::array<Complex, 2>, 2> product{
            {{Complex{1.0, 0.0}, 0.0}, {0.0, 0.0}}};
        const double s_prod = entanglement_entropy(entangle(qa, qb, product), 0);
        report.checks.push_back(check_at_most("entropy.product", s_prod, 1e-10));

        const std::array<std::array<Complex, 2>, 2> asym{
            {{Complex{std::sqrt(0.25), 0.0}, 0.0}, {0.0, Complex{std::sqrt(0.75), 0.0}}}};
        const double s_asym = entanglement_entropy(entangle(qa, qb, asym), 0);
        const double expected = -0.25 * std::log(0.25) - 0.75 * std::log(0.75);
        report.checks.push_back(
            check_at_most("entropy.asymmetric", std::abs(s_asym - expected), 1e-10));
    }

    return report;
}

} // namespace dressage
