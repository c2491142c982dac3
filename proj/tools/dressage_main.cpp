#include <array>
#include <fstream>
#include <iostream>
#include <memory>
#include <numbers>

#include <CLI11.hpp>

#include "dressage/calculus.hpp"
#include "dressage/field_io.hpp"
#include "dressage/observables.hpp"
#include "dressage/random.hpp"
#include "dressage/suite.hpp"

namespace {

using namespace dressage;

void print_checks(const std::vector<CheckResult>& checks) {
    for (const CheckResult& c : checks) {
        std::cout << (c.pass ? "[PASS] " : "[FAIL] ") << c.name
                  << " measured=" << format_g17(c.measured)
                  << (c.at_least ? " min=" : " tol=") << format_g17(c.bound) << "\n";
    }
}

void write_json_file(const std::string& path, const nlohmann::json& doc) {
    std::ofstream os(path);
    if (!os)
        throw IoError("cannot open '" + path + "' for writing");
    os << doc.dump(2) << '\n';
}

int finish_report(Report& report, const std::string& json_path) {
    print_checks(report.checks);
    if (!json_path.empty())
        write_json_file(json_path, report.to_json());
    std::cout << (report.overall_pass() ? "overall: PASS" : "overall: FAIL") << "\n";
    return report.overall_pass() ? 0 : 1;
}

struct KernelOptions {
    std::vector<int> dims{8, 8, 8};
    std::string kind = "coulomb";
    std::string path;
    std::string kernel_base;
    double tolerance = 1e-10;
};

void add_kernel_options(CLI::App* cmd, KernelOptions& opt) {
    cmd->add_option("--dims", opt.dims, "lattice extents, e.g. 8,8,8")->delimiter(',');
    cmd->add_option("--kind", opt.kind, "kernel kind: coulomb or path");
    cmd->add_option("--path", opt.path, "path steps for --kind path, e.g. +x,+x,-y");
    cmd->add_option("--tolerance", opt.tolerance, "constraint tolerance");
}

DressingKernel build_kernel(const KernelOptions& opt) {
    if (!opt.kernel_base.empty())
        return load_kernel_files(opt.kernel_base, opt.tolerance);
    const Lattice lat(opt.dims);
    const KernelKind kind = kernel_kind_from_string(opt.kind);
    if (kind == KernelKind::coulomb)
        return coulomb_kernel(lat);
    if (kind == KernelKind::path) {
        const auto steps = parse_path(opt.path);
        return path_kernel(lat, steps);
    }
    throw ConfigError("custom kernels are loaded from files; use --kernel");
}

int cmd_make_kernel(const KernelOptions& opt, const std::string& out_base) {
    const DressingKernel k = build_kernel(opt);
    save_kernel(k, out_base);
    std::cout << "kind: " << to_string(k.kind()) << "\n";
    std::cout << "divergence_residual: " << format_g17(k.divergence_residual()) << "\n";
    if (k.sink_offset())
        std::cout << "sink_offset: " << format_path_offset(*k.sink_offset()) << "\n";
    std::cout << "wrote " << out_base << ".field and " << out_base << ".json\n";
    return 0;
}

int cmd_check_kernel(const std::string& in_base, double tolerance) {
    const DressingKernel k = load_kernel_files(in_base, tolerance);
    std::cout << "kind: " << to_string(k.kind()) << "\n";
    std::cout << "divergence_residual: " << format_g17(k.divergence_residual()) << "\n";
    if (k.sink_offset())
        std::cout << "sink_offset: " << format_path_offset(*k.sink_offset()) << "\n";
    std::cout << "constraint satisfied at tolerance " << format_g17(tolerance) << "\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"dressage: gauge-invariant dressed qubits over classical U(1) backgrounds"};
    app.require_subcommand(1);

    // make-kernel
    KernelOptions mk_opt;
    std::string mk_out = "kernel";
    auto* mk = app.add_subcommand("make-kernel", "build a dressing kernel and write it to disk");
    add_kernel_options(mk, mk_opt);
    mk->add_option("--out", mk_out, "output base path (adds .field/.json)");

    // check-kernel
    std::string ck_in;
    double ck_tol = 1e-10;
    auto* ck = app.add_subcommand("check-kernel", "revalidate a stored kernel's constraint");
    ck->add_option("--in", ck_in, "kernel base path")->required();
    ck->add_option("--tolerance", ck_tol, "constraint tolerance");

    // gauge-test
    KernelOptions gt_opt;
    GaugeTestConfig gt_cfg;
    std::string gt_json;
    bool gt_neutral = false;
    auto* gt = app.add_subcommand(
        "gauge-test", "seeded invariance contrast: dressed multiplier vs bare matter phase");
    add_kernel_options(gt, gt_opt);
    gt->add_option("--kernel", gt_opt.kernel_base, "load the kernel from this base path");
    gt->add_option("--seeds", gt_cfg.transforms, "number of seeded gauge transforms");
    gt->add_option("--seed", gt_cfg.seed, "base seed");
    gt->add_option("--smoothness", gt_cfg.smoothness, "random-field smoothness");
    gt->add_option("--coupling", gt_cfg.coupling, "coupling e");
    gt->add_option("--offset", gt_cfg.constant_offset, "constant offset added to alpha");
    gt->add_option("--charge", gt_cfg.charge_sign, "charge sign of the test qubit");
    gt->add_option("--anchors", gt_cfg.anchors, "anchor-site sample size");
    gt->add_option("--json", gt_json, "write the JSON report here");
    gt->add_flag("--neutral-pair", gt_neutral,
                 "test the +1/-1 pair strung along --path instead of a single charge");
    std::string gt_gauge_json;
    gt->add_option("--gauge-json", gt_gauge_json,
                   "JSON gauge-transform spec {seed, smoothness, constant_offset, coupling}");

    // efield
    KernelOptions ef_opt;
    std::string ef_out = "efield.csv";
    std::string ef_field_out;
    double ef_coupling = 1.0;
    Site ef_anchor = 0;
    int ef_bins = 0;
    auto* ef = app.add_subcommand("efield", "electric field of a dressed charge: radial profile");
    add_kernel_options(ef, ef_opt);
    ef->add_option("--kernel", ef_opt.kernel_base, "load the kernel from this base path");
    ef->add_option("--coupling", ef_coupling, "charge e");
    ef->add_option("--anchor", ef_anchor, "anchor site index");
    ef->add_option("--bins", ef_bins, "number of radial shells (0 = half the largest extent)");
    ef->add_option("--out", ef_out, "profile CSV path");
    ef->add_option("--field-out", ef_field_out, "also dump E in dressage-field v1 format");

    // overlap
    std::vector<int> ov_dims{8, 8, 8};
    std::uint64_t ov_seed = 1;
    double ov_coupling = 1.0;
    double ov_smoothness = 1.0;
    double ov_tol = 1e-10;
    int ov_transforms = 20;
    std::string ov_loop = "+x,+y,-x,-y";
    std::string ov_json;
    auto* ov = app.add_subcommand(
        "overlap", "relative phase of two equal-divergence dressings and its gauge invariance");
    ov->add_option("--dims", ov_dims, "lattice extents")->delimiter(',');
    ov->add_option("--seed", ov_seed, "base seed");
    ov->add_option("--coupling", ov_coupling, "coupling e");
    ov->add_option("--smoothness", ov_smoothness, "random-field smoothness");
    ov->add_option("--loop", ov_loop, "closed-loop path added to the second kernel");
    ov->add_option("--transforms", ov_transforms, "number of gauge transforms");
    ov->add_option("--tolerance", ov_tol, "invariance tolerance");
    ov->add_option("--json", ov_json, "write the JSON report here");

    // entangle-demo
    std::vector<int> en_dims{8, 8, 8};
    std::uint64_t en_seed = 1;
    double en_coupling = 1.0;
    bool en_bell = false;
    bool en_neutral = false;
    std::string en_json;
    auto* en = app.add_subcommand("entangle-demo", "entangled dressed pairs at desk scale");
    en->add_option("--dims", en_dims, "lattice extents")->delimiter(',');
    en->add_option("--seed", en_seed, "base seed");
    en->add_option("--coupling", en_coupling, "coupling e");
    en->add_flag("--bell", en_bell, "maximally entangled coulomb-dressed pair");
    en->add_flag("--neutral", en_neutral, "neutral +1/-1 pair strung through a shared sink");
    en->add_option("--json", en_json, "write the JSON report here");

    // report
    bool rp_all = false;
    SuiteConfig rp_cfg;
    std::string rp_json;
    bool rp_quick = false;
    auto* rp = app.add_subcommand("report", "run the full verification suite");
    rp->add_flag("--all", rp_all, "run every check");
    rp->add_option("--seed", rp_cfg.seed, "base seed");
    rp->add_option("--coupling", rp_cfg.coupling, "coupling e");
    rp->add_option("--smoothness", rp_cfg.smoothness, "random-field smoothness");
    rp->add_option("--tolerance", rp_cfg.tolerance, "dressed-invariance tolerance");
    rp->add_flag("--quick", rp_quick, "skip the 16^3/32^3 checks");
    rp->add_option("--json", rp_json, "write the JSON report here");

    try {
        app.parse(argc, argv);

        if (mk->parsed())
            return cmd_make_kernel(mk_opt, mk_out);

        if (ck->parsed())
            return cmd_check_kernel(ck_in, ck_tol);

        if (gt->parsed()) {
            gt_cfg.tolerance = gt_opt.tolerance;
            if (!gt_gauge_json.empty()) {
                std::ifstream is(gt_gauge_json);
                if (!is)
                    throw IoError("cannot open '" + gt_gauge_json + "' for reading");
                nlohmann::json doc;
                is >> doc;
                const GaugeSpec spec = gauge_spec_from_json(doc);
                gt_cfg.seed = spec.seed;
                gt_cfg.smoothness = spec.smoothness;
                gt_cfg.constant_offset = spec.constant_offset;
                gt_cfg.coupling = spec.coupling;
            }
            Report report;
            report.config = {{"seed", gt_cfg.seed},
                             {"transforms", gt_cfg.transforms},
                             {"smoothness", gt_cfg.smoothness},
                             {"coupling", gt_cfg.coupling},
                             {"constant_offset", gt_cfg.constant_offset},
                             {"anchors", gt_cfg.anchors},
                             {"tolerance", gt_cfg.tolerance}};
            if (gt_neutral) {
                const Lattice lat(gt_opt.dims);
                const auto steps = parse_path(gt_opt.path);
                report.checks = run_neutral_pair_checks(lat, steps, gt_cfg);
            } else {
                const DressingKernel k = build_kernel(gt_opt);
                report.config["kernel_kind"] = to_string(k.kind());
                report.checks = run_gauge_contrast(k, gt_cfg);
            }
            return finish_report(report, gt_json);
        }

        if (ef->parsed()) {
            const DressingKernel k = build_kernel(ef_opt);
            const Lattice& lat = k.lattice();
            lat.require_site(ef_anchor);
            const VectorField e_field = electric_field(k, ef_anchor, ef_coupling);
            int bins = ef_bins;
            if (bins <= 0) {
                bins = 2;
                for (int d = 0; d < lat.ndim(); ++d)
                    bins = std::max(bins, lat.extent(d) / 2);
            }
            const RadialProfile profile = radial_profile(e_field, ef_anchor, bins);
            std::ofstream os(ef_out);
            if (!os)
                throw IoError("cannot open '" + ef_out + "' for writing");
            write_profile_csv(os, profile, ef_coupling);
            if (!ef_field_out.empty())
                write_field_file(ef_field_out, e_field);
            const double residual = gauss_residual(e_field, ef_anchor, ef_coupling,
                                                   k.background_charge_density());
            std::cout << "gauss_residual: " << format_g17(residual) << "\n";
            std::cout << "wrote " << ef_out << "\n";
            return 0;
        }

        if (ov->parsed()) {
            const Lattice lat(ov_dims);
            const DressingKernel k1 = coulomb_kernel(lat);
            const auto loop_steps = parse_path(ov_loop);
            const DressingKernel loop = path_kernel(lat, loop_steps);
            if (loop.sink_offset() &&
                *loop.sink_offset() != std::vector<int>(static_cast<std::size_t>(lat.ndim()), 0))
                throw ConfigError("--loop must describe a closed path");
            VectorField combined = k1.field();
            for (int mu = 0; mu < lat.ndim(); ++mu) {
                auto dst = combined.component(mu);
                const auto add = loop.field().component(mu);
                for (std::size_t i = 0; i < dst.size(); ++i)
                    dst[i] += add[i];
            }
            const DressingKernel k2 = load_kernel(std::move(combined), KernelKind::custom);

            const VectorField a = random_vector(lat, ov_seed, ov_smoothness);
            const Complex base = overlap_phase(k1, k2, a, 0, ov_coupling);
            double worst = 0.0;
            for (int i = 0; i < ov_transforms; ++i) {
                GaugeSpec spec;
                spec.seed = ov_seed + 1000 + static_cast<std::uint64_t>(i);
                spec.smoothness = ov_smoothness;
                spec.coupling = ov_coupling;
                const GaugeTransform g = make_gauge_transform(lat, spec);
                const VectorField at = apply_gauge_transform(a, g);
                const Complex shifted = overlap_phase(k1, k2, at, 0, ov_coupling);
                worst = std::max(worst, std::abs(shifted - base));
            }
            Report report;
            report.config = {{"seed", ov_seed},
                             {"coupling", ov_coupling},
                             {"smoothness", ov_smoothness},
                             {"loop", ov_loop},
                             {"transforms", ov_transforms}};
            report.checks.push_back(
                check_at_most("overlap.gauge_invariance", worst, ov_tol));
            std::cout << "overlap_phase: " << format_g17(base.real()) << " + "
                      << format_g17(base.imag()) << "i\n";
            return finish_report(report, ov_json);
        }

        if (en->parsed()) {
            if (en_bell == en_neutral)
                throw ConfigError("pick exactly one of --bell / --neutral");
            const Lattice lat(en_dims);
            Report report;
            report.config = {{"seed", en_seed},
                             {"coupling", en_coupling},
                             {"mode", en_bell ? "bell" : "neutral"}};
            if (en_bell) {
                auto kptr = std::make_shared<const DressingKernel>(coulomb_kernel(lat));
                const QFTbit qa = make_qftbit(0, 1.0, 0.0, +1, kptr);
                const QFTbit qb =
                    make_qftbit(lat.volume() / 2 + 1, 1.0, 0.0, +1, kptr);
                const double inv_sqrt2 = 1.0 / std::numbers::sqrt2;
                const std::array<std::array<Complex, 2>, 2> bell{
                    {{Complex{inv_sqrt2, 0.0}, 0.0}, {0.0, Complex{inv_sqrt2, 0.0}}}};
                const MultiQubitState pair = entangle(qa, qb, bell);
                const double s0 = entanglement_entropy(pair, 0);
                const double s1 = entanglement_entropy(pair, 1);
                report.checks.push_back(check_at_most(
                    "entropy.bell_cut0", std::abs(s0 - std::numbers::ln2), 1e-10));
                report.checks.push_back(check_at_most(
                    "entropy.bell_cut1", std::abs(s1 - std::numbers::ln2), 1e-10));

                GaugeSpec spec;
                spec.seed = en_seed;
                spec.smoothness = 1.0;
                spec.constant_offset = 0.3;
                spec.coupling = en_coupling;
                const GaugeTransform g = make_gauge_transform(lat, spec);
                const VectorField a = random_vector(lat, en_seed + 77, 1.0);
                const auto offsets = anchor_sample(lat, 32, en_seed + 5);
                const GaugeActionReport rep = gauge_action(pair, a, g, offsets);
                const double mean_alpha = g.alpha.mean();
                report.checks.push_back(check_at_most(
                    "phase_law.pair_charge_two",
                    std::abs(rep.global_phase - std::polar(1.0, -2.0 * mean_alpha)), 1e-10));

                const std::vector<std::string> ids{"coulomb", "coulomb"};
                nlohmann::json doc = report.to_json();
                doc["state"] = state_to_json(pair, ids);
                doc["entropy"] = s0;
                print_checks(report.checks);
                if (!en_json.empty())
                    write_json_file(en_json, doc);
                std::cout << "entropy: " << format_g17(s0) << "\n";
                std::cout << (report.overall_pass() ? "overall: PASS" : "overall: FAIL") << "\n";
                return report.overall_pass() ? 0 : 1;
            }
            GaugeTestConfig gc;
            gc.seed = en_seed;
            gc.transforms = 20;
            gc.coupling = en_coupling;
            gc.constant_offset = 0.4;
            gc.anchors = 64;
            const auto steps = parse_path("+x,+x");
            report.checks = run_neutral_pair_checks(lat, steps, gc);
            return finish_report(report, en_json);
        }

        if (rp->parsed()) {
            if (!rp_all)
                throw ConfigError("report currently supports --all only");
            rp_cfg.include_large = !rp_quick;
            Report report = run_full_suite(rp_cfg);
            return finish_report(report, rp_json);
        }
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    } catch (const dressage::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
