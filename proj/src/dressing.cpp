#include "dressage/dressing.hpp"

#include <cmath>
#include <cstring>
#include <sstream>

#include "dressage/calculus.hpp"
#include "dressage/spectral.hpp"
#include "dressage/summation.hpp"

namespace dressage {

namespace {

constexpr const char* axis_letters = "xyzt";

/// Per-axis lookup for the reflected flat index: rel(z) = sum_d rev[d][z_d]
/// where rev[d][c] = ((x_d - c) mod N_d) * stride_d.
std::vector<std::vector<Site>> reflection_tables(const Lattice& lat, Site x) {
    std::vector<std::vector<Site>> rev(static_cast<std::size_t>(lat.ndim()));
    const auto xc = lat.coords(x);
    for (int d = 0; d < lat.ndim(); ++d) {
        const int n = lat.extent(d);
        auto& t = rev[static_cast<std::size_t>(d)];
        t.resize(static_cast<std::size_t>(n));
        for (int c = 0; c < n; ++c) {
            int r = xc[static_cast<std::size_t>(d)] - c;
            if (r < 0)
                r += n;
            t[static_cast<std::size_t>(c)] = static_cast<Site>(r) * lat.stride(d);
        }
    }
    return rev;
}

double max_divergence_deviation(const ScalarField& div, double origin_term, double background,
                                const std::optional<std::vector<int>>& sink) {
    const Lattice& lat = div.lattice();
    Site sink_site = -1;
    double sink_term = 0.0;
    if (sink) {
        sink_site = lat.index(*sink);
        sink_term = -1.0;
    }
    double worst = 0.0;
    for (Site s = 0; s < lat.volume(); ++s) {
        double target = -background;
        if (s == 0)
            target += origin_term;
        if (s == sink_site)
            target += sink_term;
        worst = std::max(worst, std::abs(div[s] - target));
    }
    return worst;
}

} // namespace

std::string to_string(KernelKind kind) {
    switch (kind) {
    case KernelKind::coulomb: return "coulomb";
    case KernelKind::path: return "path";
    case KernelKind::custom: return "custom";
    }
    return "?";
}

KernelKind kernel_kind_from_string(const std::string& name) {
    if (name == "coulomb")
        return KernelKind::coulomb;
    if (name == "path")
        return KernelKind::path;
    if (name == "custom")
        return KernelKind::custom;
    throw ConfigError("unknown kernel kind '" + name + "'");
}

std::vector<PathStep> parse_path(const std::string& text) {
    std::vector<PathStep> steps;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty())
            continue;
        if (tok.size() != 2 || (tok[0] != '+' && tok[0] != '-'))
            throw ConfigError("path step '" + tok + "' is not of the form +x/-x/+y/...");
        const char* pos = std::strchr(axis_letters, tok[1]);
        if (pos == nullptr)
            throw ConfigError("path step '" + tok + "' names an unknown axis");
        steps.push_back({static_cast<int>(pos - axis_letters), tok[0] == '+' ? +1 : -1});
    }
    return steps;
}

std::string format_path_offset(std::span<const int> offset) {
    std::string out = "(";
    for (std::size_t i = 0; i < offset.size(); ++i) {
        if (i)
            out += ",";
        out += std::to_string(offset[i]);
    }
    return out + ")";
}

DressingKernel::DressingKernel(VectorField f, KernelKind kind, double residual, double background,
                               std::optional<std::vector<int>> sink_offset)
    : f_(std::move(f)), kind_(kind), divergence_residual_(residual), background_(background),
      sink_offset_(std::move(sink_offset)) {}

DressingKernel DressingKernel::make(VectorField f, KernelKind kind, double residual,
                                    double background, std::optional<std::vector<int>> sink) {
    return DressingKernel(std::move(f), kind, residual, background, std::move(sink));
}

ScalarField DressingKernel::divergence() const {
    return divergence_fwd(f_);
}

DressingKernel coulomb_kernel(const Lattice& lat) {
    const ScalarField g = green_function(lat);
    const VectorField f = gradient_bwd(g);
    const double background = 1.0 / static_cast<double>(lat.volume());
    const double residual =
        max_divergence_deviation(divergence_fwd(f), 1.0, background, std::nullopt);
    return DressingKernel::make(f, KernelKind::coulomb, residual, background, std::nullopt);
}

DressingKernel path_kernel(const Lattice& lat, std::span<const PathStep> steps) {
    if (steps.empty())
        throw EmptyPathError("a path kernel needs at least one step");
    VectorField f(lat);
    // Walk in relative coordinates: a physical step +mu away from the anchor
    // moves r by -mu (r = x - z), and each walked link contributes the signed
    // unit making div+ telescope to [r=0] - [r=endpoint].
    std::vector<int> r(static_cast<std::size_t>(lat.ndim()), 0);
    Site pos = 0;
    for (const PathStep& step : steps) {
        lat.require_axis(step.axis);
        if (step.sign != +1 && step.sign != -1)
            throw ConfigError("path steps must be signed unit steps");
        if (step.sign > 0) {
            f.at(step.axis, pos) -= 1.0;
            pos = lat.neighbor(pos, step.axis, -1);
            auto& c = r[static_cast<std::size_t>(step.axis)];
            c = (c - 1 + lat.extent(step.axis)) % lat.extent(step.axis);
        } else {
            pos = lat.neighbor(pos, step.axis, +1);
            auto& c = r[static_cast<std::size_t>(step.axis)];
            c = (c + 1) % lat.extent(step.axis);
            f.at(step.axis, pos) += 1.0;
        }
    }
    const bool closed = pos == 0;
    const double origin_term = closed ? 0.0 : 1.0;
    std::optional<std::vector<int>> sink;
    if (!closed)
        sink = r;
    const double residual = max_divergence_deviation(divergence_fwd(f), origin_term, 0.0, sink);
    return DressingKernel::make(std::move(f), KernelKind::path, residual, 0.0,
                                std::vector<int>(r.begin(), r.end()));
}

DressingKernel load_kernel(VectorField data, KernelKind expected_kind, double coulomb_tolerance,
                           double path_tolerance) {
    data.require_finite("kernel field");
    const Lattice& lat = data.lattice();
    const ScalarField div = divergence_fwd(data);

    if (expected_kind == KernelKind::coulomb || expected_kind == KernelKind::custom) {
        const double background = 1.0 / static_cast<double>(lat.volume());
        const double residual = max_divergence_deviation(div, 1.0, background, std::nullopt);
        if (residual > coulomb_tolerance)
            throw ConstraintViolationError(
                "kernel declared " + to_string(expected_kind) +
                    " violates div+ f = [r=0] - 1/V; measured residual " + std::to_string(residual),
                residual);
        return DressingKernel::make(std::move(data), expected_kind, residual, background,
                                    std::nullopt);
    }

    // Path kernel: the divergence must be [r=0] - [r=s] for a single sink s
    // (possibly the origin itself, i.e. identically zero for a closed loop).
    double closed_residual = div.max_abs();
    if (closed_residual <= path_tolerance) {
        std::vector<int> origin(static_cast<std::size_t>(lat.ndim()), 0);
        return DressingKernel::make(std::move(data), KernelKind::path, closed_residual, 0.0,
                                    origin);
    }
    Site sink_site = -1;
    for (Site s = 1; s < lat.volume(); ++s) {
        if (std::abs(div[s] + 1.0) <= path_tolerance) {
            sink_site = s;
            break;
        }
    }
    if (sink_site < 0)
        throw ConstraintViolationError(
            "kernel declared path has no unit sink; max |div+ f| = " +
                std::to_string(closed_residual),
            closed_residual);
    double residual = 0.0;
    for (Site s = 0; s < lat.volume(); ++s) {
        double target = 0.0;
        if (s == 0)
            target = 1.0;
        else if (s == sink_site)
            target = -1.0;
        residual = std::max(residual, std::abs(div[s] - target));
    }
    if (residual > path_tolerance)
        throw ConstraintViolationError("kernel declared path violates div+ f = [r=0] - [r=sink]; "
                                       "measured residual " +
                                           std::to_string(residual),
                                       residual);
    return DressingKernel::make(std::move(data), KernelKind::path, residual, 0.0,
                                lat.coords(sink_site));
}

DressingPhase dressing_phase(const DressingKernel& k, const VectorField& a, Site x, double e) {
    require_same_lattice(k.lattice(), a.lattice());
    const Lattice& lat = k.lattice();
    lat.require_site(x);

    const auto rev = reflection_tables(lat, x);
    const int d = lat.ndim();
    Kahan acc;
    for (int mu = 0; mu < d; ++mu) {
        const auto f = k.field().component(mu);
        const auto av = a.component(mu);
        SiteWalker w(lat);
        for (; !w.done(); w.advance()) {
            Site rel = 0;
            const auto c = w.coords();
            for (int dd = 0; dd < d; ++dd)
                rel += rev[static_cast<std::size_t>(dd)][static_cast<std::size_t>(
                    c[static_cast<std::size_t>(dd)])];
            acc.add(f[static_cast<std::size_t>(rel)] * av[static_cast<std::size_t>(w.site())]);
        }
    }
    const double phi = e * acc.value();
    return {std::polar(1.0, -phi), phi};
}

ScalarField dressing_exponent_field(const DressingKernel& k, const VectorField& a, double e) {
    require_same_lattice(k.lattice(), a.lattice());
    ScalarField phi = spectral_convolution(k.field(), a);
    for (Site s = 0; s < phi.size(); ++s)
        phi[s] *= e;
    return phi;
}

double phase_shift_under_gauge(const DressingKernel& k, const VectorField& a,
                               const GaugeTransform& g, Site x) {
    const VectorField transformed = apply_gauge_transform(a, g);
    const double before = dressing_phase(k, a, x, g.coupling).exponent;
    const double after = dressing_phase(k, transformed, x, g.coupling).exponent;
    return before - after;
}

} // namespace dressage
