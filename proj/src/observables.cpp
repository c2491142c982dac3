#include "dressage/observables.hpp"

#include <cmath>
#include <numbers>

#include "dressage/calculus.hpp"
#include "dressage/parallel.hpp"
#include "dressage/summation.hpp"

namespace dressage {

VectorField electric_field(const DressingKernel& k, Site x, double e) {
    const Lattice& lat = k.lattice();
    lat.require_site(x);
    VectorField out(lat);
    const auto xc = lat.coords(x);

    // rel(z) = x - z per axis, as precomputed stride offsets.
    std::vector<std::vector<Site>> rev(static_cast<std::size_t>(lat.ndim()));
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

    for (int mu = 0; mu < lat.ndim(); ++mu) {
        const auto f = k.field().component(mu);
        auto dst = out.component(mu);
        SiteWalker w(lat);
        for (; !w.done(); w.advance()) {
            Site rel = 0;
            const auto c = w.coords();
            for (int d = 0; d < lat.ndim(); ++d)
                rel += rev[static_cast<std::size_t>(d)][static_cast<std::size_t>(
                    c[static_cast<std::size_t>(d)])];
            dst[static_cast<std::size_t>(w.site())] = -e * f[static_cast<std::size_t>(rel)];
        }
    }
    return out;
}

double gauss_residual(const VectorField& e_field, Site x, double e, double background) {
    const Lattice& lat = e_field.lattice();
    lat.require_site(x);
    const ScalarField div = divergence_bwd(e_field);
    double worst = 0.0;
    for (Site s = 0; s < lat.volume(); ++s) {
        double target = -e * background;
        if (s == x)
            target += e;
        worst = std::max(worst, std::abs(div[s] - target));
    }
    return worst;
}

RadialProfile radial_profile(const VectorField& e_field, Site x, int bins) {
    if (bins < 2)
        throw BinError("radial profile needs at least two shells");
    const Lattice& lat = e_field.lattice();
    lat.require_site(x);
    const auto xc = lat.coords(x);

    std::vector<Kahan> sums(static_cast<std::size_t>(bins));
    std::vector<std::int64_t> counts(static_cast<std::size_t>(bins), 0);

    SiteWalker w(lat);
    for (; !w.done(); w.advance()) {
        const auto c = w.coords();
        double dist2 = 0.0;
        for (int d = 0; d < lat.ndim(); ++d) {
            int delta = std::abs(c[static_cast<std::size_t>(d)] -
                                 xc[static_cast<std::size_t>(d)]);
            delta = std::min(delta, lat.extent(d) - delta);
            dist2 += static_cast<double>(delta) * static_cast<double>(delta);
        }
        const auto shell = static_cast<std::int64_t>(std::llround(std::sqrt(dist2)));
        if (shell >= bins)
            continue;
        double mag2 = 0.0;
        for (int mu = 0; mu < lat.ndim(); ++mu) {
            const double v = e_field.at(mu, w.site());
            mag2 += v * v;
        }
        sums[static_cast<std::size_t>(shell)].add(std::sqrt(mag2));
        ++counts[static_cast<std::size_t>(shell)];
    }

    RadialProfile profile;
    profile.ndim = lat.ndim();
    for (int r = 0; r < bins; ++r) {
        const auto ur = static_cast<std::size_t>(r);
        if (counts[ur] == 0)
            continue;
        profile.shells.push_back({static_cast<double>(r),
                                  sums[ur].value() / static_cast<double>(counts[ur]),
                                  counts[ur]});
    }
    return profile;
}

std::vector<std::pair<double, double>> coulomb_compare(const RadialProfile& profile, double e) {
    if (profile.ndim != 3)
        throw DimensionError("the continuum Coulomb comparison is defined in 3D only");
    std::vector<std::pair<double, double>> out;
    for (const RadialShell& shell : profile.shells) {
        if (shell.radius <= 0.0)
            continue;
        const double continuum =
            e / (4.0 * std::numbers::pi * shell.radius * shell.radius);
        out.emplace_back(shell.radius,
                         std::abs(shell.mean_magnitude - continuum) / std::abs(continuum));
    }
    return out;
}

} // namespace dressage
