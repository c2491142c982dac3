#include "dressage/gauge.hpp"

#include "dressage/calculus.hpp"
#include "dressage/parallel.hpp"

namespace dressage {

GaugeTransform::GaugeTransform(ScalarField alpha_, double coupling_)
    : alpha(std::move(alpha_)), coupling(coupling_) {
    alpha.require_finite("gauge function alpha");
    if (coupling == 0.0)
        throw ConfigError("gauge coupling must be nonzero");
}

StueckelbergField::StueckelbergField(ScalarField sigma_, double coupling_)
    : sigma(std::move(sigma_)), coupling(coupling_) {
    sigma.require_finite("stueckelberg field sigma");
}

VectorField apply_gauge_transform(const VectorField& a, const GaugeTransform& g) {
    require_same_lattice(a.lattice(), g.alpha.lattice());
    VectorField out(a.lattice());
    const double inv_e = 1.0 / g.coupling;
    for (int mu = 0; mu < a.ncomp(); ++mu) {
        const ScalarField da = forward_diff(g.alpha, mu);
        auto src = a.component(mu);
        auto grad = da.values();
        auto dst = out.component(mu);
        parallel_for_blocks(a.lattice().volume(), [&](Site lo, Site hi) {
            for (Site s = lo; s < hi; ++s) {
                auto i = static_cast<std::size_t>(s);
                dst[i] = src[i] - inv_e * grad[i];
            }
        });
    }
    return out;
}

StueckelbergField transform_sigma(const StueckelbergField& sf, const GaugeTransform& g) {
    require_same_lattice(sf.sigma.lattice(), g.alpha.lattice());
    if (sf.coupling != g.coupling)
        throw CouplingMismatchError("stueckelberg coupling does not match the transform's");
    ScalarField out = sf.sigma;
    const double inv_e = 1.0 / g.coupling;
    auto dst = out.values();
    auto alpha = g.alpha.values();
    parallel_for_blocks(out.size(), [&](Site lo, Site hi) {
        for (Site s = lo; s < hi; ++s) {
            auto i = static_cast<std::size_t>(s);
            dst[i] -= inv_e * alpha[i];
        }
    });
    return {std::move(out), sf.coupling};
}

AntisymmetricTensorField field_strength(const VectorField& a) {
    if (a.lattice().ndim() < 2)
        throw DimensionError("field strength needs at least two directions");
    AntisymmetricTensorField f(a.lattice());
    int pair = 0;
    for (auto [mu, nu] : f.pairs()) {
        ScalarField a_nu(a.lattice());
        ScalarField a_mu(a.lattice());
        std::copy(a.component(nu).begin(), a.component(nu).end(), a_nu.values().begin());
        std::copy(a.component(mu).begin(), a.component(mu).end(), a_mu.values().begin());
        const ScalarField d_mu_a_nu = forward_diff(a_nu, mu);
        const ScalarField d_nu_a_mu = forward_diff(a_mu, nu);
        auto dst = f.pair_plane(pair++);
        auto x = d_mu_a_nu.values();
        auto y = d_nu_a_mu.values();
        parallel_for_blocks(a.lattice().volume(), [&](Site lo, Site hi) {
            for (Site s = lo; s < hi; ++s) {
                auto i = static_cast<std::size_t>(s);
                dst[i] = x[i] - y[i];
            }
        });
    }
    return f;
}

VectorField invariant_potential(const VectorField& a, const StueckelbergField& sf) {
    require_same_lattice(a.lattice(), sf.sigma.lattice());
    VectorField out(a.lattice());
    for (int mu = 0; mu < a.ncomp(); ++mu) {
        const ScalarField ds = forward_diff(sf.sigma, mu);
        auto src = a.component(mu);
        auto grad = ds.values();
        auto dst = out.component(mu);
        parallel_for_blocks(a.lattice().volume(), [&](Site lo, Site hi) {
            for (Site s = lo; s < hi; ++s) {
                auto i = static_cast<std::size_t>(s);
                dst[i] = src[i] - grad[i];
            }
        });
    }
    return out;
}

} // namespace dressage
