#pragma once

#include <cstdint>
#include <vector>

#include "dressage/dressing.hpp"

namespace dressage {

/// E_mu(z) = -e * f_mu(x - z): the static field configuration the dressing
/// attaches to a charge e at x. With this orientation div- E = e([z=x] -
/// background) holds exactly (the reflection r = x - z swaps the stencil
/// adjoints, turning the kernel's div+ into the observable's div-).
VectorField electric_field(const DressingKernel& k, Site x, double e);

/// max over z of |div- E(z) - e([z=x] - background)|.
double gauss_residual(const VectorField& e_field, Site x, double e, double background);

struct RadialShell {
    double radius = 0.0;
    double mean_magnitude = 0.0;
    std::int64_t count = 0;
};

/// Shell means of |E| around x. Unit-width shells indexed by the rounded
/// minimal-image Euclidean distance; empty shells are dropped.
struct RadialProfile {
    int ndim = 0;
    std::vector<RadialShell> shells;
};

RadialProfile radial_profile(const VectorField& e_field, Site x, int bins);

/// Per-shell relative deviation of the profile from the continuum Coulomb
/// magnitude e / (4 pi r^2). 3D only; the r = 0 shell is skipped.
std::vector<std::pair<double, double>> coulomb_compare(const RadialProfile& profile, double e);

} // namespace dressage
