#pragma once

#include "dressage/fields.hpp"

namespace dressage {

/// A local U(1) gauge transformation: phase function alpha(x) in radians plus
/// the coupling e it acts through.
struct GaugeTransform {
    GaugeTransform(ScalarField alpha_, double coupling_);

    ScalarField alpha;
    double coupling;
};

/// Stueckelberg compensator sigma(x); shifts by -alpha/e under a gauge
/// transformation, which is exactly what makes A - grad+ sigma invariant.
struct StueckelbergField {
    StueckelbergField(ScalarField sigma_, double coupling_);

    ScalarField sigma;
    double coupling;
};

/// A'_mu = A_mu - (1/e) d+_mu alpha.
VectorField apply_gauge_transform(const VectorField& a, const GaugeTransform& g);

/// sigma' = sigma - alpha / e. Couplings must match exactly.
StueckelbergField transform_sigma(const StueckelbergField& sf, const GaugeTransform& g);

/// F_mu_nu = d+_mu A_nu - d+_nu A_mu. Needs rank >= 2.
AntisymmetricTensorField field_strength(const VectorField& a);

/// A - grad+ sigma: the U(1) reduction of the invariant four-potential. The
/// exponential form Omega = exp(i e sigma) collapses to this shift on an
/// abelian background, so sigma is all that is ever stored.
VectorField invariant_potential(const VectorField& a, const StueckelbergField& sf);

} // namespace dressage
