#pragma once

#include "dressage/fields.hpp"

namespace dressage {

/// (d+_mu s)(z) = s(z + mu) - s(z), periodic.
ScalarField forward_diff(const ScalarField& s, int axis);

/// (d-_mu s)(z) = s(z) - s(z - mu), periodic.
ScalarField backward_diff(const ScalarField& s, int axis);

VectorField gradient_fwd(const ScalarField& s);
VectorField gradient_bwd(const ScalarField& s);

/// div+ v = sum_mu d+_mu v_mu.
ScalarField divergence_fwd(const VectorField& v);

/// div- v = sum_mu d-_mu v_mu.
ScalarField divergence_bwd(const VectorField& v);

/// div+ grad- s: the symmetric (2D+1)-point stencil, computed as the exact
/// composition of the two first-difference sweeps. This pairing is fixed
/// project-wide; the gauge-invariance identities depend on it.
ScalarField laplacian(const ScalarField& s);

/// | sum_z v . (grad+ s) + sum_z (div- v) s |, both sums compensated.
/// Zero up to roundoff by the discrete summation-by-parts identity.
double sum_by_parts_residual(const VectorField& v, const ScalarField& s);

} // namespace dressage
