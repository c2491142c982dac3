#pragma once

#include "dressage/fields.hpp"

namespace dressage {

/// Solves div+ grad- G = src on the torus for the unique zero-mean G.
/// Spectral route: DFT, divide by the stencil eigenvalue
/// -sum_mu 4 sin^2(pi k_mu / N_mu), zero mode pinned to 0, inverse DFT.
/// Throws NonNeutralSourceError unless |mean(src)| <= neutrality_tol
/// (scaled by max(1, |src|_inf)); a source with net charge has no periodic
/// solution.
ScalarField solve_poisson(const ScalarField& src, double neutrality_tol = 1e-12);

/// solve_poisson of the neutralized point source [z=0] - 1/V.
ScalarField green_function(const Lattice& lat);

/// Multiplies the spectrum by exp(-smoothness * lambda(k)). smoothness = 0
/// returns the input bit-for-bit.
ScalarField spectral_lowpass(const ScalarField& s, double smoothness);

/// Phi(x) = sum_mu sum_z f_mu(x - z) a_mu(z): per-component circular
/// convolution, evaluated for every x at once via the DFT.
ScalarField spectral_convolution(const VectorField& f, const VectorField& a);

} // namespace dressage
