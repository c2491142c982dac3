#pragma once

#include <complex>
#include <optional>
#include <string>
#include <vector>

#include "dressage/fields.hpp"
#include "dressage/gauge.hpp"

namespace dressage {

enum class KernelKind { coulomb, path, custom };

std::string to_string(KernelKind kind);
KernelKind kernel_kind_from_string(const std::string& name);

/// One signed unit step of a lattice path, walked in physical space away
/// from the anchor site.
struct PathStep {
    int axis = 0;
    int sign = +1;
};

/// Parses "+x,-y,+t" style step lists (axes x y z t = 0 1 2 3).
std::vector<PathStep> parse_path(const std::string& text);
std::string format_path_offset(std::span<const int> offset);

/// A dressing kernel: a vector field f over the relative coordinate
/// r = x - z whose forward divergence matches its charge layout.
///
///   coulomb/custom:  div+ f = [r=0] - 1/V   (uniform neutralizing background)
///   path:            div+ f = [r=0] - [r=sink_offset]  (discrete sink)
///
/// One stored kernel serves every anchor x; the dressing sum reads f(x - z)
/// with periodic index arithmetic.
class DressingKernel {
public:
    const Lattice& lattice() const { return f_.lattice(); }
    const VectorField& field() const { return f_; }
    KernelKind kind() const { return kind_; }

    /// Max-norm deviation of div+ f from the kind's target, measured at
    /// construction.
    double divergence_residual() const { return divergence_residual_; }

    /// Uniform compensating density: 1/V for coulomb/custom, 0 for path.
    double background_charge_density() const { return background_; }

    /// Relative coordinate of the discrete sink; present for path kernels
    /// only (all zeros for a closed loop).
    const std::optional<std::vector<int>>& sink_offset() const { return sink_offset_; }

    /// div+ f, freshly evaluated.
    ScalarField divergence() const;

    static DressingKernel make(VectorField f, KernelKind kind, double residual, double background,
                               std::optional<std::vector<int>> sink_offset);

private:
    DressingKernel(VectorField f, KernelKind kind, double residual, double background,
                   std::optional<std::vector<int>> sink_offset);

    VectorField f_;
    KernelKind kind_;
    double divergence_residual_;
    double background_;
    std::optional<std::vector<int>> sink_offset_;
};

/// Dirac's dressing: f_mu = d-_mu G with G the torus Green's function, so
/// div+ f is exactly the stencil Laplacian of G, i.e. [r=0] - 1/V.
DressingKernel coulomb_kernel(const Lattice& lat);

/// String dressing supported on the walked links; the compensating charge
/// sits at the far end of the path. A step +mu from the anchor lands the
/// sink at relative coordinate -mu (r = x - z reflects physical offsets).
DressingKernel path_kernel(const Lattice& lat, std::span<const PathStep> steps);

/// Validates external kernel data against the declared kind's divergence
/// invariant. Throws ConstraintViolationError carrying the measured residual.
DressingKernel load_kernel(VectorField data, KernelKind expected_kind,
                           double coulomb_tolerance = 1e-10, double path_tolerance = 1e-12);

/// exp(-i Phi) with Phi = e sum_z sum_mu f_mu(x-z) A_mu(z). The exponent is
/// kept alongside the unit complex so phase differences never wrap.
struct DressingPhase {
    std::complex<double> value;
    double exponent;
};

/// Direct compensated summation over all sites.
DressingPhase dressing_phase(const DressingKernel& k, const VectorField& a, Site x, double e);

/// Phi(x) for every anchor at once via the spectral convolution route.
/// Agrees with dressing_phase to 1e-10 in the exponent.
ScalarField dressing_exponent_field(const DressingKernel& k, const VectorField& a, double e);

/// Phase-angle advance of the dressing factor under g: the new factor is
/// exp(i * shift) times the old one, computed exactly as an exponent
/// difference. Equals alpha(x) - mean(alpha) for coulomb/custom kernels and
/// alpha(x) - alpha(x - sink_offset) for path kernels.
double phase_shift_under_gauge(const DressingKernel& k, const VectorField& a,
                               const GaugeTransform& g, Site x);

} // namespace dressage
