#pragma once

#include <complex>
#include <memory>
#include <vector>

#include "dressage/dressing.hpp"

namespace dressage {

using Complex = std::complex<double>;

/// A two-level matter state at one site together with its dressing cloud.
/// charge_sign multiplies the coupling: the antiparticle carries the
/// opposite cloud.
struct QFTbit {
    Site site = 0;
    Complex amp_zero{1.0, 0.0};
    Complex amp_one{0.0, 0.0};
    int charge_sign = +1;
    std::shared_ptr<const DressingKernel> kernel;
};

/// Validates |a|^2 + |b|^2 = 1 to 1e-9; no silent renormalization.
QFTbit make_qftbit(Site x, Complex a, Complex b, int charge_sign,
                   std::shared_ptr<const DressingKernel> kernel);

/// One charge of a multi-qubit register: where it sits, its sign, its cloud.
struct ChargeSlot {
    Site site = 0;
    int charge_sign = +1;
    std::shared_ptr<const DressingKernel> kernel;
};

/// n dressed qubits with a complex amplitude tensor over the 2^n
/// computational basis (row-major, qubit 0 most significant).
class MultiQubitState {
public:
    MultiQubitState(std::vector<ChargeSlot> qubits, std::vector<Complex> amplitudes);

    int num_qubits() const { return static_cast<int>(qubits_.size()); }
    const std::vector<ChargeSlot>& qubits() const { return qubits_; }
    const std::vector<Complex>& amplitudes() const { return amplitudes_; }
    const Lattice& lattice() const { return qubits_.front().kernel->lattice(); }

private:
    std::vector<ChargeSlot> qubits_;
    std::vector<Complex> amplitudes_;
};

/// Two-qubit product of dressing factors applied to a 2x2 amplitude tensor
/// (row index = first qubit). Sites must differ; the tensor must be
/// normalized to 1e-9.
MultiQubitState entangle(const QFTbit& q1, const QFTbit& q2,
                         const std::array<std::array<Complex, 2>, 2>& amplitudes);

/// How a dressed state responds to a gauge transformation: the sampled
/// per-anchor multiplier lambda(x), the measured global phase (lambda at the
/// state's own site), and the worst deviation of any sample from it.
struct GaugeActionReport {
    std::vector<std::pair<Site, Complex>> multipliers;
    Complex global_phase{1.0, 0.0};
    double max_local_deviation = 0.0;
};

/// Deterministic anchor-site sample: every site when count >= volume, else
/// `count` distinct seeded picks.
std::vector<Site> anchor_sample(const Lattice& lat, int count, std::uint64_t seed);

/// Total multiplier lambda(x) = exp(-i q alpha(x)) * (dressing factor after)
/// / (dressing factor before), evaluated at the qubit's site and at each
/// sampled anchor. For a constraint-satisfying coulomb/custom kernel the
/// result is the x-independent phase exp(-i q mean(alpha)).
GaugeActionReport gauge_action(const QFTbit& q, const VectorField& a, const GaugeTransform& g,
                               std::span<const Site> anchors);

/// Multiplier of an n-qubit state: product of the constituents' multipliers.
/// Anchor sampling translates the whole configuration rigidly by each
/// sampled offset.
GaugeActionReport gauge_action(const MultiQubitState& state, const VectorField& a,
                               const GaugeTransform& g, std::span<const Site> offsets);

/// Spread (max - min, radians) of the undressed matter phase angle
/// -q*alpha over the sample: the bare non-invariance witness.
double bare_phase_spread(const GaugeTransform& g, std::span<const Site> anchors);

/// exp(i (Phi_1 - Phi_2)) for two dressings of the same charge. Requires the
/// kernels' divergences to agree to `divergence_tol`, otherwise the phase
/// would be gauge-dependent and a DivergenceMismatchError is thrown.
Complex overlap_phase(const DressingKernel& k1, const DressingKernel& k2, const VectorField& a,
                      Site x, double e, double divergence_tol = 1e-10);

/// Von Neumann entropy (natural log) of the reduced state across the cut.
/// Two-qubit states only.
double entanglement_entropy(const MultiQubitState& state, int cut);

} // namespace dressage
