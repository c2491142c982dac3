#include "dressage/qstates.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <unordered_set>

#include "dressage/summation.hpp"

namespace dressage {

namespace {

constexpr double normalization_tol = 1e-9;

void require_charge_sign(int charge_sign) {
    if (charge_sign != +1 && charge_sign != -1)
        throw ConfigError("charge sign must be +1 or -1, got " + std::to_string(charge_sign));
}

/// Per-anchor multiplier exponent theta(x) with lambda(x) = exp(-i theta(x)):
/// theta(x) = q * (alpha(x) + Phi'(x) - Phi(x)), dressings evaluated
/// spectrally for all anchors at once.
ScalarField multiplier_exponent_field(const ChargeSlot& q, const VectorField& a,
                                      const GaugeTransform& g) {
    require_same_lattice(q.kernel->lattice(), a.lattice());
    require_same_lattice(a.lattice(), g.alpha.lattice());
    const VectorField transformed = apply_gauge_transform(a, g);
    const ScalarField before = dressing_exponent_field(*q.kernel, a, g.coupling);
    const ScalarField after = dressing_exponent_field(*q.kernel, transformed, g.coupling);
    ScalarField theta(a.lattice());
    const double charge = static_cast<double>(q.charge_sign);
    for (Site s = 0; s < theta.size(); ++s)
        theta[s] = charge * (g.alpha[s] + after[s] - before[s]);
    return theta;
}

GaugeActionReport report_from_samples(const std::vector<std::pair<Site, Complex>>& samples,
                                      Complex global) {
    GaugeActionReport report;
    report.multipliers = samples;
    report.global_phase = global;
    double worst = 0.0;
    for (const auto& [site, lambda] : samples)
        worst = std::max(worst, std::abs(lambda - global));
    report.max_local_deviation = worst;
    return report;
}

} // namespace

QFTbit make_qftbit(Site x, Complex a, Complex b, int charge_sign,
                   std::shared_ptr<const DressingKernel> kernel) {
    if (!kernel)
        throw ConfigError("a QFTbit needs a dressing kernel");
    kernel->lattice().require_site(x);
    require_charge_sign(charge_sign);
    const double deficit = std::norm(a) + std::norm(b) - 1.0;
    if (std::abs(deficit) > normalization_tol)
        throw NormalizationError("|a|^2 + |b|^2 deviates from 1 by " + std::to_string(deficit),
                                 deficit);
    return {x, a, b, charge_sign, std::move(kernel)};
}

MultiQubitState::MultiQubitState(std::vector<ChargeSlot> qubits, std::vector<Complex> amplitudes)
    : qubits_(std::move(qubits)), amplitudes_(std::move(amplitudes)) {
    if (qubits_.empty())
        throw ArityError("a multi-qubit state needs at least one qubit");
    const std::size_t expected = std::size_t{1} << qubits_.size();
    if (amplitudes_.size() != expected)
        throw ArityError("amplitude tensor has " + std::to_string(amplitudes_.size()) +
                         " entries, expected " + std::to_string(expected));
    for (const ChargeSlot& q : qubits_) {
        if (!q.kernel)
            throw ConfigError("every qubit needs a dressing kernel");
        require_same_lattice(q.kernel->lattice(), qubits_.front().kernel->lattice());
        q.kernel->lattice().require_site(q.site);
        require_charge_sign(q.charge_sign);
    }
    Kahan norm;
    for (const Complex& c : amplitudes_)
        norm.add(std::norm(c));
    const double deficit = norm.value() - 1.0;
    if (std::abs(deficit) > normalization_tol)
        throw NormalizationError("amplitude tensor norm deviates from 1 by " +
                                     std::to_string(deficit),
                                 deficit);
}

MultiQubitState entangle(const QFTbit& q1, const QFTbit& q2,
                         const std::array<std::array<Complex, 2>, 2>& amplitudes) {
    require_same_lattice(q1.kernel->lattice(), q2.kernel->lattice());
    if (q1.site == q2.site)
        throw SiteCollisionError("entangled qubits must sit on distinct sites");
    std::vector<ChargeSlot> slots{{q1.site, q1.charge_sign, q1.kernel},
                                  {q2.site, q2.charge_sign, q2.kernel}};
    std::vector<Complex> amps{amplitudes[0][0], amplitudes[0][1], amplitudes[1][0],
                              amplitudes[1][1]};
    return MultiQubitState(std::move(slots), std::move(amps));
}

std::vector<Site> anchor_sample(const Lattice& lat, int count, std::uint64_t seed) {
    const Site v = lat.volume();
    if (count <= 0)
        throw ConfigError("anchor sample count must be positive");
    if (static_cast<Site>(count) >= v) {
        std::vector<Site> all(static_cast<std::size_t>(v));
        for (Site s = 0; s < v; ++s)
            all[static_cast<std::size_t>(s)] = s;
        return all;
    }
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<Site> pick(0, v - 1);
    std::unordered_set<Site> seen;
    std::vector<Site> out;
    out.reserve(static_cast<std::size_t>(count));
    while (out.size() < static_cast<std::size_t>(count)) {
        const Site s = pick(rng);
        if (seen.insert(s).second)
            out.push_back(s);
    }
    return out;
}

GaugeActionReport gauge_action(const QFTbit& q, const VectorField& a, const GaugeTransform& g,
                               std::span<const Site> anchors) {
    const ScalarField theta =
        multiplier_exponent_field({q.site, q.charge_sign, q.kernel}, a, g);
    std::vector<std::pair<Site, Complex>> samples;
    samples.reserve(anchors.size() + 1);
    samples.emplace_back(q.site, std::polar(1.0, -theta[q.site]));
    for (Site x : anchors) {
        theta.lattice().require_site(x);
        if (x != q.site)
            samples.emplace_back(x, std::polar(1.0, -theta[x]));
    }
    return report_from_samples(samples, samples.front().second);
}

GaugeActionReport gauge_action(const MultiQubitState& state, const VectorField& a,
                               const GaugeTransform& g, std::span<const Site> offsets) {
    const Lattice& lat = state.lattice();
    std::vector<ScalarField> thetas;
    thetas.reserve(state.qubits().size());
    for (const ChargeSlot& q : state.qubits())
        thetas.push_back(multiplier_exponent_field(q, a, g));

    auto total_at = [&](Site offset) {
        Kahan acc;
        for (std::size_t i = 0; i < thetas.size(); ++i)
            acc.add(thetas[i][lat.add(state.qubits()[i].site, offset)]);
        return std::polar(1.0, -acc.value());
    };

    std::vector<std::pair<Site, Complex>> samples;
    samples.reserve(offsets.size() + 1);
    samples.emplace_back(0, total_at(0));
    for (Site off : offsets) {
        lat.require_site(off);
        if (off != 0)
            samples.emplace_back(off, total_at(off));
    }
    return report_from_samples(samples, samples.front().second);
}

double bare_phase_spread(const GaugeTransform& g, std::span<const Site> anchors) {
    if (anchors.empty())
        throw ConfigError("bare phase spread needs at least one anchor");
    double lo = g.alpha[anchors.front()];
    double hi = lo;
    for (Site x : anchors) {
        g.alpha.lattice().require_site(x);
        lo = std::min(lo, g.alpha[x]);
        hi = std::max(hi, g.alpha[x]);
    }
    return hi - lo;
}

Complex overlap_phase(const DressingKernel& k1, const DressingKernel& k2, const VectorField& a,
                      Site x, double e, double divergence_tol) {
    require_same_lattice(k1.lattice(), k2.lattice());
    const ScalarField d1 = k1.divergence();
    const ScalarField d2 = k2.divergence();
    double worst = 0.0;
    for (Site s = 0; s < d1.size(); ++s)
        worst = std::max(worst, std::abs(d1[s] - d2[s]));
    if (worst > divergence_tol)
        throw DivergenceMismatchError(
            "kernels source different charge layouts (max divergence gap " +
            std::to_string(worst) + "); their relative phase would be gauge-dependent");
    const double phi1 = dressing_phase(k1, a, x, e).exponent;
    const double phi2 = dressing_phase(k2, a, x, e).exponent;
    return std::polar(1.0, phi1 - phi2);
}

double entanglement_entropy(const MultiQubitState& state, int cut) {
    if (state.num_qubits() != 2)
        throw ArityError("entanglement entropy is implemented for exactly two qubits");
    if (cut != 0 && cut != 1)
        throw ArityError("cut index must be 0 or 1");

    // Reduced density matrix of the kept qubit: rho = M M^dagger for cut 0,
    // M^T conj(M) for cut 1, with M the 2x2 amplitude matrix.
    const auto& amp = state.amplitudes();
    Complex m[2][2] = {{amp[0], amp[1]}, {amp[2], amp[3]}};
    Complex rho[2][2] = {};
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            for (int k = 0; k < 2; ++k) {
                if (cut == 0)
                    rho[i][j] += m[i][k] * std::conj(m[j][k]);
                else
                    rho[i][j] += m[k][i] * std::conj(m[k][j]);
            }

    const double tr = rho[0][0].real() + rho[1][1].real();
    const double det = (rho[0][0] * rho[1][1] - rho[0][1] * rho[1][0]).real();
    const double disc = std::sqrt(std::max(0.0, tr * tr - 4.0 * det));
    const double eig[2] = {(tr + disc) / 2.0, (tr - disc) / 2.0};

    double entropy = 0.0;
    for (double lambda : eig) {
        if (lambda > 0.0)
            entropy -= lambda * std::log(lambda);
    }
    return entropy;
}

} // namespace dressage
