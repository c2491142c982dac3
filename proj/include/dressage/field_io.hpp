#pragma once

#include <iosfwd>
#include <string>

#include <json.hpp>

#include "dressage/dressing.hpp"
#include "dressage/gauge.hpp"
#include "dressage/observables.hpp"
#include "dressage/qstates.hpp"

namespace dressage {

/// Text format "dressage-field v1": a header line
///   dressage-field v1 <D> <N_0> ... <N_{D-1}> <components>
/// followed by one whitespace-separated row of components per site in
/// row-major order, 17 significant digits.
void write_field(std::ostream& os, const ScalarField& f);
void write_field(std::ostream& os, const VectorField& f);
void write_field_file(const std::string& path, const ScalarField& f);
void write_field_file(const std::string& path, const VectorField& f);

ScalarField read_scalar_field(std::istream& is);
VectorField read_vector_field(std::istream& is);
ScalarField read_scalar_field_file(const std::string& path);
VectorField read_vector_field_file(const std::string& path);

/// Kernel sidecar document: {"kind", "divergence_residual", "sink_offset"}.
nlohmann::json kernel_sidecar(const DressingKernel& k);

/// Writes <base>.field plus <base>.json.
void save_kernel(const DressingKernel& k, const std::string& base_path);

/// Reads the pair back and revalidates the divergence invariant for the
/// sidecar's declared kind.
DressingKernel load_kernel_files(const std::string& base_path, double coulomb_tolerance = 1e-10,
                                 double path_tolerance = 1e-12);

/// Gauge transform recipe: {"seed", "smoothness", "constant_offset",
/// "coupling"}. The generated alpha is mean-free; constant_offset shifts it
/// uniformly afterwards so the torus global phase can be dialed in on
/// purpose.
struct GaugeSpec {
    std::uint64_t seed = 0;
    double smoothness = 0.0;
    double constant_offset = 0.0;
    double coupling = 1.0;
};

GaugeSpec gauge_spec_from_json(const nlohmann::json& doc);
nlohmann::json gauge_spec_to_json(const GaugeSpec& spec);
GaugeTransform make_gauge_transform(const Lattice& lat, const GaugeSpec& spec);

/// State document: {"sites", "charges", "kernel_ids", "amplitudes_re",
/// "amplitudes_im"}.
nlohmann::json state_to_json(const MultiQubitState& state,
                             std::span<const std::string> kernel_ids);

/// CSV rows `r,mean_E,count,continuum_E,rel_dev`, 17 significant digits.
/// The continuum columns are NaN outside 3D.
void write_profile_csv(std::ostream& os, const RadialProfile& profile, double e);

/// printf %.17g rendering used across all text output.
std::string format_g17(double v);

} // namespace dressage
