#include "dressage/field_io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <numbers>
#include <sstream>

#include "dressage/random.hpp"

namespace dressage {

namespace {

constexpr const char* magic = "dressage-field";
constexpr const char* version = "v1";

struct FieldHeader {
    std::vector<int> dims;
    int components = 0;
};

void write_header(std::ostream& os, const Lattice& lat, int components) {
    os << magic << ' ' << version << ' ' << lat.ndim();
    for (int d = 0; d < lat.ndim(); ++d)
        os << ' ' << lat.extent(d);
    os << ' ' << components << '\n';
}

FieldHeader read_header(std::istream& is) {
    std::string word, ver;
    is >> word >> ver;
    if (!is || word != magic || ver != version)
        throw IoError("not a dressage-field v1 file");
    int ndim = 0;
    is >> ndim;
    if (!is || ndim < 1 || ndim > Lattice::max_ndim)
        throw IoError("field header declares an unsupported rank");
    FieldHeader h;
    h.dims.resize(static_cast<std::size_t>(ndim));
    for (int& n : h.dims) {
        is >> n;
        if (!is)
            throw IoError("field header is truncated");
    }
    is >> h.components;
    if (!is || h.components < 1)
        throw IoError("field header declares no components");
    return h;
}

std::vector<double> read_values(std::istream& is, std::size_t n) {
    std::vector<double> out(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (!(is >> out[i]))
            throw IoError("field body is truncated (expected " + std::to_string(n) + " values)");
        if (!std::isfinite(out[i]))
            throw IoError("field body contains a non-finite value");
    }
    return out;
}

std::ofstream open_out(const std::string& path) {
    std::ofstream os(path);
    if (!os)
        throw IoError("cannot open '" + path + "' for writing");
    return os;
}

std::ifstream open_in(const std::string& path) {
    std::ifstream is(path);
    if (!is)
        throw IoError("cannot open '" + path + "' for reading");
    return is;
}

} // namespace

std::string format_g17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

void write_field(std::ostream& os, const ScalarField& f) {
    write_header(os, f.lattice(), 1);
    for (Site s = 0; s < f.size(); ++s)
        os << format_g17(f[s]) << '\n';
}

void write_field(std::ostream& os, const VectorField& f) {
    write_header(os, f.lattice(), f.ncomp());
    for (Site s = 0; s < f.lattice().volume(); ++s) {
        for (int mu = 0; mu < f.ncomp(); ++mu) {
            if (mu)
                os << ' ';
            os << format_g17(f.at(mu, s));
        }
        os << '\n';
    }
}

void write_field_file(const std::string& path, const ScalarField& f) {
    auto os = open_out(path);
    write_field(os, f);
}

void write_field_file(const std::string& path, const VectorField& f) {
    auto os = open_out(path);
    write_field(os, f);
}

ScalarField read_scalar_field(std::istream& is) {
    const FieldHeader h = read_header(is);
    if (h.components != 1)
        throw IoError("expected a scalar field, file has " + std::to_string(h.components) +
                      " components");
    Lattice lat(h.dims);
    return {lat, read_values(is, static_cast<std::size_t>(lat.volume()))};
}

VectorField read_vector_field(std::istream& is) {
    const FieldHeader h = read_header(is);
    Lattice lat(h.dims);
    if (h.components != lat.ndim())
        throw IoError("expected " + std::to_string(lat.ndim()) + " components, file has " +
                      std::to_string(h.components));
    const auto values =
        read_values(is, static_cast<std::size_t>(lat.volume()) *
                            static_cast<std::size_t>(lat.ndim()));
    VectorField out(lat);
    std::size_t i = 0;
    for (Site s = 0; s < lat.volume(); ++s)
        for (int mu = 0; mu < lat.ndim(); ++mu)
            out.at(mu, s) = values[i++];
    return out;
}

ScalarField read_scalar_field_file(const std::string& path) {
    auto is = open_in(path);
    return read_scalar_field(is);
}

VectorField read_vector_field_file(const std::string& path) {
    auto is = open_in(path);
    return read_vector_field(is);
}

nlohmann::json kernel_sidecar(const DressingKernel& k) {
    nlohmann::json doc;
    doc["kind"] = to_string(k.kind());
    doc["divergence_residual"] = k.divergence_residual();
    if (k.sink_offset())
        doc["sink_offset"] = *k.sink_offset();
    else
        doc["sink_offset"] = nullptr;
    return doc;
}

void save_kernel(const DressingKernel& k, const std::string& base_path) {
    write_field_file(base_path + ".field", k.field());
    auto os = open_out(base_path + ".json");
    os << kernel_sidecar(k).dump(2) << '\n';
}

DressingKernel load_kernel_files(const std::string& base_path, double coulomb_tolerance,
                                 double path_tolerance) {
    VectorField data = read_vector_field_file(base_path + ".field");
    auto is = open_in(base_path + ".json");
    nlohmann::json doc;
    try {
        is >> doc;
    } catch (const nlohmann::json::exception& e) {
        throw IoError("kernel sidecar '" + base_path + ".json' is not valid JSON: " + e.what());
    }
    const KernelKind kind = kernel_kind_from_string(doc.at("kind").get<std::string>());
    return load_kernel(std::move(data), kind, coulomb_tolerance, path_tolerance);
}

GaugeSpec gauge_spec_from_json(const nlohmann::json& doc) {
    GaugeSpec spec;
    spec.seed = doc.value("seed", std::uint64_t{0});
    spec.smoothness = doc.value("smoothness", 0.0);
    spec.constant_offset = doc.value("constant_offset", 0.0);
    spec.coupling = doc.value("coupling", 1.0);
    if (spec.smoothness < 0.0)
        throw ConfigError("smoothness must be nonnegative");
    if (spec.coupling == 0.0)
        throw ConfigError("coupling must be nonzero");
    return spec;
}

nlohmann::json gauge_spec_to_json(const GaugeSpec& spec) {
    return {{"seed", spec.seed},
            {"smoothness", spec.smoothness},
            {"constant_offset", spec.constant_offset},
            {"coupling", spec.coupling}};
}

GaugeTransform make_gauge_transform(const Lattice& lat, const GaugeSpec& spec) {
    ScalarField alpha = random_scalar(lat, spec.seed, spec.smoothness);
    if (spec.constant_offset != 0.0) {
        for (Site s = 0; s < alpha.size(); ++s)
            alpha[s] += spec.constant_offset;
    }
    return {std::move(alpha), spec.coupling};
}

nlohmann::json state_to_json(const MultiQubitState& state,
                             std::span<const std::string> kernel_ids) {
    if (kernel_ids.size() != state.qubits().size())
        throw ConfigError("need one kernel id per qubit");
    nlohmann::json doc;
    auto& sites = doc["sites"] = nlohmann::json::array();
    auto& charges = doc["charges"] = nlohmann::json::array();
    auto& ids = doc["kernel_ids"] = nlohmann::json::array();
    for (std::size_t i = 0; i < state.qubits().size(); ++i) {
        sites.push_back(state.qubits()[i].site);
        charges.push_back(state.qubits()[i].charge_sign);
        ids.push_back(kernel_ids[i]);
    }
    auto& re = doc["amplitudes_re"] = nlohmann::json::array();
    auto& im = doc["amplitudes_im"] = nlohmann::json::array();
    for (const Complex& c : state.amplitudes()) {
        re.push_back(c.real());
        im.push_back(c.imag());
    }
    return doc;
}

void write_profile_csv(std::ostream& os, const RadialProfile& profile, double e) {
    os << "r,mean_E,count,continuum_E,rel_dev\n";
    for (const RadialShell& shell : profile.shells) {
        double continuum = std::nan("");
        double rel_dev = std::nan("");
        if (profile.ndim == 3 && shell.radius > 0.0) {
            continuum = e / (4.0 * std::numbers::pi * shell.radius * shell.radius);
            rel_dev = std::abs(shell.mean_magnitude - continuum) / std::abs(continuum);
        }
        os << format_g17(shell.radius) << ',' << format_g17(shell.mean_magnitude) << ','
           << shell.count << ',' << format_g17(continuum) << ',' << format_g17(rel_dev) << '\n';
    }
}

} // namespace dressage
