#include <pybind11/complex.h>
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "dressage/calculus.hpp"
#include "dressage/field_io.hpp"
#include "dressage/observables.hpp"
#include "dressage/random.hpp"
#include "dressage/spectral.hpp"
#include "dressage/suite.hpp"

namespace py = pybind11;
using namespace dressage;

namespace {

std::vector<py::ssize_t> numpy_shape(const Lattice& lat) {
    std::vector<py::ssize_t> shape;
    for (int d = 0; d < lat.ndim(); ++d)
        shape.push_back(lat.extent(d));
    return shape;
}

py::array_t<double> scalar_to_numpy(const ScalarField& f) {
    py::array_t<double> out(numpy_shape(f.lattice()));
    std::copy(f.values().begin(), f.values().end(), out.mutable_data());
    return out;
}

ScalarField scalar_from_numpy(const py::array_t<double, py::array::c_style | py::array::forcecast>& arr) {
    std::vector<int> dims;
    for (py::ssize_t d = 0; d < arr.ndim(); ++d)
        dims.push_back(static_cast<int>(arr.shape(d)));
    Lattice lat(dims);
    std::vector<double> values(arr.data(), arr.data() + arr.size());
    return {lat, std::move(values)};
}

py::array_t<double> vector_to_numpy(const VectorField& f) {
    std::vector<py::ssize_t> shape{f.ncomp()};
    for (py::ssize_t s : numpy_shape(f.lattice()))
        shape.push_back(s);
    py::array_t<double> out(shape);
    std::copy(f.raw().begin(), f.raw().end(), out.mutable_data());
    return out;
}

VectorField vector_from_numpy(const py::array_t<double, py::array::c_style | py::array::forcecast>& arr) {
    if (arr.ndim() < 2)
        throw DimensionError("vector field array needs shape (D, N_0, ..., N_{D-1})");
    std::vector<int> dims;
    for (py::ssize_t d = 1; d < arr.ndim(); ++d)
        dims.push_back(static_cast<int>(arr.shape(d)));
    Lattice lat(dims);
    if (arr.shape(0) != lat.ndim())
        throw DimensionError("leading array axis must match the lattice rank");
    VectorField out(lat);
    std::copy(arr.data(), arr.data() + arr.size(), out.raw().begin());
    out.require_finite("vector field");
    return out;
}

std::array<std::array<Complex, 2>, 2>
tensor_from_numpy(const py::array_t<std::complex<double>, py::array::c_style | py::array::forcecast>& arr) {
    if (arr.ndim() != 2 || arr.shape(0) != 2 || arr.shape(1) != 2)
        throw ArityError("amplitude tensor must be 2x2");
    std::array<std::array<Complex, 2>, 2> out;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            out[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = arr.at(i, j);
    return out;
}

} // namespace

PYBIND11_MODULE(_dressage, m) {
    m.doc() = "Gauge-invariant dressed qubits over classical U(1) lattice backgrounds";

    auto base = py::register_exception<Error>(m, "DressageError", PyExc_RuntimeError);
    py::register_exception<DimensionError>(m, "DimensionError", base);
    py::register_exception<CapacityError>(m, "CapacityError", base);
    py::register_exception<DirectionError>(m, "DirectionError", base);
    py::register_exception<LatticeMismatchError>(m, "LatticeMismatchError", base);
    py::register_exception<NonNeutralSourceError>(m, "NonNeutralSourceError", base);
    py::register_exception<CouplingMismatchError>(m, "CouplingMismatchError", base);
    py::register_exception<EmptyPathError>(m, "EmptyPathError", base);
    py::register_exception<ConstraintViolationError>(m, "ConstraintViolationError", base);
    py::register_exception<SiteError>(m, "SiteError", base);
    py::register_exception<NormalizationError>(m, "NormalizationError", base);
    py::register_exception<SiteCollisionError>(m, "SiteCollisionError", base);
    py::register_exception<DivergenceMismatchError>(m, "DivergenceMismatchError", base);
    py::register_exception<ArityError>(m, "ArityError", base);
    py::register_exception<BinError>(m, "BinError", base);
    py::register_exception<ConfigError>(m, "ConfigError", base);

    py::class_<Lattice>(m, "Lattice")
        .def(py::init<std::vector<int>, Site>(), py::arg("dims"),
             py::arg("site_cap") = Lattice::default_site_cap)
        .def_property_readonly("ndim", &Lattice::ndim)
        .def_property_readonly("volume", &Lattice::volume)
        .def_property_readonly("dims", [](const Lattice& l) { return l.dims(); })
        .def("index",
             [](const Lattice& l, const std::vector<int>& coords) { return l.index(coords); })
        .def("coords", [](const Lattice& l, Site s) { return l.coords(s); })
        .def("neighbor", &Lattice::neighbor, py::arg("site"), py::arg("axis"), py::arg("step"))
        .def("__eq__", [](const Lattice& a, const Lattice& b) { return a == b; })
        .def("__repr__", [](const Lattice& l) {
            std::ostringstream os;
            os << "Lattice([";
            for (int d = 0; d < l.ndim(); ++d)
                os << (d ? "," : "") << l.extent(d);
            os << "])";
            return os.str();
        });

    py::class_<ScalarField>(m, "ScalarField")
        .def_property_readonly("lattice", &ScalarField::lattice)
        .def("to_numpy", &scalar_to_numpy)
        .def("sum", &ScalarField::sum)
        .def("mean", &ScalarField::mean)
        .def("max_abs", &ScalarField::max_abs)
        .def("__getitem__", [](const ScalarField& f, Site s) {
            f.lattice().require_site(s);
            return f[s];
        });
    m.def("scalar_field", &scalar_from_numpy, py::arg("array"),
          "ScalarField from a row-major numpy array; the shape fixes the lattice");

    py::class_<VectorField>(m, "VectorField")
        .def_property_readonly("lattice", &VectorField::lattice)
        .def("to_numpy", &vector_to_numpy)
        .def("max_abs", &VectorField::max_abs)
        .def("at", [](const VectorField& f, int mu, Site s) {
            f.lattice().require_axis(mu);
            f.lattice().require_site(s);
            return f.at(mu, s);
        });
    m.def("vector_field", &vector_from_numpy, py::arg("array"),
          "VectorField from a numpy array of shape (D, N_0, ..., N_{D-1})");

    py::class_<AntisymmetricTensorField>(m, "FieldStrength")
        .def_property_readonly("lattice", &AntisymmetricTensorField::lattice)
        .def("component", &AntisymmetricTensorField::component, py::arg("site"), py::arg("mu"),
             py::arg("nu"));

    // lattice calculus
    m.def("forward_diff", &forward_diff, py::arg("field"), py::arg("axis"));
    m.def("backward_diff", &backward_diff, py::arg("field"), py::arg("axis"));
    m.def("gradient_fwd", &gradient_fwd);
    m.def("gradient_bwd", &gradient_bwd);
    m.def("divergence_fwd", &divergence_fwd);
    m.def("divergence_bwd", &divergence_bwd);
    m.def("laplacian", &laplacian);
    m.def("sum_by_parts_residual", &sum_by_parts_residual, py::arg("v"), py::arg("s"));

    // spectral solvers
    m.def("solve_poisson", &solve_poisson, py::arg("src"), py::arg("neutrality_tol") = 1e-12);
    m.def("green_function", &green_function, py::arg("lattice"));
    m.def("spectral_lowpass", &spectral_lowpass, py::arg("field"), py::arg("smoothness"));
    m.def("spectral_convolution", &spectral_convolution, py::arg("f"), py::arg("a"));

    // reproducible random fields
    m.def("random_scalar", &random_scalar, py::arg("lattice"), py::arg("seed"),
          py::arg("smoothness") = 0.0);
    m.def("random_vector", &random_vector, py::arg("lattice"), py::arg("seed"),
          py::arg("smoothness") = 0.0);

    // gauge sector
    py::class_<GaugeTransform>(m, "GaugeTransform")
        .def(py::init<ScalarField, double>(), py::arg("alpha"), py::arg("coupling") = 1.0)
        .def_property_readonly("alpha", [](const GaugeTransform& g) { return g.alpha; })
        .def_readonly("coupling", &GaugeTransform::coupling);
    py::class_<StueckelbergField>(m, "StueckelbergField")
        .def(py::init<ScalarField, double>(), py::arg("sigma"), py::arg("coupling") = 1.0)
        .def_property_readonly("sigma", [](const StueckelbergField& s) { return s.sigma; })
        .def_readonly("coupling", &StueckelbergField::coupling);
    m.def("apply_gauge_transform", &apply_gauge_transform, py::arg("a"), py::arg("g"));
    m.def("transform_sigma", &transform_sigma, py::arg("sf"), py::arg("g"));
    m.def("field_strength", &field_strength, py::arg("a"));
    m.def("invariant_potential", &invariant_potential, py::arg("a"), py::arg("sf"));
    m.def(
        "make_gauge_transform",
        [](const Lattice& lat, std::uint64_t seed, double smoothness, double constant_offset,
           double coupling) {
            GaugeSpec spec{seed, smoothness, constant_offset, coupling};
            return make_gauge_transform(lat, spec);
        },
        py::arg("lattice"), py::arg("seed"), py::arg("smoothness") = 0.0,
        py::arg("constant_offset") = 0.0, py::arg("coupling") = 1.0);

    // dressing kernels
    py::class_<DressingKernel, std::shared_ptr<DressingKernel>>(m, "DressingKernel")
        .def_property_readonly("kind",
                               [](const DressingKernel& k) { return to_string(k.kind()); })
        .def_property_readonly("divergence_residual", &DressingKernel::divergence_residual)
        .def_property_readonly("background_charge_density",
                               &DressingKernel::background_charge_density)
        .def_property_readonly("sink_offset", [](const DressingKernel& k) {
            return k.sink_offset() ? py::cast(*k.sink_offset()) : py::none().cast<py::object>();
        })
        .def_property_readonly("field", [](const DressingKernel& k) { return k.field(); })
        .def("divergence", &DressingKernel::divergence)
        .def_property_readonly("lattice", &DressingKernel::lattice);
    m.def("coulomb_kernel", &coulomb_kernel, py::arg("lattice"));
    m.def(
        "path_kernel",
        [](const Lattice& lat, const std::string& path) {
            const auto steps = parse_path(path);
            return path_kernel(lat, steps);
        },
        py::arg("lattice"), py::arg("path"));
    m.def(
        "load_kernel",
        [](VectorField data, const std::string& kind, double coulomb_tol, double path_tol) {
            return load_kernel(std::move(data), kernel_kind_from_string(kind), coulomb_tol,
                               path_tol);
        },
        py::arg("data"), py::arg("kind"), py::arg("coulomb_tolerance") = 1e-10,
        py::arg("path_tolerance") = 1e-12);

    py::class_<DressingPhase>(m, "DressingPhase")
        .def_readonly("value", &DressingPhase::value)
        .def_readonly("exponent", &DressingPhase::exponent);
    m.def("dressing_phase", &dressing_phase, py::arg("kernel"), py::arg("a"), py::arg("x"),
          py::arg("e"));
    m.def("dressing_exponent_field", &dressing_exponent_field, py::arg("kernel"), py::arg("a"),
          py::arg("e"));
    m.def("phase_shift_under_gauge", &phase_shift_under_gauge, py::arg("kernel"), py::arg("a"),
          py::arg("g"), py::arg("x"));

    // QFTbits
    py::class_<QFTbit>(m, "QFTbit")
        .def_readonly("site", &QFTbit::site)
        .def_readonly("amp_zero", &QFTbit::amp_zero)
        .def_readonly("amp_one", &QFTbit::amp_one)
        .def_readonly("charge_sign", &QFTbit::charge_sign)
        .def_property_readonly("kernel", [](const QFTbit& q) { return q.kernel; });
    m.def("make_qftbit", &make_qftbit, py::arg("site"), py::arg("a"), py::arg("b"),
          py::arg("charge_sign"), py::arg("kernel"));

    py::class_<MultiQubitState>(m, "MultiQubitState")
        .def_property_readonly("num_qubits", &MultiQubitState::num_qubits)
        .def_property_readonly("amplitudes",
                               [](const MultiQubitState& s) { return s.amplitudes(); });
    m.def(
        "entangle",
        [](const QFTbit& q1, const QFTbit& q2,
           const py::array_t<std::complex<double>, py::array::c_style | py::array::forcecast>&
               amplitudes) { return entangle(q1, q2, tensor_from_numpy(amplitudes)); },
        py::arg("q1"), py::arg("q2"), py::arg("amplitudes"));
    m.def("entanglement_entropy", &entanglement_entropy, py::arg("state"), py::arg("cut"));

    py::class_<GaugeActionReport>(m, "GaugeActionReport")
        .def_readonly("multipliers", &GaugeActionReport::multipliers)
        .def_readonly("global_phase", &GaugeActionReport::global_phase)
        .def_readonly("max_local_deviation", &GaugeActionReport::max_local_deviation);
    m.def("anchor_sample", &anchor_sample, py::arg("lattice"), py::arg("count"), py::arg("seed"));
    m.def(
        "gauge_action",
        [](const QFTbit& q, const VectorField& a, const GaugeTransform& g,
           const std::vector<Site>& anchors) { return gauge_action(q, a, g, anchors); },
        py::arg("qftbit"), py::arg("a"), py::arg("g"), py::arg("anchors"));
    m.def(
        "multi_gauge_action",
        [](const MultiQubitState& s, const VectorField& a, const GaugeTransform& g,
           const std::vector<Site>& offsets) { return gauge_action(s, a, g, offsets); },
        py::arg("state"), py::arg("a"), py::arg("g"), py::arg("offsets"));
    m.def(
        "bare_phase_spread",
        [](const GaugeTransform& g, const std::vector<Site>& anchors) {
            return bare_phase_spread(g, anchors);
        },
        py::arg("g"), py::arg("anchors"));
    m.def("overlap_phase", &overlap_phase, py::arg("k1"), py::arg("k2"), py::arg("a"),
          py::arg("x"), py::arg("e"), py::arg("divergence_tol") = 1e-10);

    // observables
    m.def("electric_field", &electric_field, py::arg("kernel"), py::arg("x"), py::arg("e"));
    m.def("gauss_residual", &gauss_residual, py::arg("e_field"), py::arg("x"), py::arg("e"),
          py::arg("background"));
    py::class_<RadialShell>(m, "RadialShell")
        .def_readonly("radius", &RadialShell::radius)
        .def_readonly("mean_magnitude", &RadialShell::mean_magnitude)
        .def_readonly("count", &RadialShell::count);
    py::class_<RadialProfile>(m, "RadialProfile")
        .def_readonly("ndim", &RadialProfile::ndim)
        .def_readonly("shells", &RadialProfile::shells);
    m.def("radial_profile", &radial_profile, py::arg("e_field"), py::arg("x"), py::arg("bins"));
    m.def("coulomb_compare", &coulomb_compare, py::arg("profile"), py::arg("e"));

    // field files
    m.def("write_field_file",
          py::overload_cast<const std::string&, const ScalarField&>(&write_field_file),
          py::arg("path"), py::arg("field"));
    m.def("write_vector_field_file",
          py::overload_cast<const std::string&, const VectorField&>(&write_field_file),
          py::arg("path"), py::arg("field"));
    m.def("read_scalar_field_file", &read_scalar_field_file, py::arg("path"));
    m.def("read_vector_field_file", &read_vector_field_file, py::arg("path"));
    m.def("save_kernel", &save_kernel, py::arg("kernel"), py::arg("base_path"));
    m.def("load_kernel_files", &load_kernel_files, py::arg("base_path"),
          py::arg("coulomb_tolerance") = 1e-10, py::arg("path_tolerance") = 1e-12);

    // verification suite
    m.def(
        "run_full_suite",
        [](std::uint64_t seed, bool include_large) {
            SuiteConfig cfg;
            cfg.seed = seed;
            cfg.include_large = include_large;
            return run_full_suite(cfg).to_json(false).dump();
        },
        py::arg("seed") = 1, py::arg("include_large") = false,
        "Runs the self-check battery; returns the JSON report as a string");
}
