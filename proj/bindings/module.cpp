// Python bindings for the main operations: kernel norms, twists, spectra,
// partition-of-unity certificates and Hoelder sweeps.

#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "magspec/analysis.hpp"
#include "magspec/config.hpp"
#include "magspec/errors.hpp"
#include "magspec/io.hpp"
#include "magspec/operators.hpp"
#include "magspec/spectral.hpp"

namespace py = pybind11;
using namespace magspec;

PYBIND11_MODULE(_core, m) {
    m.attr("__version__") = "0.1.0";

    py::register_exception<ConfigError>(m, "ConfigError", PyExc_ValueError);
    py::register_exception<NumericError>(m, "NumericError",
                                         PyExc_ArithmeticError);

    py::class_<Grid, std::shared_ptr<Grid>>(m, "Grid")
        .def(py::init<int, double, double>(), py::arg("dim"), py::arg("L"),
             py::arg("h"))
        .def_property_readonly("dim", &Grid::dim)
        .def_property_readonly("extent", &Grid::extent)
        .def_property_readonly("spacing", &Grid::spacing)
        .def_property_readonly("weight", &Grid::weight)
        .def_property_readonly("size", &Grid::size)
        .def("diameter", &Grid::diameter)
        .def("point", [](const Grid& g, int i) {
            return std::vector<double>{g.point(i)[0], g.point(i)[1]};
        });

    py::class_<KernelOperator>(m, "KernelOperator")
        .def(py::init([](std::shared_ptr<Grid> grid, const Matrix& entries,
                         bool hermitian) {
                 return KernelOperator(std::move(grid), entries, hermitian);
             }),
             py::arg("grid"), py::arg("entries"), py::arg("hermitian") = false)
        .def_property_readonly("entries",
                               [](const KernelOperator& k) {
                                   return k.entries();
                               })
        .def_property_readonly("hermitian", &KernelOperator::hermitian)
        .def_property_readonly("grid",
                               [](const KernelOperator& k) {
                                   return std::make_shared<Grid>(k.grid());
                               })
        .def("to_json", &kernel_to_json);
    m.def("kernel_from_json", &kernel_from_json);

    py::class_<PhaseFunction>(m, "PhaseFunction")
        .def(py::init([](std::function<double(const Point&, const Point&)> f,
                         double flux_constant) {
                 return PhaseFunction{std::move(f), flux_constant};
             }),
             py::arg("eval"), py::arg("flux_constant"))
        .def_readonly("flux_constant", &PhaseFunction::flux_constant)
        .def("__call__",
             [](const PhaseFunction& p, const Point& x, const Point& y) {
                 return p(x, y);
             })
        .def_static("zero", &PhaseFunction::zero)
        .def_static("symmetric_gauge", &PhaseFunction::symmetric_gauge)
        .def_static("sine", &PhaseFunction::sine)
        .def_static("quadratic", &PhaseFunction::quadratic);

    py::class_<PhaseReport>(m, "PhaseReport")
        .def_readonly("max_antisymmetry_violation",
                      &PhaseReport::max_antisymmetry_violation)
        .def_readonly("max_flux_ratio", &PhaseReport::max_flux_ratio)
        .def_readonly("ok", &PhaseReport::pass);

    py::class_<SHNormResult>(m, "SHNormResult")
        .def_readonly("value", &SHNormResult::value)
        .def_readonly("alpha", &SHNormResult::alpha)
        .def_readonly("achieved_at", &SHNormResult::achieved_at)
        .def_readonly("achieved_on_row", &SHNormResult::achieved_on_row);

    py::class_<Spectrum>(m, "Spectrum")
        .def_readonly("values", &Spectrum::values)
        .def_readonly("source_norm", &Spectrum::source_norm);

    py::class_<MagneticField>(m, "MagneticField")
        .def_static("zero", &MagneticField::zero)
        .def_static("constant", &MagneticField::constant)
        .def_readonly("dim", &MagneticField::dim)
        .def_readonly("sup_norm", &MagneticField::sup_norm);

    py::enum_<ModelKind>(m, "ModelKind")
        .value("harper", ModelKind::harper)
        .value("mag_schrodinger", ModelKind::mag_schrodinger)
        .value("longrange", ModelKind::longrange);
    py::enum_<DecayType>(m, "DecayType")
        .value("exponential", DecayType::exponential)
        .value("power", DecayType::power);

    py::class_<ModelSpec>(m, "ModelSpec")
        .def(py::init([](ModelKind kind, std::shared_ptr<Grid> grid, double J,
                         DecayType decay_type, double decay_rate,
                         double potential_lambda, double potential_sigma) {
                 ModelSpec s;
                 s.kind = kind;
                 s.grid = std::move(grid);
                 s.hopping = J;
                 s.decay_type = decay_type;
                 s.decay_rate = decay_rate;
                 s.potential_lambda = potential_lambda;
                 s.potential_sigma = potential_sigma;
                 return s;
             }),
             py::arg("kind"), py::arg("grid"), py::arg("J") = 1.0,
             py::arg("decay_type") = DecayType::exponential,
             py::arg("decay_rate") = 1.0, py::arg("potential_lambda") = 1.0,
             py::arg("potential_sigma") = 0.6180339887498949)
        .def("alpha_model", &ModelSpec::alpha_model);

    py::class_<HarperModel>(m, "HarperModel")
        .def_readonly("H", &HarperModel::H)
        .def_readonly("phi", &HarperModel::phi);

    py::class_<PartitionOfUnity>(m, "PartitionOfUnity")
        .def_property_readonly("b", &PartitionOfUnity::b)
        .def_property_readonly("n_centers", &PartitionOfUnity::n_centers)
        .def("value", &PartitionOfUnity::value)
        .def("support", &PartitionOfUnity::support)
        .def("neighbors", &PartitionOfUnity::neighbors)
        .def("max_neighbor_count", &PartitionOfUnity::max_neighbor_count)
        .def("max_cover_count", &PartitionOfUnity::max_cover_count);

    py::class_<DefectReport>(m, "DefectReport")
        .def_readonly("b", &DefectReport::b)
        .def_readonly("z", &DefectReport::z)
        .def_readonly("norm_S", &DefectReport::norm_S)
        .def_readonly("norm_S1", &DefectReport::norm_S1)
        .def_readonly("norm_S2", &DefectReport::norm_S2)
        .def_readonly("bound_value", &DefectReport::bound_value)
        .def_readonly("certified", &DefectReport::certified);

    py::class_<ResolventCertificate>(m, "ResolventCertificate")
        .def_readonly("in_resolvent", &ResolventCertificate::in_resolvent)
        .def_readonly("margin", &ResolventCertificate::margin);

    py::class_<SweepTable>(m, "SweepTable")
        .def_readonly("b", &SweepTable::b)
        .def_readonly("value", &SweepTable::value);

    py::class_<HolderFit>(m, "HolderFit")
        .def_readonly("slope", &HolderFit::slope)
        .def_readonly("log_constant", &HolderFit::log_constant)
        .def_readonly("r_squared", &HolderFit::r_squared)
        .def_readonly("sup_ratio", &HolderFit::sup_ratio)
        .def_readonly("beta_ref", &HolderFit::beta_ref)
        .def_readonly("ratio_stable", &HolderFit::ratio_stable);

    m.def("sh_norm", &sh_norm, py::arg("T"), py::arg("alpha"));
    m.def("truncate", &magspec::truncate, py::arg("T"), py::arg("M"));
    m.def("uniformity_defect", &uniformity_defect, py::arg("T"), py::arg("M"));
    m.def("twist",
          py::overload_cast<const KernelOperator&, const PhaseFunction&,
                            double>(&twist),
          py::arg("T"), py::arg("phi"), py::arg("b"));
    m.def("validate_phase", &validate_phase, py::arg("phi"), py::arg("grid"),
          py::arg("n_triples"), py::arg("seed") = 0x5eed);

    m.def("eigvalsh", &eigvalsh);
    m.def("hausdorff", &hausdorff);
    m.def("spectral_distance", &spectral_distance);
    m.def("op_norm", &op_norm);

    m.def("transverse_gauge",
          [](const MagneticField& B, const Point& x) {
              return transverse_gauge(B, x);
          });
    m.def("line_phase",
          py::overload_cast<const MagneticField&>(&line_phase));
    m.def("build_harper",
          py::overload_cast<const ModelSpec&, const PhaseFunction&>(
              &build_harper));
    m.def("build_mag_schrodinger",
          py::overload_cast<const ModelSpec&, const MagneticField&, double>(
              &build_mag_schrodinger));
    m.def("resolvent", &resolvent);

    m.def("build_partition",
          [](std::shared_ptr<Grid> grid, double b) {
              return build_partition(std::move(grid), b);
          });
    m.def("defect", &defect, py::arg("H"), py::arg("phi"), py::arg("b"),
          py::arg("z"), py::arg("P"), py::arg("eps") = 1.0);
    m.def("defect_split",
          [](const KernelOperator& H, const PhaseFunction& phi, double b,
             Complex z, const PartitionOfUnity& P) {
              const DefectSplit s = defect_split(H, phi, b, z, P);
              return py::make_tuple(s.S1, s.S2);
          });
    m.def("certify_resolvent_point", &certify_resolvent_point);

    m.def("default_b_grid", &default_b_grid, py::arg("grid"), py::arg("b_min"),
          py::arg("b_max"), py::arg("points_per_decade") = 6);
    m.def("sweep_hausdorff", &sweep_hausdorff, py::arg("spec"), py::arg("phi"),
          py::arg("b_grid"), py::arg("b0") = 0.0, py::arg("workers") = 1);
    m.def("sweep_defect", &sweep_defect, py::arg("spec"), py::arg("phi"),
          py::arg("z"), py::arg("b_grid"), py::arg("workers") = 1);
    m.def("fit_holder", &fit_holder, py::arg("table"), py::arg("beta_ref"));
}
