#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "motivic/json_io.hpp"
#include "motivic/verify.hpp"

namespace py = pybind11;
using namespace motivic;
using io::json;

namespace {

std::string rational_str(const Rational& r) { return r.get_str(); }

CurveGerm germ_of(const std::vector<std::pair<std::string, std::string>>& branches) {
  CurveGerm g;
  for (const auto& [x, y] : branches) g.branches.push_back(Branch::parse(x, y));
  return g;
}

std::string checks_json(const std::vector<Check>& c) { return io::to_json(c).dump(); }

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact motivic measures, power structures and plane curve invariants";

  static py::exception<Error> error(m, "MotivicError");
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::set_error(error, (std::string(e.name()) + ": " + e.what()).c_str());
    }
  });

  py::class_<GClass>(m, "GClass")
      .def(py::init([](const std::string& s) { return parse_class(s); }))
      .def(py::init([](long v) { return GClass(v); }))
      .def_static("L", [] { return GClass::L(); })
      .def("__str__", &GClass::to_string)
      .def("__repr__", [](const GClass& g) { return "GClass('" + g.to_string() + "')"; })
      .def(py::self + py::self)
      .def(py::self - py::self)
      .def(py::self * py::self)
      .def(py::self / py::self)
      .def(py::self == py::self)
      .def(-py::self)
      .def("__pow__", [](const GClass& g, long e) { return g.pow(e); })
      .def("euler_char", [](const GClass& g) { return rational_str(g.euler_char()); })
      .def("specialize", [](const GClass& g, long q) { return rational_str(g.specialize(Integer(q))); })
      .def("virtual_dim", &GClass::virtual_dim)
      .def("to_json", [](const GClass& g) { return io::to_json(g).dump(); })
      .def_static("from_json", [](const std::string& s) { return io::class_from_json(json::parse(s)); });
  py::implicitly_convertible<long, GClass>();

  m.def("geometric_sum", &geometric_sum, py::arg("first"), py::arg("ratio"));

  m.def(
      "power_coefficients",
      [](const std::string& series, const std::string& exponent, int order) {
        const ClassSeries r = power(parse_class_series(series, "t", order), parse_class(exponent), order);
        std::vector<std::string> out;
        for (int i = 0; i <= r.trunc(); ++i) out.push_back(r.coeff(i).to_string());
        return out;
      },
      py::arg("series"), py::arg("exponent"), py::arg("order"));
  m.def(
      "one_minus_t_pow",
      [](const std::string& m, int order) { return one_minus_t_pow(parse_class(m), order).to_string(); },
      py::arg("m"), py::arg("order"));
  m.def("moebius", &moebius);

  m.def(
      "invariants_json", [](const std::vector<std::pair<std::string, std::string>>& b) { return io::to_json(invariants(germ_of(b))).dump(); },
      py::arg("branches"));
  m.def(
      "is_degenerate", [](const std::string& x, const std::string& y) { return is_degenerate(Branch::parse(x, y)); }, py::arg("x"),
      py::arg("y"));
  m.def(
      "mult_sequence", [](const std::string& x, const std::string& y) { return mult_sequence(Branch::parse(x, y)); }, py::arg("x"),
      py::arg("y"));

  m.def(
      "lift_json",
      [](const std::string& f, const std::string& x, const std::string& y, int target, bool relaxed) {
        return io::to_json(lift_arc(PlanePoly::parse(f), Branch::parse(x, y), target, relaxed ? LiftMode::Relaxed : LiftMode::Strict))
            .dump();
      },
      py::arg("f"), py::arg("x"), py::arg("y"), py::arg("target"), py::arg("relaxed") = false);

  m.def(
      "measure_stratum", [](const std::string& spec) { return measure(io::stratum_from_json(json::parse(spec))); }, py::arg("spec"));
  m.def("config_class_p1", &config_class_p1, py::arg("k"));
  m.def("kouchnirenko_count", &kouchnirenko_count, py::arg("p"), py::arg("q"));
  m.def(
      "modality_formula", [](int p, int q) { return rational_str(modality_formula(p, q)); }, py::arg("p"), py::arg("q"));
  m.def("example1_checks_json", [](int k) { return checks_json(example1(k).checks); });
  m.def("example3_checks_json", [](int p, int q) { return checks_json(example3(p, q).checks); });
  m.def("example2_sum_checks_json", [] { return checks_json(example2_sum().checks); });

  m.def(
      "pgen",
      [](const std::string& resolution, int order, bool as_printed) {
        const ResolutionData r = io::resolution_from_json(json::parse(resolution));
        return pgen(r, order, as_printed ? PgenSign::AsPrinted : PgenSign::Corrected).to_string();
      },
      py::arg("resolution"), py::arg("order"), py::arg("as_printed") = false);

  m.def(
      "verify_json",
      [](const std::string& suite, std::uint64_t seed, int instances) {
        VerifyOptions opt;
        opt.seed = seed;
        opt.instances = instances;
        return checks_json(run_suite(suite, opt));
      },
      py::arg("suite"), py::arg("seed") = VerifyOptions{}.seed, py::arg("instances") = 0);
}
