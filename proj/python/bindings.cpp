#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include "ffmea/defuzz.hpp"
#include "ffmea/errors.hpp"
#include "ffmea/fmea.hpp"
#include "ffmea/io.hpp"

namespace py = pybind11;
using namespace ffmea;

namespace {

py::dict fuzzify_dict(const LinguisticVariable& var, double x) {
  py::dict out;
  for (const auto& ld : fuzzify(var, x).degrees) out[py::str(ld.label)] = ld.degree;
  return out;
}

const LinguisticVariable& input_variable(const Fis& fis, const std::string& name) {
  for (const auto& v : fis.rule_base.inputs())
    if (v.name() == name) return v;
  throw ValidationError("unknown input variable '" + name + "' (expected S, O or D)");
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Traditional and fuzzy FMEA risk priority numbers";

  auto error = py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
  py::register_exception<ParameterError>(m, "ParameterError", error.ptr());
  py::register_exception<ConfigError>(m, "ConfigError", error.ptr());
  py::register_exception<ValidationError>(m, "ValidationError", error.ptr());
  py::register_exception<ParseError>(m, "ParseError", error.ptr());
  auto inference = py::register_exception<InferenceError>(m, "InferenceError", error.ptr());
  py::register_exception<NoRuleFiredError>(m, "NoRuleFiredError", inference.ptr());
  py::register_exception<DegenerateOutputError>(m, "DegenerateOutputError", inference.ptr());

  m.attr("DEFAULT_SAMPLES") = kDefaultSamples;

  py::class_<FactorWeights>(m, "FactorWeights")
      .def(py::init<double, double, double>(), py::arg("severity") = 0.4, py::arg("occurrence") = 0.3,
           py::arg("detection") = 0.3)
      .def_readwrite("severity", &FactorWeights::severity)
      .def_readwrite("occurrence", &FactorWeights::occurrence)
      .def_readwrite("detection", &FactorWeights::detection);

  py::class_<Fis>(m, "Fis")
      .def_property_readonly("rule_count", [](const Fis& f) { return f.rule_base.rules().size(); })
      .def_property_readonly("allow_incomplete", [](const Fis& f) { return f.allow_incomplete; })
      .def_property_readonly("output_universe", [](const Fis& f) {
        const auto& u = f.rule_base.output().universe();
        return py::make_tuple(u.lo, u.hi);
      })
      .def("fuzzify", [](const Fis& f, const std::string& var, double x) { return fuzzify_dict(input_variable(f, var), x); },
           py::arg("variable"), py::arg("x"), "Membership degree of x in each set of input S, O or D.")
      .def("infer",
           [](const Fis& f, double s, double o, double d, std::size_t samples) {
             const auto set = infer(f.rule_base, s, o, d, InferOptions{samples, f.allow_incomplete});
             std::vector<double> xs(set.size());
             for (std::size_t i = 0; i < xs.size(); ++i) xs[i] = set.abscissa(i);
             return py::make_tuple(xs, set.degrees);
           },
           py::arg("s"), py::arg("o"), py::arg("d"), py::arg("samples") = kDefaultSamples,
           "Aggregated output set as (abscissae, degrees).")
      .def("validate",
           [](const Fis& f) {
             const auto r = validate_rulebase(f.rule_base);
             py::dict out;
             out["rules"] = r.rule_count;
             out["combinations"] = r.combination_count;
             out["missing"] = r.missing.size();
             out["duplicates"] = r.duplicates.size();
             out["unknown_labels"] = r.unknown_labels.size();
             out["monotonicity"] = r.monotonicity.size();
             out["complete"] = r.complete();
             return out;
           })
      .def("__eq__", [](const Fis& a, const Fis& b) { return a == b; });

  m.def("build_default_fis", [](const FactorWeights& w) { return build_default_fis(w); },
        py::arg("weights") = FactorWeights{});
  m.def("parse_fis", [](const std::string& text) { return parse_fis(text); }, py::arg("text"));
  m.def("load_fis", [](const std::filesystem::path& p) { return load_fis(p); }, py::arg("path"));
  m.def("write_fis", &write_fis, py::arg("fis"));

  m.def("traditional_rpn", &traditional_rpn, py::arg("s"), py::arg("o"), py::arg("d"));
  m.def("fuzzy_rpn", py::overload_cast<const Fis&, double, double, double, std::size_t>(&fuzzy_rpn), py::arg("fis"),
        py::arg("s"), py::arg("o"), py::arg("d"), py::arg("samples") = kDefaultSamples);
  m.def("triangular_membership", &triangular_membership, py::arg("x"), py::arg("a"), py::arg("b"), py::arg("c"));
  m.def("gaussian_membership", &gaussian_membership, py::arg("x"), py::arg("center"), py::arg("sigma"));
  m.def("centroid",
        [](std::vector<double> degrees, double lo, double hi) {
          return centroid_defuzzify(SampledFuzzySet{{lo, hi}, std::move(degrees)}).value;
        },
        py::arg("degrees"), py::arg("lo"), py::arg("hi"), "Centroid of degrees sampled uniformly on [lo, hi].");
  m.def("spearman", [](const std::vector<double>& x, const std::vector<double>& y) {
    if (x.size() != y.size()) throw ValidationError("spearman: sequences differ in length");
    return spearman_correlation(x, y);
  });

  py::class_<FailureModeRecord>(m, "FailureModeRecord")
      .def(py::init([](std::string c, std::string f, int s, int o, int d) {
             return FailureModeRecord{std::move(c), std::move(f), s, o, d, 0};
           }),
           py::arg("component"), py::arg("failure_mode"), py::arg("s"), py::arg("o"), py::arg("d"))
      .def_readwrite("component", &FailureModeRecord::component)
      .def_readwrite("failure_mode", &FailureModeRecord::failure_mode)
      .def_readwrite("s", &FailureModeRecord::s)
      .def_readwrite("o", &FailureModeRecord::o)
      .def_readwrite("d", &FailureModeRecord::d)
      .def_readonly("source_row", &FailureModeRecord::source_row)
      .def("__repr__", [](const FailureModeRecord& r) {
        return "FailureModeRecord(" + r.component + " / " + r.failure_mode + ", S=" + std::to_string(r.s) +
               " O=" + std::to_string(r.o) + " D=" + std::to_string(r.d) + ")";
      });

  py::class_<RiskAssessment>(m, "RiskAssessment")
      .def_readonly("record", &RiskAssessment::record)
      .def_readonly("t_rpn", &RiskAssessment::t_rpn)
      .def_readonly("f_rpn", &RiskAssessment::f_rpn)
      .def_readonly("t_rank", &RiskAssessment::t_rank)
      .def_readonly("f_rank", &RiskAssessment::f_rank);

  m.def("parse_register", [](const std::string& text) { return parse_register(text); }, py::arg("text"));
  m.def("load_register", &load_register, py::arg("path"));
  m.def("assess_register", &assess_register, py::arg("records"), py::arg("fis"),
        py::arg("samples") = kDefaultSamples);
  m.def("render_report",
        [](const std::vector<RiskAssessment>& a, const std::string& format) {
          RankingComparison cmp;
          if (a.size() >= 2) cmp = compare_rankings(a);
          return render_report(a, cmp, parse_report_format(format));
        },
        py::arg("assessments"), py::arg("format") = "text");

  m.def("surface",
        [](const Fis& fis, const std::string& x, const std::string& y, double fixed, std::size_t resolution) {
          const auto g = export_surface(fis, parse_axis(x), parse_axis(y), fixed, resolution);
          std::vector<std::vector<double>> z(g.xs.size(), std::vector<double>(g.ys.size()));
          for (std::size_t i = 0; i < g.xs.size(); ++i)
            for (std::size_t j = 0; j < g.ys.size(); ++j) z[i][j] = g.value(i, j);
          return py::make_tuple(g.xs, g.ys, z);
        },
        py::arg("fis"), py::arg("x") = "S", py::arg("y") = "O", py::arg("fixed") = 10.0, py::arg("resolution") = 25,
        "Fuzzy RPN grid as (xs, ys, z) with z[i][j] at (xs[i], ys[j]).");
}
