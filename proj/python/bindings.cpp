#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "brq/brauer.hpp"
#include "brq/cli.hpp"
#include "brq/error.hpp"
#include "brq/io.hpp"
#include "brq/verify.hpp"

namespace py = pybind11;
using namespace brq;

namespace {

// Documents and results cross the boundary as JSON text.
io::Document document(const std::string& text, const Limits& limits) {
  return io::parse_document(io::parse_json(text), limits);
}

Limits limits_with(std::size_t max_order, std::size_t max_rank) {
  Limits l = Limits::defaults();
  if (max_order) {
    l.finite_cohomology = l.lattice_cohomology = max_order;
    l.group_order = std::max(l.group_order, max_order);
  }
  if (max_rank) l.lattice_rank = max_rank;
  return l;
}

std::string cohomology(const std::string& doc, int degree, bool witnesses, std::size_t max_order) {
  const Limits limits = limits_with(max_order, 0);
  const io::Document d = document(doc, limits);
  const GModule m = d.module ? *d.module : GModule::trivial_qz(d.group);
  const CohomologyGroup h = degree == 1                                  ? h1(m, 0, limits)
                            : m.kind() == GModule::Kind::trivial_qz ? h2_qz(d.group, 0, limits)
                                                                     : h2(m, 0, limits);
  return io::cohomology_json(h, witnesses).dump();
}

std::string bogomolov(const std::string& doc, bool all_subgroups, bool witnesses, std::size_t max_order) {
  const Limits limits = limits_with(max_order, 0);
  const io::Document d = document(doc, limits);
  return io::report_json(unramified_report(BrauerContext(d.group, 0, !all_subgroups, limits), {}, "bogomolov"),
                         witnesses)
      .dump();
}

std::string brnr(const std::string& kind, const std::string& doc, const std::vector<int>& r, bool witnesses,
                 std::size_t max_order) {
  const Limits limits = limits_with(max_order, 0);
  const io::Document d = document(doc, limits);
  auto need = [](bool ok, const std::string& what) {
    if (!ok) throw ValidationError(what);
  };
  BrauerReport rep;
  if (kind == "linear") {
    rep = br_nr_linear(d.group, limits);
  } else if (kind == "toric") {
    need(d.toric.has_value(), "the document has no \"toric\" lattice");
    rep = br_nr_toric(*d.toric, limits);
  } else {
    need(d.semilinear.has_value(), "the document has no \"projective\" action");
    if (kind == "projective") {
      need(!d.semilinear->has_correlations(), "correlations act on a Grassmannian");
      rep = br_nr_projective(collineation_action(*d.semilinear), limits);
    } else if (kind == "grassmannian") {
      need(r.size() == 1, "grassmannian needs a single r");
      rep = br_nr_grassmannian(*d.semilinear, r[0], limits);
    } else if (kind == "flag") {
      need(!r.empty(), "flag needs r1 < r2 < ...");
      rep = br_nr_flag(*d.semilinear, r, limits);
    } else {
      throw ValidationError("unknown kind '" + kind + "'");
    }
  }
  return io::report_json(rep, witnesses).dump();
}

std::vector<std::int64_t> stack(const std::string& doc, std::size_t max_rank) {
  const Limits limits = limits_with(0, max_rank);
  const io::Document d = document(doc, limits);
  if (!d.pic) throw ValidationError("the document has no \"pic\" lattice");
  return br_stack_fixed_point(d.group, *d.pic, d.fixed_point.value_or(false), limits).invariant_factors();
}

py::tuple cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  int code;
  {
    py::gil_scoped_release release;
    code = run_cli(args, out, err);
  }
  return py::make_tuple(code, out.str(), err.str());
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Bogomolov multipliers and unramified Brauer groups of quotients";

  static py::exception<Error> error(m, "Error");
  static py::exception<DomainError> domain_error(m, "DomainError", error.ptr());
  static py::exception<SizeLimitError> size_error(m, "SizeLimitError", error.ptr());
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const SizeLimitError& e) {
      PyErr_SetString(size_error.ptr(), e.what());
    } catch (const DomainError& e) {
      PyErr_SetString(domain_error.ptr(), e.what());
    } catch (const Error& e) {
      PyErr_SetString(error.ptr(), e.what());
    }
  });

  m.def("group_info", [](const std::string& doc, bool all_subgroups) {
    return io::group_info_json(document(doc, Limits::defaults()).group, all_subgroups).dump();
  }, py::arg("doc"), py::arg("all_subgroups") = false);
  m.def("cohomology", &cohomology, py::arg("doc"), py::arg("degree"), py::arg("witnesses") = false,
        py::arg("max_order") = 0);
  m.def("bogomolov", &bogomolov, py::arg("doc"), py::arg("all_subgroups") = false, py::arg("witnesses") = false,
        py::arg("max_order") = 0);
  m.def("brnr", &brnr, py::arg("kind"), py::arg("doc"), py::arg("r") = std::vector<int>{},
        py::arg("witnesses") = false, py::arg("max_order") = 0);
  m.def("stack", &stack, py::arg("doc"), py::arg("max_rank") = 0);
  m.def("suite_names", &suite_names);
  m.def("run_suite", [](const std::string& name, const std::string& fixture_dir) {
    SuiteResult r;
    {
      py::gil_scoped_release release;
      r = run_suite(name, SuiteOptions{fixture_dir});
    }
    py::list cases;
    for (const auto& c : r.cases) cases.append(py::make_tuple(c.name, c.pass, c.detail));
    return py::make_tuple(r.suite, cases);
  }, py::arg("name"), py::arg("fixture_dir") = "");
  m.def("run_cli", &cli, py::arg("args"));
}
