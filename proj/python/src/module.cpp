// Python bindings. Structured results cross the boundary as JSON documents and
// are decoded with the json module, so the Python side sees plain dicts.
#include <filesystem>
#include <string>
#include <vector>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include "centauts/abelian.hpp"
#include "centauts/automorphism.hpp"
#include "centauts/catalog.hpp"
#include "centauts/error.hpp"
#include "centauts/group_file.hpp"
#include "centauts/report.hpp"
#include "centauts/scan.hpp"

namespace py = pybind11;
using namespace centauts;

namespace {

py::object to_py(const nlohmann::json& j) { return py::module_::import("json").attr("loads")(j.dump()); }

nlohmann::json from_py(const py::object& o) {
  return nlohmann::json::parse(py::module_::import("json").attr("dumps")(o).cast<std::string>());
}

struct Target {
  std::string id;
  Group group;
};

// A catalog name, a path to a group file, or a dict in the group-file format.
Target resolve(const py::object& target) {
  if (py::isinstance<py::dict>(target)) {
    GroupFile f = parse_group_json(from_py(target), kHardElementCap);
    return {f.name.empty() ? "group" : f.name, f.group};
  }
  const std::string s = py::str(target);
  for (const auto& e : catalog())
    if (e.name == s) return {e.name, e.build()};
  if (std::filesystem::exists(s)) {
    GroupFile f = parse_group_file(s, kHardElementCap);
    return {f.name, f.group};
  }
  throw Error(ErrorKind::ConfigError, "'" + s + "' is neither a catalog group nor a file");
}

AbelianType type_of(unsigned p, const std::vector<unsigned>& exps) { return AbelianType(p, exps); }

py::int_ big(const BigInt& b) { return py::int_(py::str(b.str())); }

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Central automorphisms of small finite p-groups";
  m.attr("__version__") = CENTAUTS_VERSION;

  // CentautsError carries the error kind ("NotPGroup", "ParseError", ...) as .kind
  static PyObject* exc = PyErr_NewException("centauts._core.CentautsError", PyExc_RuntimeError, nullptr);
  m.add_object("CentautsError", py::handle(exc));
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::object value = py::reinterpret_steal<py::object>(PyObject_CallFunction(exc, "s", e.what()));
      value.attr("kind") = std::string(to_string(e.kind()));
      PyErr_SetObject(exc, value.ptr());
    }
  });

  m.def("known_checks", [] { return known_checks(); });

  m.def("list_catalog", [] {
    py::list out;
    for (const auto& e : catalog()) {
      py::dict d;
      d["name"] = e.name;
      d["order"] = e.order;
      d["description"] = e.description;
      out.append(d);
    }
    return out;
  });

  m.def("group_json", [](const py::object& target) {
    Target t = resolve(target);
    return to_py(group_to_json(t.group, t.id));
  }, py::arg("group"), "The group in the Cayley-table file format.");

  m.def("analyze", [](const py::object& target, std::vector<std::string> checks, std::uint64_t budget) {
    if (checks.empty()) checks = known_checks();
    RunConfig cfg;
    cfg.checks = checks;
    cfg.budget = budget;
    validate(cfg);
    Target t = resolve(target);
    AnalysisOptions options;
    options.limits.budget = budget;
    options.cap = kHardElementCap;
    return to_py(report_to_json(analyze_group(t.id, t.group, checks, options)));
  }, py::arg("group"), py::arg("checks") = std::vector<std::string>{}, py::arg("budget") = SearchLimits{}.budget,
     "Run the named checks (all by default) on a catalog name, group file path or group dict.");

  m.def("scan", [](std::size_t maxOrder, std::vector<unsigned> primes, std::vector<std::string> checks,
                   std::uint64_t budget, std::vector<std::filesystem::path> groupFiles, std::size_t sweepMaxExp,
                   std::optional<std::filesystem::path> cacheDir, const std::string& format) -> py::object {
    RunConfig cfg;
    cfg.maxOrder = maxOrder;
    cfg.primes = std::move(primes);
    if (!checks.empty()) cfg.checks = std::move(checks);
    cfg.budget = budget;
    cfg.groupFiles = std::move(groupFiles);
    cfg.sweepMaxExp = sweepMaxExp;
    cfg.cacheDir = std::move(cacheDir);
    cfg.outputFormat = format;
    validate(cfg);
    ScanResult r = scan_corpus(cfg);
    if (format == "csv") return py::str(emit_scan(cfg, r));
    return to_py(scan_to_json(cfg, r));
  }, py::arg("max_order") = 128, py::arg("primes") = std::vector<unsigned>{},
     py::arg("checks") = std::vector<std::string>{}, py::arg("budget") = SearchLimits{}.budget,
     py::arg("group_files") = std::vector<std::filesystem::path>{}, py::arg("sweep_max_exp") = 0,
     py::arg("cache_dir") = std::nullopt, py::arg("format") = "json",
     "Scan the catalog and group files; a dict for json, the CSV text for csv.");

  m.def("sweep_lemma4", [](unsigned p, std::size_t maxExp) {
    if (!is_prime(p)) throw Error(ErrorKind::ConfigError, std::to_string(p) + " is not prime");
    return to_py(sweep_to_json(verify_lemma4_sweep(p, maxExp)));
  }, py::arg("prime"), py::arg("max_exp"));

  m.def("hom_order", [](unsigned p, const std::vector<unsigned>& a, const std::vector<unsigned>& b) {
    return big(hom_order(type_of(p, a), type_of(p, b)));
  }, py::arg("prime"), py::arg("a"), py::arg("b"),
     "|Hom(A, B)| for abelian p-groups given by non-increasing exponent lists.");

  m.def("abelian_invariants", [](const py::object& target, unsigned p) {
    return invariants(resolve(target).group, p).exps();
  }, py::arg("group"), py::arg("prime"));

  m.def("automorphism_counts", [](const py::object& target, std::uint64_t budget) {
    Target t = resolve(target);
    GroupContext ctx(t.group, SearchLimits{budget});
    py::dict d;
    d["aut"] = ctx.aut().size();
    d["inn"] = ctx.inn().size();
    d["autcent"] = ctx.autcent().size();
    if (ctx.prime()) d["autZZ"] = ctx.aut_zz().size();
    return d;
  }, py::arg("group"), py::arg("budget") = SearchLimits{}.budget);
}
