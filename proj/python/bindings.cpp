#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "decostab/cli.hpp"

namespace py = pybind11;

namespace {

// Module-lifetime exception types; deliberately never released.
py::handle g_error;
py::handle g_budget_error;

[[noreturn]] void raise(const decostab::Error& e, const std::string& pointer) {
  const auto& type = e.kind() == decostab::ErrorKind::TooManyStates ? g_budget_error : g_error;
  py::object exc = type(e.what());
  exc.attr("kind") = std::string(decostab::to_string(e.kind()));
  exc.attr("pointer") = pointer.empty() ? py::object(py::none()) : py::object(py::str(pointer));
  PyErr_SetObject(type.ptr(), exc.ptr());
  throw py::error_already_set();
}

std::string execute(const std::string& command, const std::string& sub, const std::string& document,
                    std::uint64_t budget) {
  decostab::cli::Options options;
  if (budget != 0) options.budget = budget;
  try {
    const auto doc = decostab::io::Json::parse(document);
    return decostab::cli::execute(command, sub, doc, options).dump();
  } catch (const decostab::io::SchemaError& e) {
    raise(e, e.pointer());
  } catch (const decostab::Error& e) {
    raise(e, "");
  } catch (const decostab::io::Json::parse_error& e) {
    throw py::value_error(e.what());
  }
}

py::tuple run(const std::vector<std::string>& args, const std::string& input) {
  std::istringstream in(input);
  std::ostringstream out;
  std::ostringstream err;
  const int code = decostab::cli::run(args, in, out, err);
  return py::make_tuple(code, out.str(), err.str());
}

}  // namespace

PYBIND11_MODULE(_decostab, m) {
  m.doc() = "Exact Hilbert-Mumford calculus for decorated vector bundles";

  g_error = PyErr_NewException("decostab.DecostabError", PyExc_ValueError, nullptr);
  g_budget_error = PyErr_NewException("decostab.BudgetExceeded", g_error.ptr(), nullptr);
  m.attr("DecostabError") = py::reinterpret_borrow<py::object>(g_error);
  m.attr("BudgetExceeded") = py::reinterpret_borrow<py::object>(g_budget_error);

  m.def("execute", &execute, py::arg("command"), py::arg("sub"), py::arg("document"),
        py::arg("budget") = 0,
        "Evaluate one command on a JSON document and return the JSON result.");
  m.def("run", &run, py::arg("args"), py::arg("stdin") = "",
        "Run the command line in-process; returns (exit code, stdout, stderr).");
}
