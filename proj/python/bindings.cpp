#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "fvol/cli.hpp"
#include "fvol/invariants.hpp"

namespace py = pybind11;
using namespace fvol;

namespace {

OrderKind order_of(const std::string& name) {
  if (name == "lex") return OrderKind::Lex;
  if (name == "grevlex") return OrderKind::Grevlex;
  throw Error(ErrorKind::BadInput, "unknown order '" + name + "'");
}

py::list rows(const std::vector<EstimateRow>& in) {
  py::list out;
  for (const auto& row : in) out.append(py::make_tuple(row.e, numerator_string(row.value), denominator_string(row.value)));
  return out;
}

py::dict table_dict(const EstimateTable& t) {
  py::dict d;
  d["kind"] = std::string(to_string(t.kind));
  d["p"] = t.p;
  d["t"] = t.t;
  d["rows"] = rows(t.rows);
  d["tilde_rows"] = rows(t.tilde_rows);
  d["stabilized"] = t.stabilized();
  if (t.tilde_nondecreasing) {
    d["tilde_nondecreasing"] = *t.tilde_nondecreasing;
  } else {
    d["tilde_nondecreasing"] = py::none();
  }
  if (t.label) d["label"] = *t.label;
  if (t.d) d["d"] = *t.d;
  return d;
}

std::uint64_t level_or(const std::optional<std::uint64_t>& e, std::uint64_t fallback) {
  return e ? *e : fallback;
}

}  // namespace

PYBIND11_MODULE(_fvol, m) {
  m.doc() = "Exact F-volume, F-threshold and Hilbert-Kunz computations over F_p";

  static py::exception<Error> error(m, "FVolError");
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const SpecError& e) {
      py::object exc = py::handle(error.ptr())(e.describe().c_str());
      exc.attr("kind") = std::string(to_string(e.kind()));
      PyErr_SetObject(error.ptr(), exc.ptr());
    } catch (const Error& e) {
      py::object exc = py::handle(error.ptr())((std::string(to_string(e.kind())) + ": " + e.what()).c_str());
      exc.attr("kind") = std::string(to_string(e.kind()));
      PyErr_SetObject(error.ptr(), exc.ptr());
    }
  });

  m.def(
      "normalize_spec",
      [](const std::string& text, const std::string& order) { return parse_spec(text, order_of(order)).to_string(); },
      py::arg("text"), py::arg("order") = "grevlex", "Parse a spec and print it back in canonical form.");

  m.def(
      "run",
      [](const std::string& text, const std::string& command, const std::string& check_name,
         std::optional<std::uint64_t> e, std::optional<std::uint64_t> e1, std::optional<std::uint64_t> e2,
         std::optional<int> dim, const std::string& order) {
        RunOptions opt;
        opt.command = command;
        opt.check_name = check_name;
        opt.e = e;
        opt.e1 = e1;
        opt.e2 = e2;
        opt.dim = dim;
        RunResult r = run_text(text, opt, order_of(order));
        return py::make_tuple(r.exit_code, r.out, r.err);
      },
      py::arg("text"), py::arg("command"), py::arg("check_name") = "", py::arg("e") = py::none(),
      py::arg("e1") = py::none(), py::arg("e2") = py::none(), py::arg("dim") = py::none(),
      py::arg("order") = "grevlex", "Run a CLI command; returns (exit_code, stdout, stderr).");

  m.def(
      "v_set",
      [](const std::string& text, std::uint64_t e) {
        ProblemSpec spec = parse_spec(text);
        Instance inst = spec.instance();
        return inst.enumerate_v(e).points();
      },
      py::arg("text"), py::arg("e"), "Points of V(p^e) in lexicographic order.");

  m.def(
      "volume_estimates",
      [](const std::string& text, std::optional<std::uint64_t> e_min, std::optional<std::uint64_t> e_max) {
        ProblemSpec spec = parse_spec(text);
        Instance inst = spec.instance();
        return table_dict(f_volume_estimates(inst, level_or(e_min, spec.e_min), level_or(e_max, spec.e_max)));
      },
      py::arg("text"), py::arg("e_min") = py::none(), py::arg("e_max") = py::none());

  m.def(
      "threshold_estimates",
      [](const std::string& text, std::optional<std::uint64_t> e_min, std::optional<std::uint64_t> e_max) {
        ProblemSpec spec = parse_spec(text);
        if (!spec.J) throw Error(ErrorKind::BadInput, "spec needs a 'J:' statement");
        return table_dict(f_threshold_estimates(ideal_sum(spec.seq), *spec.J, level_or(e_min, spec.e_min),
                                                level_or(e_max, spec.e_max), spec.quotient(), spec.limits()));
      },
      py::arg("text"), py::arg("e_min") = py::none(), py::arg("e_max") = py::none());

  m.def(
      "hk_estimates",
      [](const std::string& text, std::optional<std::uint64_t> e_min, std::optional<std::uint64_t> e_max,
         std::optional<int> d) {
        ProblemSpec spec = parse_spec(text);
        if (!spec.J) throw Error(ErrorKind::BadInput, "spec needs a 'J:' statement");
        return table_dict(
            hk_estimates(*spec.J, level_or(e_min, spec.e_min), level_or(e_max, spec.e_max), spec.quotient(), d));
      },
      py::arg("text"), py::arg("e_min") = py::none(), py::arg("e_max") = py::none(), py::arg("d") = py::none());

  m.def(
      "nu",
      [](const std::string& text, std::uint64_t e) {
        ProblemSpec spec = parse_spec(text);
        if (!spec.J) throw Error(ErrorKind::BadInput, "spec needs a 'J:' statement");
        return fvol::nu(ideal_sum(spec.seq), *spec.J, e, spec.quotient(), spec.limits()).nu;
      },
      py::arg("text"), py::arg("e"), "nu of the sum of the sequence against J at level e.");

  m.def(
      "fedder",
      [](const std::string& text, std::uint64_t e) {
        ProblemSpec spec = parse_spec(text);
        std::vector<Polynomial> f;
        for (const auto& I : spec.seq) {
          if (!I.is_principal()) throw Error(ErrorKind::BadInput, "sequence entries must be single elements");
          f.push_back(I.generators().front());
        }
        return py::make_tuple(fedder_ci_test(f, e), check_sop(f, spec.quotient()));
      },
      py::arg("text"), py::arg("e"), "(Fedder test at level e, parameter test).");

  m.def("check_names", &check_names);
}
