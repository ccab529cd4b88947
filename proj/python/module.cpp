#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "hsimplex/chow.hpp"
#include "hsimplex/commands.hpp"
#include "hsimplex/face_lattice.hpp"
#include "hsimplex/growth.hpp"
#include "hsimplex/matrix.hpp"
#include "hsimplex/toric_h.hpp"

namespace py = pybind11;
using namespace hsimplex;

namespace {

py::int_ to_py(const BigInt& v) {
  return py::reinterpret_steal<py::int_>(PyLong_FromString(v.get_str().c_str(), nullptr, 10));
}

py::list to_py(const std::vector<BigInt>& values) {
  py::list out;
  for (const auto& v : values) out.append(to_py(v));
  return out;
}

RankMode mode_of(const std::string& s) { return parse_rank_mode(s); }

EulerianPoset lattice(int k, int n, bool dual) {
  if (n < 2 || n > 31 || k < 1 || k > n - 1) throw InvalidParameters("need 1 <= k <= n-1, 2 <= n <= 31");
  auto L = hypersimplex_face_poset(k, n);
  return dual ? dualize(L) : L;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Toric h-vectors and Chow-Betti numbers of hypersimplices, coordinator numbers of A_{n-1}*";

  py::register_exception<InvalidParameters>(m, "InvalidParameters", PyExc_ValueError);
  py::register_exception<NotEulerian>(m, "NotEulerian", PyExc_ValueError);

  m.def("binomial", [](int n, int k) { return to_py(binomial(n, k)); }, py::arg("n"), py::arg("k"));

  m.def("toric_h_formula", [](int k, int n) { return to_py(toric_h_formula(normalize_k(k, n), n).entries); },
        py::arg("k"), py::arg("n"));
  m.def("toric_h_recursion", [](int k, int n) { return to_py(toric_h_vector(lattice(k, n, true)).entries); },
        py::arg("k"), py::arg("n"), "Toric h-vector from the g/h recursion on the dual face lattice.");

  m.def("f_vector", [](int k, int n, bool dual) { return to_py(f_vector(lattice(k, n, dual))); }, py::arg("k"),
        py::arg("n"), py::arg("dual") = false);
  m.def("is_eulerian", [](int k, int n, bool dual) { return is_eulerian(lattice(k, n, dual)); }, py::arg("k"),
        py::arg("n"), py::arg("dual") = false);
  m.def("face_lattice_json", [](int k, int n, bool dual) { return lattice(k, n, dual).to_json().dump(); },
        py::arg("k"), py::arg("n"), py::arg("dual") = false);

  m.def("chow_betti_formula", [](int r, int k, int n) { return to_py(chow_betti_formula(r, normalize_k(k, n), n)); },
        py::arg("r"), py::arg("k"), py::arg("n"));
  m.def(
      "chow_betti_oracle",
      [](int r, int k, int n, const std::string& mode, std::uint32_t prime) {
        const RankMode rm = mode_of(mode);
        BigInt nullity;
        {
          py::gil_scoped_release release;
          nullity = chow_betti_oracle(r, k, n, rm, prime);
        }
        return to_py(nullity);
      },
      py::arg("r"), py::arg("k"), py::arg("n"), py::arg("mode") = "exact", py::arg("prime") = kDefaultPrime,
      "Nullity of the balancing system.");
  m.def(
      "verify_basis",
      [](int r, int k, int n, const std::string& mode) { return to_json(verify_basis(r, k, n, mode_of(mode))).dump(); },
      py::arg("r"), py::arg("k"), py::arg("n"), py::arg("mode") = "exact", "JSON report of the basis check.");
  m.def("set_inclusion_rank", [](int i, int j, int n) { return rank_exact(set_inclusion_matrix(i, j, n)); },
        py::arg("i"), py::arg("j"), py::arg("n"));

  m.def("coordinator_formula", [](int n) { return to_py(coordinator_formula(n).padded(n)); }, py::arg("n"));
  m.def("coordination_sequence", [](int n, int kmax) { return to_py(coordination_sequence(n, kmax).values); },
        py::arg("n"), py::arg("kmax"));
  m.def(
      "coordinator_from_bfs",
      [](int n, int kmax) {
        if (kmax < 0) kmax = n + 2;
        return to_py(coordinator_from_sequence(n, coordination_sequence(n, kmax)).padded(n));
      },
      py::arg("n"), py::arg("kmax") = -1, "BFS depth defaults to n + 2.");

  m.def("table", [](int max_n) { return table_text(cmd_table(max_n)); }, py::arg("max_n") = 10);
  m.def(
      "verify",
      [](int max_n, const std::string& mode, const std::string& fault) {
        VerifyOptions opt;
        opt.max_n = max_n;
        opt.mode = mode_of(mode);
        if (!fault.empty()) opt.shift = parse_fault(fault);
        VerifyReport report;
        {
          py::gil_scoped_release release;
          report = cmd_verify(opt);
        }
        py::dict out;
        for (const auto& f : report.families) out[py::str(f.name)] = py::make_tuple(f.instances, f.failures);
        return py::make_tuple(report.passed(), out);
      },
      py::arg("max_n") = 6, py::arg("mode") = "exact", py::arg("fault") = "",
      "Returns (passed, {family: (instances, failures)}).");
}
