// Python bindings for the core library: graph parameters, equitable
// partition verification, and the main construction entry points.
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "doob/constructions.hpp"
#include "doob/io.hpp"
#include "doob/search.hpp"

namespace py = pybind11;
using namespace doob;

namespace {

std::vector<std::vector<int>> matrix_rows(const QuotientMatrix& S) {
  std::vector<std::vector<int>> rows(static_cast<size_t>(S.k));
  for (int i = 0; i < S.k; ++i)
    for (int j = 0; j < S.k; ++j) rows[static_cast<size_t>(i)].push_back(S.at(i, j));
  return rows;
}

QuotientMatrix matrix_from_rows(const std::vector<std::vector<int>>& rows) {
  QuotientMatrix S(static_cast<int>(rows.size()));
  for (int i = 0; i < S.k; ++i) {
    if (rows[static_cast<size_t>(i)].size() != rows.size())
      throw std::invalid_argument("quotient matrix must be square");
    for (int j = 0; j < S.k; ++j) S.at(i, j) = rows[static_cast<size_t>(i)][static_cast<size_t>(j)];
  }
  return S;
}

Coloring coloring_from_list(int m, int n, int k, const std::vector<int>& colors) {
  Coloring c;
  c.spec = {m, n};
  validate(c.spec);
  c.k = k;
  if (colors.size() != num_vertices(c.spec))
    throw std::invalid_argument("color list length must equal the vertex count");
  c.colors.reserve(colors.size());
  for (int v : colors) {
    if (v < 1 || v > k) throw std::invalid_argument("colors must lie in 1..k");
    c.colors.push_back(static_cast<uint8_t>(v));
  }
  return c;
}

} // namespace

PYBIND11_MODULE(doobgraphs, mod) {
  mod.doc() = "Perfect colorings and completely regular codes in Doob and "
              "quaternary Hamming graphs";

  py::register_exception<NotAdmissible>(mod, "NotAdmissible");
  py::register_exception<DeskScaleExceeded>(mod, "DeskScaleExceeded");

  py::class_<GraphSpec>(mod, "GraphSpec")
      .def(py::init([](int m, int n) {
             GraphSpec s{m, n};
             validate(s);
             return s;
           }),
           py::arg("m"), py::arg("n"))
      .def_readonly("m", &GraphSpec::m)
      .def_readonly("n", &GraphSpec::n)
      .def("__eq__", [](const GraphSpec& a, const GraphSpec& b) { return a == b; })
      .def("__repr__", [](const GraphSpec& s) {
        return "GraphSpec(m=" + std::to_string(s.m) + ", n=" + std::to_string(s.n) + ")";
      });

  mod.def("num_vertices", &num_vertices, py::arg("spec"));
  mod.def("degree", &degree, py::arg("spec"));
  mod.def("diameter_param", &diameter_param, py::arg("spec"));
  mod.def("eigenvalues", &eigenvalues, py::arg("spec"));
  mod.def("eigenvalue_multiplicity", &eigenvalue_multiplicity, py::arg("spec"),
          py::arg("i"));
  mod.def(
      "neighbors",
      [](const GraphSpec& s, uint64_t v) { return neighbors(s, v); },
      py::arg("spec"), py::arg("vertex"));
  mod.def(
      "distance",
      [](const GraphSpec& s, uint64_t u, uint64_t v) { return distance(s, u, v); },
      py::arg("spec"), py::arg("u"), py::arg("v"));
  mod.def("ball", &ball, py::arg("spec"), py::arg("vertex"));

  py::class_<Coloring>(mod, "Coloring")
      .def_property_readonly("spec", [](const Coloring& c) { return c.spec; })
      .def_property_readonly("k", [](const Coloring& c) { return c.k; })
      .def_property_readonly("colors",
                             [](const Coloring& c) {
                               return std::vector<int>(c.colors.begin(), c.colors.end());
                             })
      .def("__len__", [](const Coloring& c) { return c.colors.size(); });

  mod.def("make_coloring", &coloring_from_list, py::arg("m"), py::arg("n"),
          py::arg("k"), py::arg("colors"),
          "Builds a coloring from a list of per-vertex colors in 1..k.");

  py::class_<Code>(mod, "Code")
      .def_property_readonly("spec", [](const Code& c) { return c.spec; })
      .def("__len__", [](const Code& c) { return c.size(); })
      .def("__contains__", [](const Code& c, uint64_t v) { return c.contains(v); })
      .def("members", [](const Code& c) { return c.members(); });

  mod.def(
      "compute_quotient",
      [](const Coloring& c) -> py::object {
        QuotientResult r = compute_quotient(c);
        if (!r.ok()) return py::none();
        return py::cast(matrix_rows(*r.matrix));
      },
      py::arg("coloring"),
      "Exhaustively verifies equitability; returns the quotient matrix as "
      "row lists, or None if the coloring is not equitable.");
  mod.def(
      "verify_quotient",
      [](const Coloring& c, const std::vector<std::vector<int>>& rows) {
        return verify_quotient(c, matrix_from_rows(rows)).ok();
      },
      py::arg("coloring"), py::arg("quotient"));
  mod.def(
      "is_mu_fold_perfect",
      [](const Code& c, int mu) { return is_mu_fold_perfect(c, mu); },
      py::arg("code"), py::arg("mu"));
  mod.def("code_distance", &code_distance, py::arg("code"));
  mod.def("covering_radius", &covering_radius, py::arg("code"));

  mod.def(
      "mds_coloring",
      [](const GraphSpec& s) { return mds_partition(s).coloring; }, py::arg("spec"),
      "The MDS 4-coloring with quotient (2m+n)(J-E).");
  mod.def(
      "hamming_code", [](int l) { return hamming_one_perfect(l); }, py::arg("l"),
      "The 1-perfect code of length (4^l - 1) / 3 over GF(4).");
  mod.def(
      "perfect_code_partition",
      [](const GraphSpec& s) { return perfect_code_partition(s).codes; },
      py::arg("spec"),
      "Partition of the vertex set into disjoint 1-perfect codes "
      "(diameters 1 and 5).");
  mod.def(
      "multifold_partition",
      [](const GraphSpec& s) {
        MultifoldPartition p = multifold_partition(s);
        return py::make_tuple(p.alpha, p.codes);
      },
      py::arg("spec"),
      "Returns (alpha, codes): 2^k disjoint alpha-fold 1-perfect codes.");
  mod.def(
      "build_bc_coloring",
      [](int b, int c) {
        BcColoring r = build_bc_coloring(b, c);
        return py::make_tuple(r.coloring, matrix_rows(r.quotient), r.method);
      },
      py::arg("b"), py::arg("c"),
      "Constructs and verifies a perfect (b,c)-coloring; returns "
      "(coloring, quotient, method).");
  mod.def(
      "find_perfect_coloring",
      [](const GraphSpec& s, const std::vector<std::vector<int>>& rows) -> py::object {
        ColoringSearchResult r = find_perfect_coloring(s, matrix_from_rows(rows));
        if (r.status != SearchStatus::Found) return py::none();
        return py::cast(*r.coloring);
      },
      py::arg("spec"), py::arg("quotient"),
      "Backtracking search for a coloring with the given quotient; returns "
      "None when none is found within budget.");

  mod.def("read_pc1", &read_pc1, py::arg("path"));
  mod.def(
      "write_pc1",
      [](const std::string& path, const Coloring& c) { write_pc1(path, c); },
      py::arg("path"), py::arg("coloring"));
  mod.def("read_code1", &read_code1, py::arg("path"));
  mod.def(
      "write_code1",
      [](const std::string& path, const Code& c) { write_code1(path, c); },
      py::arg("path"), py::arg("code"));
}
