#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "qrac/bloch.hpp"
#include "qrac/cloning.hpp"
#include "qrac/geometry.hpp"
#include "qrac/optimizer.hpp"
#include "qrac/schemes.hpp"

namespace py = pybind11;
using namespace qrac;

namespace {

using PyMatrix = std::vector<std::vector<Complex>>;

PyMatrix to_py(const ComplexMatrix& m) {
  PyMatrix out(m.dim(), std::vector<Complex>(m.dim()));
  for (std::size_t r = 0; r < m.dim(); ++r)
    for (std::size_t c = 0; c < m.dim(); ++c) out[r][c] = m(r, c);
  return out;
}

ComplexMatrix from_py(const PyMatrix& rows) {
  const std::size_t n = rows.size();
  ComplexMatrix m(n);
  for (std::size_t r = 0; r < n; ++r) {
    if (rows[r].size() != n) throw DimensionError("matrix rows must all have length n");
    for (std::size_t c = 0; c < n; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

QracScheme builtin(const std::string& name) {
  if (name == "example3") return example3_scheme().scheme;
  return standard_scheme(name);
}

py::dict report_dict(const QracScheme& scheme, const EvaluationReport& report) {
  py::dict d;
  d["label"] = scheme.label();
  d["n"] = scheme.n();
  d["m"] = scheme.m();
  d["worst_case_p"] = report.worst_case_p;
  d["average_p"] = report.average_p;
  d["argmin_x"] = index_to_bits(report.argmin_cell.x_index, scheme.n());
  d["argmin_bit"] = report.argmin_cell.bit;
  return d;
}

std::vector<Halfspace> halfspaces_of(const QracScheme& scheme) {
  std::vector<Halfspace> out;
  for (std::size_t i = 1; i <= scheme.n(); ++i)
    out.push_back(povm_to_halfspace(scheme.povm(i), i));
  return out;
}

}  // namespace

PYBIND11_MODULE(_qrac, m) {
  m.doc() = "quantum random access coding toolkit (C++ core)";

  m.def("gell_mann_basis", [](std::size_t level) {
    std::vector<PyMatrix> out;
    for (const ComplexMatrix& g : gell_mann_basis(level)) out.push_back(to_py(g));
    return out;
  });

  m.def("density_to_bloch", [](const PyMatrix& rho) {
    return density_to_bloch(DensityMatrix(from_py(rho))).coords;
  });

  m.def("bloch_to_density", [](std::size_t level, const std::vector<double>& coords) {
    return to_py(bloch_to_density(BlochVector{level, coords}).matrix());
  });

  m.def("measure_prob", [](const PyMatrix& effect, const PyMatrix& rho) {
    return measure_prob(from_py(effect), DensityMatrix(from_py(rho)));
  });

  m.def("encode_ambainis2",
        [](const std::string& x) { return encode_ambainis2(x).amplitudes(); });
  m.def("encode_chuang3",
        [](const std::string& x) { return encode_chuang3(x).amplitudes(); });
  m.def("encode_hinry7",
        [](const std::string& x) { return to_py(encode_hinry7(x).matrix()); });

  m.def("buzek_hillery_clone", [](const PyMatrix& rho) {
    return to_py(buzek_hillery_clone(DensityMatrix(from_py(rho))).matrix());
  });

  m.def("evaluate_builtin", [](const std::string& name) {
    const QracScheme scheme = builtin(name);
    return report_dict(scheme, evaluate_scheme(scheme));
  });

  m.def("nayak_bound", &nayak_bound, py::arg("n"), py::arg("p"));
  m.def("max_regions", &max_regions, py::arg("k"), py::arg("d"));

  m.def("scheme_halfspaces", [](const std::string& name) {
    py::list out;
    for (const Halfspace& h : halfspaces_of(builtin(name))) {
      py::dict d;
      d["bit"] = h.source_index;
      d["s"] = h.s;
      d["c"] = h.c;
      d["degenerate"] = h.degenerate;
      out.append(d);
    }
    return out;
  });

  m.def(
      "realized_pattern_count",
      [](const std::string& name, double margin_eps) {
        const QracScheme scheme = builtin(name);
        const std::size_t dim = (std::size_t{1} << (2 * scheme.m())) - 1;
        return count_realized(realized_patterns(halfspaces_of(scheme), dim, margin_eps));
      },
      py::arg("name"), py::arg("margin_eps") = tol::margin_default);

  m.def(
      "no_go_builtin",
      [](const std::string& name, double claimed_p) {
        const QracScheme scheme = builtin(name);
        const NoGoReport report = no_go_certificate(scheme, claimed_p);
        py::dict d;
        d["refuted"] = report.status == NoGoStatus::Refuted;
        if (report.violated) {
          d["violated_x"] = index_to_bits(report.violated->x_index, scheme.n());
          d["violated_bit"] = report.violated->bit;
          d["slack"] = report.violated->slack;
        }
        d["counting_applicable"] = report.counting_applicable;
        d["max_regions"] = report.max_regions_value;
        d["required_regions"] = report.required_regions;
        return d;
      },
      py::arg("name"), py::arg("claimed_p"));

  m.def(
      "see_saw",
      [](std::size_t n, std::size_t m_qubits, std::uint64_t seed, std::size_t restarts,
         std::size_t max_iters, std::size_t reweight_rounds) {
        SeeSawConfig config;
        config.seed = seed;
        config.restarts = restarts;
        config.max_iters = max_iters;
        config.reweight_rounds = reweight_rounds;
        const SearchResult result = see_saw(n, m_qubits, config);
        py::dict d = report_dict(result.scheme, result.report);
        d["converged"] = result.converged;
        return d;
      },
      py::arg("n"), py::arg("m"), py::arg("seed") = 0, py::arg("restarts") = 8,
      py::arg("max_iters") = 300, py::arg("reweight_rounds") = 10);

  py::register_exception<InvalidArgumentError>(m, "InvalidArgumentError",
                                               PyExc_ValueError);
  py::register_exception<NotAStateError>(m, "NotAStateError", PyExc_ValueError);
}
