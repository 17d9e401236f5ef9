// Python access to the exact computations. Rationals cross the boundary as
// "num/den" strings; the package wrapper turns them into Fractions.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "hq/conicconfig.hpp"
#include "hq/family.hpp"
#include "hq/kleinlines.hpp"
#include "hq/kummer.hpp"
#include "hq/lattice.hpp"
#include "hq/verify.hpp"

namespace py = pybind11;
using namespace hq;

namespace {

ParamU param_from_strings(const std::vector<std::string>& values) {
  if (values.size() != 6) throw std::invalid_argument("u needs six coordinates");
  std::array<Rational, 6> u;
  for (int k = 0; k < 6; ++k) u[k] = parse_rational(values[k]);
  return ParamU(u);
}

std::vector<std::string> param_strings(const ParamU& u) {
  std::vector<std::string> out;
  for (const auto& q : u.values()) out.push_back(rational_string(q));
  return out;
}

IntegerMatrix matrix_from_lists(const std::vector<std::vector<long>>& rows) { return integer_matrix(rows); }

std::vector<std::vector<long>> matrix_lists(const IntegerMatrix& m) {
  std::vector<std::vector<long>> out(m.rows(), std::vector<long>(m.cols()));
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out[r][c] = m(r, c).get_si();
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Heisenberg-invariant quartics: exact group, family, Kummer and lattice computations";

  py::register_exception<SingularSystemError>(m, "SingularSystemError", PyExc_ArithmeticError);
  py::register_exception<DegenerateError>(m, "DegenerateError", PyExc_ArithmeticError);

  m.def("group_order", [] { return enumerate_group().elements.size(); });
  m.def("label_name", [](unsigned g) { return GroupLabel(g).name(); }, py::arg("index"));
  m.def("symplectic_form", [](unsigned g, unsigned h) { return symplectic_form(GroupLabel(g), GroupLabel(h)); },
        py::arg("g"), py::arg("h"));

  m.def("discriminant", [](const std::vector<std::string>& u) { return rational_string(singular_discriminant(param_from_strings(u))); },
        py::arg("u"));
  m.def("segre_value", [](const std::vector<std::string>& u) { return rational_string(segre_value(param_from_strings(u))); },
        py::arg("u"));
  m.def("nieto_value", [](const std::vector<std::string>& u) { return rational_string(nieto_value(param_from_strings(u))); },
        py::arg("u"));
  m.def("quartic", [](const std::vector<std::string>& u) { return quartic_from(param_from_strings(u)).to_string(); },
        py::arg("u"));
  m.def("kummer_param", [](const std::vector<long>& p) {
        if (p.size() != 4) throw std::invalid_argument("a point needs four coordinates");
        return param_strings(kummer_param_at(make_point(p[0], p[1], p[2], p[3])));
      },
      py::arg("point"));
  m.def("mukai_average", [](const std::vector<std::string>& u) { return rational_string(mukai_summary(param_from_strings(u)).average); },
        py::arg("u"));

  m.def("incidence_set", [] {
    std::vector<unsigned> out;
    for (const auto g : incidence_set().members) out.push_back(g.index());
    return out;
  });
  m.def("conic_submatrix", [] { return matrix_lists(submatrix_M().matrix); });
  m.def("fermat_line_count", [] { return fermat_lines().lines.size(); });

  m.def("det", [](const std::vector<std::vector<long>>& g) { return det_exact(matrix_from_lists(g)).get_str(); },
        py::arg("gram"));
  m.def("signature", [](const std::vector<std::vector<long>>& g) {
        const Signature s = signature(matrix_from_lists(g));
        return py::make_tuple(s.positive, s.negative);
      },
      py::arg("gram"));
  m.def("is_even", [](const std::vector<std::vector<long>>& g) { return is_even(matrix_from_lists(g)); }, py::arg("gram"));
  m.def("norm_counts", [](const std::vector<std::vector<long>>& g, long bound) { return norm_counts(matrix_from_lists(g), bound); },
        py::arg("gram"), py::arg("bound"));
  m.def("lambda15", [] { return matrix_lists(lambda15().gram()); });

  m.def("verify", [](const std::vector<std::string>& only, std::uint64_t seed) {
        VerifyConfig cfg;
        cfg.only = only;
        cfg.seed = seed;
        return verify_all(cfg).to_json().dump();
      },
      py::arg("only") = std::vector<std::string>{}, py::arg("seed") = 1234567);
}
