#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "axial/catalog.hpp"
#include "axial/constructions.hpp"

namespace py = pybind11;
using namespace axial;

namespace {

// shared_ptr<const Algebra> is awkward as a pybind11 holder, so the module
// hands out a thin value wrapper instead.
struct PyAlgebra {
  AlgebraRef ref;
};

struct PyFixture {
  std::string name;
  PyAlgebra algebra;
  std::optional<Element> a, b;
};

struct MiyamotoReport {
  std::vector<std::vector<std::string>> matrix;
  bool automorphism = false;
  bool involution = false;
};

FieldSpec parse_field(const std::string& text) {
  if (text.empty() || text == "Q" || text == "QQ") return FieldSpec::rationals();
  std::string t = text;
  if (t.rfind("GF", 0) == 0) t = t.substr(2);
  if (!t.empty() && t.front() == '(') t = t.substr(1);
  if (!t.empty() && t.back() == ')') t.pop_back();
  if (t.empty() || t.find_first_not_of("0123456789") != std::string::npos)
    throw Error(Error::Cat::Parse, "unrecognized field '" + text + "' (use Q or GF<p>)");
  return FieldSpec::prime_field(std::stoull(t));
}

std::string scalar_str(const AlgebraRef& A, const Scalar& s) { return A->field().to_string(s); }

std::vector<std::string> coord_strings(const Element& x) {
  std::vector<std::string> out;
  out.reserve(x.coords.size());
  for (const auto& c : x.coords) out.push_back(x.algebra->field().to_string(c));
  return out;
}

Element element_from_strings(const PyAlgebra& A, const std::vector<std::string>& coords) {
  if (coords.size() != A.ref->dim())
    throw Error(Error::Cat::Precondition, "coordinate count does not match algebra dimension");
  Vec v;
  v.reserve(coords.size());
  for (const auto& c : coords) v.push_back(scalar_parse(c, A.ref->field_spec()));
  return A.ref->element(v);
}

PyFixture make_fixture(const std::string& name, const std::string& field) {
  Fixture f = fixture_by_name(name, parse_field(field));
  return PyFixture{f.name, PyAlgebra{f.algebra}, f.a, f.b};
}

MiyamotoReport miyamoto_report(const AxisCertificate& cert) {
  const AlgebraRef& A = cert.axis.algebra;
  const Field& F = A->field();
  Mat tau = miyamoto(cert);
  MiyamotoReport rep;
  rep.matrix.resize(tau.rows);
  for (std::size_t i = 0; i < tau.rows; ++i)
    for (std::size_t j = 0; j < tau.cols; ++j) rep.matrix[i].push_back(F.to_string(tau.at(i, j)));
  rep.automorphism = is_automorphism(A, tau).pass;
  rep.involution = mat_equal(mat_mul(F, tau, tau), mat_identity(F, tau.rows));
  return rep;
}

std::string tier_name(Tier t) { return t == Tier::Mandatory ? "mandatory" : "extended"; }

Tier tier_from_name(const std::string& name) {
  if (name == "mandatory") return Tier::Mandatory;
  if (name == "extended") return Tier::Extended;
  throw Error(Error::Cat::Parse, "unknown tier '" + name + "'");
}

}  // namespace

PYBIND11_MODULE(_axial, m) {
  m.doc() = "exact-arithmetic engine for commutative algebras with a Frobenius form";

  py::register_exception<Error>(m, "AxialError");

  py::class_<PyAlgebra>(m, "Algebra")
      .def_property_readonly("dim", [](const PyAlgebra& A) { return A.ref->dim(); })
      .def_property_readonly("field",
                             [](const PyAlgebra& A) {
                               const FieldSpec& s = A.ref->field_spec();
                               std::uint64_t p = characteristic(s);
                               return p == 0 ? std::string("Q") : "GF" + std::to_string(p);
                             })
      .def("basis_element", [](const PyAlgebra& A, std::size_t i) { return A.ref->basis_element(i); })
      .def("element", &element_from_strings)
      .def("zero", [](const PyAlgebra& A) { return A.ref->zero(); })
      .def("radical_dim", [](const PyAlgebra& A) { return radical(A.ref).dim(); })
      .def("to_text", [](const PyAlgebra& A) { return algebra_to_text(A.ref); })
      .def("__repr__", [](const PyAlgebra& A) {
        return "<Algebra dim=" + std::to_string(A.ref->dim()) + ">";
      });

  py::class_<Element>(m, "Element")
      .def_property_readonly("coords", &coord_strings)
      .def("__mul__", [](const Element& x, const Element& y) { return multiply(x, y); })
      .def("__add__", [](const Element& x, const Element& y) { return add(x, y); })
      .def("__sub__", [](const Element& x, const Element& y) { return sub(x, y); })
      .def("__neg__", [](const Element& x) { return negate(x); })
      .def("__eq__", [](const Element& x, const Element& y) { return equal(x, y); })
      .def("is_zero", [](const Element& x) { return is_zero(x); })
      .def("scaled",
           [](const Element& x, const std::string& c) {
             return scale(scalar_parse(c, x.algebra->field_spec()), x);
           })
      .def("__repr__", [](const Element& x) { return to_string(x); });

  py::class_<PyFixture>(m, "Fixture")
      .def_readonly("name", &PyFixture::name)
      .def_readonly("algebra", &PyFixture::algebra)
      .def_readonly("a", &PyFixture::a)
      .def_readonly("b", &PyFixture::b);

  py::class_<Subspace>(m, "Subspace")
      .def_property_readonly("dim", &Subspace::dim)
      .def_readonly("basis", &Subspace::basis);

  py::class_<AxisCertificate>(m, "AxisCertificate")
      .def_readonly("axis", &AxisCertificate::axis)
      .def_readonly("zero", &AxisCertificate::zero)
      .def_readonly("half", &AxisCertificate::half);

  py::class_<Decomposition>(m, "Decomposition")
      .def_property_readonly(
          "alpha", [](const Decomposition& d) { return scalar_str(d.x0.algebra, d.alpha); })
      .def_readonly("x0", &Decomposition::x0)
      .def_readonly("xhalf", &Decomposition::xhalf);

  py::class_<MiyamotoReport>(m, "MiyamotoReport")
      .def_readonly("matrix", &MiyamotoReport::matrix)
      .def_readonly("automorphism", &MiyamotoReport::automorphism)
      .def_readonly("involution", &MiyamotoReport::involution);

  py::class_<AxisPair>(m, "AxisPair")
      .def_property_readonly("lam",
                             [](const AxisPair& p) { return scalar_str(p.algebra, p.lambda); })
      .def_readonly("b0", &AxisPair::b0)
      .def_readonly("bhalf", &AxisPair::bhalf)
      .def_readonly("cert_a", &AxisPair::cert_a)
      .def_readonly("cert_b", &AxisPair::cert_b);

  py::class_<IdentityReport>(m, "IdentityReport")
      .def_readonly("id", &IdentityReport::id)
      .def_readonly("applicable", &IdentityReport::applicable)
      .def_readonly("checked_tuples", &IdentityReport::checked_tuples)
      .def_property_readonly("failure_count",
                             [](const IdentityReport& r) { return r.failures.size(); })
      .def("passed", &IdentityReport::pass);

  py::class_<DerivationCriterionReport>(m, "DerivationCriterionReport")
      .def_readonly("commutator_is_derivation",
                    &DerivationCriterionReport::commutator_is_derivation)
      .def_readonly("shape_a", &DerivationCriterionReport::shape_a)
      .def_readonly("shape_b", &DerivationCriterionReport::shape_b)
      .def_readonly("shape_c", &DerivationCriterionReport::shape_c)
      .def("criterion", &DerivationCriterionReport::criterion)
      .def("equivalent", &DerivationCriterionReport::equivalent);

  m.def("fixture", &make_fixture, py::arg("name"), py::arg("field") = "Q");
  m.def("load", [](const std::string& path) { return PyAlgebra{load_algebra(path)}; });
  m.def("loads", [](const std::string& text) { return PyAlgebra{load_algebra_text(text)}; });
  m.def("save", [](const PyAlgebra& A, const std::string& path) { save_algebra(A.ref, path); });

  m.def("form", [](const Element& x, const Element& y) {
    return scalar_str(x.algebra, form(x, y));
  });
  m.def("verify_axis", &verify_axis);
  m.def("verify_axis_via_q", &verify_axis_via_q);
  m.def("verify_axis_via_p", &verify_axis_via_p);
  m.def("decompose", &decompose);
  m.def("miyamoto", &miyamoto_report);
  m.def("check_orthogonality",
        [](const AxisCertificate& cert) { return check_orthogonality(cert).pass; });

  m.def("make_axis_pair", &make_axis_pair);
  m.def("identities", [] {
    std::vector<py::tuple> out;
    for (const auto& d : list_identities()) {
      std::vector<std::string> slots;
      for (Slot s : d.slots) slots.emplace_back(slot_name(s));
      out.push_back(py::make_tuple(d.id, tier_name(d.tier), slots, d.statement));
    }
    return out;
  });
  m.def("check_identity", [](const AxisPair& pair, const std::string& id) {
    return check_identity(pair, id);
  });
  m.def(
      "run_suite",
      [](const AxisPair& pair, const std::string& tier, const std::string& filter) {
        return run_suite(pair, tier_from_name(tier), filter);
      },
      py::arg("pair"), py::arg("tier") = "mandatory", py::arg("filter") = "");
  m.def("suite_pass", &suite_pass);
  m.def("suite_report_tsv", &suite_report_tsv);
  m.def("check_derivation_criterion", &check_derivation_criterion);
}
