#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "g2cm/harness.hpp"

namespace py = pybind11;
using namespace g2cm;

namespace {

std::vector<u64> to_list(const FpPoly& a) { return {a.coeffs.begin(), a.coeffs.end()}; }

Divisor make_divisor(const Curve& c, const std::vector<i64>& u, const std::vector<i64>& v) {
  return {c.ring().from_ints(u), c.ring().from_ints(v)};
}

py::dict verdict_dict(const TheoremVerdict& v) {
  py::dict d;
  d["hypotheses_met"] = v.hypotheses_met;
  d["conclusion_holds"] = v.conclusion_holds;
  d["remainder"] = py::make_tuple(v.remainder_constant, v.remainder_linear);
  d["detail"] = v.detail;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Genus-2 Jacobian arithmetic and quartic CM analysis";

  // Message starts with the error code name, e.g. "NotSquarefree: ...".
  py::register_exception<Error>(m, "Error", PyExc_ValueError);

  py::class_<WeilPoly>(m, "WeilPoly")
      .def(py::init([](u64 p, i64 a1, i64 a2) { return WeilPoly{p, a1, a2}; }), py::arg("p"), py::arg("a1"), py::arg("a2"))
      .def_readonly("p", &WeilPoly::p)
      .def_readonly("a1", &WeilPoly::a1)
      .def_readonly("a2", &WeilPoly::a2)
      .def("coefficients", [](const WeilPoly& w) {
        std::vector<i64> out;
        for (i128 c : w.descending()) out.push_back(static_cast<i64>(c));
        return out;
      })
      .def("at_one", [](const WeilPoly& w) { return static_cast<i64>(w.at_one()); })
      .def("__eq__", [](const WeilPoly& a, const WeilPoly& b) { return a == b; })
      .def("__repr__", &WeilPoly::to_string);

  py::class_<Divisor>(m, "Divisor")
      .def_property_readonly("u", [](const Divisor& d) { return to_list(d.u); })
      .def_property_readonly("v", [](const Divisor& d) { return to_list(d.v); })
      .def("is_identity", &Divisor::is_identity)
      .def("__eq__", [](const Divisor& a, const Divisor& b) { return a == b; })
      .def("__hash__", [](const Divisor& d) { return py::hash(py::str(to_string(d))); })
      .def("__repr__", [](const Divisor& d) { return to_string(d); });

  py::class_<Curve>(m, "Curve")
      .def(py::init([](u64 p, const std::vector<i64>& f) { return Curve(p, f); }), py::arg("p"), py::arg("f"))
      .def_property_readonly("p", &Curve::p)
      .def_property_readonly("f", [](const Curve& c) { return to_list(c.f()); })
      .def_property_readonly("model", [](const Curve& c) { return to_list(c.model()); })
      .def("identity", &Curve::identity)
      .def("divisor", &make_divisor, py::arg("u"), py::arg("v"))
      .def("is_valid", &Curve::is_valid);

  m.def("cantor_add", &cantor_add);
  m.def("neg", &neg);
  m.def("scalar_mul", &scalar_mul);
  m.def("random_divisor", [](const Curve& c, u64 seed) {
    Rng rng(seed);
    return random_divisor(c, rng);
  }, py::arg("curve"), py::arg("seed"));
  m.def("count_points", &count_points, py::arg("curve"), py::arg("k"), py::arg("max_field_size") = kDefaultCountBound);
  m.def("char_poly_from_counts", &char_poly_from_counts);
  m.def("weil_poly", [](const Curve& c) { return weil_poly(c); });
  m.def("weil_validate", &weil_validate);
  m.def("enumerate_jacobian", &enumerate_jacobian, py::arg("curve"), py::arg("max_p") = kDefaultEnumerationBound);

  m.def("factorize", [](u64 n) {
    std::vector<std::pair<u64, unsigned>> out;
    for (const auto& [q, e] : factorize(n)) out.emplace_back(q, e);
    return out;
  });
  m.def("group_structure", [](const Curve& c) {
    const auto s = group_structure(c);
    return std::vector<u64>(s.invariant_factors.begin(), s.invariant_factors.end());
  });
  m.def("embedding_degree", [](u64 p, u64 ell) { return embedding_degree(p, ell).k; });
  m.def("sylow_generator_search", [](const Curve& c, u64 ell, u64 max_trials, u64 seed) {
    Rng rng(seed);
    const auto r = sylow_generator_search(c, ell, max_trials, rng);
    py::dict d;
    d["status"] = std::string(to_string(r.status));
    d["trials"] = r.trials;
    d["valuation"] = r.valuation;
    d["generator"] = r.generator ? py::cast(*r.generator) : py::none();
    return d;
  }, py::arg("curve"), py::arg("ell"), py::arg("max_trials") = 10000, py::arg("seed") = 0);

  py::class_<CMField>(m, "CMField")
      .def(py::init<i64, i64, i64>(), py::arg("D"), py::arg("a"), py::arg("b"))
      .def_property_readonly("D", &CMField::D)
      .def_property_readonly("a", &CMField::a)
      .def_property_readonly("b", &CMField::b)
      .def_property_readonly("branch", [](const CMField& f) { return std::string(to_string(f.branch())); })
      .def("primitivity", [](const CMField& f) { return std::string(to_string(primitivity_screen(f))); });

  auto omega = [](const std::vector<i64>& c) {
    if (c.size() != 4) throw Error(Errc::InvalidArgument, "omega needs four coefficients");
    return FrobeniusElement{c[0], c[1], c[2], c[3]};
  };
  m.def("frobenius_norm", [=](const CMField& f, const std::vector<i64>& c) { return frobenius_norm(f, omega(c)); });
  m.def("frobenius_char_poly", [=](const CMField& f, const std::vector<i64>& c) {
    const auto w = omega(c);
    return frobenius_char_poly(f, w, frobenius_norm(f, w));
  });
  m.def("remainder_mod_sq", [](const WeilPoly& w) {
    const IntPoly r = remainder_mod_sq(w);
    return py::make_tuple(static_cast<i64>(r.coeff(0)), static_cast<i64>(r.coeff(1)));
  });
  m.def("q_bound", &q_bound);
  m.def("theorem_ed1_check", [](const std::string& branch, i64 c, i64 c2, i64 D, i64 p, u64 ell) {
    const DBranch br = branch == "d1" ? DBranch::D1 : DBranch::D23;
    return verdict_dict(theorem_ed1_check(br, c, c2, D, p, ell));
  });
  m.def("theorem_c2_check", [](i64 c1, i64 p, u64 ell) { return verdict_dict(theorem_c2_check(c1, p, ell)); });

  m.def("_analyze_curve", [](u64 p, const std::vector<i64>& f, const std::vector<u64>& ells, u64 enum_bound, u64 seed) {
    CurveAnalysisOptions opts;
    opts.ells = ells;
    opts.enum_bound = enum_bound;
    opts.seed = seed;
    return to_json_line(analyze_curve(p, f, opts));
  });
  m.def("_analyze_cm", [=](i64 D, i64 a, i64 b, const std::vector<i64>& c, u64 seed) {
    return to_json_line(analyze_cm_instance(CMField(D, a, b), omega(c), seed));
  });
  m.def("_verify", [](const std::string& suite, const py::dict& params) {
    VerifyParams vp;
    for (auto [k, v] : params) {
      const auto key = py::cast<std::string>(k);
      const auto val = py::cast<u64>(v);
      if (key == "ell_max") vp.ell_max = val;
      else if (key == "curves") vp.curves = val;
      else if (key == "p_max") vp.p_max = val;
      else if (key == "trials") vp.trials = val;
      else if (key == "seed") vp.seed = val;
      else throw Error(Errc::InvalidArgument, "unknown parameter " + key);
    }
    const auto s = verify_corpus(suite, vp);
    return json{{"suite", s.suite}, {"passed", s.passed}, {"summary", s.summary}}.dump();
  });
}
