#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "gsp4/checks.hpp"
#include "gsp4/companions.hpp"
#include "gsp4/modular.hpp"
#include "gsp4/predictor.hpp"
#include "gsp4/tame_type.hpp"

#include <sstream>

namespace py = pybind11;
using namespace gsp4;

namespace {

using Triple = std::tuple<Int, Int, Int>;

Weight weight_of(const Triple& t) {
  return Weight(std::get<0>(t), std::get<1>(t), std::get<2>(t));
}

Triple triple_of(const Weight& w) { return {w.a, w.b, w.c}; }

py::dict predicted_dict(const PredictedWeight& pw) {
  py::dict d;
  d["lambda"] = triple_of(pw.weight.lam);
  d["lambda_plus_rho"] = triple_of(pw.weight.lam + rho_tilde());
  d["regular"] = pw.weight.regular;
  d["alcove"] = pw.alcove.label();
  d["provenance"] = pw.direct ? "direct" : "transported";
  d["source_alcove"] = pw.source_alcove;
  d["source_nu_prime"] = triple_of(pw.source_nu_prime);
  return d;
}

py::list predict_type(const TameType& t) {
  py::list out;
  for (const auto& pw : predict(t)) out.append(predicted_dict(pw));
  return out;
}

}  // namespace

PYBIND11_MODULE(_gsp4serre, m) {
  m.doc() = "Exact Serre-weight predictions for tame p-ordinary GSp4 types";

  py::register_exception<error>(m, "Gsp4Error");

  m.def("rho_tilde", [] { return triple_of(rho_tilde()); });
  m.def(
      "spin_cochar",
      [](const Triple& mu) { return spin_cochar(weight_of(mu)); },
      py::arg("mu"));
  m.def(
      "weyl_act",
      [](const std::string& w, const Triple& lam) {
        auto el = weyl_from_word(w);
        if (!el) fail(errc::bad_request, "unknown Weyl word " + w);
        return triple_of(weyl_act(*el, weight_of(lam)));
      },
      py::arg("word"), py::arg("lam"));
  m.def(
      "dot_act",
      [](const std::string& w, const Triple& lam) {
        auto el = weyl_from_word(w);
        if (!el) fail(errc::bad_request, "unknown Weyl word " + w);
        return triple_of(dot_act(*el, weight_of(lam)));
      },
      py::arg("word"), py::arg("lam"));

  m.def(
      "canonical_type",
      [](const Triple& mu, Int p) { return triple_of(type_from_weight(weight_of(mu), p).mu); },
      py::arg("mu"), py::arg("p"));
  m.def(
      "types_equivalent",
      [](const Triple& mu, const Triple& nu, Int p) {
        return types_equivalent(weight_of(mu), weight_of(nu), p);
      },
      py::arg("mu"), py::arg("nu"), py::arg("p"));
  m.def("root_valuations", &root_valuations, py::arg("k"), py::arg("ell"));
  m.def("ordinarity_check", &ordinarity_check, py::arg("k"), py::arg("ell"),
        py::arg("a1_val"), py::arg("a2_val"));

  m.def(
      "predict",
      [](const Triple& mu, Int p) { return predict_type(type_from_weight(weight_of(mu), p)); },
      py::arg("mu"), py::arg("p"));
  m.def(
      "predict_from_modular_weight",
      [](Int k, Int ell, Int p) { return predict_type(type_from_modular_weight(k, ell, p)); },
      py::arg("k"), py::arg("ell"), py::arg("p"));
  m.def(
      "predict_from_exponents",
      [](const std::array<Int, 4>& e, Int p) { return predict_type(type_from_exponents(e, p)); },
      py::arg("exponents"), py::arg("p"));

  m.def(
      "decompose_weyl",
      [](const Triple& lam, Int p) {
        py::list out;
        for (const auto& [sym, mult] : decompose_weyl(weight_of(lam), p).terms())
          out.append(py::make_tuple(triple_of(sym.hw), mult));
        return out;
      },
      py::arg("lam"), py::arg("p"));
  m.def(
      "enumerate_serre_weights",
      [](Int p, bool regular_only) {
        py::list out;
        for (const auto& f : enumerate_serre_weights(p, regular_only))
          out.append(triple_of(f.lam));
        return out;
      },
      py::arg("p"), py::arg("regular_only") = false);

  m.def(
      "companion_table",
      [](Int k, Int ell, Int p) {
        py::list out;
        for (const auto& r : companion_table(k, ell, p)) {
          py::dict d;
          d["case"] = r.case_id;
          d["twist_exp"] = r.twist_exp;
          d["conjugator"] = std::string(word(r.conjugator));
          d["required_zero_mask"] = r.required_zero_mask;
          d["k_prime"] = r.k_prime;
          d["ell_prime"] = r.ell_prime;
          d["lambda_prime"] = triple_of(r.lambda_prime);
          d["alcove_condition"] = r.alcove_condition;
          d["automorphic_type"] = std::string(to_string(r.automorphic_type));
          out.append(d);
        }
        return out;
      },
      py::arg("k"), py::arg("ell"), py::arg("p"));
  m.def("companion_matches_table", &companion_matches_table, py::arg("k"), py::arg("ell"),
        py::arg("p"));

  m.def(
      "bgg_outline",
      [](Int k, Int ell) {
        const BggOutline o = bgg_outline(k, ell);
        py::dict d;
        d["terms"] = o.terms;
        d["degrees"] = o.degrees;
        d["fil_jumps"] = o.fil_jumps;
        py::list graded;
        for (const auto& g : o.graded)
          graded.append(py::make_tuple(g.jump, g.coh_degree, g.sheaf));
        d["graded"] = graded;
        d["last_differential_degree"] = *o.differential_degrees[2];
        return d;
      },
      py::arg("k"), py::arg("ell"));

  m.def(
      "lift_recipes",
      [](const Triple& mu, Int p) {
        py::list out;
        for (const auto& r : lift_recipes(type_from_weight(weight_of(mu), p))) {
          py::dict d;
          d["row"] = r.row;
          d["shape"] = std::string(to_string(r.shape));
          d["side"] = std::string(to_string(r.side));
          d["ht_weights"] = r.ht_weights;
          d["units"] = r.units;
          d["mu_row"] = triple_of(r.mu_row);
          out.append(d);
        }
        return out;
      },
      py::arg("mu"), py::arg("p"));

  m.def(
      "run_invariant_suite",
      [](Int p) {
        std::ostringstream os;
        const bool ok = run_invariant_suite(p, os);
        return py::make_tuple(ok, os.str());
      },
      py::arg("p"));
}
