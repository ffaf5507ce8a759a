#pragma once

#include <json.hpp>

#include "gsp4/companions.hpp"
#include "gsp4/predictor.hpp"

namespace gsp4 {

using nlohmann::json;

inline json to_json(const Weight& w) { return json::array({w.a, w.b, w.c}); }

inline json to_json(const SerreWeight& f) {
  return json{{"lambda", to_json(f.lam)}, {"regular", f.regular}};
}

inline json to_json(const PredictedWeight& pw) {
  const Weight xr = pw.weight.lam + rho_tilde();
  json j = to_json(pw.weight);
  j["lambda_plus_rho"] = to_json(xr);
  j["alcove"] = pw.alcove.label();
  j["provenance"] = pw.direct ? "direct" : "transported";
  j["source_alcove"] = "C" + std::to_string(pw.source_alcove);
  j["source_nu_prime"] = to_json(pw.source_nu_prime);
  return j;
}

inline json to_json(const VirtualSum& v) {
  json arr = json::array();
  for (const auto& [sym, mult] : v.terms())
    arr.push_back(json{{"symbol", sym.tag == BasisTag::weyl ? "W" : "F"},
                       {"lambda", to_json(sym.hw)},
                       {"multiplicity", mult}});
  return arr;
}

inline json to_json(const LiftRecipe& r) {
  return json{{"row", r.row},
              {"shape", std::string(to_string(r.shape))},
              {"side", std::string(to_string(r.side))},
              {"ht_weights", json(r.ht_weights)},
              {"units", json(r.units)},
              {"mu_row", to_json(r.mu_row)}};
}

inline json to_json(const CompanionRecord& r) {
  json mask = json::array();
  for (const auto& [i, j] : r.required_zero_mask) mask.push_back(json::array({i, j}));
  json out{{"case", r.case_id},
           {"twist_exp", r.twist_exp},
           {"conjugator", std::string(word(r.conjugator))},
           {"required_zero_mask", mask},
           {"k_prime", r.k_prime},
           {"ell_prime", r.ell_prime},
           {"lambda_prime", to_json(r.lambda_prime)},
           {"alcove_condition", r.alcove_condition},
           {"automorphic_type", std::string(to_string(r.automorphic_type))}};
  if (!r.source_note.empty()) out["source_note"] = r.source_note;
  return out;
}

inline json to_json(const BggOutline& o) {
  json terms = json::array();
  for (const auto& [r, s] : o.terms) terms.push_back(json::array({r, s}));
  json graded = json::array();
  for (const auto& g : o.graded)
    graded.push_back(json{{"jump", g.jump},
                          {"coh_degree", g.coh_degree},
                          {"sheaf", json::array({g.sheaf.first, g.sheaf.second})}});
  json diffs = json::array();
  for (const auto& d : o.differential_degrees)
    diffs.push_back(d ? json(*d) : json(nullptr));
  return json{{"terms", terms},
              {"degrees", json(o.degrees)},
              {"fil_jumps", json(o.fil_jumps)},
              {"graded", graded},
              {"differential_degrees", diffs}};
}

}  // namespace gsp4
