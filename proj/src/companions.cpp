#include "gsp4/companions.hpp"

#include "gsp4/predictor.hpp"

namespace gsp4 {

std::string_view to_string(AutomorphicType t) {
  switch (t) {
    case AutomorphicType::holomorphic: return "holomorphic";
    case AutomorphicType::whittaker: return "whittaker";
    case AutomorphicType::p_adic_only: return "p-adic-only";
  }
  return "?";
}

std::vector<CompanionRecord> companion_table(Int k, Int ell, Int p) {
  if (k < ell || ell < 3 || k + ell - 3 >= p - 1)
    fail(errc::weight_out_of_range, "need k >= l >= 3 and k+l-3 < p-1");
  const Int a = k - 3, b = ell - 3;

  auto rec = [&](const char* id, Int twist, WeylElement conj,
                 std::vector<std::pair<int, int>> mask, Int kp, Int lp, Weight lp_wt,
                 std::string cond, AutomorphicType at) {
    CompanionRecord r;
    r.case_id = id;
    r.twist_exp = twist;
    r.conjugator = conj;
    r.required_zero_mask = std::move(mask);
    r.k_prime = kp;
    r.ell_prime = lp;
    r.lambda_prime = lp_wt;
    r.alcove_condition = std::move(cond);
    r.automorphic_type = at;
    return r;
  };

  std::vector<CompanionRecord> out;
  out.push_back(rec("Fund", 0, WeylElement::e, {}, k, ell, Weight(a, b, a + b), "C0",
                    AutomorphicType::holomorphic));
  out.push_back(rec("C1", 2 - ell, WeylElement::s0, {{1, 2}, {3, 4}}, k + p - 1, p + 3 - ell,
                    Weight(a + p - 1, p - 3 - b, a + b), "C3 if a-b>1",
                    AutomorphicType::holomorphic));
  out.push_back(rec("C2", 1 - k, WeylElement::s0s1, {{1, 3}, {2, 3}, {2, 4}}, ell + p - 2,
                    p + 2 - k, Weight(b + p - 2, p - 4 - a, a + b), "C2 if b>0",
                    AutomorphicType::whittaker));
  out.push_back(rec("C3", 3 - k - ell, WeylElement::s0s1s0,
                    {{1, 2}, {1, 3}, {1, 4}, {2, 4}, {3, 4}}, p + 2 - ell, p + 2 - k,
                    Weight(p - 4 - b, p - 4 - a, a + b), "C1 if a+b<p-5",
                    AutomorphicType::whittaker));
  out.push_back(rec("C0'", 0, WeylElement::s1, {{2, 3}}, ell + p - 2, k + 1,
                    Weight(b + p - 2, a + 1, a + b), "C2 if b>0",
                    AutomorphicType::p_adic_only));
  out.push_back(rec("C1'", 2 - ell, WeylElement::s1s0, {{1, 2}, {1, 4}, {3, 4}}, p + 2 - ell,
                    k + 1, Weight(p - 4 - b, a + 1, a + b), "C1 if a>b",
                    AutomorphicType::p_adic_only));
  out.push_back(rec("C2'", 1 - k, WeylElement::s1s0s1,
                    {{1, 3}, {1, 4}, {2, 3}, {2, 4}}, p + 1 - k, ell,
                    Weight(p - 5 - a, b, a + b), "C0", AutomorphicType::p_adic_only));
  out.push_back(rec("C3'", 3 - k - ell, WeylElement::w0,
                    {{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}}, 2 * p - k, p + 3 - ell,
                    Weight(2 * p - 6 - a, p - 3 - b, a + b), "C3 if a+b<p-6",
                    AutomorphicType::p_adic_only));
  out.back().source_note =
      "printed source gives (k',l') = (2-k+2(p-1), 4-l+p-1) with a lowercase l, read as l";
  return out;
}

bool companion_matches_table(Int k, Int ell, Int p) {
  const auto records = companion_table(k, ell, p);
  const auto table = generic_table(k, ell, p);

  // the eight direct rows, keyed by (alcove index, left/right), where left
  // rows sit in the z-plane and right rows in the z+(p-1)-plane
  const Int z = (k - 1) + (ell - 2);
  auto find_row = [&](int alcove, bool left) -> const PredictedWeight* {
    for (const auto& pw : table.weights) {
      if (!pw.direct || pw.source_alcove != alcove) continue;
      const bool row_left = ((pw.weight.lam.c + 3 - z) % (2 * (p - 1))) == 0;
      if (row_left == left) return &pw;
    }
    return nullptr;
  };

  struct Expect {
    const char* case_id;
    int alcove;
    bool left;
  };
  const Expect map[] = {{"Fund", 0, true}, {"C1", 3, true},  {"C2", 2, true},
                        {"C3", 1, true},   {"C0'", 2, false}, {"C1'", 1, false},
                        {"C2'", 0, false}, {"C3'", 3, false}};

  for (const auto& e : map) {
    const PredictedWeight* row = find_row(e.alcove, e.left);
    if (!row) return false;
    const CompanionRecord* rec = nullptr;
    for (const auto& r : records)
      if (r.case_id == e.case_id) rec = &r;
    if (!rec) return false;
    const Weight lp = rec->lambda_prime + rho_tilde();
    const Weight row_nu = row->weight.lam + rho_tilde();
    if (lp.a != row_nu.a || lp.b != row_nu.b) return false;
    if ((lp.c - row_nu.c) % (p - 1) != 0) return false;
  }
  return true;
}

BggOutline bgg_outline(Int k, Int ell) {
  if (k < ell || ell < 3) fail(errc::invalid_modular_weight, "need k >= l >= 3");
  BggOutline o;
  o.terms = {{{3 - ell, 3 - k}, {ell - 1, 3 - k}, {k, 4 - ell}, {k, ell}}};
  const Int w = k + ell - 3;  // motivic weight a+b+3
  o.degrees = {w, w + 1, w + 2, w + 3};
  o.fil_jumps = {0, ell - 2, k - 1, k + ell - 3};
  o.graded = {{{0, 3, {3 - ell, 3 - k}},
               {ell - 2, 2, {ell - 1, 3 - k}},
               {k - 1, 1, {k, 4 - ell}},
               {k + ell - 3, 0, {k, ell}}}};
  o.differential_degrees = {std::nullopt, std::nullopt, ell - 1};
  return o;
}

}  // namespace gsp4
