#include "gsp4/predictor.hpp"

#include <algorithm>
#include <map>

namespace gsp4 {

namespace {

Int floor_mod(Int v, Int m) {
  Int r = v % m;
  return r < 0 ? r + m : r;
}

// the eight (x,y)-shapes of ν'+ρ̃, in a fixed order (alcove 0..3, A then B)
std::vector<std::pair<Int, Int>> candidate_shapes(Int x, Int y, Int p) {
  const Int q = p - 1;
  return {{x, y},         {q - x, y},      {q - y, q - x},  {q - y, x},
          {y + q, q - x}, {y + q, x},      {x + q, q - y},  {2 * q - x, q - y}};
}

void require_canonical(const TameType& t) {
  if (type_from_weight(t.mu, t.p).mu != t.mu)
    fail(errc::bad_request, t.mu.str() + " is not a canonical type representative");
}

// resolve the c of a candidate: the type equivalence pins it among the two
// (p-1)-classes over z, and fixes parity
std::vector<Weight> resolve_candidates(const TameType& t) {
  require_canonical(t);
  const Int p = t.p, q = p - 1;
  const auto [x, y, z] = std::tuple{t.mu.a, t.mu.b, t.mu.c};
  std::vector<Weight> out;
  for (const auto& [A, B] : candidate_shapes(x, y, p)) {
    for (Int dz : {Int(0), q}) {
      const Int C = floor_mod(z + dz, 2 * q);
      auto cand = Weight::try_make(A, B, C);
      if (!cand) continue;
      if (!(A >= B && B >= 0)) continue;                      // ν'+ρ̃ dominant
      if (!types_equivalent(t.mu, *cand, p)) continue;
      out.push_back(*cand - rho_tilde());
    }
  }
  return out;
}

int source_alcove_index(const Weight& nu_prime, Int p) {
  auto [x, y] = alcove_xy(nu_prime);
  auto cl = alcove_closures(x, y, p);
  return cl.empty() ? -1 : cl.front();
}

void sort_predictions(std::vector<PredictedWeight>& v) {
  std::sort(v.begin(), v.end(), [](const PredictedWeight& l, const PredictedWeight& r) {
    const int li = l.alcove.sort_index(), ri = r.alcove.sort_index();
    if (li != ri) return li < ri;
    return l.weight.lam < r.weight.lam;
  });
}

std::set<SerreWeight> weight_set(const std::vector<PredictedWeight>& v) {
  std::set<SerreWeight> s;
  for (const auto& w : v) s.insert(w.weight);
  return s;
}

}  // namespace

std::vector<Weight> direct_candidates(const TameType& t) { return resolve_candidates(t); }

VirtualSum jantzen_profile(const TameType& t) {
  require_canonical(t);
  const Int p = t.p, q = p - 1;
  const Int x = t.mu.a, y = t.mu.b, z = t.mu.c;
  const Int za = z + q;
  VirtualSum v;
  // A family (carries the central twist), top alcove downwards
  v.add(W(Weight(2 * q - x, q - y, za)), 1);
  v.add(W(Weight(y + q, x, za)), 1);
  v.add(W(Weight(q - y, x, za)), 1);
  v.add(W(Weight(q - x, y, za)), 1);
  v.add(W(Weight(p - 2 - y, x - 1, za)), 1);
  v.add(W(Weight(p - 3 - x, y, za)), 1);
  // B family
  v.add(W(Weight(x + q, q - y, z)), 1);
  v.add(W(Weight(y + q, q - x, z)), 1);
  v.add(W(Weight(q - y, q - x, z)), 1);
  v.add(W(Weight(x, y, z)), 1);
  v.add(W(Weight(p - 2 - y, p - 2 - x, z)), 1);
  v.add(W(Weight(x - 2, y, z)), 1);
  return v;
}

bool strictly_generic(const TameType& t) {
  return 0 < t.mu.b && t.mu.b < t.mu.a && 2 * t.mu.a < t.p - 1;
}

std::set<SerreWeight> predict_jantzen(const TameType& t) {
  if (!strictly_generic(t))
    fail(errc::degenerate_type_use_direct_route,
         "type " + t.mu.str() + " is not strictly generic");
  const VirtualSum profile = jantzen_profile(t);
  const VirtualSum jh = jh_semisimplify(profile, t.p, /*assert_effective=*/true);
  std::set<SerreWeight> out;
  for (const auto& [sym, mult] : jh.terms()) out.insert(operator_R(sym.hw, t.p));
  return out;
}

std::vector<PredictedWeight> predict_direct(const TameType& t) {
  const Int p = t.p;
  std::map<SerreWeight, PredictedWeight> found;
  for (const Weight& nu_prime : resolve_candidates(t)) {
    auto [x, y] = alcove_xy(nu_prime);
    if (alcove_closures(x, y, p).empty()) continue;
    for (const Weight& nu : up_set(nu_prime, p)) {
      if (!flags(nu, p).p_regular) continue;
      PredictedWeight pw;
      pw.weight = canonical_serre(nu, p);
      pw.alcove = classify(nu, p);
      pw.direct = (nu == nu_prime);
      pw.source_alcove = source_alcove_index(nu_prime, p);
      pw.source_nu_prime = nu_prime;
      auto [it, inserted] = found.emplace(pw.weight, pw);
      if (!inserted && pw.direct && !it->second.direct) it->second = pw;
    }
  }
  std::vector<PredictedWeight> out;
  out.reserve(found.size());
  for (auto& [w, pw] : found) out.push_back(pw);
  sort_predictions(out);
  return out;
}

GenericTable generic_table(Int k, Int ell, Int p) {
  if (!modular_weight_generic(k, ell, p))
    fail(errc::genericity_violated, "need k > l > 3 and k+l < p+1");
  const Int x = k - 1, y = ell - 2, q = p - 1, z = x + y;
  const Int zb = z + q;  // the right column carries the central twist

  struct Row {
    Int X, Y, C;
    bool direct;
    int src;
    std::pair<Int, Int> src_xy;
  };
  const std::pair<Int, Int> c0l{x, y}, c0r{q - x, y};
  const std::pair<Int, Int> c1l{q - y, q - x}, c1r{q - y, x};
  const std::pair<Int, Int> c2l{y + q, q - x}, c2r{y + q, x};
  const std::pair<Int, Int> c3l{x + q, q - y}, c3r{2 * q - x, q - y};
  const std::vector<Row> rows = {
      {x, y, z, true, 0, c0l},            {q - x, y, zb, true, 0, c0r},
      {q - y, q - x, z, true, 1, c1l},    {q - y, x, zb, true, 1, c1r},
      {p - y, p - x, z, false, 0, c0l},   {p - y, x + 1, zb, false, 0, c0r},
      {y + q, q - x, z, true, 2, c2l},    {y + q, x, zb, true, 2, c2r},
      {y + p + 1, q - x, z, false, 1, c1l}, {y + p + 1, x, zb, false, 1, c1r},
      {y + p, p - x, z, false, 0, c0l},   {y + p, x + 1, zb, false, 0, c0r},
      {x + q, q - y, z, true, 3, c3l},    {2 * q - x, q - y, zb, true, 3, c3r},
      {x + p + 1, p + 1 - y, z, false, 2, c2l}, {2 * p - x, p + 1 - y, zb, false, 2, c2r},
      {x + p + 1, q - y, z, false, 1, c1l},     {2 * p - x, q - y, zb, false, 1, c1r},
      {x + p, p - y, z, false, 0, c0l},   {2 * p - 1 - x, p - y, zb, false, 0, c0r},
  };

  GenericTable table;
  for (const auto& r : rows) {
    const Weight nu = Weight(r.X, r.Y, r.C) - rho_tilde();
    const Int src_c = r.C;  // transports fix c, so the source sits in the same plane
    PredictedWeight pw;
    pw.weight = canonical_serre(nu, p);
    pw.alcove = classify(nu, p);
    pw.direct = r.direct;
    pw.source_alcove = r.src;
    pw.source_nu_prime = Weight(r.src_xy.first, r.src_xy.second, src_c) - rho_tilde();
    table.weights.push_back(pw);
  }
  sort_predictions(table.weights);

  if (k - ell == 1)
    table.boundary_notes.push_back(
        "k-l = 1: the left C3 row lies on the wall between C2 and C3");
  if (k + ell == p)
    table.boundary_notes.push_back(
        "k+l = p: the right C3 row lies on the wall between C2 and C3");
  return table;
}

std::vector<PredictedWeight> predict(const TameType& t) {
  std::vector<PredictedWeight> direct = predict_direct(t);
  const std::set<SerreWeight> direct_set = weight_set(direct);

  if (strictly_generic(t)) {
    const std::set<SerreWeight> jantzen = predict_jantzen(t);
    if (jantzen != direct_set)
      fail(errc::route_disagreement,
           "Jantzen and transport routes differ on type " + t.mu.str());
  }

  const Int x = t.mu.a, y = t.mu.b, z = t.mu.c;
  const Int k = x + 1, ell = y + 2;
  if (modular_weight_generic(k, ell, t.p)) {
    // mu may sit in a twisted plane; compare against the twisted table
    const Int cshift = (z - (x + y)) / 2;
    std::set<SerreWeight> expected;
    for (const auto& row : generic_table(k, ell, t.p).weights)
      expected.insert(twist_weight(row.weight, cshift));
    if (expected != direct_set)
      fail(errc::route_disagreement, "table route differs on type " + t.mu.str());
  }
  return direct;
}

bool twist_equivariance_check(const TameType& t, Int c) {
  const auto lhs = weight_set(predict(twist_type(t, c)));
  std::set<SerreWeight> rhs;
  for (const auto& pw : predict(t)) rhs.insert(twist_weight(pw.weight, c));
  return lhs == rhs;
}

std::string_view to_string(LiftShape s) {
  switch (s) {
    case LiftShape::diagonal: return "diagonal";
    case LiftShape::klingen: return "klingen";
    case LiftShape::siegel: return "siegel";
  }
  return "?";
}

std::string_view to_string(LiftSide s) { return s == LiftSide::left ? "left" : "right"; }

std::vector<LiftRecipe> lift_recipes(const TameType& t) {
  require_canonical(t);
  const Int p = t.p, q = p - 1;
  const Int x0 = t.mu.a, y0 = t.mu.b, z = t.mu.c;
  const Int k = x0 + 1, ell = y0 + 2;
  if (!modular_weight_generic(k, ell, p))
    fail(errc::genericity_violated, "lift recipes need k > l > 3 and k+l < p+1");
  const Int twist = (z - (x0 + y0)) / 2;  // uniform central twist of the whole table

  struct Shape {
    const char* row;
    LiftShape shape;
    std::array<Int, 4> ht;         // descending, in terms of (x,y)
    std::array<int, 4> units;      // indices into the unit alphabet
    std::pair<Int, Int> mu_xy;     // (a,b) of the row's ν+ρ̃
  };
  auto shapes = [&](Int x, Int y) -> std::vector<Shape> {
    return {
        {"C0", LiftShape::diagonal, {x + y, x, y, 0}, {0, 1, 2, 3}, {x, y}},
        {"C1", LiftShape::diagonal, {q, x, y, x + y - q}, {3, 1, 2, 0}, {q - y, q - x}},
        {"C2", LiftShape::diagonal, {y + q, x + y, 0, x - q}, {2, 0, 3, 1}, {y + q, q - x}},
        {"C3", LiftShape::diagonal, {x + q, x + y, 0, y - q}, {1, 0, 3, 2}, {x + q, q - y}},
        {"C0->C1", LiftShape::klingen, {p, x, y, x + y - p}, {3, 1, 2, 0}, {p - y, p - x}},
        {"C0->C2", LiftShape::klingen, {y + p, x + y, 0, x - p}, {2, 0, 3, 1}, {y + p, p - x}},
        {"C0->C3", LiftShape::klingen, {x + p, x + y, 0, y - p}, {1, 0, 3, 2}, {x + p, p - y}},
        {"C1->C2", LiftShape::siegel, {y + p, x + y + 1, -1, x - p}, {2, 0, 3, 1},
         {y + p + 1, q - x}},
        {"C1->C3", LiftShape::siegel, {x + p, x + y + 1, -1, y - p}, {1, 0, 3, 2},
         {x + p + 1, q - y}},
        {"C2->C3", LiftShape::klingen, {x + p + 1, x + y, 0, y - p - 1}, {1, 0, 3, 2},
         {x + p + 1, p + 1 - y}},
    };
  };
  static const std::array<std::string, 4> alphabet = {"alpha", "beta", "gamma", "delta"};
  // the right half swaps (alpha,beta) with (gamma,delta) and twists by x0
  static const std::array<int, 4> swap_units = {2, 3, 0, 1};

  std::vector<LiftRecipe> out;
  auto emit = [&](LiftSide side, Int x, Int y, Int extra_twist,
                  const std::array<int, 4>& relabel) {
    for (const auto& s : shapes(x, y)) {
      LiftRecipe r;
      r.row = s.row;
      r.shape = s.shape;
      r.side = side;
      const Int shift = twist + extra_twist;
      for (int i = 0; i < 4; ++i) {
        r.ht_weights[static_cast<size_t>(i)] = s.ht[static_cast<size_t>(i)] + shift;
        r.units[static_cast<size_t>(i)] =
            alphabet[static_cast<size_t>(relabel[static_cast<size_t>(s.units[static_cast<size_t>(i)])])];
      }
      r.mu_row = Weight(s.mu_xy.first, s.mu_xy.second, x + y + 2 * shift);
      out.push_back(r);
    }
  };
  emit(LiftSide::left, x0, y0, 0, {0, 1, 2, 3});
  emit(LiftSide::right, q - x0, y0, x0, swap_units);
  return out;
}

}  // namespace gsp4
