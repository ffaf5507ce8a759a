// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure.  Registered with ctest as "acceptance".

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <vector>

#include "gsp4/companions.hpp"
#include "gsp4/modular.hpp"
#include "gsp4/predictor.hpp"
#include "gsp4/tame_type.hpp"

using namespace gsp4;
using clock_type = std::chrono::steady_clock;

namespace {

int failures = 0;

void report(int criterion, const char* title, bool ok, double seconds,
            const std::string& detail = "") {
  std::printf("%s %2d: %s (%.2fs)%s%s\n", ok ? "PASS" : "FAIL", criterion, title, seconds,
              detail.empty() ? "" : " -- ", detail.c_str());
  if (!ok) ++failures;
}

template <class F>
void criterion(int n, const char* title, F&& body) {
  const auto start = clock_type::now();
  bool ok = false;
  std::string detail;
  try {
    ok = body(detail);
  } catch (const std::exception& e) {
    detail = e.what();
  }
  const double secs = std::chrono::duration<double>(clock_type::now() - start).count();
  report(n, title, ok, secs, detail);
}

std::vector<Weight> canonical_types(Int p, bool generic_only) {
  std::vector<Weight> out;
  const Int q = p - 1;
  for (Int x = 0; 2 * x <= q; ++x)
    for (Int y = 0; y <= x; ++y) {
      if (generic_only && !(0 < y && y < x && 2 * x < q)) continue;
      for (Int z = 0; z < 2 * q; ++z) {
        if (((z - x - y) % 2 + 2) % 2 != 0) continue;
        const Weight mu(x, y, z);
        if (type_from_weight(mu, p).mu == mu) out.push_back(mu);
      }
    }
  return out;
}

std::set<SerreWeight> weight_set(const std::vector<PredictedWeight>& v) {
  std::set<SerreWeight> s;
  for (const auto& pw : v) s.insert(pw.weight);
  return s;
}

}  // namespace

int main() {
  criterion(1, "corollary table reproduction at (17,7,4), (23,9,5), (19,8,5)",
            [](std::string& detail) {
              for (const auto& [p, k, l] :
                   std::vector<std::array<Int, 3>>{{17, 7, 4}, {23, 9, 5}, {19, 8, 5}}) {
                const auto start = clock_type::now();
                const auto t = type_from_modular_weight(k, l, p);
                const auto pred = predict(t);
                const auto table = generic_table(k, l, p);
                if (pred.size() != 20) {
                  detail = "expected 20 weights";
                  return false;
                }
                int direct = 0;
                for (const auto& pw : pred) direct += pw.direct;
                if (direct != 8) {
                  detail = "expected 8 direct weights";
                  return false;
                }
                if (weight_set(pred) != weight_set(table.weights)) {
                  detail = "prediction differs from the transcribed table";
                  return false;
                }
                for (const auto& pw : table.weights) {
                  // row provenance must agree weight by weight
                  const auto it = std::find_if(
                      pred.begin(), pred.end(),
                      [&](const PredictedWeight& q) { return q.weight == pw.weight; });
                  if (it == pred.end() || it->direct != pw.direct) {
                    detail = "provenance mismatch at " + pw.weight.lam.str();
                    return false;
                  }
                }
                const double secs =
                    std::chrono::duration<double>(clock_type::now() - start).count();
                if (secs >= 1.0) {
                  detail = "instance exceeded 1s";
                  return false;
                }
              }
              return true;
            });

  criterion(2, "route equivalence, exhaustive generic types at p in {11,13}",
            [](std::string& detail) {
              const auto start = clock_type::now();
              for (Int p : {11, 13}) {
                for (const Weight& mu : canonical_types(p, true)) {
                  const TameType t{p, mu, mu};
                  std::set<SerreWeight> direct;
                  for (const auto& pw : predict_direct(t)) direct.insert(pw.weight);
                  if (predict_jantzen(t) != direct) {
                    detail = "routes differ at p=" + std::to_string(p) + ", mu=" + mu.str();
                    return false;
                  }
                }
              }
              return std::chrono::duration<double>(clock_type::now() - start).count() < 30.0;
            });

  criterion(3, "degenerate totality and representative invariance at p in {2,3,5,7}",
            [](std::string& detail) {
              const auto start = clock_type::now();
              std::mt19937_64 rng(321);
              std::uniform_int_distribution<Int> shift(-2, 2);
              std::uniform_int_distribution<int> widx(0, 7);
              for (Int p : {2, 3, 5, 7}) {
                for (const Weight& mu : canonical_types(p, false)) {
                  const TameType t{p, mu, mu};
                  const auto pred = predict_direct(t);
                  for (const auto& pw : pred) {
                    if (!pw.weight.regular || canonical_serre(pw.weight.lam, p) != pw.weight) {
                      detail = "non-canonical or irregular output at " + mu.str();
                      return false;
                    }
                  }
                  for (int i = 0; i < 10; ++i) {
                    Int u = shift(rng), v = shift(rng), w = shift(rng);
                    if (((u + v - w) & 1LL) != 0) ++w;
                    const Weight moved =
                        weyl_act(all_weyl_elements[static_cast<size_t>(widx(rng))], mu) +
                        (p - 1) * Weight(u, v, w);
                    const TameType t2 = type_from_weight(moved, p);
                    if (t2.mu != mu || weight_set(predict_direct(t2)) != weight_set(pred)) {
                      detail = "representative dependence at " + mu.str();
                      return false;
                    }
                  }
                }
              }
              return std::chrono::duration<double>(clock_type::now() - start).count() < 10.0;
            });

  criterion(4, "twisting lemma on 100 random types at p in {13,17}",
            [](std::string& detail) {
              std::mt19937_64 rng(17);
              std::uniform_int_distribution<Int> cdist(-30, 30);
              std::uniform_int_distribution<Int> adist(-40, 40);
              for (int i = 0; i < 100; ++i) {
                const Int p = (i % 2) ? 13 : 17;
                Int a = adist(rng), b = adist(rng), c = adist(rng);
                if (((a + b - c) & 1LL) != 0) ++c;
                const TameType t = type_from_weight(Weight(a, b, c), p);
                if (!twist_equivariance_check(t, cdist(rng))) {
                  detail = "failure at mu=" + t.mu.str() + ", p=" + std::to_string(p);
                  return false;
                }
              }
              return true;
            });

  criterion(5, "Serre weight counts p^2(p-1) and (p-1)^3 for p in {2,3,5,7,11}",
            [](std::string& detail) {
              for (Int p : {2, 3, 5, 7, 11}) {
                if (static_cast<Int>(enumerate_serre_weights(p, false).size()) !=
                        p * p * (p - 1) ||
                    static_cast<Int>(enumerate_serre_weights(p, true).size()) !=
                        (p - 1) * (p - 1) * (p - 1)) {
                  detail = "count mismatch at p=" + std::to_string(p);
                  return false;
                }
              }
              return true;
            });

  criterion(6, "decomposition sanity: alcove adjacency, dimensions, sign rule",
            [](std::string& detail) {
              for (Int p : {2, 3, 5, 7, 11, 13}) {
                for (Int d = 0; d < p; ++d)
                  for (Int b = 0; b < p; ++b) {
                    const Weight lam(d + b, b, d);
                    const auto pos = classify(lam, p);
                    for (const auto& [sym, mult] : decompose_weyl(lam, p).terms()) {
                      if (!flags(sym.hw, p).p_restricted) {
                        detail = "constituent not restricted at " + lam.str();
                        return false;
                      }
                      if (pos.interior() && sym.hw != lam) {
                        const auto img = classify(sym.hw, p);
                        if (!img.interior() || img.alcove != pos.alcove - 1) {
                          detail = "constituent not adjacent at " + lam.str();
                          return false;
                        }
                      }
                    }
                  }
              }
              if (virtual_dim(Weight(0, 0, 0)) != 1 || virtual_dim(Weight(1, 0, 1)) != 4 ||
                  virtual_dim(Weight(1, 1, 2)) != 5) {
                detail = "dimension values";
                return false;
              }
              std::mt19937_64 rng(55);
              std::uniform_int_distribution<Int> dist(-30, 30);
              for (int i = 0; i < 50; ++i) {
                Int a = dist(rng), b = dist(rng), c = dist(rng);
                if (((a + b - c) & 1LL) != 0) ++c;
                const Weight lam(a, b, c);
                const auto [sgn, dom] = normalize_weyl(lam);
                for (WeylElement w : all_weyl_elements) {
                  const auto [s2, d2] = normalize_weyl(dot_act(w, lam));
                  const bool ok =
                      sgn == 0 ? s2 == 0 : (s2 == sgn * weyl_sign(w) && *d2 == *dom);
                  if (!ok || virtual_dim(dot_act(w, lam)) != weyl_sign(w) * virtual_dim(lam)) {
                    detail = "sign rule at " + lam.str();
                    return false;
                  }
                }
              }
              return true;
            });

  criterion(7, "index identity: profile dimension (p+1)^2(p^2+1) for p in {5,7,11}",
            [](std::string& detail) {
              for (Int p : {5, 7, 11}) {
                // confirmed by brute force on the whole region 0 < y < x,
                // including the boundary x = (p-1)/2
                std::vector<Weight> types;
                for (const Weight& mu : canonical_types(p, false))
                  if (0 < mu.b && mu.b < mu.a) types.push_back(mu);
                if (types.empty()) {
                  detail = "empty enumeration at p=" + std::to_string(p);
                  return false;
                }
                for (const Weight& mu : types) {
                  Int total = 0;
                  for (const auto& [sym, mult] : jantzen_profile(TameType{p, mu, mu}).terms()) {
                    const auto [sgn, dom] = normalize_weyl(sym.hw);
                    if (sgn != 0) total += mult * sgn * virtual_dim(*dom);
                  }
                  if (total != (p + 1) * (p + 1) * (p * p + 1)) {
                    detail = "identity fails at p=" + std::to_string(p) + ", mu=" + mu.str();
                    return false;
                  }
                }
              }
              return true;
            });

  criterion(8, "companion/table coherence on the generic region for p in {13,17,19}",
            [](std::string& detail) {
              for (Int p : {13, 17, 19}) {
                for (Int l = 4; l <= p; ++l)
                  for (Int k = l + 1; k + l < p + 1; ++k)
                    if (!companion_matches_table(k, l, p)) {
                      detail = "mismatch at (" + std::to_string(k) + "," + std::to_string(l) +
                               "), p=" + std::to_string(p);
                      return false;
                    }
              }
              const auto recs = companion_table(7, 4, 17);
              for (const auto& r : recs)
                if (r.case_id == "C1" &&
                    !(r.twist_exp == -2 && r.k_prime == 23 && r.ell_prime == 16 &&
                      r.lambda_prime == Weight(20, 13, 5)))
                  return false;
              return true;
            });

  criterion(9, "lift coherence at (p,x,y) = (17,6,2) and (23,8,3)",
            [](std::string& detail) {
              for (const auto& [p, x, y] :
                   std::vector<std::array<Int, 3>>{{17, 6, 2}, {23, 8, 3}}) {
                const auto recipes =
                    lift_recipes(type_from_weight(Weight(x, y, x + y), p));
                if (recipes.size() != 20) {
                  detail = "expected 20 recipes";
                  return false;
                }
                for (const auto& r : recipes) {
                  auto ht = r.ht_weights;
                  auto sp = spin_cochar(r.mu_row);
                  std::sort(ht.begin(), ht.end());
                  std::sort(sp.begin(), sp.end());
                  if (ht != sp ||
                      r.ht_weights[0] + r.ht_weights[3] != r.ht_weights[1] + r.ht_weights[2]) {
                    detail = "recipe incoherent: row " + r.row;
                    return false;
                  }
                }
              }
              return true;
            });

  criterion(10, "BGG filtration jumps equal ordinarity valuations, 3 <= l <= k <= 40",
            [](std::string& detail) {
              for (Int l = 3; l <= 40; ++l)
                for (Int k = l; k <= 40; ++k) {
                  const auto o = bgg_outline(k, l);
                  const auto v = root_valuations(k, l);
                  if (!std::equal(o.fil_jumps.begin(), o.fil_jumps.end(), v.begin())) {
                    detail = "mismatch at (" + std::to_string(k) + "," + std::to_string(l) + ")";
                    return false;
                  }
                }
              return true;
            });

  criterion(11, "alcove axioms, exhaustive for p <= 11", [](std::string& detail) {
    for (Int p : {2, 3, 5, 7, 11}) {
      for (Int x = 0; x <= 2 * p; ++x)
        for (Int y = 0; y <= p; ++y) {
          const auto cls = alcove_closures(x, y, p);
          if (cls.empty()) continue;
          const Weight lam(x - 2, y - 1, x + y - 3);
          for (int i = 0; i < 3; ++i) {
            if (wall_reflect(i, wall_reflect(i, lam, p), p) != lam) {
              detail = "reflection not involutive";
              return false;
            }
          }
          const auto pos = classify(lam, p);
          if (pos.interior() && pos.alcove < 3) {
            const auto img = classify(wall_reflect(pos.alcove, lam, p), p);
            if (!img.interior() || img.alcove != pos.alcove + 1) {
              detail = "interior not exchanged at " + lam.str();
              return false;
            }
          }
          const auto upper = up_set(lam, p);
          for (int j = cls.front(); j <= 3; ++j) {
            const Weight t = up_transport(lam, j, p);  // throws unless unique
            if (!up_leq(lam, t, p) || up_transport(t, 3, p) != up_transport(lam, 3, p)) {
              detail = "transport inconsistent at " + lam.str();
              return false;
            }
          }
          for (const Weight& m : upper) {
            if (m != lam && up_leq(m, lam, p)) {
              detail = "antisymmetry fails at " + lam.str();
              return false;
            }
            for (const Weight& h : up_set(m, p))
              if (!up_leq(lam, h, p)) {
                detail = "transitivity fails at " + lam.str();
                return false;
              }
          }
        }
    }
    return true;
  });

  if (failures) {
    std::printf("%d criterion(s) failed\n", failures);
    return 1;
  }
  std::printf("all acceptance criteria passed\n");
  return 0;
}
