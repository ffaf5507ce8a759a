#include "gsp4/checks.hpp"

#include <algorithm>
#include <map>
#include <ostream>
#include <random>
#include <set>
#include <vector>

#include "gsp4/alcove.hpp"
#include "gsp4/modular.hpp"
#include "gsp4/predictor.hpp"
#include "gsp4/tame_type.hpp"

namespace gsp4 {

namespace {

std::vector<Weight> canonical_type_weights(Int p, bool generic_only) {
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

Weight random_weight(std::mt19937_64& rng, Int span) {
  std::uniform_int_distribution<Int> d(-span, span);
  const Int a = d(rng), b = d(rng);
  Int c = d(rng);
  if (((a + b - c) & 1LL) != 0) ++c;
  return Weight(a, b, c);
}

}  // namespace

bool run_invariant_suite(Int p, std::ostream& os) {
  bool ok_all = true;
  std::mt19937_64 rng(0x5eedu + static_cast<unsigned long long>(p));
  auto report = [&](const char* name, bool ok, const std::string& detail = "") {
    os << (ok ? "ok   " : "FAIL ") << name;
    if (!ok && !detail.empty()) os << ": " << detail;
    os << "\n";
    ok_all = ok_all && ok;
  };

  // group law for both actions, all 64 pairs
  {
    bool ok = true;
    validate_weyl_presentation();
    for (int i = 0; i < 20 && ok; ++i) {
      const Weight lam = random_weight(rng, 50);
      for (WeylElement u : all_weyl_elements)
        for (WeylElement v : all_weyl_elements) {
          if (weyl_act(compose(u, v), lam) != weyl_act(u, weyl_act(v, lam))) ok = false;
          if (dot_act(compose(u, v), lam) != dot_act(u, dot_act(v, lam))) ok = false;
        }
    }
    report("weyl group law (plain and dot action)", ok);
  }

  // spin cocharacter: linear, balanced, invertible
  {
    bool ok = true;
    for (int i = 0; i < 200; ++i) {
      const Weight u = random_weight(rng, 40), v = random_weight(rng, 40);
      const auto su = spin_cochar(u), sv = spin_cochar(v), ss = spin_cochar(u + v);
      for (int j = 0; j < 4; ++j)
        if (ss[static_cast<size_t>(j)] !=
            su[static_cast<size_t>(j)] + sv[static_cast<size_t>(j)])
          ok = false;
      if (su[0] + su[3] != u.c || su[1] + su[2] != u.c) ok = false;
      if (Weight(su[0] - su[2], su[0] - su[1], su[0] + su[3]) != u) ok = false;
    }
    report("spin cocharacter linear/balanced/invertible", ok);
  }

  // alcove axioms
  {
    bool ok = true;
    std::string detail;
    for (Int x = 0; x <= 2 * p && ok; ++x)
      for (Int y = 0; y <= p && ok; ++y) {
        const auto cls = alcove_closures(x, y, p);
        if (cls.empty()) continue;
        const Weight lam(x - 2, y - 1, x + y - 3);
        for (int i = 0; i < 3; ++i) {
          const Weight r = wall_reflect(i, lam, p);
          if (wall_reflect(i, r, p) != lam) {
            ok = false;
            detail = "reflection not involutive at " + lam.str();
          }
        }
        const auto upper = up_set(lam, p);
        for (int j = cls.front(); j <= 3; ++j) {
          const Weight tr = up_transport(lam, j, p);  // throws if not unique
          if (!up_leq(lam, tr, p)) {
            ok = false;
            detail = "transport not above source at " + lam.str();
          }
        }
        for (const Weight& m : upper)
          if (m != lam && up_leq(m, lam, p)) {
            ok = false;
            detail = "antisymmetry fails at " + lam.str();
          }
      }
    report("alcove axioms (involutions, transports, antisymmetry)", ok, detail);
  }

  // Serre weight counts
  {
    const auto all = enumerate_serre_weights(p, false);
    const auto reg = enumerate_serre_weights(p, true);
    const bool ok = static_cast<Int>(all.size()) == p * p * (p - 1) &&
                    static_cast<Int>(reg.size()) == (p - 1) * (p - 1) * (p - 1);
    report("Serre weight counts p^2(p-1) and (p-1)^3", ok);
  }

  // Weyl module decomposition: constituents restricted, neighbours only
  {
    bool ok = true;
    const Int bound = std::min<Int>(p, 14);
    for (Int d = 0; d < bound && ok; ++d)
      for (Int b = 0; b < bound && ok; ++b) {
        const Weight lam(d + b, b, d);
        const auto pos = classify(lam, p);
        const auto dec = decompose_weyl(lam, p);
        for (const auto& [sym, mult] : dec.terms()) {
          if (!flags(sym.hw, p).p_restricted) ok = false;
          if (pos.interior() && sym.hw != lam) {
            const auto q = classify(sym.hw, p);
            if (!(q.interior() && q.alcove == pos.alcove - 1)) ok = false;
          }
        }
      }
    report("Weyl decomposition constituents p-restricted, adjacent alcove", ok);
  }

  // sign rule across full orbits
  {
    bool ok = true;
    for (int i = 0; i < 50 && ok; ++i) {
      const Weight lam = random_weight(rng, 30);
      const auto [sgn, dom] = normalize_weyl(lam);
      for (WeylElement w : all_weyl_elements) {
        const Weight img = dot_act(w, lam);
        const auto [s2, d2] = normalize_weyl(img);
        if (sgn == 0) {
          if (s2 != 0) ok = false;
        } else if (s2 != sgn * weyl_sign(w) || *d2 != *dom) {
          ok = false;
        }
        if (virtual_dim(img) != weyl_sign(w) * virtual_dim(lam)) ok = false;
      }
    }
    report("sign rule on dot orbits; signed dimension", ok);
  }

  // prediction routes agree; predictions regular and twist-equivariant
  {
    bool ok = true;
    std::string detail;
    auto types = canonical_type_weights(p, false);
    // keep the run small for large p
    if (types.size() > 60) {
      std::shuffle(types.begin(), types.end(), rng);
      types.resize(60);
    }
    try {
      for (const Weight& mu : types) {
        const TameType t{p, mu, mu};
        const auto pred = predict(t);  // internally cross-checks routes
        for (const auto& pw : pred)
          if (!pw.weight.regular) {
            ok = false;
            detail = "irregular prediction at " + mu.str();
          }
        std::uniform_int_distribution<Int> d(0, 2 * p);
        if (!twist_equivariance_check(t, d(rng))) {
          ok = false;
          detail = "twist equivariance fails at " + mu.str();
        }
      }
    } catch (const error& e) {
      ok = false;
      detail = e.what();
    }
    report("prediction routes, regularity, twist equivariance", ok, detail);
  }

  return ok_all;
}

}  // namespace gsp4
