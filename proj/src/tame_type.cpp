#include "gsp4/tame_type.hpp"

#include <algorithm>
#include <set>

namespace gsp4 {

namespace {

Int floor_mod(Int v, Int m) {
  Int r = v % m;
  return r < 0 ? r + m : r;
}

void require_p(Int p) {
  if (p < 2) fail(errc::bad_request, "p must be at least 2");
}

}  // namespace

bool types_equivalent(const Weight& mu, const Weight& nu, Int p) {
  require_p(p);
  const Int q = p - 1;
  for (WeylElement w : all_weyl_elements) {
    const Weight m = weyl_act(w, mu);
    const Int da = nu.a - m.a, db = nu.b - m.b, dc = nu.c - m.c;
    if (da % q || db % q || dc % q) continue;
    const Int u = da / q, v = db / q, t = dc / q;
    if (((t - u - v) & 1LL) == 0) return true;
  }
  return false;
}

TameType type_from_weight(const Weight& mu, Int p) {
  require_p(p);
  const Int q = p - 1;
  bool found = false;
  Weight best;
  for (WeylElement w : all_weyl_elements) {
    const Weight m = weyl_act(w, mu);
    const Int x = floor_mod(m.a, q);
    const Int y = floor_mod(m.b, q);
    if (y > x || 2 * x > q) continue;
    const Int r = (x - m.a) / q;
    const Int s = (y - m.b) / q;
    // the c-shift is a multiple of p-1 whose parity matches the (a,b)-shift
    const Int z = floor_mod(m.c + q * (r + s), 2 * q);
    const Weight cand(x, y, z);
    if (!found || cand < best) {
      best = cand;
      found = true;
    }
  }
  if (!found) fail(errc::bad_request, "canonicalization failed for " + mu.str());
  return TameType{p, best, mu};
}

TameType type_from_exponents(const std::array<Int, 4>& e, Int p) {
  require_p(p);
  const Int q = p - 1;
  if (floor_mod(e[0] + e[3] - e[1] - e[2], q) != 0)
    fail(errc::not_symplectically_balanced,
         "exponents must satisfy e1+e4 == e2+e3 (mod p-1)");
  std::array<Int, 4> f;
  for (int i = 0; i < 4; ++i) f[static_cast<size_t>(i)] = floor_mod(e[static_cast<size_t>(i)], q);
  // restore exact balance by sliding the last exponent within its residue
  // class; the pairing (e1,e4),(e2,e3) is preserved, canonicalization sorts
  f[3] += (f[1] + f[2]) - (f[0] + f[3]);
  const Weight mu(f[0] - f[2], f[0] - f[1], f[0] + f[3]);
  return type_from_weight(mu, p);
}

bool modular_weight_generic(Int k, Int ell, Int p) {
  return k > ell && ell > 3 && k + ell < p + 1;
}

TameType type_from_modular_weight(Int k, Int ell, Int p) {
  require_p(p);
  if (k < ell || ell < 3)
    fail(errc::invalid_modular_weight, "need k >= l >= 3");
  return type_from_weight(Weight(k - 1, ell - 2, k + ell - 3), p);
}

TameType twist_type(const TameType& t, Int c) {
  return type_from_weight(t.mu + Weight(0, 0, 2 * c), t.p);
}

std::array<Int, 4> root_valuations(Int k, Int ell) {
  if (k < ell || ell < 3) fail(errc::invalid_modular_weight, "need k >= l >= 3");
  return {0, ell - 2, k - 1, k + ell - 3};
}

bool ordinarity_check(Int k, Int ell, Int a1_val, Int a2_val) {
  if (k < ell || ell < 3) fail(errc::invalid_modular_weight, "need k >= l >= 3");
  return a1_val == 0 && a2_val == ell - 3;
}

OrdinarityProfile ordinarity_profile(Int k, Int ell) {
  OrdinarityProfile pr;
  pr.k = k;
  pr.ell = ell;
  pr.root_vals = root_valuations(k, ell);
  pr.exponents = pr.root_vals;  // normalized inertia exponents coincide
  pr.unit_labels = {"alpha", "beta", "gamma", "delta"};
  pr.unit_relation = "alpha*delta == beta*gamma";
  return pr;
}

ModularWeight exponents_to_modular_weight(const std::array<Int, 4>& i, Int p) {
  require_p(p);
  if (i[0] != 0 || i[1] < 0 || i[1] >= i[2] || i[3] < i[2])
    fail(errc::exponents_not_ordered, "need 0 = i0 <= i1 < i2 <= i3");
  ModularWeight mw;
  mw.k = i[2] + 1;
  mw.ell = i[1] + 2;
  mw.p_small = i[3] < p - 1;
  return mw;
}

std::vector<std::array<Int, 4>> admissible_exponent_orderings(const std::array<Int, 4>& e,
                                                              Int p) {
  require_p(p);
  const Int q = p - 1;
  std::array<Int, 4> res;
  for (int i = 0; i < 4; ++i) res[static_cast<size_t>(i)] = floor_mod(e[static_cast<size_t>(i)], q);
  std::sort(res.begin(), res.end());
  std::set<std::array<Int, 4>> out;
  // i0 is twisted to 0; each remaining exponent may sit anywhere in its
  // residue class as long as the sequence stays nondecreasing and i_j <= j(p-2)
  do {
    std::array<Int, 4> base;
    for (int i = 0; i < 4; ++i)
      base[static_cast<size_t>(i)] = floor_mod(res[static_cast<size_t>(i)] - res[0], q);
    for (Int m1 = 0; m1 <= 1; ++m1)
      for (Int m2 = 0; m2 <= 2; ++m2)
        for (Int m3 = 0; m3 <= 3; ++m3) {
          std::array<Int, 4> cand = {0, base[1] + m1 * q, base[2] + m2 * q, base[3] + m3 * q};
          bool ok = true;
          for (int j = 1; j < 4; ++j) {
            if (cand[static_cast<size_t>(j)] < cand[static_cast<size_t>(j - 1)] ||
                cand[static_cast<size_t>(j)] > j * (p - 2))
              ok = false;
          }
          if (ok) out.insert(cand);
        }
  } while (std::next_permutation(res.begin(), res.end()));
  return {out.begin(), out.end()};
}

bool is_motivically_odd(int similitude_of_c, Int p) {
  if (similitude_of_c != 1 && similitude_of_c != -1)
    fail(errc::bad_request, "similitude of a conjugation must be +1 or -1");
  return p == 2 || similitude_of_c == -1;
}

}  // namespace gsp4
