#include "gsp4/modular.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>

namespace gsp4 {

namespace {

Int floor_mod(Int v, Int m) {
  Int r = v % m;
  return r < 0 ? r + m : r;
}

}  // namespace

std::string BasisSymbol::str() const {
  return std::string(tag == BasisTag::weyl ? "W" : "F") + hw.str();
}

std::string SerreWeight::str() const { return "F" + lam.str(); }

std::pair<int, std::optional<Weight>> normalize_weyl(const Weight& lam) {
  const Weight s = lam + rho_tilde();
  if (s.a == 0 || s.b == 0 || s.a == s.b || s.a == -s.b) return {0, std::nullopt};
  for (WeylElement w : all_weyl_elements) {
    const Weight t = weyl_act(w, s);
    if (t.a > t.b && t.b > 0) return {weyl_sign(w), t - rho_tilde()};
  }
  fail(errc::bad_request, "no strictly dominant representative for " + lam.str());
}

VirtualSum decompose_weyl(const Weight& lam, Int p) {
  const auto fl = flags(lam, p);
  if (!fl.dominant || !fl.p_restricted)
    fail(errc::unsupported_weight, lam.str() + " is not dominant p-restricted (p=" +
                                       std::to_string(p) + ")");
  auto [x, y] = alcove_xy(lam);
  const AlcovePosition pos = classify(lam, p);

  VirtualSum out;
  out.add(F(lam), 1);

  auto add_reflection = [&](WeylElement w, Int ma, Int mb) {
    Weight second = dot_act(w, lam) + Weight(p * ma, p * mb, 0);
    out.add(F(second), 1);
  };

  if (pos.interior()) {
    switch (pos.alcove) {
      case 0: break;
      case 1: add_reflection(WeylElement::s1s0s1, 1, 1); break;
      case 2: add_reflection(WeylElement::s0s1s0, 2, 0); break;
      case 3: add_reflection(WeylElement::s1s0s1, 2, 2); break;
      default: fail(errc::bad_request, "unexpected alcove");
    }
    return out;
  }
  // wall weights: irreducible except for the two exceptional families, which
  // split like the top-alcove case
  const bool exceptional = (x - y == p && 2 * (y) > p && y < p) ||
                           (p == 2 && lam.a == 1 && lam.b == 1);
  if (exceptional) add_reflection(WeylElement::s1s0s1, 2, 2);
  return out;
}

Int virtual_dim(const Weight& lam) {
  auto [x, y] = alcove_xy(lam);
  const Int n = x * y * (x - y) * (x + y);
  return n / 6;
}

VirtualSum jh_semisimplify(const VirtualSum& v, Int p, bool assert_effective) {
  VirtualSum out;
  for (const auto& [sym, mult] : v.terms()) {
    if (sym.tag != BasisTag::weyl)
      fail(errc::unsupported_weight, "jh_semisimplify expects W-symbols, got " + sym.str());
    auto [sgn, dom] = normalize_weyl(sym.hw);
    if (sgn == 0) continue;
    const VirtualSum dec = decompose_weyl(*dom, p);
    for (const auto& [f, m] : dec.terms()) out.add(f, sgn * mult * m);
  }
  if (assert_effective) {
    for (const auto& [f, m] : out.terms())
      if (m < 0)
        fail(errc::negative_multiplicity,
             f.str() + " has multiplicity " + std::to_string(m));
  }
  return out;
}

SerreWeight canonical_serre(const Weight& lam, Int p) {
  const auto fl = flags(lam, p);
  if (!fl.dominant || !fl.p_restricted)
    fail(errc::unsupported_weight,
         lam.str() + " is not dominant p-restricted (p=" + std::to_string(p) + ")");
  const Int window = 2 * (p - 1);
  SerreWeight f;
  f.lam = Weight(lam.a, lam.b, floor_mod(lam.c, window));
  f.p = p;
  f.regular = fl.p_regular;
  return f;
}

SerreWeight regular_representative(const Weight& mu, Int p) {
  const Int q = p - 1;
  const Int d = mu.a - mu.b;
  const Int dd = floor_mod(d, q);
  const Int bb = floor_mod(mu.b, q);
  const Int u_minus_v = (d - dd) / q;
  const Int v = (mu.b - bb) / q;
  const Int u = u_minus_v + v;
  // c' is pinned mod 2(p-1) by the parity of u+v
  const Int c = floor_mod(mu.c - q * (u + v), 2 * q);
  auto cand = Weight::try_make(dd + bb, bb, c);
  if (!cand || !flags(*cand, p).p_regular)
    fail(errc::no_regular_representative, "no regular representative for " + mu.str());
  return canonical_serre(*cand, p);
}

SerreWeight operator_R(const Weight& lam, Int p) {
  const auto fl = flags(lam, p);
  if (!fl.dominant || !fl.p_restricted)
    fail(errc::unsupported_weight,
         lam.str() + " is not dominant p-restricted (p=" + std::to_string(p) + ")");
  const Weight inner = dot_act(WeylElement::w0, lam - p * rho_tilde());
  return regular_representative(inner, p);
}

SerreWeight operator_R(const SerreWeight& f) { return operator_R(f.lam, f.p); }

SerreWeight twist_weight(const SerreWeight& f, Int c) {
  return canonical_serre(f.lam + Weight(0, 0, 2 * c), f.p);
}

std::vector<SerreWeight> enumerate_serre_weights(Int p, bool regular_only) {
  const Int bound = regular_only ? p - 1 : p;
  std::vector<SerreWeight> out;
  for (Int d = 0; d < bound; ++d)
    for (Int b = 0; b < bound; ++b)
      for (Int c = 0; c < 2 * (p - 1); ++c) {
        if (floor_mod(c - d, 2) != 0) continue;  // c == a+b == d+2b (mod 2)
        out.push_back(canonical_serre(Weight(d + b, b, c), p));
      }
  return out;
}

}  // namespace gsp4
