#include <doctest.h>

#include <random>

#include "gsp4/modular.hpp"

using namespace gsp4;

TEST_CASE("normalize_weyl") {
  auto [s1, d1] = normalize_weyl(Weight(4, 1, 5));
  CHECK(s1 == 1);
  CHECK(*d1 == Weight(4, 1, 5));

  auto [s2, d2] = normalize_weyl(Weight(-2, 0, 2));  // lambda+rho = (0,1)
  CHECK(s2 == 0);
  CHECK_FALSE(d2.has_value());

  auto [s3, d3] = normalize_weyl(Weight(-4, -7, 5));
  CHECK(s3 == -1);
  CHECK(*d3 == Weight(4, 1, 5));
}

TEST_CASE("decompose_weyl by alcove") {
  auto dec = decompose_weyl(Weight(4, 1, 5), 17);
  CHECK(dec.size() == 1);
  CHECK(dec.multiplicity(F(Weight(4, 1, 5))) == 1);

  dec = decompose_weyl(Weight(20, 13, 5), 17);
  CHECK(dec.size() == 2);
  CHECK(dec.multiplicity(F(Weight(20, 13, 5))) == 1);
  CHECK(dec.multiplicity(F(Weight(18, 11, 5))) == 1);

  // p = 2, highest weight (1,1;*) splits although it sits on a wall
  dec = decompose_weyl(Weight(1, 1, 2), 2);
  CHECK(dec.size() == 2);
  CHECK(dec.multiplicity(F(Weight(1, 1, 2))) == 1);
  CHECK(dec.multiplicity(F(Weight(0, 0, 2))) == 1);

  CHECK_THROWS_AS(decompose_weyl(Weight(-1, 0, 1), 17), error);
  CHECK_THROWS_AS(decompose_weyl(Weight(40, 1, 5), 17), error);
}

TEST_CASE("exceptional wall family splits") {
  // lambda+rho on x-y=p with p/2 < y < p: x=27, y=10 at p=17
  const Weight lam(25, 9, 6);
  CHECK(coroot_pairing(lam + rho_tilde(), 0) == 17);
  const auto dec = decompose_weyl(lam, 17);
  CHECK(dec.size() == 2);
  for (const auto& [sym, mult] : dec.terms()) CHECK(flags(sym.hw, 17).p_restricted);
  // just below the window it stays irreducible: y = 8 < p/2
  const Weight low(23, 7, 6);
  CHECK(decompose_weyl(low, 17).size() == 1);
}

TEST_CASE("virtual dimension") {
  CHECK(virtual_dim(Weight(0, 0, 0)) == 1);
  CHECK(virtual_dim(Weight(1, 0, 1)) == 4);
  CHECK(virtual_dim(Weight(1, 1, 2)) == 5);
}

TEST_CASE("sign rule is consistent with the signed dimension") {
  std::mt19937_64 rng(23);
  std::uniform_int_distribution<Int> d(-25, 25);
  for (int i = 0; i < 50; ++i) {
    Int a = d(rng), b = d(rng), c = d(rng);
    if (((a + b - c) & 1LL) != 0) ++c;
    const Weight lam(a, b, c);
    const auto [sgn, dom] = normalize_weyl(lam);
    if (sgn == 0) {
      CHECK(virtual_dim(lam) == 0);
    } else {
      CHECK(virtual_dim(lam) == sgn * virtual_dim(*dom));
      for (WeylElement w : all_weyl_elements) {
        const auto [s2, d2] = normalize_weyl(dot_act(w, lam));
        CHECK(s2 == sgn * weyl_sign(w));
        CHECK(*d2 == *dom);
      }
    }
  }
}

TEST_CASE("jh_semisimplify") {
  VirtualSum v;
  v.add(W(Weight(4, 1, 5)), 1);
  auto jh = jh_semisimplify(v, 17);
  CHECK(jh.size() == 1);
  CHECK(jh.multiplicity(F(Weight(4, 1, 5))) == 1);

  // sign cancellation
  VirtualSum w;
  w.add(W(Weight(-4, -7, 5)), 1);
  w.add(W(Weight(4, 1, 5)), 1);
  CHECK(jh_semisimplify(w, 17).empty());

  // F-symbols are rejected
  VirtualSum bad;
  bad.add(F(Weight(0, 0, 0)), 1);
  CHECK_THROWS_AS(jh_semisimplify(bad, 17), error);

  // a lone negative Weyl symbol trips the effectivity diagnostic
  VirtualSum neg;
  neg.add(W(Weight(-4, -7, 5)), 1);
  CHECK_THROWS_AS(jh_semisimplify(neg, 17, true), error);
  CHECK_NOTHROW(jh_semisimplify(neg, 17));
}

TEST_CASE("canonical_serre") {
  CHECK(canonical_serre(Weight(26, 14, -46), 17).lam == Weight(26, 14, 18));
  CHECK(canonical_serre(Weight(4, 1, 5), 17).lam == Weight(4, 1, 5));
  CHECK(canonical_serre(Weight(0, 0, 32), 17).lam == Weight(0, 0, 0));
  // idempotent
  const auto f = canonical_serre(Weight(26, 14, -46), 17);
  CHECK(canonical_serre(f.lam, 17) == f);
  CHECK_THROWS_AS(canonical_serre(Weight(40, 1, 5), 17), error);
  // classes are separated exactly by (p-1)X0(T): a lone (p-1)-shift of c is
  // a genuinely different weight (a similitude-square twist)
  CHECK(canonical_serre(Weight(4, 1, 5 + 32), 17) == canonical_serre(Weight(4, 1, 5), 17));
  CHECK(canonical_serre(Weight(4, 1, 5 + 16), 17) != canonical_serre(Weight(4, 1, 5), 17));
}

TEST_CASE("regular_representative") {
  CHECK(regular_representative(Weight(4, 1, 5), 17).lam == Weight(4, 1, 5));
  CHECK(regular_representative(Weight(16, 0, 16), 17).lam == Weight(0, 0, 0));
  // constant on (p-1)X(T)-cosets
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<Int> d(-3, 3);
  const Weight base(7, 4, 9);
  const auto expected = regular_representative(base, 17);
  for (int i = 0; i < 40; ++i) {
    Int u = d(rng), v = d(rng), w = d(rng);
    if (((u + v - w) & 1LL) != 0) ++w;
    CHECK(regular_representative(base + 16 * Weight(u, v, w), 17) == expected);
  }
}

TEST_CASE("operator_R") {
  CHECK(operator_R(Weight(4, 1, 5), 17).lam == Weight(26, 14, 18));
  CHECK(operator_R(Weight(0, 0, 0), 17).lam == Weight(30, 15, 13));
  // commutes with the similitude twist
  for (Int c : {1LL, 5LL, 16LL, -3LL}) {
    const auto lhs = operator_R(canonical_serre(Weight(4, 1, 5) + Weight(0, 0, 2 * c), 17));
    const auto rhs = twist_weight(operator_R(Weight(4, 1, 5), 17), c);
    CHECK(lhs == rhs);
  }
}

TEST_CASE("twist_weight") {
  const auto f = canonical_serre(Weight(4, 1, 5), 17);
  CHECK(twist_weight(f, 0) == f);
  CHECK(twist_weight(f, 16) == f);  // 2*16 = 2(p-1)
  CHECK(twist_weight(f, 1).lam == Weight(4, 1, 7));
}

TEST_CASE("enumerate_serre_weights counts") {
  CHECK(enumerate_serre_weights(3, false).size() == 18);
  CHECK(enumerate_serre_weights(3, true).size() == 8);
  CHECK(enumerate_serre_weights(2, false).size() == 4);
  CHECK(enumerate_serre_weights(2, true).size() == 1);
  // canonical forms are fixed points of canonical_serre
  for (const auto& f : enumerate_serre_weights(5, false)) CHECK(canonical_serre(f.lam, 5) == f);
}

TEST_CASE("decomposition constituents sit in the adjacent lower alcove (p <= 13)") {
  for (Int p : {5, 7, 11, 13}) {
    for (Int dd = 0; dd < p; ++dd)
      for (Int b = 0; b < p; ++b) {
        const Weight lam(dd + b, b, dd);
        const auto pos = classify(lam, p);
        const auto dec = decompose_weyl(lam, p);
        for (const auto& [sym, mult] : dec.terms()) {
          CHECK(flags(sym.hw, p).p_restricted);
          if (pos.interior() && sym.hw != lam) {
            const auto img = classify(sym.hw, p);
            CHECK(img.interior());
            CHECK(img.alcove == pos.alcove - 1);
          }
        }
      }
  }
}
