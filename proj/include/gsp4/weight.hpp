#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

#include "gsp4/errors.hpp"

namespace gsp4 {

using Int = long long;

/// A character of the diagonal torus of GSp4, written (a,b;c) with the
/// lattice condition c ≡ a+b (mod 2).  Construction rejects bad parity.
struct Weight {
  Int a = 0;
  Int b = 0;
  Int c = 0;

  Weight() = default;
  Weight(Int a_, Int b_, Int c_) : a(a_), b(b_), c(c_) {
    if (((a - b - c) & 1LL) != 0)
      fail(errc::invalid_weight_parity, "triple (" + std::to_string(a_) + "," +
                                            std::to_string(b_) + ";" + std::to_string(c_) +
                                            ") has c !== a+b (mod 2)");
  }

  static std::optional<Weight> try_make(Int a, Int b, Int c) {
    if (((a - b - c) & 1LL) != 0) return std::nullopt;
    return Weight(a, b, c);
  }

  friend Weight operator+(const Weight& l, const Weight& r) {
    return Weight(l.a + r.a, l.b + r.b, l.c + r.c);
  }
  friend Weight operator-(const Weight& l, const Weight& r) {
    return Weight(l.a - r.a, l.b - r.b, l.c - r.c);
  }
  friend Weight operator*(Int n, const Weight& w) { return Weight(n * w.a, n * w.b, n * w.c); }

  auto operator<=>(const Weight&) const = default;

  std::string str() const;
};

std::ostream& operator<<(std::ostream& os, const Weight& w);

/// Half-sum of positive roots, pinned to the lattice representative (2,1;3).
inline Weight rho_tilde() { return Weight(2, 1, 3); }

/// The similitude character restricted to the torus: (0,0;2).
inline Weight similitude_weight() { return Weight(0, 0, 2); }

/// Pairing with the simple coroots: i=0 gives a-b, i=1 gives b.
Int coroot_pairing(const Weight& w, int i);

/// Diagonal exponent 4-tuple of the spin cocharacter attached to (a,b;c).
/// Components: ((a+b+c)/2, (a-b+c)/2, (-a+b+c)/2, (-a-b+c)/2); the outer and
/// inner pairs both sum to c.
std::array<Int, 4> spin_cochar(const Weight& w);

struct DominanceFlags {
  bool dominant = false;
  bool p_restricted = false;
  bool p_regular = false;
  bool in_X0 = false;
};

DominanceFlags flags(const Weight& w, Int p);

// ---------------------------------------------------------------------------
// Weyl group of GSp4: eight elements, generators s0 (short) and s1 (long),
// presentation <s0,s1 | s0^2, s1^2, (s0 s1)^4>.

enum class WeylElement : int {
  e = 0,
  s0,
  s1,
  s0s1,
  s1s0,
  s0s1s0,
  s1s0s1,
  w0,  // = s0s1s0s1 = (s0s1)^2, the longest element
};

inline constexpr std::array<WeylElement, 8> all_weyl_elements = {
    WeylElement::e,      WeylElement::s0,     WeylElement::s1,     WeylElement::s0s1,
    WeylElement::s1s0,   WeylElement::s0s1s0, WeylElement::s1s0s1, WeylElement::w0};

std::string_view word(WeylElement w);
std::optional<WeylElement> weyl_from_word(std::string_view word);

WeylElement compose(WeylElement l, WeylElement r);
WeylElement inverse(WeylElement w);
int weyl_sign(WeylElement w);     // (-1)^length
int weyl_length(WeylElement w);

/// The automorphism exchanging the two generators (induced by the spin
/// identification of the dual group).
WeylElement iota(WeylElement w);

/// Weyl group of the Siegel Levi: {e, s0}.
inline constexpr std::array<WeylElement, 2> siegel_levi_weyl = {WeylElement::e,
                                                                WeylElement::s0};

/// Kostant representatives of W_M\W_G for the Siegel Levi: {e, s1, s1s0, s1s0s1}.
inline constexpr std::array<WeylElement, 4> kostant_representatives = {
    WeylElement::e, WeylElement::s1, WeylElement::s1s0, WeylElement::s1s0s1};

/// Linear action on X(T); fixes c.  s1s0 sends (a,b;c) to (b,-a;c).
Weight weyl_act(WeylElement w, const Weight& lam);

/// Dot action w • λ = w(λ + ρ̃) - ρ̃.
Weight dot_act(WeylElement w, const Weight& lam);

/// Checks the multiplication table against the presentation and the action
/// matrices; throws on mismatch.  Runs once, on first use of compose().
void validate_weyl_presentation();

}  // namespace gsp4
