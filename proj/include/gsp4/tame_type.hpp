#pragma once

#include <array>
#include <string>
#include <vector>

#include "gsp4/weight.hpp"

namespace gsp4 {

/// A tame p-ordinary inertial type τ(1,μ): the direct sum of powers of the
/// mod-p cyclotomic character with exponents spin_cochar(μ).  Two weights
/// give the same type exactly when they differ by a Weyl move plus an
/// element of (p-1)X(T).  The canonical representative satisfies
/// 0 <= y <= x <= (p-1)/2 with c in [0, 2(p-1)), lexicographically least.
struct TameType {
  Int p = 0;
  Weight mu;      // canonical representative
  Weight raw_mu;  // as supplied

  auto operator<=>(const TameType&) const = default;
};

bool types_equivalent(const Weight& mu, const Weight& nu, Int p);

TameType type_from_weight(const Weight& mu, Int p);

/// Inverts the spin exponent display.  The four exponents are read mod p-1
/// and must be symplectically balanced: e1+e4 == e2+e3 (mod p-1).
TameType type_from_exponents(const std::array<Int, 4>& e, Int p);

/// The type of a p-ordinary form of weight (k,l): mu = (k-1, l-2; k+l-3).
TameType type_from_modular_weight(Int k, Int ell, Int p);

/// True on the hypotheses under which the 20-row table applies.
bool modular_weight_generic(Int k, Int ell, Int p);

TameType twist_type(const TameType& t, Int c);

// ---------------------------------------------------------------------------
// Ordinarity bookkeeping for Hecke data of weight (k,l), k >= l >= 3.

/// p-adic valuations of the Hecke polynomial roots: (0, l-2, k-1, k+l-3).
std::array<Int, 4> root_valuations(Int k, Int ell);

/// Ordinarity test from the two Hecke eigenvalue valuations.
bool ordinarity_check(Int k, Int ell, Int a1_val, Int a2_val);

struct OrdinarityProfile {
  Int k = 0;
  Int ell = 0;
  std::array<Int, 4> root_vals{};          // ascending
  std::array<Int, 4> exponents{};          // normalized, i0 = 0
  std::array<std::string, 4> unit_labels;  // by ascending valuation
  std::string unit_relation;               // alpha*delta == beta*gamma
};

OrdinarityProfile ordinarity_profile(Int k, Int ell);

struct ModularWeight {
  Int k = 0;
  Int ell = 0;
  bool p_small = false;
};

/// Recovers (k,l) from normalized exponents (0, i1, i2, i3) with i1 < i2:
/// k = i2+1, l = i1+2.  p_small iff i3 < p-1.
ModularWeight exponents_to_modular_weight(const std::array<Int, 4>& i, Int p);

/// All normalized nondecreasing orderings of a 4-tuple of exponents mod p-1
/// (i0 = 0 after twisting, i_j <= j(p-2)); the choice is not unique in
/// general, so callers get the whole list.
std::vector<std::array<Int, 4>> admissible_exponent_orderings(const std::array<Int, 4>& e,
                                                              Int p);

/// p = 2, or the similitude of a complex conjugation equals -1.
bool is_motivically_odd(int similitude_of_c, Int p);

}  // namespace gsp4
