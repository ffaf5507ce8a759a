#pragma once

#include <set>
#include <string>
#include <vector>

#include "gsp4/alcove.hpp"
#include "gsp4/modular.hpp"
#include "gsp4/tame_type.hpp"

namespace gsp4 {

struct PredictedWeight {
  SerreWeight weight;
  AlcovePosition alcove;   // position of weight.lam
  bool direct = false;     // source equals the weight itself
  int source_alcove = -1;  // smallest closure index of the source
  Weight source_nu_prime;  // the origin weight of the upward chain

  bool operator==(const PredictedWeight&) const = default;
};

/// The candidate origins ν′ of a canonical type: the eight closed-form
/// (x,y)-shapes, each with its c pinned by the type-equivalence
/// τ ≅ τ(1, ν′+ρ̃); entries whose ν′+ρ̃ is not dominant are dropped.
/// Degenerate types yield fewer than eight distinct entries.
std::vector<Weight> direct_candidates(const TameType& t);

/// The twelve-term Weyl-module profile whose semisimplification computes the
/// reduction of the induced representation attached to t.  The six A-family
/// terms carry c = z+(p-1): the printed display suppresses the central
/// twists pinned down by the type equivalence (see the B-column of the
/// generic table, whose entries carry the matching shift).
VirtualSum jantzen_profile(const TameType& t);

/// True on the domain where the Jantzen route is used: 0 < y < x < (p-1)/2.
bool strictly_generic(const TameType& t);

/// Route A: semisimplify the profile and regularize every constituent.
/// Restricted to strictly generic types.
std::set<SerreWeight> predict_jantzen(const TameType& t);

/// Route B (production path): transport closure of the candidate origins,
/// intersected with the regular weights.  Total on all canonical types.
std::vector<PredictedWeight> predict_direct(const TameType& t);

struct GenericTable {
  std::vector<PredictedWeight> weights;     // the twenty rows
  std::vector<std::string> boundary_notes;  // rows on the C2/C3 wall, if any
};

/// Route C: transcription of the twenty-row table for μ = (k-1, l-2; k+l-3),
/// valid for k > l > 3, k+l < p+1.
GenericTable generic_table(Int k, Int ell, Int p);

/// Dispatch: route B, cross-checked against routes A and C where they apply.
/// A disagreement is a bug-level error.
std::vector<PredictedWeight> predict(const TameType& t);

bool twist_equivariance_check(const TameType& t, Int c);

// ---------------------------------------------------------------------------
// Crystalline lift recipes for the twenty predicted weights of a generic type.

enum class LiftShape { diagonal, klingen, siegel };
enum class LiftSide { left, right };

std::string_view to_string(LiftShape s);
std::string_view to_string(LiftSide s);

struct LiftRecipe {
  std::string row;                     // "C0", "C0->C1", ...
  LiftShape shape = LiftShape::diagonal;
  LiftSide side = LiftSide::left;
  std::array<Int, 4> ht_weights{};    // Hodge-Tate multiset, descending
  std::array<std::string, 4> units;   // unramified unit labels, aligned
  Weight mu_row;                      // the row's ν+ρ̃ form weight
};

/// Twenty recipes (ten shapes times the left/right symmetry); every recipe
/// satisfies ht_weights == spin_cochar(mu_row) as multisets.
std::vector<LiftRecipe> lift_recipes(const TameType& t);

}  // namespace gsp4
