#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gsp4/weight.hpp"

namespace gsp4 {

enum class AutomorphicType { holomorphic, whittaker, p_adic_only };

std::string_view to_string(AutomorphicType t);

/// One of the eight companion twists of a p-ordinary weight-(k,l) datum:
/// the twist exponent, the conjugating Weyl word, the inertia entries that
/// must vanish for the case to apply, the companion weight (k',l'), and the
/// highest weight λ' with its expected alcove.
struct CompanionRecord {
  std::string case_id;  // "Fund", "C1".."C3", "C0'".."C3'"
  Int twist_exp = 0;
  WeylElement conjugator = WeylElement::e;
  std::vector<std::pair<int, int>> required_zero_mask;  // 1-indexed (i,j), i<j
  Int k_prime = 0;
  Int ell_prime = 0;
  Weight lambda_prime;
  std::string alcove_condition;
  AutomorphicType automorphic_type = AutomorphicType::p_adic_only;
  std::string source_note;  // only the C3' row carries one
};

/// The eight companion records for weight (k,l) at p, requiring
/// k >= l >= 3 and k+l-3 < p-1.
std::vector<CompanionRecord> companion_table(Int k, Int ell, Int p);

/// True when the eight companion weights agree with the eight direct rows of
/// the generic table: the (a,b)-parts of λ'+ρ̃ match exactly and the third
/// coordinates match mod p-1 (the printed λ' carry c = a+b, while the right
/// table column absorbs a central twist of p-1).
bool companion_matches_table(Int k, Int ell, Int p);

// ---------------------------------------------------------------------------
// Dual BGG complex bookkeeping.

struct GradedPiece {
  Int jump = 0;                 // Hodge filtration jump
  Int coh_degree = 0;           // the H^i carrying the graded piece
  std::pair<Int, Int> sheaf{};  // its sheaf weight (r,s)
};

struct BggOutline {
  std::array<std::pair<Int, Int>, 4> terms{};  // sheaf weights (r,s)
  std::array<Int, 4> degrees{};                // w, w+1, w+2, w+3
  std::array<Int, 4> fil_jumps{};              // 0, l-2, k-1, k+l-3
  std::array<GradedPiece, 4> graded{};
  // only the last differential's homogeneity degree is pinned: l-1
  std::array<std::optional<Int>, 3> differential_degrees{};
};

BggOutline bgg_outline(Int k, Int ell);

}  // namespace gsp4
