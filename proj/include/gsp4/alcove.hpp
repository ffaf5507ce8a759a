#pragma once

#include <string>
#include <utility>
#include <vector>

#include "gsp4/weight.hpp"

namespace gsp4 {

// Alcove geometry lives in the shifted coordinates (x,y) = (a+2, b+1) of
// λ + ρ̃.  The four restricted alcoves are
//   C0: x > y > 0,      x+y < p
//   C1: x+y > p,        y < x < p
//   C2: x-y < p < x,    x+y < 2p
//   C3: y < p, x+y > 2p, x-y < p
// and the relevant region is the union of their closures.

inline std::pair<Int, Int> alcove_xy(const Weight& lam) { return {lam.a + 2, lam.b + 1}; }

struct AlcovePosition {
  enum class Kind { interior, wall, outside };

  Kind kind = Kind::outside;
  int alcove = -1;                  // set for interior
  std::vector<int> closures;        // all i with the point in the closure of C_i
  std::vector<std::string> walls;   // tight equalities, for wall positions

  bool outside() const { return kind == Kind::outside; }
  bool interior() const { return kind == Kind::interior; }

  /// "C0".."C3" for interior, "wall:<eq,...>" for walls, "outside" otherwise.
  std::string label() const;

  /// Smallest closure index; used for deterministic ordering of output.
  int sort_index() const { return closures.empty() ? 99 : closures.front(); }
};

AlcovePosition classify(const Weight& lam, Int p);

/// Closure indices of the point (x,y), smallest first; empty when outside.
std::vector<int> alcove_closures(Int x, Int y, Int p);

/// Reflection across the wall separating C_i from C_{i+1}, in weight form.
/// r0: (x,y) -> (p-y, p-x); r1: (x,y) -> (2p-x, y); r2: (x,y) -> (2p-y, 2p-x).
Weight wall_reflect(int i, const Weight& lam, Int p);

/// The restricted dominance order generated by upward wall reflections.
bool up_leq(const Weight& lam, const Weight& mu, Int p);

/// The unique weight in the closure of C_j above lam.
Weight up_transport(const Weight& lam, int j, Int p);

/// All weights reachable from lam by upward reflections (lam included).
std::vector<Weight> up_set(const Weight& lam, Int p);

}  // namespace gsp4
