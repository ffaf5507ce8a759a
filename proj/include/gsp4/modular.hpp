#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "gsp4/alcove.hpp"
#include "gsp4/weight.hpp"

namespace gsp4 {

// Integer combinations of basis symbols W(λ) (dual Weyl modules) and F(λ)
// (simple modules) in the Grothendieck group.

enum class BasisTag { weyl, simple };

struct BasisSymbol {
  BasisTag tag = BasisTag::weyl;
  Weight hw;

  auto operator<=>(const BasisSymbol&) const = default;
  std::string str() const;
};

inline BasisSymbol W(const Weight& w) { return {BasisTag::weyl, w}; }
inline BasisSymbol F(const Weight& w) { return {BasisTag::simple, w}; }

class VirtualSum {
public:
  VirtualSum() = default;

  void add(const BasisSymbol& sym, Int mult) {
    if (mult == 0) return;
    auto it = terms_.find(sym);
    if (it == terms_.end()) {
      terms_.emplace(sym, mult);
    } else if ((it->second += mult) == 0) {
      terms_.erase(it);
    }
  }

  VirtualSum& operator+=(const VirtualSum& other) {
    for (const auto& [sym, mult] : other.terms_) add(sym, mult);
    return *this;
  }

  Int multiplicity(const BasisSymbol& sym) const {
    auto it = terms_.find(sym);
    return it == terms_.end() ? 0 : it->second;
  }

  bool empty() const { return terms_.empty(); }
  size_t size() const { return terms_.size(); }
  const std::map<BasisSymbol, Int>& terms() const& { return terms_; }
  std::map<BasisSymbol, Int> terms() && { return std::move(terms_); }

  bool operator==(const VirtualSum&) const = default;

private:
  std::map<BasisSymbol, Int> terms_;
};

/// Sign-normalization of a Weyl symbol: W(w • λ) = sgn(w) W(λ).  Returns
/// (0, nullopt) when λ+ρ̃ is fixed by a sign-reversing element (a coordinate
/// vanishes or the coordinates agree up to sign), in which case W(λ) = 0.
std::pair<int, std::optional<Weight>> normalize_weyl(const Weight& lam);

/// Decomposition of W(λ) into simples for λ dominant p-restricted:
/// a single F(λ) inside C0 and on most walls, F(λ) plus the downward
/// reflection of λ inside C1..C3 and in the exceptional wall cases.
VirtualSum decompose_weyl(const Weight& lam, Int p);

/// Signed Weyl dimension for the rank-two symplectic datum:
/// x·y·(x-y)·(x+y)/6 with (x,y) = λ+ρ̃.
Int virtual_dim(const Weight& lam);

/// Semisimplification: sign-normalize every W-term, decompose, accumulate.
/// With assert_effective, a negative multiplicity in the result is an error.
VirtualSum jh_semisimplify(const VirtualSum& v, Int p, bool assert_effective = false);

/// A Serre weight: p-restricted highest weight with c reduced into
/// [0, 2(p-1)); two p-restricted weights give the same class exactly when
/// they differ by an element of (p-1)X⁰(T).
struct SerreWeight {
  Weight lam;
  Int p = 0;
  bool regular = false;

  auto operator<=>(const SerreWeight&) const = default;
  std::string str() const;
};

SerreWeight canonical_serre(const Weight& lam, Int p);

/// The unique regular class F(μ') with μ - μ' in (p-1)X(T).  Membership in
/// (p-1)X(T) requires the quotient triple to satisfy the lattice parity,
/// so for odd p coordinatewise divisibility by p-1 is not enough.
SerreWeight regular_representative(const Weight& mu, Int p);

/// F(λ) -> F(w0 • (λ - pρ̃))_reg; sends Serre weights to regular ones.
SerreWeight operator_R(const Weight& lam, Int p);
SerreWeight operator_R(const SerreWeight& f);

/// Twist by the c-th power of the similitude character.
SerreWeight twist_weight(const SerreWeight& f, Int c);

/// All Serre weights in canonical form: p²(p-1) of them, (p-1)³ regular.
std::vector<SerreWeight> enumerate_serre_weights(Int p, bool regular_only);

}  // namespace gsp4
