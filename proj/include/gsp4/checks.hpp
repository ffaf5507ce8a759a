#pragma once

#include <iosfwd>

#include "gsp4/weight.hpp"

namespace gsp4 {

/// Runs the invariant suite for a given p, printing one line per invariant
/// group.  Returns false if anything fails.  Exhaustive for small p,
/// sampled (deterministically) for larger p.
bool run_invariant_suite(Int p, std::ostream& os);

}  // namespace gsp4
