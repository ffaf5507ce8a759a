#include "gsp4/errors.hpp"

namespace gsp4 {

std::string_view to_string(errc c) {
  switch (c) {
    case errc::invalid_weight_parity: return "InvalidWeightParity";
    case errc::outside_alcove_region: return "OutsideAlcoveRegion";
    case errc::target_below_source: return "TargetBelowSource";
    case errc::unsupported_weight: return "UnsupportedWeight";
    case errc::negative_multiplicity: return "NegativeMultiplicity";
    case errc::no_regular_representative: return "NoRegularRepresentative";
    case errc::not_symplectically_balanced: return "NotSymplecticallyBalanced";
    case errc::invalid_modular_weight: return "InvalidModularWeight";
    case errc::exponents_not_ordered: return "ExponentsNotOrdered";
    case errc::degenerate_type_use_direct_route: return "DegenerateTypeUseDirectRoute";
    case errc::genericity_violated: return "GenericityViolated";
    case errc::weight_out_of_range: return "WeightOutOfRange";
    case errc::route_disagreement: return "RouteDisagreement";
    case errc::bad_request: return "BadRequest";
  }
  return "UnknownError";
}

}  // namespace gsp4
