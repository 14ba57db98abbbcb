#pragma once

#include "telhaz/hazard.hpp"

#include <string>
#include <string_view>

namespace telhaz {

// Builds a HazardSpec from plain key=value text. Pairs are separated by
// whitespace, commas or newlines; '#' starts a comment.
//
//   kind=constant    r0=0.0125
//   kind=polynomial  alpha=15 beta=0.001 c_ref=1
//   kind=piecewise   segments=0:3.5e-6:0|650:-4.07143e-6:0.00492143|1000:8e-6:-0.00715
//   kind=preset      name=one_plus_exp | bounded_excess | service_life
//
// An optional support_end=<number|inf> applies to every kind. Throws
// std::invalid_argument on malformed input.
HazardSpec parse_hazard_config(std::string_view text);

}  // namespace telhaz
