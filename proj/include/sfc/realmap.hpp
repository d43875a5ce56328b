// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "sfc/cell.hpp"
#include "sfc/types.hpp"

namespace sfc {

// Unit-cube space-filling map at finite resolution: encode applied to the
// scalar truncated to `groups` digit groups, scaled back into [0,1)^d.
// Exact; output denominators divide side^(rank*groups).
RationalPoint unit_forward(const Cell& cell, const Rational& y, int groups);

// Inverse map at finite resolution: decode of the point truncated to the
// side^(rank*groups) grid, scaled into [0,1). Denominator divides
// side^(rank^2*groups).
Rational unit_inverse(const Cell& cell, const RationalPoint& point,
                      int groups);

// Depth-limited midpoint recurrence: follows `depth` base side^rank digits
// of y and terminates at the sub-cell center. Only depths that are
// multiples of the rank align with digit-group boundaries.
RationalPoint mid_forward(const Cell& cell, const Rational& y, int depth);

// Inverse of the midpoint recurrence truncated to `depth` digits.
Rational mid_inverse(const Cell& cell, const RationalPoint& point, int depth);

// Centered forms: scalar domain [-1/2, 1/2), point components in
// [-1/2, 1/2); a half shift on both sides of the uncentered map.
RationalPoint unit_forward_centered(const Cell& cell, const Rational& y,
                                    int groups);
Rational unit_inverse_centered(const Cell& cell, const RationalPoint& point,
                               int groups);
RationalPoint mid_forward_centered(const Cell& cell, const Rational& y,
                                   int depth);
Rational mid_inverse_centered(const Cell& cell, const RationalPoint& point,
                              int depth);

}  // namespace sfc
