#pragma once

#include "pentaglue/gluing.hpp"

namespace pentaglue::detail {

struct WalkStep {
  CornerSlot corner;
  int orientation;
};

// One step around a cone point: leave corner `at` through the side that
// ends the sector (counterclockwise if orient > 0) and land in the
// neighbouring corner.
WalkStep step_around_corner(const Gluing& g, CornerSlot at, int orient);

}  // namespace pentaglue::detail
