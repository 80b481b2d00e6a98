#pragma once

#include <string>

#include "corrgraph/curves.hpp"

namespace corrgraph {

// Fixed 800x600 line plot of the sampled curves: one polyline per function,
// axes with tick labels, and the gap between f_vect and f_q_upper shaded over
// the certified marginal interval when both series are present.
std::string curve_svg(const CurveTable& table);

}  // namespace corrgraph
