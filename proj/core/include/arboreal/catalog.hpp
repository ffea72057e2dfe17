#pragma once

// Named curves that appear in the small-third-iterate classification.
//
// gamma = 0:  E1, E2, C, C3, C3', W, W', W1, H, calC, A, B, C', C4, B32
// gamma = 1:  E, E', C1, C2, C3g1

#include <string>
#include <string_view>
#include <vector>

#include "arboreal/curve_model.hpp"

namespace arboreal::curves {

CurveModel named_curve(std::string_view name);
std::vector<std::string> named_curve_list();

}  // namespace arboreal::curves
