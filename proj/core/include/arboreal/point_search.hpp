#pragma once

#include <vector>

#include "arboreal/curve_model.hpp"

namespace arboreal::curves {

// All affine points with x = p/q in lowest terms, max(|p|, q) <= H.
// Denominators are striped across `threads` workers; output is sorted and
// independent of the thread count.
std::vector<CurvePoint> rational_point_search(const CurveModel& m, long H, int threads = 1);

}  // namespace arboreal::curves
