#pragma once

#include <string>
#include <vector>

#include "sona/exact.hpp"

namespace sona {

// Closed polygonal curve with exact rational vertices; the segment from
// back() to front() is implicit.  The curve may pass through a point twice
// (a crossing) but may never retrace itself.
using RatCurve = std::vector<RatPt>;

struct CurveCheck {
    bool valid = false;
    std::string reason;        // empty when valid
    int bounded_faces = 0;
    int crossings = 0;
};

// Decides whether the closed curve is a sona drawing for the given sites:
// self-intersections are simple transversal crossings only, every bounded
// face of the arrangement holds exactly one site, no site lies on the curve
// or in the outer face.  All predicates are exact.
CurveCheck validate_curve(const std::vector<RatPt>& sites, const RatCurve& curve);

// Length of the closed curve under a planar metric (reported in double).
double rat_curve_length(const Metric& m, const RatCurve& curve);

}  // namespace sona
