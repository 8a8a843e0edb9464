#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <string>

#include "sona/geom.hpp"

namespace sona {

// Exact rational scalar.  Grid-derived coordinates (hardness instances,
// polygonized loops, arrangement vertices) stay in Rat end to end; doubles
// are only for reporting lengths.
using Rat = boost::multiprecision::cpp_rational;

inline double rat_to_double(const Rat& r) { return r.convert_to<double>(); }

// Lossless text form: "n" or "n/d", lowest terms, d > 0.
std::string rat_to_string(const Rat& r);

// Accepts "n", "n/d" and plain decimals ("1.25" -> 5/4).
std::optional<Rat> rat_from_string(const std::string& s);

struct RatPt {
    Rat x, y;
    bool operator==(const RatPt& o) const { return x == o.x && y == o.y; }
    bool operator<(const RatPt& o) const {
        if (x != o.x) return x < o.x;
        return y < o.y;
    }
};

inline Vec2 to_vec2(const RatPt& p) { return {rat_to_double(p.x), rat_to_double(p.y)}; }

// Sign of the cross product (b-a) x (c-a): >0 left turn, <0 right, 0 collinear.
int orient(const RatPt& a, const RatPt& b, const RatPt& c);

// True if p lies on the closed segment [a, b].
bool on_segment(const RatPt& a, const RatPt& b, const RatPt& p);

struct SegIntersection {
    enum class Kind { None, Point, Overlap };
    Kind kind = Kind::None;
    RatPt point;  // Kind::Point only
};

// Exact intersection of closed segments [a,b] and [c,d].  Collinear overlap of
// positive length reports Kind::Overlap (a tangency, never a crossing).
SegIntersection intersect_segments(const RatPt& a, const RatPt& b, const RatPt& c,
                                   const RatPt& d);

Rat dist2(const RatPt& a, const RatPt& b);

}  // namespace sona
