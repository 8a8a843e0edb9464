#include "sona/exact.hpp"

#include <sstream>

namespace sona {

std::string rat_to_string(const Rat& r) {
    std::ostringstream os;
    os << numerator(r);
    if (denominator(r) != 1) os << '/' << denominator(r);
    return os.str();
}

std::optional<Rat> rat_from_string(const std::string& s) {
    if (s.empty()) return std::nullopt;
    auto slash = s.find('/');
    try {
        if (slash != std::string::npos) {
            boost::multiprecision::cpp_int n(s.substr(0, slash));
            boost::multiprecision::cpp_int d(s.substr(slash + 1));
            if (d == 0) return std::nullopt;
            return Rat(n, d);
        }
        auto dot = s.find('.');
        if (dot == std::string::npos) return Rat(boost::multiprecision::cpp_int(s));
        std::string digits = s.substr(0, dot) + s.substr(dot + 1);
        bool neg = !digits.empty() && digits[0] == '-';
        if (digits == "-" || digits.empty()) return std::nullopt;
        boost::multiprecision::cpp_int n(digits);
        boost::multiprecision::cpp_int d = 1;
        for (std::size_t i = 0; i < s.size() - dot - 1; ++i) d *= 10;
        (void)neg;
        return Rat(n, d);
    } catch (const std::exception&) {
        return std::nullopt;
    }
}

int orient(const RatPt& a, const RatPt& b, const RatPt& c) {
    Rat v = (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
    if (v > 0) return 1;
    if (v < 0) return -1;
    return 0;
}

bool on_segment(const RatPt& a, const RatPt& b, const RatPt& p) {
    if (orient(a, b, p) != 0) return false;
    if (p.x < std::min(a.x, b.x) || p.x > std::max(a.x, b.x)) return false;
    if (p.y < std::min(a.y, b.y) || p.y > std::max(a.y, b.y)) return false;
    return true;
}

SegIntersection intersect_segments(const RatPt& a, const RatPt& b, const RatPt& c,
                                   const RatPt& d) {
    int o1 = orient(a, b, c), o2 = orient(a, b, d);
    int o3 = orient(c, d, a), o4 = orient(c, d, b);

    if (o1 == 0 && o2 == 0) {
        // Collinear: overlap iff the x (or for vertical lines, y) ranges share
        // more than a point.
        auto lo = [](const Rat& u, const Rat& v) { return u < v ? u : v; };
        auto hi = [](const Rat& u, const Rat& v) { return u < v ? v : u; };
        bool vertical = a.x == b.x;
        Rat s1 = vertical ? lo(a.y, b.y) : lo(a.x, b.x);
        Rat e1 = vertical ? hi(a.y, b.y) : hi(a.x, b.x);
        Rat s2 = vertical ? lo(c.y, d.y) : lo(c.x, d.x);
        Rat e2 = vertical ? hi(c.y, d.y) : hi(c.x, d.x);
        Rat lo2 = s1 > s2 ? s1 : s2;
        Rat hi2 = e1 < e2 ? e1 : e2;
        if (lo2 > hi2) return {SegIntersection::Kind::None, {}};
        if (lo2 < hi2) return {SegIntersection::Kind::Overlap, {}};
        // Touch at a single shared endpoint.
        RatPt p = on_segment(a, b, c) ? c : d;
        return {SegIntersection::Kind::Point, p};
    }

    if (o1 != o2 && o3 != o4) {
        // Proper or endpoint intersection at a single point.
        Rat det = (b.x - a.x) * (d.y - c.y) - (b.y - a.y) * (d.x - c.x);
        Rat t = ((c.x - a.x) * (d.y - c.y) - (c.y - a.y) * (d.x - c.x)) / det;
        RatPt p{a.x + t * (b.x - a.x), a.y + t * (b.y - a.y)};
        return {SegIntersection::Kind::Point, p};
    }

    // Endpoint touching a segment interior without crossing.
    if (o1 == 0 && on_segment(a, b, c)) return {SegIntersection::Kind::Point, c};
    if (o2 == 0 && on_segment(a, b, d)) return {SegIntersection::Kind::Point, d};
    if (o3 == 0 && on_segment(c, d, a)) return {SegIntersection::Kind::Point, a};
    if (o4 == 0 && on_segment(c, d, b)) return {SegIntersection::Kind::Point, b};
    return {SegIntersection::Kind::None, {}};
}

Rat dist2(const RatPt& a, const RatPt& b) {
    Rat dx = a.x - b.x, dy = a.y - b.y;
    return dx * dx + dy * dy;
}

}  // namespace sona
