#include "sona/geom.hpp"

#include <algorithm>

namespace sona {

namespace {

double great_circle(double rho, Vec2 a, Vec2 b) {
    constexpr double half_pi = 1.5707963267948966;
    if (std::abs(a.x) > half_pi + 1e-12 || std::abs(b.x) > half_pi + 1e-12)
        throw std::domain_error("sphere point latitude outside [-pi/2, pi/2]");
    // Haversine form of the central angle; stable for small separations.
    double dlat = b.x - a.x;
    double dlon = b.y - a.y;
    double s = std::sin(0.5 * dlat);
    double t = std::sin(0.5 * dlon);
    double h = s * s + std::cos(a.x) * std::cos(b.x) * t * t;
    h = std::clamp(h, 0.0, 1.0);
    return rho * 2.0 * std::asin(std::sqrt(h));
}

}  // namespace

double distance(const Metric& m, Vec2 a, Vec2 b) {
    double dx = std::abs(a.x - b.x);
    double dy = std::abs(a.y - b.y);
    switch (m.kind) {
        case Metric::Kind::L1: return dx + dy;
        case Metric::Kind::L2: return std::hypot(dx, dy);
        case Metric::Kind::Linf: return std::max(dx, dy);
        case Metric::Kind::Sphere: return great_circle(m.rho, a, b);
    }
    throw std::logic_error("bad metric kind");
}

double curve_length(const Metric& m, const PolyCurve& c) {
    const auto& v = c.vertices;
    if (v.size() < 2) return 0.0;
    if (c.closed && v.size() < 3)
        throw std::invalid_argument("closed curve needs at least 3 vertices");
    double len = 0.0;
    for (std::size_t i = 0; i + 1 < v.size(); ++i) {
        double d = distance(m, v[i], v[i + 1]);
        if (d == 0.0) throw std::invalid_argument("zero-length segment in curve");
        len += d;
    }
    if (c.closed) len += distance(m, v.back(), v.front());
    return len;
}

double disk_perimeter(const Metric& m, double r) {
    if (r < 0.0) throw std::domain_error("disk radius must be nonnegative");
    constexpr double two_pi = 6.283185307179586;
    switch (m.kind) {
        case Metric::Kind::L1:
        case Metric::Kind::Linf:
            return 8.0 * r;
        case Metric::Kind::L2:
            return two_pi * r;
        case Metric::Kind::Sphere: {
            double ratio = r / m.rho;
            if (ratio > 1.5707963267948966 + 1e-12)
                throw std::domain_error("spherical cap larger than a half-sphere");
            return two_pi * m.rho * std::sin(ratio);
        }
    }
    throw std::logic_error("bad metric kind");
}

}  // namespace sona
