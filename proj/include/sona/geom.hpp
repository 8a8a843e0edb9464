#pragma once

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <vector>

namespace sona {

struct Vec2 {
    double x = 0.0;
    double y = 0.0;
};

inline Vec2 operator+(Vec2 a, Vec2 b) { return {a.x + b.x, a.y + b.y}; }
inline Vec2 operator-(Vec2 a, Vec2 b) { return {a.x - b.x, a.y - b.y}; }
inline Vec2 operator*(double s, Vec2 a) { return {s * a.x, s * a.y}; }
inline bool operator==(Vec2 a, Vec2 b) { return a.x == b.x && a.y == b.y; }

// Distance metrics.  Planar points are (x, y).  For the Sphere metric a
// "point" is (latitude, longitude) in radians on a sphere of radius rho;
// distance is the great-circle arc length.
struct Metric {
    enum class Kind { L1, L2, Linf, Sphere };
    Kind kind = Kind::L2;
    double rho = 0.0;  // sphere radius, Kind::Sphere only

    static Metric l1() { return {Kind::L1, 0.0}; }
    static Metric l2() { return {Kind::L2, 0.0}; }
    static Metric linf() { return {Kind::Linf, 0.0}; }
    static Metric sphere(double rho) {
        if (!(rho > 0.0)) throw std::domain_error("sphere radius must be positive");
        return {Kind::Sphere, rho};
    }
};

double distance(const Metric& m, Vec2 a, Vec2 b);

// Open or closed polyline.  Closed curves repeat no vertex; the segment from
// back() to front() is implicit.
struct PolyCurve {
    std::vector<Vec2> vertices;
    bool closed = true;
};

double curve_length(const Metric& m, const PolyCurve& c);

// Perimeter of a metric disk of radius r: 8r for L1/Linf, 2*pi*r for L2,
// 2*pi*rho*sin(r/rho) for the sphere (spherical cap boundary, r/rho <= pi/2).
double disk_perimeter(const Metric& m, double r);

// Edge-weighted multigraph over planar points; parallel edges allowed.
struct WeightedMultigraph {
    struct Edge {
        std::size_t u, v;
        double w;
    };
    std::vector<Vec2> vertices;
    std::vector<Edge> edges;

    void add_edge(std::size_t u, std::size_t v, double w) {
        if (u >= vertices.size() || v >= vertices.size())
            throw std::out_of_range("edge endpoint out of range");
        if (w < 0.0) throw std::domain_error("edge weight must be nonnegative");
        edges.push_back({u, v, w});
    }
    double total_weight() const {
        double s = 0.0;
        for (const auto& e : edges) s += e.w;
        return s;
    }
};

}  // namespace sona
