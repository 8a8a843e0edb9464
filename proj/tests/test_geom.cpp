#include "doctest.h"

#include <cmath>
#include <cstdint>

#include "sona/exact.hpp"
#include "sona/geom.hpp"

using namespace sona;

namespace {

constexpr double kPi = 3.14159265358979323846;

// Small deterministic generator for property sweeps (xorshift64).
struct Rng {
    std::uint64_t s;
    explicit Rng(std::uint64_t seed) : s(seed) {}
    std::uint64_t next() {
        s ^= s << 13;
        s ^= s >> 7;
        s ^= s << 17;
        return s;
    }
    double uniform(double lo, double hi) {
        return lo + (hi - lo) * double(next() % (1u << 24)) / double(1u << 24);
    }
};

}  // namespace

TEST_CASE("metric distances on axis-diagonal pair") {
    Vec2 a{0, 0}, b{1, 1};
    CHECK(distance(Metric::l1(), a, b) == doctest::Approx(2.0));
    CHECK(distance(Metric::l2(), a, b) == doctest::Approx(std::sqrt(2.0)));
    CHECK(distance(Metric::linf(), a, b) == doctest::Approx(1.0));
}

TEST_CASE("triangle inequality holds on random triples for all metrics") {
    Rng rng(42);
    Metric metrics[] = {Metric::l1(), Metric::l2(), Metric::linf(), Metric::sphere(2.5)};
    for (const Metric& m : metrics) {
        bool sphere = m.kind == Metric::Kind::Sphere;
        for (int i = 0; i < 1000; ++i) {
            auto pt = [&]() -> Vec2 {
                if (sphere)
                    return {rng.uniform(-kPi / 2, kPi / 2), rng.uniform(-kPi, kPi)};
                return {rng.uniform(-10, 10), rng.uniform(-10, 10)};
            };
            Vec2 a = pt(), b = pt(), c = pt();
            double ab = distance(m, a, b), bc = distance(m, b, c), ac = distance(m, a, c);
            CHECK(ac <= ab + bc + 1e-9);
            CHECK(ab >= 0.0);
            CHECK(distance(m, a, b) == doctest::Approx(distance(m, b, a)));
        }
    }
}

TEST_CASE("curve length of the unit square") {
    PolyCurve sq{{{0, 0}, {1, 0}, {1, 1}, {0, 1}}, true};
    CHECK(curve_length(Metric::l2(), sq) == doctest::Approx(4.0));
    CHECK(curve_length(Metric::l1(), sq) == doctest::Approx(4.0));
}

TEST_CASE("curve length invariant under rotation and reversal of closed curves") {
    PolyCurve c{{{0, 0}, {3, 0}, {3, 2}, {1, 2}, {1, 1}, {0, 1}}, true};
    double base = curve_length(Metric::l2(), c);
    PolyCurve rot = c;
    std::rotate(rot.vertices.begin(), rot.vertices.begin() + 2, rot.vertices.end());
    PolyCurve rev = c;
    std::reverse(rev.vertices.begin(), rev.vertices.end());
    CHECK(curve_length(Metric::l2(), rot) == doctest::Approx(base));
    CHECK(curve_length(Metric::l2(), rev) == doctest::Approx(base));
    CHECK(curve_length(Metric::l1(), rot) == doctest::Approx(curve_length(Metric::l1(), c)));
}

// Boundary of the set of points within distance s/2 of an axis-aligned square
// of side s: four sides plus four quarter arcs, total (4 + pi) * s.
TEST_CASE("rounded square length matches the analytic value") {
    for (int level = 1; level <= 3; ++level) {
        double s = std::pow(1.0 / (1.0 + std::sqrt(2.0)), 2.0 * level);
        double r = s / 2.0;
        PolyCurve poly;
        poly.closed = true;
        // Corner arc centers at the square's corners (+-s/2, +-s/2).
        const int arc_steps = 4096;
        double cx[4] = {s / 2, -s / 2, -s / 2, s / 2};
        double cy[4] = {s / 2, s / 2, -s / 2, -s / 2};
        for (int k = 0; k < 4; ++k) {
            double a0 = k * kPi / 2.0;
            for (int i = 0; i < arc_steps; ++i) {
                double a = a0 + kPi / 2.0 * i / arc_steps;
                poly.vertices.push_back({cx[k] + r * std::cos(a), cy[k] + r * std::sin(a)});
            }
        }
        double analytic = (4.0 + kPi) * s;
        CHECK(curve_length(Metric::l2(), poly) == doctest::Approx(analytic).epsilon(1e-6));
    }
}

TEST_CASE("disk perimeters") {
    CHECK(disk_perimeter(Metric::l1(), 1.0) == doctest::Approx(8.0));
    CHECK(disk_perimeter(Metric::linf(), 2.0) == doctest::Approx(16.0));
    CHECK(disk_perimeter(Metric::l2(), 1.0) == doctest::Approx(2.0 * kPi));
    double p = disk_perimeter(Metric::sphere(1.0), kPi / 2.0);
    CHECK(p == doctest::Approx(2.0 * kPi));
    CHECK(p >= 4.0 * (kPi / 2.0) - 1e-12);
    CHECK_THROWS_AS(disk_perimeter(Metric::sphere(1.0), 2.0), std::domain_error);
    CHECK_THROWS_AS(disk_perimeter(Metric::l2(), -1.0), std::domain_error);
}

TEST_CASE("spherical cap boundary dominates 4r on the whole admissible range") {
    double rho = 3.0;
    for (int i = 0; i <= 10000; ++i) {
        double r = rho * (kPi / 2.0) * i / 10000.0;
        CHECK(disk_perimeter(Metric::sphere(rho), r) >= 4.0 * r - 1e-9);
    }
}

TEST_CASE("multigraph weights") {
    WeightedMultigraph g;
    g.vertices = {{0, 0}, {1, 0}};
    g.add_edge(0, 1, 1.0);
    g.add_edge(0, 1, 1.0);  // parallel edges allowed
    CHECK(g.total_weight() == doctest::Approx(2.0));
    CHECK_THROWS_AS(g.add_edge(0, 1, -1.0), std::domain_error);
}

TEST_CASE("exact rationals round-trip and predicates") {
    Rat r(3, 7);
    CHECK(rat_to_string(r) == "3/7");
    CHECK(*rat_from_string("3/7") == r);
    CHECK(*rat_from_string("-12") == Rat(-12));
    CHECK(*rat_from_string("1.25") == Rat(5, 4));
    CHECK(!rat_from_string("junk").has_value());

    RatPt a{0, 0}, b{2, 2}, c{1, 1}, d{2, 0};
    CHECK(orient(a, b, d) < 0);
    CHECK(orient(a, d, b) > 0);
    CHECK(on_segment(a, b, c));
    auto ix = intersect_segments({0, 0}, {2, 2}, {0, 2}, {2, 0});
    REQUIRE(ix.kind == SegIntersection::Kind::Point);
    CHECK(ix.point == RatPt{1, 1});
    auto ov = intersect_segments({0, 0}, {2, 0}, {1, 0}, {3, 0});
    CHECK(ov.kind == SegIntersection::Kind::Overlap);
    auto none = intersect_segments({0, 0}, {1, 0}, {0, 1}, {1, 1});
    CHECK(none.kind == SegIntersection::Kind::None);
}
