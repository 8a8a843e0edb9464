#include "sona/separation.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace sona {

namespace {
constexpr double kPi = 3.14159265358979323846;
const double kSqrt2 = std::sqrt(2.0);
}  // namespace

double level_shrink() {
    double u = 1.0 / (1.0 + kSqrt2);
    return u * u;  // = 3 - 2*sqrt2
}

double isolation_radius(int level) { return 0.5 * std::pow(level_shrink(), level); }

void FractalParams::check() const {
    if (inv_eps < 1) throw std::invalid_argument("inv_eps must be at least 1");
    if (inv_eps > 64) throw std::length_error("inv_eps beyond configured cap (64)");
    if (levels < 0 || levels > inv_eps)
        throw std::invalid_argument("levels must lie in [0, inv_eps]");
    double cap = 0.1 * std::pow(level_shrink(), levels);
    if (delta != 0.0 && (delta <= 0.0 || delta > cap))
        throw std::invalid_argument("delta must be positive and finer than the smallest feature");
}

double FractalParams::resolved_delta() const {
    if (delta != 0.0) return delta;
    return std::pow(level_shrink(), levels) / 16.0;
}

namespace {

std::int64_t aux0_count(int k) { return std::int64_t(2) * k * (k + 1); }
std::int64_t isolated0_count(int k) { return std::int64_t(2) * k * k + 2 * k + 1; }
double lattice_length(int k) { return 4.0 * (k + 1) * (k + 1); }

void pack_segment(Vec2 a, Vec2 b, double delta, std::vector<Vec2>& out) {
    double len = std::hypot(b.x - a.x, b.y - a.y);
    int n = std::max(1, int(std::ceil(len / delta)));
    for (int i = 0; i <= n; ++i) out.push_back(a + (double(i) / n) * (b - a));
}

}  // namespace

std::vector<PolyCurve> SeparationConstruction::packed_polycurves(int arc_steps) const {
    std::vector<PolyCurve> out;
    for (const PackedSegment& s : segments) out.push_back({{s.a, s.b}, false});
    for (const RoundedSquare& q : rounded_squares) {
        PolyCurve c;
        c.closed = true;
        double h = q.side / 2.0, r = q.side / 2.0;
        double cx[4] = {h, -h, -h, h}, cy[4] = {h, h, -h, -h};
        for (int k = 0; k < 4; ++k) {
            double a0 = k * kPi / 2.0;
            for (int i = 0; i < arc_steps; ++i) {
                double a = a0 + kPi / 2.0 * i / arc_steps;
                c.vertices.push_back(
                    {q.center.x + cx[k] + r * std::cos(a), q.center.y + cy[k] + r * std::sin(a)});
            }
        }
        out.push_back(std::move(c));
    }
    return out;
}

std::vector<Vec2> SeparationConstruction::all_sites() const {
    std::vector<Vec2> out;
    for (const auto& lvl : isolated_sites) out.insert(out.end(), lvl.begin(), lvl.end());
    out.insert(out.end(), packed_sites.begin(), packed_sites.end());
    return out;
}

SeparationConstruction build_fractal(const FractalParams& p) {
    p.check();
    const int k = p.inv_eps;
    const double shrink = level_shrink();

    SeparationConstruction c;
    c.params = p;
    c.aux_count.resize(p.levels + 1);
    c.isolated_count.resize(p.levels + 1);
    c.aux_count[0] = aux0_count(k);
    c.isolated_count[0] = isolated0_count(k);
    for (int i = 1; i <= p.levels; ++i) {
        c.aux_count[i] = c.aux_count[i - 1] * 5;
        c.isolated_count[i] = 4 * c.aux_count[i - 1];
    }

    // Explicit geometry only at desk scale.
    std::int64_t total_aux = 0;
    for (auto n : c.aux_count) total_aux += n;
    c.explicit_geometry = total_aux <= 200'000;
    if (!c.explicit_geometry) return c;

    // A_0: half-integer lattice inside the L1 ball of radius k.
    c.aux.resize(p.levels + 1);
    c.isolated_sites.resize(p.levels + 1);
    for (int i = -k; i < k; ++i)
        for (int j = -k; j < k; ++j) {
            Vec2 q{i + 0.5, j + 0.5};
            if (std::abs(q.x) + std::abs(q.y) <= k + 1e-12) c.aux[0].push_back(q);
        }

    // P_0: integer lattice inside the same ball.
    for (int i = -k; i <= k; ++i)
        for (int j = -k; j <= k; ++j)
            if (std::abs(i) + std::abs(j) <= k)
                c.isolated_sites[0].push_back({double(i), double(j)});

    // Deeper levels: each auxiliary point spawns four cardinal children and
    // four diagonal isolated sites at half the offset.
    double s = 1.0;
    for (int i = 1; i <= p.levels; ++i) {
        s *= shrink;
        for (const Vec2& q : c.aux[i - 1]) {
            c.aux[i].push_back(q);
            c.aux[i].push_back({q.x + s, q.y});
            c.aux[i].push_back({q.x - s, q.y});
            c.aux[i].push_back({q.x, q.y + s});
            c.aux[i].push_back({q.x, q.y - s});
            double h = s / 2.0;
            c.isolated_sites[i].push_back({q.x + h, q.y + h});
            c.isolated_sites[i].push_back({q.x + h, q.y - h});
            c.isolated_sites[i].push_back({q.x - h, q.y + h});
            c.isolated_sites[i].push_back({q.x - h, q.y - h});
        }
    }

    // Packed lattice segments: vertical lines at half-integer x spanning the
    // ball, and the horizontal mirror family.
    for (int i = -(k + 1); i <= k; ++i) {
        double x = i + 0.5;
        double span = k + 1 - std::abs(x);
        c.segments.push_back({{x, span}, {x, -span}});
        c.segments.push_back({{span, x}, {-span, x}});
    }

    // One rounded square per auxiliary point per level; its straight sides
    // pass through the point's four cardinal children.
    s = 1.0;
    for (int i = 1; i <= p.levels; ++i) {
        s *= shrink;
        for (const Vec2& q : c.aux[i - 1]) c.rounded_squares.push_back({q, s});
    }

    // Packed sites along every curve at spacing delta.
    const double delta = p.resolved_delta();
    if (p.levels <= 3 && k <= 4) {
        for (const PolyCurve& pc : c.packed_polycurves(64)) {
            if (pc.closed) {
                for (std::size_t i = 0; i < pc.vertices.size(); ++i)
                    pack_segment(pc.vertices[i], pc.vertices[(i + 1) % pc.vertices.size()], delta,
                                 c.packed_sites);
            } else {
                pack_segment(pc.vertices.front(), pc.vertices.back(), delta, c.packed_sites);
            }
        }
    }
    return c;
}

double sona_length(const SeparationConstruction& c) {
    double total = lattice_length(c.params.inv_eps);
    double s = 1.0;
    for (int i = 1; i <= c.params.levels; ++i) {
        s *= level_shrink();
        total += double(c.aux_count[i - 1]) * (4.0 + kPi) * s;
    }
    return total;
}

double tsp_extra_length(const SeparationConstruction& c) {
    double total = double(c.isolated_count[0]);  // 2 * (1/2) per site of P_0
    double s = 1.0;
    for (int i = 1; i <= c.params.levels; ++i) {
        s *= level_shrink();
        total += double(c.isolated_count[i]) * s;  // 2 * r_i = shrink^i
    }
    return total;
}

double ratio_at(const SeparationConstruction& c) {
    double s = sona_length(c);
    return (s + tsp_extra_length(c)) / s;
}

double ratio_limit() {
    return (14.0 + 8.0 * kSqrt2 + kPi * (kSqrt2 + 1.0)) /
           (8.0 + 4.0 * kSqrt2 + kPi * (kSqrt2 + 1.0));
}

double sona_unit_coefficient_series(int terms) {
    double sum = 0.0, pw = 1.0;
    for (int i = 1; i <= terms; ++i) {
        pw *= level_shrink();
        sum += std::pow(5.0, i - 1) * pw;
    }
    return 2.0 + (4.0 + kPi) * sum;
}

double sona_unit_coefficient_closed() { return 2.0 + (4.0 + kPi) / (2.0 * kSqrt2 - 2.0); }

double tsp_unit_coefficient_series(int terms) {
    double sum = 0.0, pw = 1.0;
    for (int i = 1; i <= terms; ++i) {
        pw *= level_shrink();
        sum += 4.0 * std::pow(5.0, i - 1) * pw;
    }
    return 1.0 + sum;
}

double tsp_unit_coefficient_closed() { return 2.0 * kSqrt2 + 3.0; }

double distance_to_packed_curves(const SeparationConstruction& c, Vec2 p) {
    if (!c.explicit_geometry) throw std::logic_error("construction has no explicit geometry");
    double best = 1e300;
    auto seg_dist = [](Vec2 a, Vec2 b, Vec2 q) {
        Vec2 d = b - a;
        double len2 = d.x * d.x + d.y * d.y;
        double t = len2 == 0.0 ? 0.0 : ((q.x - a.x) * d.x + (q.y - a.y) * d.y) / len2;
        t = std::clamp(t, 0.0, 1.0);
        Vec2 proj = a + t * d;
        return std::hypot(q.x - proj.x, q.y - proj.y);
    };
    for (const PackedSegment& s : c.segments) best = std::min(best, seg_dist(s.a, s.b, p));
    for (const RoundedSquare& q : c.rounded_squares) {
        // Distance to the offset boundary of the solid square of side q.side.
        double h = q.side / 2.0, r = q.side / 2.0;
        double dx = std::max(std::abs(p.x - q.center.x) - h, 0.0);
        double dy = std::max(std::abs(p.y - q.center.y) - h, 0.0);
        double outside = std::hypot(dx, dy);
        double d;
        if (outside > 0.0) {
            d = std::abs(outside - r);
        } else {
            double inx = h - std::abs(p.x - q.center.x);
            double iny = h - std::abs(p.y - q.center.y);
            d = std::min(inx, iny) + r;  // strictly inside the solid square
        }
        best = std::min(best, d);
    }
    return best;
}

// --- diamond ----------------------------------------------------------------

double DiamondConstruction::ratio() const {
    double kk = k;
    return 1.25 + kk * kk / (4.0 * (kk + 1) * (kk + 1));
}

DiamondConstruction diamond_construction(int k, double delta) {
    if (k < 1) throw std::invalid_argument("diamond construction needs k >= 1");
    DiamondConstruction d;
    d.k = k;
    for (int x = -k; x <= k; ++x)
        for (int y = -k; y <= k; ++y) {
            if (std::abs(x) + std::abs(y) > k) continue;
            d.lattice_sites.push_back({double(x), double(y)});
            // Unit square centered at (x, y): with coordinates doubled, every
            // corner is integral and every side is exactly two unit edges of
            // the doubled grid.  Shared sides land on identical edges.
            int cx = 2 * x, cy = 2 * y;
            for (int t = 0; t < 2; ++t) {
                d.q_edges_doubled.insert({cx - 1 + t, cy - 1, false});  // bottom
                d.q_edges_doubled.insert({cx - 1 + t, cy + 1, false});  // top
                d.q_edges_doubled.insert({cx - 1, cy - 1 + t, true});   // left
                d.q_edges_doubled.insert({cx + 1, cy - 1 + t, true});   // right
            }
        }
    for (const GridEdge& e : d.q_edges_doubled) {
        Vec2 a{e.x / 2.0, e.y / 2.0};
        Vec2 b = e.north ? Vec2{e.x / 2.0, (e.y + 1) / 2.0} : Vec2{(e.x + 1) / 2.0, e.y / 2.0};
        int n = std::max(1, int(std::ceil(0.5 / delta)));
        for (int i = 0; i < n; ++i) d.packed_sites.push_back(a + (double(i) / n) * (b - a));
    }
    return d;
}

SphereWitness sphere_ratio_bound(double rho) {
    if (!(rho > 0.0)) throw std::domain_error("sphere radius must be positive");
    SphereWitness w;
    w.rho = rho;
    w.sona_length = 2.0 * kPi * rho;              // packed equator
    w.tsp_extra = 2.0 * (2.0 * rho * kPi / 2.0);  // out-and-back to each pole
    w.ratio_limit = (w.sona_length + w.tsp_extra) / w.sona_length;
    w.bound = 2.0;
    return w;
}

}  // namespace sona
