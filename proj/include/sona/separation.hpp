#pragma once

#include <cstdint>
#include <vector>

#include "sona/geom.hpp"
#include "sona/grid.hpp"

namespace sona {

// Fractal TSP/sona separation construction parameters.  inv_eps is the
// number of recursion levels the idealized construction would use; levels is
// how many are actually built (<= inv_eps).  delta is the packing spacing and
// must stay below a tenth of the smallest feature.
struct FractalParams {
    int inv_eps = 2;
    int levels = 2;
    double delta = 0.0;  // 0 => default: smallest feature / 16

    void check() const;
    double resolved_delta() const;
};

// Squared contraction factor per level: (1 / (1 + sqrt 2))^2.
double level_shrink();

struct PackedSegment {
    Vec2 a, b;
};

// Boundary of the set of points within distance side/2 of the axis-aligned
// square of the given side length centered at center: four straight sides
// plus four quarter arcs, total length (4 + pi) * side.
struct RoundedSquare {
    Vec2 center;
    double side;
};

struct SeparationConstruction {
    FractalParams params;

    // Per-level counts; always exact regardless of whether explicit geometry
    // was generated.  aux_count[i] = |A_i|, isolated_count[0] = |P_0|, etc.
    std::vector<std::int64_t> aux_count;
    std::vector<std::int64_t> isolated_count;

    bool explicit_geometry = false;
    std::vector<std::vector<Vec2>> aux;            // A_0 .. A_levels
    std::vector<std::vector<Vec2>> isolated_sites; // P_0 .. P_levels
    std::vector<PackedSegment> segments;
    std::vector<RoundedSquare> rounded_squares;
    std::vector<Vec2> packed_sites;  // sites sprinkled along packed curves

    std::vector<PolyCurve> packed_polycurves(int arc_steps = 64) const;
    std::vector<Vec2> all_sites() const;
};

// Builds the construction.  Explicit point sets and packed-site sampling are
// generated when the total auxiliary count stays at desk scale; the exact
// count/length accounting is always available.  Throws std::length_error for
// inv_eps beyond the configured cap.
SeparationConstruction build_fractal(const FractalParams& p);

// Exact total length of the packed curves: lattice segments plus one rounded
// square per auxiliary point per level.
double sona_length(const SeparationConstruction& c);

// Lower bound on the extra length a TSP tour needs beyond the packed curves:
// an out-and-back of the isolation radius for every isolated site.
double tsp_extra_length(const SeparationConstruction& c);

double ratio_at(const SeparationConstruction& c);

// Limit of the TSP/sona ratio for the idealized construction:
// (14 + 8*sqrt2 + pi*(sqrt2+1)) / (8 + 4*sqrt2 + pi*(sqrt2+1)).
double ratio_limit();

// Idealized per-site coefficients (boundary terms removed): packed-curve
// length per site and TSP extra length per site.  The series forms evaluate
// the per-level geometric sums; the closed forms are the algebraic limits
// 2 + (4+pi)/(2*sqrt2 - 2) and 2*sqrt2 + 3.
double sona_unit_coefficient_series(int terms = 256);
double sona_unit_coefficient_closed();
double tsp_unit_coefficient_series(int terms = 256);
double tsp_unit_coefficient_closed();

// Distance from a point to the nearest packed curve of the construction
// (explicit geometry required).
double distance_to_packed_curves(const SeparationConstruction& c, Vec2 p);

// Isolation radius of the sites of P_i: 1/2 * shrink^i.
double isolation_radius(int level);

// --- diamond construction (L1 / Linf tight family) -------------------------

struct DiamondConstruction {
    int k = 1;
    std::vector<Vec2> lattice_sites;     // integer points with |x|+|y| <= k
    std::vector<Vec2> packed_sites;      // delta-dense along the drawing
    // Drawing Q: union of the boundaries of unit squares centered at the
    // lattice sites, stored as distinct unit edges on the half-integer grid
    // (coordinates doubled so everything is integral).
    std::set<GridEdge> q_edges_doubled;

    double q_length() const { return q_edges_doubled.size() / 2.0; }
    double ratio() const;  // 5/4 + k^2 / (4 (k+1)^2)
};

DiamondConstruction diamond_construction(int k, double delta = 0.125);

// --- sphere bound -----------------------------------------------------------

struct SphereWitness {
    double bound = 2.0;     // TSP / sona separation upper bound on the sphere
    double rho = 1.0;
    double sona_length = 0.0;   // equator
    double tsp_extra = 0.0;     // out-and-back to both poles
    double ratio_limit = 2.0;   // (sona + extra) / sona
};

SphereWitness sphere_ratio_bound(double rho = 1.0);

}  // namespace sona
