#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace sona {

// Cell (c, r) spans [c, c+1] x [r, r+1]; its site sits at the center.
struct Cell {
    int c = 0, r = 0;
    bool operator==(const Cell& o) const { return c == o.c && r == o.r; }
    bool operator<(const Cell& o) const { return r != o.r ? r < o.r : c < o.c; }
};

// Unit grid edge, identified by its lower-left lattice vertex and direction:
// east (x,y)->(x+1,y) or north (x,y)->(x,y+1).
struct GridEdge {
    int x = 0, y = 0;
    bool north = false;
    bool operator==(const GridEdge& o) const {
        return x == o.x && y == o.y && north == o.north;
    }
    bool operator<(const GridEdge& o) const {
        if (y != o.y) return y < o.y;
        if (x != o.x) return x < o.x;
        return north < o.north;
    }
};

struct Vertex {
    int x = 0, y = 0;
    bool operator==(const Vertex& o) const { return x == o.x && y == o.y; }
    bool operator<(const Vertex& o) const { return y != o.y ? y < o.y : x < o.x; }
};

struct GridInstance {
    int width = 0;   // cells per row
    int height = 0;  // cell rows
    std::vector<Cell> sites;

    bool in_bounds(Cell c) const {
        return c.c >= 0 && c.c < width && c.r >= 0 && c.r < height;
    }
    bool has_site(Cell c) const;
    void check() const;  // throws std::invalid_argument on bad instances
};

struct GridDrawing {
    std::set<GridEdge> on_edges;

    bool has(GridEdge e) const { return on_edges.count(e) != 0; }
    std::size_t length() const { return on_edges.size(); }  // unit edges
};

inline std::size_t drawing_length(const GridDrawing& d) { return d.length(); }

// Edge indexing over the lattice of a W x H cell grid.  Horizontal (east)
// edges: x in [0,W), y in [0,H]; vertical (north): x in [0,W], y in [0,H).
struct EdgeIndex {
    int W = 0, H = 0;

    EdgeIndex() = default;
    EdgeIndex(int w, int h) : W(w), H(h) {}
    int count() const { return (H + 1) * W + (W + 1) * H; }
    bool valid(GridEdge e) const {
        if (e.north) return e.x >= 0 && e.x <= W && e.y >= 0 && e.y < H;
        return e.x >= 0 && e.x < W && e.y >= 0 && e.y <= H;
    }
    int id(GridEdge e) const {
        if (!e.north) return e.y * W + e.x;
        return (H + 1) * W + e.y * (W + 1) + e.x;
    }
    GridEdge edge(int id) const {
        int he = (H + 1) * W;
        if (id < he) return {id % W, id / W, false};
        id -= he;
        return {id % (W + 1), id / (W + 1), true};
    }
    // Incident edges of a lattice vertex, in fixed E, N, W, S order; invalid
    // slots (outside the grid) are absent.
    std::vector<GridEdge> incident(Vertex v) const;
};

struct CurveDecomposition {
    // Each curve is a closed cyclic edge sequence; every on-edge appears in
    // exactly one curve exactly once.
    std::vector<std::vector<GridEdge>> curves;
    std::vector<Vertex> crossings;  // degree-4 vertices
};

struct OddDegreeError {
    Vertex vertex;
};

// Splits an edge set into closed curves under the forced degree-4 pairing
// (strands pass straight through: north<->south, east<->west).
// Fails with the first odd-degree vertex in scan order.
std::optional<CurveDecomposition> decompose(const GridInstance& inst, const GridDrawing& d,
                                            OddDegreeError* err = nullptr);

struct FaceMap {
    // face_of[r * width + c] is the face id of cell (c, r); outer_face is the
    // id of the unique face touching the (implicitly padded) boundary.
    std::vector<int> face_of;
    int face_count = 0;
    int outer_face = -1;
    int width = 0, height = 0;

    int face(Cell c) const { return face_of[c.r * width + c.c]; }
    std::vector<std::vector<Cell>> cells_by_face() const;
};

FaceMap extract_faces(const GridInstance& inst, const GridDrawing& d);

struct Violation {
    enum class Kind {
        OddDegree,      // witness: vertex
        CurveCount,     // witness: count (number of closed curves, != 1)
        FaceSiteCount,  // witness: face id + an example cell + site count
        OuterSite,      // witness: site cell in the outer face
    };
    Kind kind;
    Vertex vertex{};
    int count = 0;
    Cell cell{};
    std::string describe() const;
    bool operator==(const Violation& o) const {
        return kind == o.kind && vertex == o.vertex && count == o.count && cell == o.cell;
    }
};

struct ValidateResult {
    std::optional<Violation> violation;  // empty => valid
    bool valid() const { return !violation.has_value(); }
};

// The four-condition grid sona validator.  Checks, in fixed order: even
// degrees, exactly one closed curve, one site per bounded face, no site in
// the outer face.  Reports the first failure.
ValidateResult validate(const GridInstance& inst, const GridDrawing& d);

// Independent oracle: same verdict contract, separately implemented (explicit
// curve walk, per-cell BFS flood fill).  Used to cross-check validate().
ValidateResult brute_validate(const GridInstance& inst, const GridDrawing& d);

}  // namespace sona
