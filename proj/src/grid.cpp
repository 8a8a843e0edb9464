#include "sona/grid.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <sstream>
#include <stdexcept>

namespace sona {

bool GridInstance::has_site(Cell c) const {
    return std::find(sites.begin(), sites.end(), c) != sites.end();
}

void GridInstance::check() const {
    if (width <= 0 || height <= 0) throw std::invalid_argument("grid dimensions must be positive");
    std::set<Cell> seen;
    for (const Cell& s : sites) {
        if (!in_bounds(s)) throw std::invalid_argument("site outside grid");
        if (!seen.insert(s).second) throw std::invalid_argument("duplicate site");
    }
}

std::vector<GridEdge> EdgeIndex::incident(Vertex v) const {
    std::vector<GridEdge> out;
    out.reserve(4);
    GridEdge e{v.x, v.y, false};       // east
    if (valid(e)) out.push_back(e);
    GridEdge n{v.x, v.y, true};        // north
    if (valid(n)) out.push_back(n);
    GridEdge w{v.x - 1, v.y, false};   // west
    if (valid(w)) out.push_back(w);
    GridEdge s{v.x, v.y - 1, true};    // south
    if (valid(s)) out.push_back(s);
    return out;
}

namespace {

// Directions a directed traversal can travel along an edge.
enum Dir { E = 0, N = 1, W = 2, S = 3 };

GridEdge step_edge(Vertex v, int dir) {
    switch (dir) {
        case E: return {v.x, v.y, false};
        case N: return {v.x, v.y, true};
        case W: return {v.x - 1, v.y, false};
        default: return {v.x, v.y - 1, true};
    }
}

Vertex step_to(Vertex v, int dir) {
    switch (dir) {
        case E: return {v.x + 1, v.y};
        case N: return {v.x, v.y + 1};
        case W: return {v.x - 1, v.y};
        default: return {v.x, v.y - 1};
    }
}

}  // namespace

std::optional<CurveDecomposition> decompose(const GridInstance& inst, const GridDrawing& d,
                                            OddDegreeError* err) {
    (void)inst;
    // Vertex degrees.
    std::map<Vertex, int> degree;
    for (const GridEdge& e : d.on_edges) {
        Vertex a{e.x, e.y};
        Vertex b = e.north ? Vertex{e.x, e.y + 1} : Vertex{e.x + 1, e.y};
        degree[a]++;
        degree[b]++;
    }
    for (const auto& [v, deg] : degree) {
        if (deg % 2 != 0) {
            if (err) err->vertex = v;
            return std::nullopt;
        }
    }

    CurveDecomposition out;
    for (const auto& [v, deg] : degree)
        if (deg == 4) out.crossings.push_back(v);

    // Trace curves: at degree 2 take the remaining edge, at degree 4 continue
    // straight (the forced crossing pairing).
    std::set<GridEdge> visited;
    for (const GridEdge& start : d.on_edges) {
        if (visited.count(start)) continue;
        std::vector<GridEdge> curve;
        Vertex v{start.x, start.y};
        int dir = start.north ? N : E;
        const Vertex v0 = v;
        const int dir0 = dir;
        while (true) {
            GridEdge e = step_edge(v, dir);
            curve.push_back(e);
            visited.insert(e);
            v = step_to(v, dir);
            if (degree[v] != 4) {
                for (int cand = 0; cand < 4; ++cand) {
                    if (cand == (dir + 2) % 4) continue;  // no U-turn
                    if (d.has(step_edge(v, cand))) {
                        dir = cand;
                        break;
                    }
                }
            }  // degree 4: straight through, dir unchanged
            if (v == v0 && dir == dir0) break;
        }
        out.curves.push_back(std::move(curve));
    }
    return out;
}

namespace {

// Union-find over cells plus one sentinel for the padded outside region.
struct CellDsu {
    std::vector<int> parent;
    explicit CellDsu(int n) : parent(n) {
        for (int i = 0; i < n; ++i) parent[i] = i;
    }
    int find(int a) {
        while (parent[a] != a) a = parent[a] = parent[parent[a]];
        return a;
    }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace

FaceMap extract_faces(const GridInstance& inst, const GridDrawing& d) {
    const int W = inst.width, H = inst.height;
    const int outside = W * H;
    CellDsu dsu(W * H + 1);
    auto cid = [W](int c, int r) { return r * W + c; };

    for (int r = 0; r < H; ++r) {
        for (int c = 0; c < W; ++c) {
            // South side: edge (c, r) east.
            if (!d.has({c, r, false})) dsu.unite(cid(c, r), r == 0 ? outside : cid(c, r - 1));
            // West side: edge (c, r) north.
            if (!d.has({c, r, true})) dsu.unite(cid(c, r), c == 0 ? outside : cid(c - 1, r));
            // North / east boundary sides.
            if (r == H - 1 && !d.has({c, r + 1, false})) dsu.unite(cid(c, r), outside);
            if (c == W - 1 && !d.has({c + 1, r, true})) dsu.unite(cid(c, r), outside);
        }
    }

    FaceMap fm;
    fm.width = W;
    fm.height = H;
    fm.face_of.assign(W * H, -1);
    std::map<int, int> face_id;
    face_id[dsu.find(outside)] = 0;  // outer face is always id 0
    fm.outer_face = 0;
    int next = 1;
    for (int r = 0; r < H; ++r)
        for (int c = 0; c < W; ++c) {
            int root = dsu.find(cid(c, r));
            auto it = face_id.find(root);
            if (it == face_id.end()) it = face_id.emplace(root, next++).first;
            fm.face_of[cid(c, r)] = it->second;
        }
    fm.face_count = next;
    return fm;
}

std::vector<std::vector<Cell>> FaceMap::cells_by_face() const {
    std::vector<std::vector<Cell>> out(face_count);
    for (int r = 0; r < height; ++r)
        for (int c = 0; c < width; ++c) out[face_of[r * width + c]].push_back({c, r});
    return out;
}

std::string Violation::describe() const {
    std::ostringstream os;
    switch (kind) {
        case Kind::OddDegree:
            os << "odd degree at vertex (" << vertex.x << "," << vertex.y << ")";
            break;
        case Kind::CurveCount:
            os << "drawing decomposes into " << count << " closed curves, not 1";
            break;
        case Kind::FaceSiteCount:
            os << "bounded face containing cell (" << cell.c << "," << cell.r << ") has "
               << count << " sites, not 1";
            break;
        case Kind::OuterSite:
            os << "site (" << cell.c << "," << cell.r << ") lies in the outer face";
            break;
    }
    return os.str();
}

ValidateResult validate(const GridInstance& inst, const GridDrawing& d) {
    inst.check();
    EdgeIndex idx(inst.width, inst.height);
    for (const GridEdge& e : d.on_edges)
        if (!idx.valid(e)) throw std::invalid_argument("drawing edge outside grid");

    OddDegreeError odd;
    auto dec = decompose(inst, d, &odd);
    if (!dec) return {Violation{Violation::Kind::OddDegree, odd.vertex, 0, {}}};
    if (dec->curves.size() != 1)
        return {Violation{Violation::Kind::CurveCount, {}, int(dec->curves.size()), {}}};

    FaceMap fm = extract_faces(inst, d);
    std::vector<int> site_count(fm.face_count, 0);
    for (const Cell& s : inst.sites) site_count[fm.face(s)]++;

    // Bounded faces with site count != 1; the witness is the face's first
    // cell in row-major order.
    for (int r = 0; r < inst.height; ++r)
        for (int c = 0; c < inst.width; ++c) {
            int f = fm.face({c, r});
            if (f == fm.outer_face || site_count[f] == 1) continue;
            return {Violation{Violation::Kind::FaceSiteCount, {}, site_count[f], {c, r}}};
        }
    for (const Cell& s : inst.sites)
        if (fm.face(s) == fm.outer_face)
            return {Violation{Violation::Kind::OuterSite, {}, 0, s}};
    return {std::nullopt};
}

// --- independent brute-force validator ------------------------------------

namespace {

// Flood fill from one cell through off-edges; returns the region and whether
// it reaches the padded outside.
std::pair<std::vector<Cell>, bool> flood(const GridInstance& inst, const GridDrawing& d,
                                         Cell start, std::vector<char>& seen) {
    const int W = inst.width;
    std::vector<Cell> region;
    bool outside = false;
    std::queue<Cell> q;
    q.push(start);
    seen[start.r * W + start.c] = 1;
    while (!q.empty()) {
        Cell c = q.front();
        q.pop();
        region.push_back(c);
        struct Side {
            GridEdge e;
            int dc, dr;
        };
        Side sides[4] = {
            {{c.c, c.r, false}, 0, -1},      // south
            {{c.c, c.r + 1, false}, 0, 1},   // north
            {{c.c, c.r, true}, -1, 0},       // west
            {{c.c + 1, c.r, true}, 1, 0},    // east
        };
        for (const Side& s : sides) {
            if (d.has(s.e)) continue;
            Cell n{c.c + s.dc, c.r + s.dr};
            if (!inst.in_bounds(n)) {
                outside = true;
                continue;
            }
            if (!seen[n.r * W + n.c]) {
                seen[n.r * W + n.c] = 1;
                q.push(n);
            }
        }
    }
    return {region, outside};
}

}  // namespace

ValidateResult brute_validate(const GridInstance& inst, const GridDrawing& d) {
    // Degrees by direct recount.
    std::map<Vertex, std::vector<GridEdge>> at;
    for (const GridEdge& e : d.on_edges) {
        at[{e.x, e.y}].push_back(e);
        at[e.north ? Vertex{e.x, e.y + 1} : Vertex{e.x + 1, e.y}].push_back(e);
    }
    for (const auto& [v, es] : at)
        if (es.size() % 2 != 0) return {Violation{Violation::Kind::OddDegree, v, 0, {}}};

    // Count closed curves by walking with an explicit direction automaton.
    std::set<std::pair<GridEdge, int>> used;  // (edge, travel dir)
    int curves = 0;
    for (const GridEdge& e0 : d.on_edges) {
        for (int dir0 : e0.north ? std::vector<int>{N} : std::vector<int>{E}) {
            if (used.count({e0, dir0})) continue;
            curves++;
            Vertex v{e0.x, e0.y};
            int dir = dir0;
            while (true) {
                GridEdge e = step_edge(v, dir);
                if (used.count({e, dir})) break;
                used.insert({e, dir});
                // Traversing an edge uses it in both directions: each edge
                // belongs to one curve once.
                used.insert({e, (dir + 2) % 4});
                v = step_to(v, dir);
                auto& star = at[v];
                if (star.size() == 4) {
                    // straight
                } else {
                    for (int cand = 0; cand < 4; ++cand) {
                        if (cand == (dir + 2) % 4) continue;
                        if (d.has(step_edge(v, cand))) {
                            dir = cand;
                            break;
                        }
                    }
                }
            }
        }
    }
    if (curves != 1) return {Violation{Violation::Kind::CurveCount, {}, curves, {}}};

    // Faces by repeated BFS.
    std::vector<char> seen(inst.width * inst.height, 0);
    std::vector<std::pair<std::vector<Cell>, bool>> regions;
    for (int r = 0; r < inst.height; ++r)
        for (int c = 0; c < inst.width; ++c)
            if (!seen[r * inst.width + c]) regions.push_back(flood(inst, d, {c, r}, seen));

    std::vector<int> region_of(inst.width * inst.height, -1);
    for (std::size_t i = 0; i < regions.size(); ++i)
        for (const Cell& c : regions[i].first) region_of[c.r * inst.width + c.c] = int(i);
    std::vector<int> nsites(regions.size(), 0);
    for (const Cell& s : inst.sites) nsites[region_of[s.r * inst.width + s.c]]++;

    for (int r = 0; r < inst.height; ++r)
        for (int c = 0; c < inst.width; ++c) {
            std::size_t i = region_of[r * inst.width + c];
            if (regions[i].second) continue;  // touches outside => outer face
            if (nsites[i] != 1 && regions[i].first.front() == Cell{c, r})
                return {Violation{Violation::Kind::FaceSiteCount, {}, nsites[i], {c, r}}};
        }
    for (const Cell& s : inst.sites)
        if (regions[region_of[s.r * inst.width + s.c]].second)
            return {Violation{Violation::Kind::OuterSite, {}, 0, s}};
    return {std::nullopt};
}

}  // namespace sona
