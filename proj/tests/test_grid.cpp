#include "doctest.h"

#include <map>

#include "sona/grid.hpp"

using namespace sona;

namespace {

GridDrawing ring_around_cell(int c, int r) {
    GridDrawing d;
    d.on_edges.insert({c, r, false});
    d.on_edges.insert({c, r + 1, false});
    d.on_edges.insert({c, r, true});
    d.on_edges.insert({c + 1, r, true});
    return d;
}

GridDrawing figure_eight() {
    // Unit squares around cells (0,0) and (1,1), touching at vertex (1,1).
    GridDrawing d = ring_around_cell(0, 0);
    GridDrawing e = ring_around_cell(1, 1);
    d.on_edges.insert(e.on_edges.begin(), e.on_edges.end());
    return d;
}

}  // namespace

TEST_CASE("decompose: single square") {
    GridInstance inst{3, 3, {{1, 1}}};
    auto dec = decompose(inst, ring_around_cell(1, 1));
    REQUIRE(dec.has_value());
    CHECK(dec->curves.size() == 1);
    CHECK(dec->crossings.empty());
    CHECK(dec->curves[0].size() == 4);
}

TEST_CASE("decompose: figure eight splices at the shared corner") {
    GridInstance inst{3, 3, {}};
    auto dec = decompose(inst, figure_eight());
    REQUIRE(dec.has_value());
    // Hand traversal: the forced N-S / E-W pairing at (1,1) splices the two
    // squares into one closed curve with a single crossing.
    CHECK(dec->curves.size() == 1);
    CHECK(dec->curves[0].size() == 8);
    REQUIRE(dec->crossings.size() == 1);
    CHECK(dec->crossings[0] == Vertex{1, 1});
}

TEST_CASE("decompose: empty set and odd degree") {
    GridInstance inst{2, 2, {}};
    auto dec = decompose(inst, GridDrawing{});
    REQUIRE(dec.has_value());
    CHECK(dec->curves.empty());

    GridDrawing bad;
    bad.on_edges.insert({0, 0, false});
    OddDegreeError err;
    CHECK(!decompose(inst, bad, &err).has_value());
    CHECK(err.vertex == Vertex{0, 0});
}

TEST_CASE("decompose of a decomposition's edges is the identity") {
    GridInstance inst{4, 4, {}};
    GridDrawing d = figure_eight();
    auto ring = ring_around_cell(3, 3);
    d.on_edges.insert(ring.on_edges.begin(), ring.on_edges.end());
    auto dec = decompose(inst, d);
    REQUIRE(dec.has_value());
    GridDrawing rebuilt;
    std::size_t total = 0;
    for (const auto& curve : dec->curves) {
        total += curve.size();
        for (const GridEdge& e : curve) rebuilt.on_edges.insert(e);
    }
    CHECK(rebuilt.on_edges == d.on_edges);
    CHECK(total == d.on_edges.size());  // each edge in exactly one curve once
}

TEST_CASE("extract_faces: unit square in 3x3") {
    GridInstance inst{3, 3, {{1, 1}}};
    FaceMap fm = extract_faces(inst, ring_around_cell(1, 1));
    CHECK(fm.face_count == 2);
    auto cells = fm.cells_by_face();
    CHECK(cells[fm.outer_face].size() == 8);
    CHECK(cells[fm.face({1, 1})].size() == 1);
    CHECK(fm.face({1, 1}) != fm.outer_face);
}

TEST_CASE("extract_faces: empty drawing and figure eight") {
    GridInstance inst22{2, 2, {}};
    FaceMap fm = extract_faces(inst22, GridDrawing{});
    CHECK(fm.face_count == 1);
    CHECK(fm.face({0, 0}) == fm.outer_face);

    GridInstance inst33{3, 3, {}};
    FaceMap fm8 = extract_faces(inst33, figure_eight());
    CHECK(fm8.face_count == 3);
    CHECK(fm8.face({0, 0}) != fm8.outer_face);
    CHECK(fm8.face({1, 1}) != fm8.outer_face);
    CHECK(fm8.face({0, 0}) != fm8.face({1, 1}));
    CHECK(fm8.face({2, 0}) == fm8.outer_face);
}

TEST_CASE("validate: the three spec verdicts") {
    GridInstance one{3, 3, {{1, 1}}};
    CHECK(validate(one, ring_around_cell(1, 1)).valid());

    // Two horizontally adjacent sites enclosed by a 2x1 rectangle without the
    // separating edge: both sites share one face.
    GridInstance two{4, 3, {{1, 1}, {2, 1}}};
    GridDrawing rect;
    rect.on_edges.insert({1, 1, false});
    rect.on_edges.insert({2, 1, false});
    rect.on_edges.insert({1, 2, false});
    rect.on_edges.insert({2, 2, false});
    rect.on_edges.insert({1, 1, true});
    rect.on_edges.insert({3, 1, true});
    auto res = validate(two, rect);
    REQUIRE(!res.valid());
    CHECK(res.violation->kind == Violation::Kind::FaceSiteCount);
    CHECK(res.violation->count == 2);

    GridInstance far{4, 3, {{0, 0}, {3, 2}}};
    GridDrawing disjoint = ring_around_cell(0, 0);
    auto other = ring_around_cell(3, 2);
    disjoint.on_edges.insert(other.on_edges.begin(), other.on_edges.end());
    auto res2 = validate(far, disjoint);
    REQUIRE(!res2.valid());
    CHECK(res2.violation->kind == Violation::Kind::CurveCount);
    CHECK(res2.violation->count == 2);
}

TEST_CASE("euler characteristic holds on stored valid drawings") {
    // V - E + F = 2 with V the vertices of degree >= 2, F including the outer
    // face.
    auto euler = [](const GridInstance& inst, const GridDrawing& d) {
        std::map<Vertex, int> deg;
        for (const GridEdge& e : d.on_edges) {
            deg[{e.x, e.y}]++;
            deg[e.north ? Vertex{e.x, e.y + 1} : Vertex{e.x + 1, e.y}]++;
        }
        int V = 0;
        for (auto& [v, k] : deg)
            if (k >= 2) V++;
        int E = int(d.on_edges.size());
        int F = extract_faces(inst, d).face_count;
        return V - E + F;
    };
    GridInstance one{3, 3, {{1, 1}}};
    CHECK(euler(one, ring_around_cell(1, 1)) == 2);
    GridInstance f8{3, 3, {{0, 0}, {1, 1}}};
    REQUIRE(validate(f8, figure_eight()).valid());
    CHECK(euler(f8, figure_eight()) == 2);
}

TEST_CASE("drawing length is the on-edge count") {
    CHECK(drawing_length(ring_around_cell(0, 0)) == 4);
    CHECK(drawing_length(figure_eight()) == 8);
    CHECK(drawing_length(GridDrawing{}) == 0);
}

TEST_CASE("validate agrees with the brute-force validator on all drawings of small instances") {
    struct Fixture {
        GridInstance inst;
    };
    std::vector<GridInstance> fixtures = {
        {2, 2, {{0, 0}, {1, 1}}},
        {2, 2, {{0, 1}}},
        {3, 1, {{1, 0}}},
    };
    for (const auto& inst : fixtures) {
        EdgeIndex idx(inst.width, inst.height);
        const int ne = idx.count();
        REQUIRE(ne <= 16);
        std::uint32_t agree = 0, valid_count = 0;
        for (std::uint32_t mask = 0; mask < (1u << ne); ++mask) {
            GridDrawing d;
            for (int i = 0; i < ne; ++i)
                if (mask & (1u << i)) d.on_edges.insert(idx.edge(i));
            auto a = validate(inst, d);
            auto b = brute_validate(inst, d);
            bool same = a.valid() == b.valid() &&
                        (a.valid() || *a.violation == *b.violation);
            if (same) agree++;
            if (a.valid()) {
                valid_count++;
                // Condition 3: bounded faces biject with sites.
                FaceMap fm = extract_faces(inst, d);
                CHECK(fm.face_count - 1 == int(inst.sites.size()));
            }
            if (!same) {
                CAPTURE(mask);
                CHECK(same);
                break;
            }
        }
        CHECK(agree == (1u << ne));
        CHECK(valid_count > 0);
    }
}
