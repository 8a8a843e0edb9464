#include "doctest.h"

#include "sona/solve.hpp"

using namespace sona;

namespace {

// Reference enumerator: tries every edge subset.  Only usable when the
// instance has at most ~16 edges.
std::vector<GridDrawing> brute_all(const GridInstance& inst) {
    EdgeIndex idx(inst.width, inst.height);
    const int ne = idx.count();
    std::vector<GridDrawing> out;
    for (std::uint32_t mask = 0; mask < (1u << ne); ++mask) {
        GridDrawing d;
        for (int i = 0; i < ne; ++i)
            if (mask & (1u << i)) d.on_edges.insert(idx.edge(i));
        if (validate(inst, d).valid()) out.push_back(d);
    }
    return out;
}

}  // namespace

TEST_CASE("exists_sona finds the unit square for a single centered site") {
    GridInstance inst{3, 3, {{1, 1}}};
    auto res = exists_sona(inst);
    REQUIRE(res.status == SolveResult::Status::Found);
    CHECK(validate(inst, *res.drawing).valid());
}

TEST_CASE("exists_sona matches brute-force enumeration on small instances") {
    std::vector<GridInstance> fixtures = {
        {2, 2, {{0, 0}, {1, 1}}},
        {2, 2, {{0, 1}}},
        {3, 1, {{1, 0}}},
        {3, 1, {}},
        {2, 2, {{0, 0}, {0, 1}, {1, 0}, {1, 1}}},
    };
    for (const auto& inst : fixtures) {
        auto brute = brute_all(inst);
        auto res = exists_sona(inst);
        CAPTURE(inst.width);
        CAPTURE(inst.sites.size());
        CHECK((res.status == SolveResult::Status::Found) == !brute.empty());
        if (res.status == SolveResult::Status::Found)
            CHECK(validate(inst, *res.drawing).valid());
    }
}

TEST_CASE("exists_sona: sites scaled by three always admit a drawing") {
    // Scaled singleton and pair (cells at (3i+1, 3j+1)).
    GridInstance a{3, 3, {{1, 1}}};
    CHECK(exists_sona(a).status == SolveResult::Status::Found);

    GridInstance b{6, 3, {{1, 1}, {4, 1}}};
    auto res = exists_sona(b);
    REQUIRE(res.status == SolveResult::Status::Found);
    CHECK(validate(b, *res.drawing).valid());

    GridInstance c{6, 6, {{1, 1}, {4, 4}}};
    auto res2 = exists_sona(c);
    REQUIRE(res2.status == SolveResult::Status::Found);
    CHECK(validate(c, *res2.drawing).valid());
}

TEST_CASE("exists_sona respects boundary conditions") {
    GridInstance inst{3, 3, {{1, 1}}};
    BoundaryCondition bc;
    bc.force({1, 1, false}, false);  // forbid the square's south edge
    auto res = exists_sona(inst, bc);
    // Some other enclosure must be found; it may not use the forbidden edge.
    REQUIRE(res.status == SolveResult::Status::Found);
    CHECK(!res.drawing->has({1, 1, false}));
}

TEST_CASE("exists_sona: 2x2 block of four adjacent sites in a 4x4 grid (regression fixture)") {
    GridInstance inst{4, 4, {{1, 1}, {2, 1}, {1, 2}, {2, 2}}};
    auto res = exists_sona(inst);
    // Frozen from the exhaustive search the first time this ran: the four
    // forced separating edges meet at a crossing and the block admits a
    // valid single-curve completion.
    CHECK(res.status == SolveResult::Status::Found);
    if (res.status == SolveResult::Status::Found)
        CHECK(validate(inst, *res.drawing).valid());
}

TEST_CASE("search is reproducible") {
    GridInstance inst{3, 3, {{1, 1}}};
    auto r1 = exists_sona(inst);
    auto r2 = exists_sona(inst);
    CHECK(r1.stats.solutions_found == r2.stats.solutions_found);
    CHECK(r1.stats.nodes_expanded == r2.stats.nodes_expanded);
    CHECK(r1.drawing->on_edges == r2.drawing->on_edges);
}

TEST_CASE("min_length_sona: single site needs four edges") {
    GridInstance inst{3, 3, {{1, 1}}};
    auto res = min_length_sona(inst);
    REQUIRE(res.has_value());
    CHECK(res->second == 4);
}

TEST_CASE("min_length_sona: two adjacent sites") {
    // The spec sketch (2x1 rectangle plus the separating edge, 7 edges) is
    // not a closed curve: the separating edge's endpoints would have odd
    // degree.  Exhaustive search gives 16: a unit ring around one site nested
    // in a notched ring whose reflex corner crosses it.
    GridInstance inst{4, 3, {{1, 1}, {2, 1}}};
    auto res = min_length_sona(inst);
    REQUIRE(res.has_value());
    CHECK(validate(inst, res->first).valid());
    CHECK(res->second == 16);
}

TEST_CASE("min_length_sona: empty site set has no drawing") {
    GridInstance inst{2, 2, {}};
    CHECK(!min_length_sona(inst).has_value());
}

TEST_CASE("min_length_sona result is minimal against brute enumeration") {
    GridInstance inst{2, 2, {{0, 1}}};
    auto brute = brute_all(inst);
    REQUIRE(!brute.empty());
    std::size_t best = SIZE_MAX;
    for (const auto& d : brute) best = std::min(best, d.length());
    auto res = min_length_sona(inst);
    REQUIRE(res.has_value());
    CHECK(res->second == best);
}

TEST_CASE("hamiltonian_cycle oracle") {
    auto sq = hamiltonian_cycle({{0, 0}, {1, 0}, {0, 1}, {1, 1}});
    REQUIRE(sq.has_value());
    CHECK(sq->size() == 4);

    auto rect = hamiltonian_cycle({{0, 0}, {1, 0}, {2, 0}, {0, 1}, {1, 1}, {2, 1}});
    REQUIRE(rect.has_value());
    CHECK(rect->size() == 6);

    CHECK(!hamiltonian_cycle({{0, 0}, {1, 0}, {2, 0}}).has_value());
}

TEST_CASE("all_sona enumerates deterministically") {
    GridInstance inst{3, 3, {{1, 1}}};
    auto a = all_sona(inst, {}, 50);
    auto b = all_sona(inst, {}, 50);
    REQUIRE(a.size() == b.size());
    CHECK(a.size() >= 1);
    for (std::size_t i = 0; i < a.size(); ++i) CHECK(a[i].on_edges == b[i].on_edges);
}
