#pragma once

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <map>
#include <optional>
#include <vector>

#include "sona/grid.hpp"

namespace sona {

// Partial assignment of edge states imposed on a search (gadget skeletons,
// window margins).  Inconsistent constraints make the search return None.
struct BoundaryCondition {
    std::map<GridEdge, bool> fixed;

    void force(GridEdge e, bool on) {
        auto [it, fresh] = fixed.emplace(e, on);
        if (!fresh && it->second != on)
            throw std::invalid_argument("boundary condition fixes an edge both on and off");
    }
};

struct SearchStats {
    std::uint64_t nodes_expanded = 0;
    std::uint64_t solutions_found = 0;
    double wall_time_s = 0.0;
};

struct SolveResult {
    enum class Status { Found, None, BudgetExceeded };
    Status status = Status::None;
    std::optional<GridDrawing> drawing;
    SearchStats stats;
};

inline constexpr std::uint64_t kDefaultNodeBudget = 100'000'000;

// Exhaustive search for a valid grid sona drawing respecting bc.
// Found implies validate(inst, drawing) passes; None is an exhaustive
// refutation under bc; BudgetExceeded carries the stats so far.
SolveResult exists_sona(const GridInstance& inst, const BoundaryCondition& bc = {},
                        std::uint64_t node_budget = kDefaultNodeBudget);

// Enumerates valid drawings (up to max_solutions) in deterministic order.
std::vector<GridDrawing> all_sona(const GridInstance& inst, const BoundaryCondition& bc,
                                  std::size_t max_solutions,
                                  std::uint64_t node_budget = kDefaultNodeBudget);

// Minimum-edge-count drawing by branch and bound, or nullopt if none exists.
// Throws std::length_error when the instance leaves too many free edges.
std::optional<std::pair<GridDrawing, std::size_t>> min_length_sona(
    const GridInstance& inst, std::uint64_t node_budget = kDefaultNodeBudget);

// Hamiltonian cycle through every lattice point along unit grid edges.
// Returns the cyclic vertex order, or nullopt after exhaustive refutation.
// Desk-scale oracle (intended for |points| <= ~24).
std::optional<std::vector<Cell>> hamiltonian_cycle(const std::vector<Cell>& points);

// --- shared propagation engine (used by the solver and gadget windows) -----

// Locally consistent assignment search over the edges of a W x H cell
// rectangle.  Window mode relaxes the rules that need global knowledge:
// boundary-vertex parity is unchecked, regions reaching the rectangle border
// are exempt from the empty-face and outer-site rules, and leaves are not
// required to form a single closed curve.
class EdgeSearch {
  public:
    struct Options {
        bool window_mode = false;
        std::uint64_t node_budget = kDefaultNodeBudget;
    };

    EdgeSearch(const GridInstance& inst, Options opt);

    // Returns false on immediate contradiction.
    bool force(GridEdge e, bool on);
    bool force_adjacent_site_edges();

    // Branch-and-bound cap: branches using more than this many ON edges are
    // cut.  May be tightened from an on_leaf callback.
    void set_max_on(std::size_t cap) { max_on_ = cap; }

    // Runs the DFS.  on_leaf receives each complete consistent assignment;
    // returning false stops the search early.
    void run(const std::function<bool(const GridDrawing&)>& on_leaf);

    GridDrawing current_drawing() const;
    const SearchStats& stats() const { return stats_; }
    bool contradicted() const { return contradiction_; }
    bool budget_exceeded() const { return budget_exceeded_; }
    std::size_t unknown_edges() const;

  private:
    enum : std::int8_t { UNKNOWN = -1, OFF = 0, ON = 1 };

    struct TrailOp {
        enum Kind : std::uint8_t { EdgeSet, DsuUnion, OpenBdry } kind;
        std::int32_t a = 0, b = 0, c = 0;
    };

    int vid(int x, int y) const { return y * (W_ + 1) + x; }
    int cell_id(int c, int r) const { return r * W_ + c; }
    int side_id(GridEdge e, bool left_or_below) const;

    int find(int a) const;
    bool unite(int a, int b);          // false on fatal region rule
    bool set_edge(int id, bool on);    // propagating assignment
    bool check_region(int root);
    bool propagate();
    void undo_to(std::size_t mark);
    bool dfs(const std::function<bool(const GridDrawing&)>& on_leaf, bool& stopped);

    const GridInstance& inst_;
    Options opt_;
    int W_, H_;
    EdgeIndex idx_;
    int outer_;  // DSU element for the padded outside (instance mode)

    std::vector<std::int8_t> st_;
    std::vector<std::int8_t> on_cnt_, unk_cnt_;
    std::vector<std::int8_t> vdeg_cap_;  // number of in-grid incident edges
    mutable std::vector<std::int32_t> par_;
    std::vector<std::int32_t> sz_, nsite_, open_unk_;
    std::vector<std::uint8_t> open_bdry_;
    std::vector<std::pair<int, int>> edge_vertices_;

    std::vector<TrailOp> trail_;
    std::vector<int> force_queue_;
    SearchStats stats_;
    std::size_t max_on_ = SIZE_MAX;
    std::size_t on_used_ = 0;
    bool contradiction_ = false;
    bool budget_exceeded_ = false;
};

}  // namespace sona
