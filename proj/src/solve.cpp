#include "sona/solve.hpp"

#include <algorithm>
#include <chrono>
#include <stdexcept>

namespace sona {

EdgeSearch::EdgeSearch(const GridInstance& inst, Options opt)
    : inst_(inst), opt_(opt), W_(inst.width), H_(inst.height), idx_(inst.width, inst.height) {
    const int ne = idx_.count();
    const int nv = (W_ + 1) * (H_ + 1);
    st_.assign(ne, UNKNOWN);
    on_cnt_.assign(nv, 0);
    unk_cnt_.assign(nv, 0);
    vdeg_cap_.assign(nv, 0);
    edge_vertices_.resize(ne);
    for (int id = 0; id < ne; ++id) {
        GridEdge e = idx_.edge(id);
        int a = vid(e.x, e.y);
        int b = e.north ? vid(e.x, e.y + 1) : vid(e.x + 1, e.y);
        edge_vertices_[id] = {a, b};
        unk_cnt_[a]++;
        unk_cnt_[b]++;
        vdeg_cap_[a]++;
        vdeg_cap_[b]++;
    }

    outer_ = W_ * H_;
    const int nregions = W_ * H_ + 1;
    par_.resize(nregions);
    for (int i = 0; i < nregions; ++i) par_[i] = i;
    sz_.assign(nregions, 1);
    nsite_.assign(nregions, 0);
    open_unk_.assign(nregions, 0);
    open_bdry_.assign(nregions, 0);
    for (const Cell& s : inst.sites) nsite_[cell_id(s.c, s.r)]++;
    for (int id = 0; id < ne; ++id) {
        int lo = side_id(idx_.edge(id), true);
        int hi = side_id(idx_.edge(id), false);
        if (lo >= 0) open_unk_[lo]++;
        if (hi >= 0) open_unk_[hi]++;
    }
}

// Side cells of an edge: below/above for horizontal, left/right for vertical.
// Out-of-grid sides map to the outer sentinel (instance mode) or -1 (window
// mode: the unknown world past the window border).
int EdgeSearch::side_id(GridEdge e, bool first) const {
    int c, r;
    if (!e.north) {
        c = e.x;
        r = first ? e.y - 1 : e.y;
    } else {
        c = first ? e.x - 1 : e.x;
        r = e.y;
    }
    if (c < 0 || c >= W_ || r < 0 || r >= H_) return opt_.window_mode ? -1 : outer_;
    return cell_id(c, r);
}

int EdgeSearch::find(int a) const {
    while (par_[a] != a) a = par_[a];
    return a;
}

bool EdgeSearch::check_region(int root) {
    root = find(root);
    if (nsite_[root] >= 2) return false;  // two sites share a face
    bool is_outer = !opt_.window_mode && root == find(outer_);
    if (is_outer && nsite_[root] > 0) return false;  // site in the outer face
    if (open_unk_[root] == 0 && nsite_[root] == 0 && !is_outer && !open_bdry_[root])
        return false;  // sealed empty face
    return true;
}

bool EdgeSearch::unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return check_region(a);
    if (sz_[a] > sz_[b]) std::swap(a, b);
    trail_.push_back({TrailOp::DsuUnion, a, b, open_bdry_[b]});
    par_[a] = b;
    sz_[b] += sz_[a];
    nsite_[b] += nsite_[a];
    open_unk_[b] += open_unk_[a];
    open_bdry_[b] = open_bdry_[b] | open_bdry_[a];
    return check_region(b);
}

bool EdgeSearch::set_edge(int id, bool on) {
    if (st_[id] != UNKNOWN) return st_[id] == (on ? ON : OFF);
    if (on && on_used_ + 1 > max_on_) return false;
    st_[id] = on ? ON : OFF;
    if (on) on_used_++;
    trail_.push_back({TrailOp::EdgeSet, id, on ? 1 : 0, 0});

    auto [va, vb] = edge_vertices_[id];
    unk_cnt_[va]--;
    unk_cnt_[vb]--;
    if (on) {
        on_cnt_[va]++;
        on_cnt_[vb]++;
    }
    force_queue_.push_back(va);
    force_queue_.push_back(vb);

    GridEdge e = idx_.edge(id);
    int lo = side_id(e, true);
    int hi = side_id(e, false);
    for (int side : {lo, hi}) {
        if (side >= 0) {
            open_unk_[find(side)]--;
        }
    }
    if (!on) {
        if (lo >= 0 && hi >= 0) {
            if (!unite(lo, hi)) return false;
        } else {
            int in = lo >= 0 ? lo : hi;
            if (in >= 0) {
                int root = find(in);
                if (!open_bdry_[root]) {
                    trail_.push_back({TrailOp::OpenBdry, root, open_bdry_[root], 0});
                    open_bdry_[root] = 1;
                }
                if (!check_region(root)) return false;
            }
        }
    } else {
        // An ON edge may seal a region by consuming its last unknown boundary.
        for (int side : {lo, hi})
            if (side >= 0 && !check_region(side)) return false;
    }
    return true;
}

bool EdgeSearch::propagate() {
    while (!force_queue_.empty()) {
        int v = force_queue_.back();
        force_queue_.pop_back();
        int x = v % (W_ + 1), y = v / (W_ + 1);
        if (opt_.window_mode && (x == 0 || x == W_ || y == 0 || y == H_))
            continue;  // loose ends allowed on the window border
        if (unk_cnt_[v] == 0) {
            if (on_cnt_[v] % 2 != 0) return false;
            continue;
        }
        if (unk_cnt_[v] == 1) {
            // Exactly one undecided incident edge: parity fixes it.
            for (GridEdge e : idx_.incident({x, y})) {
                int id = idx_.id(e);
                if (st_[id] == UNKNOWN) {
                    if (!set_edge(id, on_cnt_[v] % 2 != 0)) return false;
                    break;
                }
            }
        }
    }
    return true;
}

bool EdgeSearch::force(GridEdge e, bool on) {
    if (contradiction_) return false;
    if (!idx_.valid(e)) throw std::invalid_argument("forced edge outside grid");
    if (!set_edge(idx_.id(e), on) || !propagate()) {
        contradiction_ = true;
        return false;
    }
    return true;
}

bool EdgeSearch::force_adjacent_site_edges() {
    for (const Cell& s : inst_.sites) {
        if (inst_.has_site({s.c + 1, s.r}))
            if (!force({s.c + 1, s.r, true}, true)) return false;
        if (inst_.has_site({s.c, s.r + 1}))
            if (!force({s.c, s.r + 1, false}, true)) return false;
    }
    return true;
}

void EdgeSearch::undo_to(std::size_t mark) {
    while (trail_.size() > mark) {
        TrailOp op = trail_.back();
        trail_.pop_back();
        switch (op.kind) {
            case TrailOp::EdgeSet: {
                int id = op.a;
                bool on = op.b != 0;
                st_[id] = UNKNOWN;
                if (on) on_used_--;
                auto [va, vb] = edge_vertices_[id];
                unk_cnt_[va]++;
                unk_cnt_[vb]++;
                if (on) {
                    on_cnt_[va]--;
                    on_cnt_[vb]--;
                }
                GridEdge e = idx_.edge(id);
                for (int side : {side_id(e, true), side_id(e, false)})
                    if (side >= 0) open_unk_[find(side)]++;
                break;
            }
            case TrailOp::DsuUnion: {
                int a = op.a, b = op.b;
                par_[a] = a;
                sz_[b] -= sz_[a];
                nsite_[b] -= nsite_[a];
                open_unk_[b] -= open_unk_[a];
                open_bdry_[b] = std::uint8_t(op.c);
                break;
            }
            case TrailOp::OpenBdry:
                open_bdry_[op.a] = std::uint8_t(op.b);
                break;
        }
    }
    force_queue_.clear();
}

GridDrawing EdgeSearch::current_drawing() const {
    GridDrawing d;
    for (int id = 0; id < int(st_.size()); ++id)
        if (st_[id] == ON) d.on_edges.insert(idx_.edge(id));
    return d;
}

bool EdgeSearch::dfs(const std::function<bool(const GridDrawing&)>& on_leaf, bool& stopped) {
    int branch = -1;
    for (int id = 0; id < int(st_.size()); ++id)
        if (st_[id] == UNKNOWN) {
            branch = id;
            break;
        }
    if (branch < 0) {
        GridDrawing d = current_drawing();
        if (!opt_.window_mode) {
            if (!validate(inst_, d).valid()) return true;  // dead leaf, keep going
        }
        stats_.solutions_found++;
        if (!on_leaf(d)) {
            stopped = true;
            return false;
        }
        return true;
    }
    for (bool value : {false, true}) {
        if (++stats_.nodes_expanded > opt_.node_budget) {
            budget_exceeded_ = true;
            stopped = true;
            return false;
        }
        std::size_t mark = trail_.size();
        if (set_edge(branch, value) && propagate()) {
            if (!dfs(on_leaf, stopped)) {
                undo_to(mark);
                return false;
            }
        }
        undo_to(mark);
    }
    return true;
}

void EdgeSearch::run(const std::function<bool(const GridDrawing&)>& on_leaf) {
    auto t0 = std::chrono::steady_clock::now();
    bool stopped = false;
    if (!contradiction_ && propagate()) dfs(on_leaf, stopped);
    stats_.wall_time_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::size_t EdgeSearch::unknown_edges() const {
    std::size_t n = 0;
    for (std::int8_t s : st_)
        if (s == UNKNOWN) n++;
    return n;
}

// --- public operations ------------------------------------------------------

SolveResult exists_sona(const GridInstance& inst, const BoundaryCondition& bc,
                        std::uint64_t node_budget) {
    inst.check();
    EdgeSearch::Options opt;
    opt.node_budget = node_budget;
    EdgeSearch search(inst, opt);
    bool ok = search.force_adjacent_site_edges();
    for (const auto& [e, on] : bc.fixed)
        ok = ok && search.force(e, on);

    SolveResult res;
    if (!ok) {
        res.status = SolveResult::Status::None;
        res.stats = search.stats();
        return res;
    }
    std::optional<GridDrawing> found;
    search.run([&](const GridDrawing& d) {
        found = d;
        return false;  // stop at first
    });
    res.stats = search.stats();
    if (found) {
        res.status = SolveResult::Status::Found;
        res.drawing = std::move(found);
    } else {
        res.status = search.budget_exceeded() ? SolveResult::Status::BudgetExceeded
                                              : SolveResult::Status::None;
    }
    return res;
}

std::vector<GridDrawing> all_sona(const GridInstance& inst, const BoundaryCondition& bc,
                                  std::size_t max_solutions, std::uint64_t node_budget) {
    inst.check();
    EdgeSearch::Options opt;
    opt.node_budget = node_budget;
    EdgeSearch search(inst, opt);
    bool ok = search.force_adjacent_site_edges();
    for (const auto& [e, on] : bc.fixed) ok = ok && search.force(e, on);
    std::vector<GridDrawing> out;
    if (!ok) return out;
    search.run([&](const GridDrawing& d) {
        out.push_back(d);
        return out.size() < max_solutions;
    });
    return out;
}

std::optional<std::pair<GridDrawing, std::size_t>> min_length_sona(const GridInstance& inst,
                                                                   std::uint64_t node_budget) {
    inst.check();
    EdgeSearch::Options opt;
    opt.node_budget = node_budget;
    EdgeSearch search(inst, opt);
    if (!search.force_adjacent_site_edges()) return std::nullopt;
    if (search.unknown_edges() > 64)
        throw std::length_error("min_length_sona: instance leaves too many free edges");

    std::optional<GridDrawing> best;
    search.run([&](const GridDrawing& d) {
        if (!best || d.length() < best->length()) {
            best = d;
            search.set_max_on(d.length() - 1);  // only strictly shorter from here
        }
        return true;
    });
    if (search.budget_exceeded())
        throw std::length_error("min_length_sona: node budget exhausted");
    if (!best) return std::nullopt;
    return std::make_pair(*best, best->length());
}

std::optional<std::vector<Cell>> hamiltonian_cycle(const std::vector<Cell>& points) {
    const std::size_t n = points.size();
    if (n == 0) return std::nullopt;
    if (n == 1) return std::nullopt;  // a cycle needs at least 4 grid points
    std::vector<Cell> pts = points;
    std::sort(pts.begin(), pts.end());

    std::vector<std::vector<int>> adj(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (i == j) continue;
            int dc = std::abs(pts[i].c - pts[j].c), dr = std::abs(pts[i].r - pts[j].r);
            if (dc + dr == 1) adj[i].push_back(int(j));
        }
    for (const auto& a : adj)
        if (a.size() < 2) return std::nullopt;

    std::vector<int> path{0};
    std::vector<char> used(n, 0);
    used[0] = 1;

    std::function<bool()> go = [&]() -> bool {
        if (path.size() == n)
            return std::find(adj[path.back()].begin(), adj[path.back()].end(), 0) !=
                   adj[path.back()].end();
        for (int nx : adj[path.back()]) {
            if (used[nx]) continue;
            // Degree prune: an unused vertex with no remaining free neighbor
            // (other than the path ends) is a dead end.
            used[nx] = 1;
            path.push_back(nx);
            if (go()) return true;
            path.pop_back();
            used[nx] = 0;
        }
        return false;
    };
    if (!go()) return std::nullopt;
    std::vector<Cell> cycle;
    cycle.reserve(n);
    for (int i : path) cycle.push_back(pts[i]);
    return cycle;
}

}  // namespace sona
