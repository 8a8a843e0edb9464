#include "sona/arrangement.hpp"

#include <algorithm>
#include <map>

#include "sona/geom.hpp"

namespace sona {

namespace {

struct Dir {
    Rat x, y;
};

int half_plane(const Dir& d) {
    if (d.y < 0) return 1;
    if (d.y == 0 && d.x < 0) return 1;
    return 0;
}

// CCW order starting from the +x axis; equal directions compare equal.
int dir_compare(const Dir& a, const Dir& b) {
    int ha = half_plane(a), hb = half_plane(b);
    if (ha != hb) return ha < hb ? -1 : 1;
    Rat cr = a.x * b.y - a.y * b.x;
    if (cr > 0) return -1;
    if (cr < 0) return 1;
    return 0;
}

}  // namespace

double rat_curve_length(const Metric& m, const RatCurve& curve) {
    double len = 0.0;
    for (std::size_t i = 0; i < curve.size(); ++i) {
        const RatPt& a = curve[i];
        const RatPt& b = curve[(i + 1) % curve.size()];
        len += distance(m, to_vec2(a), to_vec2(b));
    }
    return len;
}

CurveCheck validate_curve(const std::vector<RatPt>& sites, const RatCurve& curve) {
    CurveCheck out;
    const std::size_t n = curve.size();
    if (n < 3) {
        out.reason = "closed curve needs at least 3 vertices";
        return out;
    }
    for (std::size_t i = 0; i < n; ++i)
        if (curve[i] == curve[(i + 1) % n]) {
            out.reason = "zero-length segment";
            return out;
        }

    // Pairwise exact intersections; collect cut points per segment.
    std::vector<std::vector<RatPt>> cuts(n);
    for (std::size_t i = 0; i < n; ++i) {
        cuts[i].push_back(curve[i]);
        cuts[i].push_back(curve[(i + 1) % n]);
    }
    for (std::size_t i = 0; i < n; ++i) {
        const RatPt &a = curve[i], &b = curve[(i + 1) % n];
        for (std::size_t j = i + 1; j < n; ++j) {
            const RatPt &c = curve[j], &d = curve[(j + 1) % n];
            auto ix = intersect_segments(a, b, c, d);
            if (ix.kind == SegIntersection::Kind::Overlap) {
                out.reason = "curve touches itself along a segment";
                return out;
            }
            if (ix.kind == SegIntersection::Kind::Point) {
                cuts[i].push_back(ix.point);
                cuts[j].push_back(ix.point);
            }
        }
    }

    // Vertex ids and the closed walk in curve order.
    std::map<RatPt, int> vid;
    std::vector<RatPt> pts;
    auto intern = [&](const RatPt& p) {
        auto [it, fresh] = vid.emplace(p, int(pts.size()));
        if (fresh) pts.push_back(p);
        return it->second;
    };

    std::vector<int> walk;
    for (std::size_t i = 0; i < n; ++i) {
        const RatPt &a = curve[i], &b = curve[(i + 1) % n];
        auto& cp = cuts[i];
        // Sort along the segment by the (rational) projection parameter.
        Rat dx = b.x - a.x, dy = b.y - a.y;
        std::sort(cp.begin(), cp.end(), [&](const RatPt& p, const RatPt& q) {
            Rat tp = (p.x - a.x) * dx + (p.y - a.y) * dy;
            Rat tq = (q.x - a.x) * dx + (q.y - a.y) * dy;
            return tp < tq;
        });
        cp.erase(std::unique(cp.begin(), cp.end()), cp.end());
        // Emit every cut except the segment's end (the next segment adds it).
        for (std::size_t t = 0; t + 1 < cp.size(); ++t) walk.push_back(intern(cp[t]));
    }
    const std::size_t M = walk.size();

    // Undirected sub-edges; each must occur exactly once.
    std::map<std::pair<int, int>, int> edge_id;
    std::vector<std::pair<int, int>> edges;
    for (std::size_t i = 0; i < M; ++i) {
        int u = walk[i], v = walk[(i + 1) % M];
        auto key = std::minmax(u, v);
        if (edge_id.count({key.first, key.second})) {
            out.reason = "curve retraces a segment";
            return out;
        }
        edge_id[{key.first, key.second}] = int(edges.size());
        edges.push_back({u, v});
    }

    // Passes per vertex, with incident walk positions.
    std::vector<std::vector<std::size_t>> passes(pts.size());
    for (std::size_t i = 0; i < M; ++i) passes[walk[i]].push_back(i);

    auto dart_dir = [&](int from, int to) {
        return Dir{pts[to].x - pts[from].x, pts[to].y - pts[from].y};
    };

    for (std::size_t v = 0; v < pts.size(); ++v) {
        if (passes[v].size() == 1) continue;
        if (passes[v].size() > 2) {
            out.reason = "more than two arcs meet at a point";
            return out;
        }
        // Two passes: the four darts must alternate around the vertex.
        struct D {
            Dir dir;
            int pass;
        };
        std::vector<D> darts;
        for (int p = 0; p < 2; ++p) {
            std::size_t i = passes[v][p];
            int prev = walk[(i + M - 1) % M];
            int next = walk[(i + 1) % M];
            darts.push_back({dart_dir(int(v), prev), p});
            darts.push_back({dart_dir(int(v), next), p});
        }
        for (int a = 0; a < 4; ++a)
            for (int b = a + 1; b < 4; ++b)
                if (dir_compare(darts[a].dir, darts[b].dir) == 0) {
                    out.reason = "tangential self-contact";
                    return out;
                }
        std::sort(darts.begin(), darts.end(),
                  [](const D& a, const D& b) { return dir_compare(a.dir, b.dir) < 0; });
        if (darts[0].pass == darts[1].pass || darts[1].pass == darts[2].pass) {
            out.reason = "self-touch without crossing";
            return out;
        }
        out.crossings++;
    }

    // Rotation system and face orbits.
    const int E = int(edges.size());
    // dart 2e = (u -> v), dart 2e+1 = (v -> u)
    auto dart_from = [&](int d) { return d % 2 == 0 ? edges[d / 2].first : edges[d / 2].second; };
    auto dart_to = [&](int d) { return d % 2 == 0 ? edges[d / 2].second : edges[d / 2].first; };
    std::vector<std::vector<int>> rot(pts.size());
    for (int d = 0; d < 2 * E; ++d) rot[dart_from(d)].push_back(d);
    for (auto& r : rot)
        std::sort(r.begin(), r.end(), [&](int a, int b) {
            return dir_compare(dart_dir(dart_from(a), dart_to(a)),
                               dart_dir(dart_from(b), dart_to(b))) < 0;
        });
    std::vector<int> rot_pos(2 * E);
    for (const auto& r : rot)
        for (std::size_t i = 0; i < r.size(); ++i) rot_pos[r[i]] = int(i);

    auto face_succ = [&](int d) {
        int t = d ^ 1;  // twin
        const auto& r = rot[dart_from(t)];
        return r[(rot_pos[t] + r.size() - 1) % r.size()];
    };

    std::vector<int> face_of(2 * E, -1);
    std::vector<std::vector<int>> face_walks;  // vertex sequences
    std::vector<Rat> face_area2;               // twice the signed area
    for (int d0 = 0; d0 < 2 * E; ++d0) {
        if (face_of[d0] >= 0) continue;
        int f = int(face_walks.size());
        std::vector<int> verts;
        Rat area2 = 0;
        int d = d0;
        do {
            face_of[d] = f;
            int u = dart_from(d), v = dart_to(d);
            verts.push_back(u);
            area2 += pts[u].x * pts[v].y - pts[v].x * pts[u].y;
            d = face_succ(d);
        } while (d != d0);
        face_walks.push_back(std::move(verts));
        face_area2.push_back(area2);
    }

    int outer = -1;
    for (std::size_t f = 0; f < face_walks.size(); ++f)
        if (face_area2[f] < 0) {
            if (outer >= 0) {
                out.reason = "disconnected arrangement";
                return out;
            }
            outer = int(f);
        }
    if (outer < 0) {
        out.reason = "no outer face found";
        return out;
    }
    out.bounded_faces = int(face_walks.size()) - 1;

    if (out.bounded_faces != int(sites.size())) {
        out.reason = "bounded face count " + std::to_string(out.bounded_faces) +
                     " differs from site count " + std::to_string(sites.size());
        return out;
    }

    // No site on the curve.
    for (const RatPt& s : sites)
        for (const auto& [u, v] : edges)
            if (on_segment(pts[u], pts[v], s)) {
                out.reason = "site lies on the curve";
                return out;
            }

    // Winding of every bounded face walk around every site.
    std::vector<int> sites_in_face(face_walks.size(), 0);
    for (const RatPt& s : sites) {
        int home = -1;
        for (std::size_t f = 0; f < face_walks.size(); ++f) {
            if (int(f) == outer) continue;
            const auto& w = face_walks[f];
            long wind = 0;
            for (std::size_t i = 0; i < w.size(); ++i) {
                const RatPt& a = pts[w[i]];
                const RatPt& b = pts[w[(i + 1) % w.size()]];
                if (a.y <= s.y) {
                    if (b.y > s.y && orient(a, b, s) > 0) wind++;
                } else {
                    if (b.y <= s.y && orient(a, b, s) < 0) wind--;
                }
            }
            if (wind != 0) {
                if (home >= 0) {
                    out.reason = "site claimed by two faces";
                    return out;
                }
                home = int(f);
            }
        }
        if (home < 0) {
            out.reason = "site lies in the outer face";
            return out;
        }
        sites_in_face[home]++;
    }
    for (std::size_t f = 0; f < face_walks.size(); ++f) {
        if (int(f) == outer) continue;
        if (sites_in_face[f] != 1) {
            out.reason = "bounded face with " + std::to_string(sites_in_face[f]) + " sites";
            return out;
        }
    }

    out.valid = true;
    return out;
}

}  // namespace sona
