#include "legendrian/disks.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <optional>

namespace legendrian {

namespace {

constexpr long long kNodeLimit = 80'000'000;  // runaway-search guard

struct ArcTraversal {
    bool blocked = false;  // some left region is unbounded
    std::vector<std::pair<int, int>> atom_dirs;  // (atom, fwd?)
};

struct WalkContext {
    const LagrangianDiagram* d;
    int a;                  // positive-corner crossing
    Quadrant q;             // positive quadrant
    int close_end;          // arrival end that closes the disk
    int budget;
    std::vector<std::array<ArcTraversal, 2>> trav;  // per arc, per from_side
    std::vector<int> dist;  // shortest arc-steps from arrival state to close
    long long nodes = 0;
    std::vector<BoundaryStep> steps;
    std::vector<AdmissibleDisk> out;
};

int state_id(int crossing, int end) { return crossing * 4 + end; }

// legality of a mid-walk corner at arrival (c, e)
bool corner_ok(const LagrangianDiagram& d, int c, int e, Quadrant* q_out) {
    int dep = cw_next(e);
    Quadrant q = quadrant_after(dep);
    const Crossing& cr = d.crossings()[c];
    if (cr.quad_positive(q)) return false;
    if (cr.quad_region[static_cast<int>(q)] == d.unbounded_region()) return false;
    if (q_out) *q_out = q;
    return true;
}

std::optional<AdmissibleDisk> certify(const LagrangianDiagram& d, int a, Quadrant q,
                                      const std::vector<BoundaryStep>& steps,
                                      const std::vector<std::array<ArcTraversal, 2>>& trav) {
    int natoms = static_cast<int>(d.atoms().size());
    std::vector<int> cnt_fwd(natoms, 0), cnt_bwd(natoms, 0);
    for (const auto& st : steps)
        for (auto [atom, fwd] : trav[st.arc][st.from_side].atom_dirs) (fwd ? cnt_fwd : cnt_bwd)[atom]++;

    // corner counts per crossing/quadrant, including the positive corner
    std::map<std::pair<int, int>, int> corners;
    corners[{a, static_cast<int>(q)}]++;
    for (const auto& st : steps)
        if (st.corner_crossing >= 0) corners[{st.corner_crossing, static_cast<int>(st.corner_quad)}]++;

    // solve region multiplicities: n(left) - n(right) = net traversals
    int nreg = d.num_regions();
    std::vector<std::vector<std::pair<int, int>>> adj(nreg);  // (other, my value - other value)
    for (int atom = 0; atom < natoms; ++atom) {
        const ArcAtom& at = d.atoms()[atom];
        int delta = cnt_fwd[atom] - cnt_bwd[atom];
        adj[at.region_left_fwd].push_back({at.region_left_bwd, delta});
        adj[at.region_left_bwd].push_back({at.region_left_fwd, -delta});
    }
    std::vector<int> n(nreg, std::numeric_limits<int>::min());
    std::deque<int> queue{d.unbounded_region()};
    n[d.unbounded_region()] = 0;
    while (!queue.empty()) {
        int r = queue.front();
        queue.pop_front();
        for (auto [s, delta] : adj[r]) {
            int want = n[r] - delta;  // n[r] - n[s] = delta
            if (n[s] == std::numeric_limits<int>::min()) {
                n[s] = want;
                queue.push_back(s);
            } else if (n[s] != want) {
                return std::nullopt;
            }
        }
    }
    for (int r = 0; r < nreg; ++r)
        if (n[r] == std::numeric_limits<int>::min() || n[r] < 0) return std::nullopt;

    // convex-corner consistency at every crossing
    for (int c = 0; c < d.num_crossings(); ++c) {
        const Crossing& cr = d.crossings()[c];
        auto nq = [&](Quadrant x) { return n[cr.quad_region[static_cast<int>(x)]]; };
        auto cq = [&](Quadrant x) {
            auto it = corners.find({c, static_cast<int>(x)});
            return it == corners.end() ? 0 : it->second;
        };
        if (nq(Quadrant::E) + nq(Quadrant::W) - nq(Quadrant::N) - nq(Quadrant::S) !=
            cq(Quadrant::E) + cq(Quadrant::W) - cq(Quadrant::N) - cq(Quadrant::S))
            return std::nullopt;
    }

    AdmissibleDisk disk;
    disk.pos_crossing = a;
    disk.pos_quadrant = q;
    disk.boundary = steps;
    disk.coord_lo = 1e18;
    disk.coord_hi = -1e18;
    for (const auto& st : steps) {
        disk.neg_corners.reserve(steps.size());
        if (st.corner_crossing >= 0) disk.neg_corners.push_back(st.corner_crossing);
        const Arc& arc = d.arcs()[st.arc];
        disk.coord_lo = std::min(disk.coord_lo, arc.coord_lo);
        disk.coord_hi = std::max(disk.coord_hi, arc.coord_hi);
        for (auto [atom, fwd] : trav[st.arc][st.from_side].atom_dirs) {
            const ArcAtom& at = d.atoms()[atom];
            if (at.has_basepoint) disk.t_exponent += (fwd == at.knot_east) ? 1 : -1;
        }
    }
    for (int r = 0; r < nreg; ++r)
        if (n[r] > 0) {
            disk.region_mult[r] = n[r];
            disk.coord_lo = std::min(disk.coord_lo, d.regions()[r].coord_lo);
            disk.coord_hi = std::max(disk.coord_hi, d.regions()[r].coord_hi);
        }
    return disk;
}

void dfs(WalkContext& ctx, int crossing, int arr_end) {
    const LagrangianDiagram& d = *ctx.d;
    if (++ctx.nodes > kNodeLimit)
        throw Error(Err::SearchBudgetExceeded, "disk search exceeded global node limit");

    int steps = static_cast<int>(ctx.steps.size());
    if (crossing == ctx.a && arr_end == ctx.close_end && steps >= 1) {
        if (auto disk = certify(d, ctx.a, ctx.q, ctx.steps, ctx.trav)) ctx.out.push_back(std::move(*disk));
    }

    // continue: straight pass or negative convex corner
    for (int action = 0; action < 2; ++action) {
        int dep;
        Quadrant q{};
        BoundaryStep st;
        if (action == 0) {
            dep = opposite_end(arr_end);
        } else {
            if (!corner_ok(d, crossing, arr_end, &q)) continue;
            dep = cw_next(arr_end);
            st.corner_crossing = crossing;
            st.corner_quad = q;
        }
        const Crossing& cr = d.crossings()[crossing];
        int arc = cr.end_arc[dep];
        int side = cr.end_arc_side[dep];
        if (ctx.trav[arc][side].blocked) continue;
        const Arc& A = d.arcs()[arc];
        auto [c2, e2] = A.ends[1 - side];
        int need = ctx.dist[state_id(c2, e2)];
        if (need == std::numeric_limits<int>::max() || steps + 1 + need > ctx.budget) continue;
        // the recorded step: corner decided at the *departure* vertex of this arc
        BoundaryStep rec;
        rec.arc = arc;
        rec.from_side = side;
        rec.corner_crossing = st.corner_crossing;
        rec.corner_quad = st.corner_quad;
        // store the corner taken at THIS vertex together with the outgoing arc
        ctx.steps.push_back(rec);
        dfs(ctx, c2, e2);
        ctx.steps.pop_back();
    }
}

std::vector<std::array<ArcTraversal, 2>> build_traversals(const LagrangianDiagram& d) {
    std::vector<std::array<ArcTraversal, 2>> trav(d.arcs().size());
    for (size_t a = 0; a < d.arcs().size(); ++a) {
        const Arc& arc = d.arcs()[a];
        for (int side = 0; side < 2; ++side) {
            ArcTraversal& t = trav[a][side];
            int n = static_cast<int>(arc.atoms.size());
            for (int i = 0; i < n; ++i) {
                int idx = side == 0 ? i : n - 1 - i;
                bool fwd = side == 0 ? arc.atom_fwd[idx] : !arc.atom_fwd[idx];
                t.atom_dirs.push_back({arc.atoms[idx], fwd});
                const ArcAtom& at = d.atoms()[arc.atoms[idx]];
                int left = fwd ? at.region_left_fwd : at.region_left_bwd;
                if (left == d.unbounded_region()) t.blocked = true;
            }
        }
    }
    return trav;
}

// reverse BFS over arrival states to the closing arrival
std::vector<int> build_dist(const LagrangianDiagram& d, const std::vector<std::array<ArcTraversal, 2>>& trav,
                            int a, int close_end) {
    int ns = 4 * d.num_crossings();
    std::vector<std::vector<int>> radj(ns);
    for (int c = 0; c < d.num_crossings(); ++c)
        for (int e = 0; e < 4; ++e) {
            for (int action = 0; action < 2; ++action) {
                int dep;
                if (action == 0) {
                    dep = opposite_end(e);
                } else {
                    if (!corner_ok(d, c, e, nullptr)) continue;
                    dep = cw_next(e);
                }
                const Crossing& cr = d.crossings()[c];
                int arc = cr.end_arc[dep];
                int side = cr.end_arc_side[dep];
                if (trav[arc][side].blocked) continue;
                auto [c2, e2] = d.arcs()[arc].ends[1 - side];
                radj[state_id(c2, e2)].push_back(state_id(c, e));
            }
        }
    std::vector<int> dist(ns, std::numeric_limits<int>::max());
    std::deque<int> queue;
    dist[state_id(a, close_end)] = 0;
    queue.push_back(state_id(a, close_end));
    while (!queue.empty()) {
        int s = queue.front();
        queue.pop_front();
        for (int t : radj[s])
            if (dist[t] == std::numeric_limits<int>::max()) {
                dist[t] = dist[s] + 1;
                queue.push_back(t);
            }
    }
    return dist;
}

}  // namespace

std::vector<AdmissibleDisk> enumerate_disks(const LagrangianDiagram& d, int a, int budget) {
    if (a < 0 || a >= d.num_crossings()) throw Error(Err::UnknownGenerator, "crossing " + std::to_string(a));
    if (budget < 0) budget = default_disk_budget(d);
    auto trav = build_traversals(d);
    std::vector<AdmissibleDisk> all;
    const Crossing& cr = d.crossings()[a];
    for (int qi = 0; qi < 4; ++qi) {
        Quadrant q = static_cast<Quadrant>(qi);
        if (!cr.quad_positive(q)) continue;
        if (cr.quad_region[qi] == d.unbounded_region()) continue;
        int dep = qi;  // quadrant_after(end) == end numerically
        int close_end = ccw_next(dep);
        WalkContext ctx;
        ctx.d = &d;
        ctx.a = a;
        ctx.q = q;
        ctx.close_end = close_end;
        ctx.budget = budget;
        ctx.trav = trav;
        ctx.dist = build_dist(d, trav, a, close_end);
        int arc = cr.end_arc[dep], side = cr.end_arc_side[dep];
        if (!ctx.trav[arc][side].blocked) {
            auto [c2, e2] = d.arcs()[arc].ends[1 - side];
            if (ctx.dist[state_id(c2, e2)] != std::numeric_limits<int>::max() &&
                1 + ctx.dist[state_id(c2, e2)] <= budget) {
                ctx.steps.push_back(BoundaryStep{arc, side, -1, Quadrant::N});
                dfs(ctx, c2, e2);
                ctx.steps.pop_back();
            }
        }
        all.insert(all.end(), ctx.out.begin(), ctx.out.end());
    }
    return all;
}

DiskSet enumerate_all_disks(const LagrangianDiagram& d, int budget) {
    DiskSet out;
    out.disks.resize(d.num_crossings());
    for (int a = 0; a < d.num_crossings(); ++a) out.disks[a] = enumerate_disks(d, a, budget);
    return out;
}

Dga differential_from_disks(const LagrangianDiagram& d, const DiskSet& disks, Coeffs coeffs) {
    std::vector<Generator> gens;
    for (const auto& cr : d.crossings()) gens.push_back({cr.label, cr.grading});
    // t has degree 2*rot; the diagram's modulus is 2|rot|, so t is degree 0 mod m
    // unless m == 0 (rot == 0), where t is degree 0 anyway.
    Dga A(coeffs, d.grading_modulus(), 0, gens);
    for (int g = 0; g < d.num_crossings(); ++g) {
        DgaElement e;
        for (const AdmissibleDisk& disk : disks.disks[g]) {
            Term t;
            t.t_exp = coeffs == Coeffs::F2t ? disk.t_exponent : 0;
            t.word = disk.neg_corners;
            e.toggle(t);
        }
        A.set_differential(g, e);
    }
    return A;
}

Dga differential(const LagrangianDiagram& d, Coeffs coeffs, int budget) {
    return differential_from_disks(d, enumerate_all_disks(d, budget), coeffs);
}

std::vector<AdmissibleDisk> brute_force_disks(const LagrangianDiagram& d, int a, int max_len) {
    // raw exhaustive walk search; only structural corner legality is enforced,
    // every closed walk goes through the full certificate.
    auto trav = build_traversals(d);
    // rebuild without the unbounded-left blocking so the search is genuinely raw
    for (auto& pair : trav)
        for (int s = 0; s < 2; ++s) pair[s].blocked = false;

    std::vector<AdmissibleDisk> out;
    const Crossing& cr = d.crossings()[a];
    for (int qi = 0; qi < 4; ++qi) {
        Quadrant q = static_cast<Quadrant>(qi);
        if (!cr.quad_positive(q)) continue;
        int dep = qi;
        int close_end = ccw_next(dep);
        std::vector<BoundaryStep> steps;
        // iterative deepening-free plain DFS
        std::function<void(int, int)> go = [&](int c, int e) {
            if (c == a && e == close_end && !steps.empty()) {
                if (auto disk = certify(d, a, q, steps, trav)) out.push_back(std::move(*disk));
            }
            if (static_cast<int>(steps.size()) >= max_len) return;
            for (int action = 0; action < 2; ++action) {
                BoundaryStep st;
                int dep2;
                if (action == 0) {
                    dep2 = opposite_end(e);
                } else {
                    Quadrant q2{};
                    int d2 = cw_next(e);
                    q2 = quadrant_after(d2);
                    if (d.crossings()[c].quad_positive(q2)) continue;
                    dep2 = d2;
                    st.corner_crossing = c;
                    st.corner_quad = q2;
                }
                const Crossing& cc = d.crossings()[c];
                st.arc = cc.end_arc[dep2];
                st.from_side = cc.end_arc_side[dep2];
                auto [c2, e2] = d.arcs()[st.arc].ends[1 - st.from_side];
                steps.push_back(st);
                go(c2, e2);
                steps.pop_back();
            }
        };
        int arc = cr.end_arc[dep], side = cr.end_arc_side[dep];
        auto [c2, e2] = d.arcs()[arc].ends[1 - side];
        steps.push_back(BoundaryStep{arc, side, -1, Quadrant::N});
        go(c2, e2);
        steps.pop_back();
    }
    return out;
}

}  // namespace legendrian
