#include "legendrian/diagram.hpp"

#include <algorithm>
#include <cmath>

namespace legendrian {

namespace {

constexpr double kFar = 1e9;

struct UF {
    std::vector<int> p;
    explicit UF(int n) : p(n) {
        for (int i = 0; i < n; ++i) p[i] = i;
    }
    int find(int x) {
        while (p[x] != x) x = p[x] = p[p[x]];
        return x;
    }
    void unite(int a, int b) { p[find(a)] = find(b); }
};

// open end of a growing arc chain at some strand level
struct OpenEnd {
    bool is_attach = false;
    int atom = -1, slot = -1;  // when !is_attach
    int crossing = -1, end = -1;
};

struct Link {
    bool is_attach = false;
    int atom = -1, slot = -1;
    int crossing = -1, end = -1;
    bool open = true;
};

}  // namespace

const std::vector<Region>& LagrangianDiagram::regions() const {
    if (crossings_.empty())
        throw Error(Err::NonPlanar, "degenerate diagram: no crossings, region structure undefined");
    return regions_;
}

int LagrangianDiagram::crossing_by_label(const std::string& label) const {
    for (int i = 0; i < num_crossings(); ++i)
        if (crossings_[i].label == label) return i;
    throw Error(Err::UnknownGenerator, label);
}

LagrangianDiagram build_diagram(const FrontDiagram& d, const std::vector<int>& dip_gaps) {
    for (size_t i = 0; i + 1 < dip_gaps.size(); ++i)
        if (dip_gaps[i] >= dip_gaps[i + 1]) throw Error(Err::InvalidGap, "dip gaps must be sorted and distinct");
    for (int g : dip_gaps)
        if (g < 1 || g > d.num_events() - 1 || d.strands_at(g) < 2)
            throw Error(Err::InvalidGap, "gap " + std::to_string(g) + " is not a valid pinch point");

    PotentialAssignment mu = d.num_events() ? maslov_potential(d) : PotentialAssignment{};
    auto dir = d.num_events() ? orientation(d) : std::vector<bool>{};
    int m = mu.modulus;
    auto norm = [m](int g) { return m ? ((g % m) + m) % m : g; };

    LagrangianDiagram out;
    out.modulus_ = m;

    // --- Columns ---------------------------------------------------------
    std::vector<std::pair<int, int>> dip_of_col;  // crossing col -> (front gap, 0) unused
    int n_a = 0, n_c = 0;
    size_t next_dip = 0;
    std::vector<int> front_gap_to_resolved(d.num_events() + 1, 0);

    // simulate front strand levels to name dip chords by level pairs
    auto add_swap = [&out](int level, double coord, Crossing cr) {
        cr.col = static_cast<int>(out.columns_.size());
        cr.coord = coord;
        out.crossings_.push_back(cr);
        out.columns_.push_back(Column{Column::Kind::Swap, level, static_cast<int>(out.crossings_.size()) - 1, coord});
    };

    for (int e = 0; e < d.num_events(); ++e) {
        const FrontEvent& ev = d.events()[e];
        double x = e + 1;
        int i = ev.position;
        if (ev.kind == EventKind::LeftCusp) {
            out.columns_.push_back(Column{Column::Kind::Cap, i, -1, x});
        } else if (ev.kind == EventKind::Crossing) {
            Crossing cr;
            cr.label = "a" + std::to_string(++n_a);
            cr.prov = Provenance::FrontCrossing;
            cr.prov_index = e + 1;
            cr.desc_upper = true;
            cr.grading = norm(mu.potential.at({e, i}) - mu.potential.at({e, i + 1}));
            add_swap(i, x, cr);
        } else {
            Crossing cr;
            cr.label = "c" + std::to_string(++n_c);
            cr.prov = Provenance::RightCusp;
            cr.prov_index = e + 1;
            cr.desc_upper = true;
            cr.grading = norm(1);
            add_swap(i, x, cr);
            out.columns_.push_back(Column{Column::Kind::Cup, i, -1, x + 0.01});
        }
        front_gap_to_resolved[e + 1] = static_cast<int>(out.columns_.size());

        int fgap = e + 1;
        if (next_dip < dip_gaps.size() && dip_gaps[next_dip] == fgap) {
            ++next_dip;
            int k = d.strands_at(fgap);
            int total = k * (k - 1);  // dip swap count
            int t = 0;
            auto dipx = [&](int idx) { return fgap + 0.1 + 0.8 * (idx + 1) / (total + 1); };
            // index-1 block: reverse the order, pairs in lex order of levels
            std::vector<int> ord(k);
            for (int v = 0; v < k; ++v) ord[v] = v + 1;  // original level at the gap
            for (int r = 1; r <= k - 1; ++r)
                for (int p = 1; p <= k - r; ++p) {
                    int hi = std::min(ord[p - 1], ord[p]), lo = std::max(ord[p - 1], ord[p]);
                    Crossing cr;
                    cr.label = "b" + std::to_string(fgap) + "_" + std::to_string(hi) + "_" + std::to_string(lo);
                    cr.prov = Provenance::DipMax;
                    cr.prov_index = fgap;
                    cr.dip_upper = hi;
                    cr.dip_lower = lo;
                    cr.desc_upper = true;  // upper sheet dives
                    cr.grading = norm(mu.potential.at({fgap, hi}) - mu.potential.at({fgap, lo}));
                    add_swap(p, dipx(t++), cr);
                    std::swap(ord[p - 1], ord[p]);
                }
            // index-0 block: restore the order, pairs again in lex order
            for (int r = 1; r <= k - 1; ++r)
                for (int p = k - 1; p >= r; --p) {
                    int hi = std::min(ord[p - 1], ord[p]), lo = std::max(ord[p - 1], ord[p]);
                    Crossing cr;
                    cr.label = "d" + std::to_string(fgap) + "_" + std::to_string(hi) + "_" + std::to_string(lo);
                    cr.prov = Provenance::DipMin;
                    cr.prov_index = fgap;
                    cr.dip_upper = hi;
                    cr.dip_lower = lo;
                    cr.desc_upper = false;  // upper sheet climbs back
                    cr.grading = norm(mu.potential.at({fgap, hi}) - mu.potential.at({fgap, lo}) - 1);
                    add_swap(p, dipx(t++), cr);
                    std::swap(ord[p - 1], ord[p]);
                }
        }
    }

    int ncols = static_cast<int>(out.columns_.size());
    int ngaps = ncols + 1;

    // --- Strand levels per resolved gap ---------------------------------
    out.levels_.assign(ngaps, {});
    {
        std::vector<int> cur;
        // replay the FRONT events in step with columns to carry strand ids
        int fe = 0;  // next front event
        int born = 0;
        for (int j = 0; j < ncols; ++j) {
            const Column& col = out.columns_[j];
            switch (col.kind) {
                case Column::Kind::Cap: {
                    int a = born++, b = born++;
                    cur.insert(cur.begin() + (col.level - 1), {a, b});
                    ++fe;
                    break;
                }
                case Column::Kind::Cup:
                    cur.erase(cur.begin() + (col.level - 1), cur.begin() + (col.level + 1));
                    break;
                case Column::Kind::Swap:
                    std::swap(cur[col.level - 1], cur[col.level]);
                    if (out.crossings_[col.crossing].prov == Provenance::FrontCrossing ||
                        out.crossings_[col.crossing].prov == Provenance::RightCusp)
                        ++fe;
                    break;
            }
            (void)fe;
            out.levels_[j + 1] = cur;
        }
    }

    // gap coordinates (midpoints, for diagnostics)
    out.gap_coords_.assign(ngaps, 0);
    for (int g = 0; g < ngaps; ++g) {
        double lo = g == 0 ? -kFar : out.columns_[g - 1].coord;
        double hi = g == ncols ? kFar : out.columns_[g].coord;
        out.gap_coords_[g] = lo <= -kFar ? hi - 1 : (hi >= kFar ? lo + 1 : (lo + hi) / 2);
    }

    // --- Regions: union-find over (gap, interval) ------------------------
    std::vector<int> offset(ngaps + 1, 0);
    for (int g = 0; g < ngaps; ++g) offset[g + 1] = offset[g] + static_cast<int>(out.levels_[g].size()) + 1;
    UF uf(offset[ngaps]);
    auto iv = [&](int g, int t) { return offset[g] + t; };

    for (int j = 0; j < ncols; ++j) {
        const Column& col = out.columns_[j];
        int k = static_cast<int>(out.levels_[j].size());
        int i = col.level;
        switch (col.kind) {
            case Column::Kind::Swap:
                for (int t = 0; t <= k; ++t)
                    if (t != i) uf.unite(iv(j, t), iv(j + 1, t));
                break;
            case Column::Kind::Cap:
                for (int t = 0; t < i; ++t) uf.unite(iv(j, t), iv(j + 1, t));
                for (int t = i; t <= k; ++t) uf.unite(iv(j, t), iv(j + 1, t + 2));
                uf.unite(iv(j, i - 1), iv(j + 1, i + 1));
                break;
            case Column::Kind::Cup:
                for (int t = 0; t < i; ++t) uf.unite(iv(j, t), iv(j + 1, t));
                for (int t = i + 2; t <= k; ++t) uf.unite(iv(j, t), iv(j + 1, t - 2));
                uf.unite(iv(j, i - 1), iv(j, i + 1));
                break;
        }
    }

    std::map<int, int> root_to_region;
    auto region_of = [&](int g, int t) {
        int r = uf.find(iv(g, t));
        auto it = root_to_region.find(r);
        if (it != root_to_region.end()) return it->second;
        int id = static_cast<int>(root_to_region.size());
        root_to_region[r] = id;
        return id;
    };
    // touch every interval so ids are stable in scan order
    for (int g = 0; g < ngaps; ++g)
        for (int t = 0; t <= static_cast<int>(out.levels_[g].size()); ++t) region_of(g, t);
    out.n_regions_ = static_cast<int>(root_to_region.size());
    out.unbounded_ = region_of(0, 0);

    if (!out.crossings_.empty() && out.n_regions_ != out.num_crossings() + 2)
        throw Error(Err::NonPlanar, "Euler check failed: " + std::to_string(out.n_regions_) + " regions for " +
                                        std::to_string(out.num_crossings()) + " crossings");

    out.regions_.assign(out.n_regions_, Region{});
    for (int r = 0; r < out.n_regions_; ++r) {
        out.regions_[r].id = r;
        out.regions_[r].unbounded = r == out.unbounded_;
        out.regions_[r].coord_lo = kFar;
        out.regions_[r].coord_hi = -kFar;
    }
    for (int g = 0; g < ngaps; ++g) {
        double lo = g == 0 ? -kFar : out.columns_[g - 1].coord;
        double hi = g == ncols ? kFar : out.columns_[g].coord;
        for (int t = 0; t <= static_cast<int>(out.levels_[g].size()); ++t) {
            Region& reg = out.regions_[region_of(g, t)];
            reg.coord_lo = std::min(reg.coord_lo, lo);
            reg.coord_hi = std::max(reg.coord_hi, hi);
        }
    }

    // crossing quadrant regions + region corner lists
    for (int j = 0; j < ncols; ++j) {
        const Column& col = out.columns_[j];
        if (col.kind != Column::Kind::Swap) continue;
        Crossing& cr = out.crossings_[col.crossing];
        int i = col.level;
        cr.quad_region[static_cast<int>(Quadrant::N)] = region_of(j, i - 1);
        cr.quad_region[static_cast<int>(Quadrant::W)] = region_of(j, i);
        cr.quad_region[static_cast<int>(Quadrant::S)] = region_of(j, i + 1);
        cr.quad_region[static_cast<int>(Quadrant::E)] = region_of(j + 1, i);
        for (int q = 0; q < 4; ++q)
            out.regions_[cr.quad_region[q]].corners.push_back({col.crossing, static_cast<Quadrant>(q)});
    }

    // --- Atoms and arcs ---------------------------------------------------
    std::vector<Link> links;            // two per atom: links[2*a + slot]
    std::vector<OpenEnd> open;          // per current level
    std::vector<std::array<Link, 4>> attach(out.num_crossings());
    auto new_atom = [&](const ArcAtom& a) {
        out.atoms_.push_back(a);
        links.push_back(Link{});
        links.push_back(Link{});
        return static_cast<int>(out.atoms_.size()) - 1;
    };
    auto connect = [&](const OpenEnd& w, int atom, int slot) {
        if (w.is_attach) {
            attach[w.crossing][w.end] = Link{false, atom, slot, -1, -1, false};
            links[2 * atom + slot] = Link{true, -1, -1, w.crossing, w.end, false};
        } else {
            links[2 * w.atom + w.slot] = Link{false, atom, slot, -1, -1, false};
            links[2 * atom + slot] = Link{false, w.atom, w.slot, -1, -1, false};
        }
    };
    auto attach_open = [&](const OpenEnd& w, int crossing, int end) {
        if (w.is_attach) {
            // direct attachment-to-attachment cannot occur: gaps always carry segments
            throw Error(Err::NonPlanar, "internal: empty arc");
        }
        links[2 * w.atom + w.slot] = Link{true, -1, -1, crossing, end, false};
        attach[crossing][end] = Link{false, w.atom, w.slot, -1, -1, false};
    };

    Basepoint bp = d.basepoint();
    int bp_gap = d.num_events() ? front_gap_to_resolved[bp.gap] : -1;

    for (int j = 0; j <= ncols; ++j) {
        // create this gap's strand segments and link them westward
        if (j > 0) {
            // handled below per column
        }
        if (j < ncols) {
            const Column& col = out.columns_[j];
            int i = col.level;
            if (col.kind == Column::Kind::Swap) {
                attach_open(open[i - 1], col.crossing, NW);
                attach_open(open[i], col.crossing, SW);
                open[i - 1] = OpenEnd{true, -1, -1, col.crossing, NE};
                open[i] = OpenEnd{true, -1, -1, col.crossing, SE};
            } else if (col.kind == Column::Kind::Cap) {
                ArcAtom a;
                a.connector = true;
                a.cap = true;
                a.col = j;
                a.coord_lo = a.coord_hi = col.coord;
                a.region_left_fwd = region_of(j + 1, i);       // pocket
                a.region_left_bwd = region_of(j + 1, i - 1);   // around
                int k = new_atom(a);
                open.insert(open.begin() + (i - 1), {OpenEnd{false, k, 0}, OpenEnd{false, k, 1}});
            } else {
                ArcAtom a;
                a.connector = true;
                a.cap = false;
                a.col = j;
                a.coord_lo = a.coord_hi = col.coord;
                a.region_left_fwd = region_of(j, i - 1);  // around
                a.region_left_bwd = region_of(j, i);      // pocket
                int k = new_atom(a);
                connect(open[i - 1], k, 0);
                connect(open[i], k, 1);
                open.erase(open.begin() + (i - 1), open.begin() + (i + 1));
            }
            // next gap's segments
            int g = j + 1;
            for (int v = 1; v <= static_cast<int>(out.levels_[g].size()); ++v) {
                ArcAtom a;
                a.gap = g;
                a.level = v;
                a.strand = out.levels_[g][v - 1];
                a.knot_east = dir.empty() ? true : dir[a.strand];
                a.coord_lo = out.columns_[g - 1].coord;
                a.coord_hi = g == ncols ? kFar : out.columns_[g].coord;
                a.has_basepoint = (g == bp_gap && v == bp.strand);
                a.region_left_fwd = region_of(g, v - 1);
                a.region_left_bwd = region_of(g, v);
                int k = new_atom(a);
                connect(open[v - 1], k, 0);
                open[v - 1] = OpenEnd{false, k, 1};
            }
        }
    }
    if (!open.empty()) throw Error(Err::OpenEnds, "internal: open strands after resolution");

    // walk from each crossing end to assemble arcs
    std::vector<int> atom_arc(out.atoms_.size(), -1);
    for (int c = 0; c < out.num_crossings(); ++c)
        for (int e = 0; e < 4; ++e) {
            if (out.crossings_[c].end_arc[e] >= 0) continue;
            int arc_id = static_cast<int>(out.arcs_.size());
            out.arcs_.push_back(Arc{});
            Arc& arc = out.arcs_.back();
            arc.ends[0] = {c, e};
            out.crossings_[c].end_arc[e] = arc_id;
            out.crossings_[c].end_arc_side[e] = 0;
            arc.coord_lo = kFar;
            arc.coord_hi = -kFar;
            Link cur = attach[c][e];
            while (true) {
                int atom = cur.atom, slot = cur.slot;
                arc.atoms.push_back(atom);
                arc.atom_fwd.push_back(slot == 0);
                atom_arc[atom] = arc_id;
                arc.coord_lo = std::min(arc.coord_lo, out.atoms_[atom].coord_lo);
                arc.coord_hi = std::max(arc.coord_hi, out.atoms_[atom].coord_hi);
                arc.has_basepoint = arc.has_basepoint || out.atoms_[atom].has_basepoint;
                Link nxt = links[2 * atom + (1 - slot)];
                if (nxt.is_attach) {
                    arc.ends[1] = {nxt.crossing, nxt.end};
                    out.crossings_[nxt.crossing].end_arc[nxt.end] = arc_id;
                    out.crossings_[nxt.crossing].end_arc_side[nxt.end] = 1;
                    break;
                }
                cur = nxt;
            }
        }

    return out;
}

LagrangianDiagram resolve(const FrontDiagram& d) { return build_diagram(d, {}); }

LagrangianDiagram resolve_with_dips(const FrontDiagram& d, const std::vector<int>& dip_gaps) {
    return build_diagram(d, dip_gaps);
}

}  // namespace legendrian
