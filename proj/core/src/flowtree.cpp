#include "legendrian/flowtree.hpp"

#include <algorithm>
#include <optional>
#include <set>
#include <sstream>

#include "legendrian/diagram.hpp"
#include "legendrian/disks.hpp"

namespace legendrian {

int tree_dimension(const TreeSkeleton& s) {
    int dim = s.n - 3;
    for (int I : s.positive_I) dim += I - (s.n - 1);
    for (int I : s.negative_I) dim -= I - 1;
    dim += s.ends;            // mu = +1
    dim -= s.switches + s.y1; // mu = -1
    // y0 contributes 0
    return dim;
}

std::vector<std::string> front_generator_labels(const FrontDiagram& d) {
    std::vector<std::string> out;
    int na = 0, nc = 0;
    for (const auto& ev : d.events()) {
        if (ev.kind == EventKind::Crossing) out.push_back("a" + std::to_string(++na));
        else if (ev.kind == EventKind::RightCusp) out.push_back("c" + std::to_string(++nc));
    }
    return out;
}

namespace {

struct EventInfo {
    EventKind kind;
    int level;            // position
    int s_upper, s_lower; // strands at (level, level+1) on the west gap (east gap for left cusps)
    std::string label;    // generator label for crossings and right cusps
};

struct Edge {
    int upper, lower;
    int gap_lo, gap_hi;
    int v0 = -1, v1 = -1;  // creating and closing vertex
};

struct Pairing {
    int e1, l1, e2, l2;  // (edge, leg 0=upper/1=lower)
    bool has_letter = false;
    std::string letter;
};

struct Vert {
    VertexKind kind;
    std::string letter;
    int event = -1;  // 1-based
    int gap = -1;
    std::vector<Pairing> pairs;
};

struct OpenEndT {
    int upper, lower;
    int gap;
    bool west;  // facing direction
    int edge;
};

struct State {
    std::vector<Vert> verts;
    std::vector<Edge> edges;
    std::vector<OpenEndT> open;
    int ends = 0, switches = 0, y0 = 0, y1 = 0;
    int neg_punctures = 0;
};

struct Searcher {
    const FrontDiagram* d;
    std::vector<EventInfo> events;
    int budget;
    std::set<std::string> seen;
    std::vector<FlowTree> out;
    int pos_vertex = 0;
    int pos_edge = -1;     // -1 for the immediate-End tree
    bool pos_west = true;

    int level(int gap, int strand) const { return d->level_of(gap, strand); }

    int new_edge(State& s, int upper, int lower, int gap, int v_creator) {
        s.edges.push_back(Edge{upper, lower, gap, gap, v_creator, -1});
        return static_cast<int>(s.edges.size()) - 1;
    }

    void expand(State s);
    void complete(State& s);
    std::string serialize(const State& s, std::vector<std::string>& word) const;
};

// traversal over vertex pairings; returns empty optional on malformed trees.
// Also emits a canonical serialization of the traversal (independent of the
// order in which the search happened to build the tree).
std::optional<std::vector<std::string>> boundary_word(const State& s, int pos_vertex, int pos_edge, bool pos_west,
                                                      std::string* trace) {
    std::vector<std::string> word;
    std::ostringstream tr;
    if (pos_edge < 0) {
        if (trace) *trace = "unit";
        return word;  // immediate-End tree: empty word
    }
    int e = pos_edge;
    int leg = pos_west ? 0 : 1;  // west germ departs on the upper leg, east on the lower
    int at = pos_vertex;
    size_t guard = 0;
    tr << s.verts[pos_vertex].letter << '|' << pos_west << '|';
    while (true) {
        if (++guard > 10000) return std::nullopt;
        const Edge& E = s.edges[e];
        tr << '(' << E.upper << ',' << E.lower << ',' << E.gap_lo << ',' << E.gap_hi << ',' << leg << ')';
        int next_v = E.v0 == at ? E.v1 : E.v0;
        if (next_v < 0) return std::nullopt;
        if (next_v == pos_vertex) break;  // closed up at the positive corner
        const Vert& V = s.verts[next_v];
        tr << vertex_kind_name(V.kind) << ':' << V.letter << ':' << V.event << ':' << V.gap << ';';
        bool found = false;
        for (const auto& p : V.pairs) {
            int e2 = -1, l2 = -1;
            if (p.e1 == e && p.l1 == leg) {
                e2 = p.e2;
                l2 = p.l2;
            } else if (p.e2 == e && p.l2 == leg) {
                e2 = p.e1;
                l2 = p.l1;
            } else {
                continue;
            }
            if (p.has_letter) word.push_back(p.letter);
            e = e2;
            leg = l2;
            at = next_v;
            found = true;
            break;
        }
        if (!found) return std::nullopt;
    }
    if (trace) *trace = tr.str();
    return word;
}

void Searcher::complete(State& s) {
    TreeSkeleton sk;
    sk.n = 1;
    sk.positive_I = {1};
    sk.negative_I.assign(s.neg_punctures, 1);
    sk.ends = s.ends;
    sk.switches = s.switches;
    sk.y0 = s.y0;
    sk.y1 = s.y1;
    if (tree_dimension(sk) != 0) return;

    std::string key;
    auto word = boundary_word(s, pos_vertex, pos_edge, pos_west, &key);
    if (!word) return;
    if (!seen.insert(key).second) return;

    FlowTree t;
    for (const auto& v : s.verts) {
        FlowTreeVertex fv;
        fv.kind = v.kind;
        fv.chord = v.letter;
        fv.event = v.event;
        fv.gap = v.gap;
        t.vertices.push_back(fv);
    }
    for (const auto& e : s.edges) {
        FlowTreeEdge fe;
        fe.upper = e.upper;
        fe.lower = e.lower;
        fe.gap_lo = e.gap_lo;
        fe.gap_hi = e.gap_hi;
        fe.v_a = e.v0;
        fe.v_b = e.v1;
        t.edges.push_back(fe);
    }
    t.word = *word;
    t.dimension = 0;
    out.push_back(std::move(t));
}

void Searcher::expand(State s) {
    if (s.open.empty()) {
        complete(s);
        return;
    }
    if (static_cast<int>(s.edges.size()) > budget) return;

    OpenEndT end = s.open.front();
    s.open.erase(s.open.begin());
    const int g = end.gap;
    const int u = end.upper, v = end.lower;

    auto recurse_with = [&](State ns) { expand(std::move(ns)); };

    // --- Y0 moves at the current gap -------------------------------------
    // split: (u,v) -> (u,k) + (k,v), same facing
    for (int lv = level(g, u) + 1; lv < level(g, v); ++lv) {
        int k = d->strand_at(g, lv);
        State ns = s;
        int vid = static_cast<int>(ns.verts.size());
        ns.verts.push_back(Vert{VertexKind::Y0, "", -1, g, {}});
        ns.y0++;
        ns.edges[end.edge].v1 = vid;
        int d1 = new_edge(ns, u, k, g, vid);
        int d2 = new_edge(ns, k, v, g, vid);
        ns.verts[vid].pairs = {{end.edge, 0, d1, 0, false, ""},
                               {d1, 1, d2, 0, false, ""},
                               {d2, 1, end.edge, 1, false, ""}};
        ns.open.push_back(OpenEndT{u, k, g, end.west, d1});
        ns.open.push_back(OpenEndT{k, v, g, end.west, d2});
        recurse_with(std::move(ns));
    }
    // side moves: our end is a daughter of a Y0 whose parent grows onward
    // upper daughter: ours = (u, v) = (u, k); pick w below k
    for (int lv = level(g, v) + 1; lv <= d->strands_at(g); ++lv) {
        int w = d->strand_at(g, lv);
        State ns = s;
        int vid = static_cast<int>(ns.verts.size());
        ns.verts.push_back(Vert{VertexKind::Y0, "", -1, g, {}});
        ns.y0++;
        ns.edges[end.edge].v1 = vid;
        int par = new_edge(ns, u, w, g, vid);
        int sib = new_edge(ns, v, w, g, vid);
        ns.verts[vid].pairs = {{par, 0, end.edge, 0, false, ""},
                               {end.edge, 1, sib, 0, false, ""},
                               {sib, 1, par, 1, false, ""}};
        ns.open.push_back(OpenEndT{u, w, g, end.west, par});
        ns.open.push_back(OpenEndT{v, w, g, !end.west, sib});
        recurse_with(std::move(ns));
    }
    // lower daughter: ours = (k, v); pick w above k
    for (int lv = 1; lv < level(g, u); ++lv) {
        int w = d->strand_at(g, lv);
        State ns = s;
        int vid = static_cast<int>(ns.verts.size());
        ns.verts.push_back(Vert{VertexKind::Y0, "", -1, g, {}});
        ns.y0++;
        ns.edges[end.edge].v1 = vid;
        int par = new_edge(ns, w, v, g, vid);
        int sib = new_edge(ns, w, u, g, vid);
        ns.verts[vid].pairs = {{par, 0, sib, 0, false, ""},
                               {sib, 1, end.edge, 0, false, ""},
                               {end.edge, 1, par, 1, false, ""}};
        ns.open.push_back(OpenEndT{w, v, g, end.west, par});
        ns.open.push_back(OpenEndT{w, u, g, !end.west, sib});
        recurse_with(std::move(ns));
    }

    // --- event interaction -------------------------------------------------
    int ev = end.west ? g - 1 : g;  // 0-based event index
    if (ev < 0 || ev >= d->num_events()) return;
    const EventInfo& E = events[ev];
    int ng = end.west ? g - 1 : g + 1;  // gap beyond the event

    auto pass = [&]() {
        if (!level(ng, u) || !level(ng, v)) return;  // a leg dies: not a pass
        if (level(ng, u) >= level(ng, v)) return;
        State ns = s;
        if (end.west) ns.edges[end.edge].gap_lo = ng;
        else ns.edges[end.edge].gap_hi = ng;
        OpenEndT ne = end;
        ne.gap = ng;
        ns.open.push_back(ne);
        recurse_with(std::move(ns));
    };

    if (E.kind == EventKind::Crossing) {
        int D = E.s_upper;  // descending strand (west level i)
        int A = E.s_lower;
        bool u_in = u == D || u == A;
        bool v_in = v == D || v == A;
        if (u_in && v_in) return;  // mutual arrival: no convex negative corner exists
        pass();
        // 2-valent negative punctures (the leg rides the chord's upper sheet)
        auto jump = [&](bool upper_leg, int new_strand) {
            State ns = s;
            int vid = static_cast<int>(ns.verts.size());
            ns.verts.push_back(Vert{VertexKind::TwoValentPuncture, E.label, ev + 1, -1, {}});
            ns.neg_punctures++;
            ns.edges[end.edge].v1 = vid;
            int nu = upper_leg ? new_strand : u;
            int nv = upper_leg ? v : new_strand;
            if (!level(ng, nu) || !level(ng, nv) || level(ng, nu) >= level(ng, nv)) return;
            int ne = new_edge(ns, nu, nv, ng, vid);
            int jl = upper_leg ? 0 : 1;
            ns.verts[vid].pairs = {{end.edge, jl, ne, jl, true, E.label},
                                   {end.edge, 1 - jl, ne, 1 - jl, false, ""}};
            ns.open.push_back(OpenEndT{nu, nv, ng, end.west, ne});
            recurse_with(std::move(ns));
        };
        if (end.west) {
            // east-side legs: upper jump needs u == D, lower jump needs v == A
            if (u_in && u == D) jump(true, A);
            if (v_in && v == A) jump(false, D);
        } else {
            // west-side legs: upper jump needs u == A, lower jump needs v == D
            if (u_in && u == A) jump(true, D);
            if (v_in && v == D) jump(false, A);
        }
        return;
    }

    // cusp events
    int k1 = E.s_upper, k2 = E.s_lower;
    bool newborn_side = (E.kind == EventKind::LeftCusp) ? !end.west : end.west;
    // newborn_side: the k-strands live on the far side of the event from the slab
    bool u_is_k = u == k1 || u == k2;
    bool v_is_k = v == k1 || v == k2;

    bool k_alive_far = E.kind == EventKind::LeftCusp ? end.west : !end.west;
    // k strands die in the expansion direction exactly when:
    //   west-facing at a left cusp, or east-facing at a right cusp
    bool k_dies_ahead = (E.kind == EventKind::LeftCusp && end.west) || (E.kind == EventKind::RightCusp && !end.west);
    (void)newborn_side;
    (void)k_alive_far;

    if (k_dies_ahead) {
        if (u_is_k && v_is_k) {
            // mutual slab reaches its own cusp: End vertex
            State ns = s;
            int vid = static_cast<int>(ns.verts.size());
            ns.verts.push_back(Vert{VertexKind::End, "", ev + 1, -1, {}});
            ns.ends++;
            ns.edges[end.edge].v1 = vid;
            ns.verts[vid].pairs = {{end.edge, 0, end.edge, 1, false, ""}};
            recurse_with(std::move(ns));
            return;
        }
        if (u_is_k || v_is_k) {
            // bounce: the k-leg reflects onto its partner; smooth switch, or a
            // two-valent negative puncture at a right-cusp chord
            int partner = (u == k1 || v == k1) ? k2 : k1;
            int nu = u_is_k ? partner : u;
            int nv = v_is_k ? partner : v;
            int reflected_leg = u_is_k ? 0 : 1;
            if (level(g, nu) && level(g, nv) && level(g, nu) < level(g, nv)) {
                int letter_options = E.kind == EventKind::RightCusp ? 2 : 1;
                for (int opt = 0; opt < letter_options; ++opt) {
                    State ns = s;
                    int vid = static_cast<int>(ns.verts.size());
                    bool with_letter = opt == 1;
                    ns.verts.push_back(Vert{with_letter ? VertexKind::TwoValentPuncture : VertexKind::Switch,
                                            with_letter ? E.label : "", ev + 1, -1, {}});
                    if (with_letter) ns.neg_punctures++;
                    else ns.switches++;
                    ns.edges[end.edge].v1 = vid;
                    int ne = new_edge(ns, nu, nv, g, vid);
                    ns.verts[vid].pairs = {
                        {end.edge, reflected_leg, ne, reflected_leg, with_letter, with_letter ? E.label : ""},
                        {end.edge, 1 - reflected_leg, ne, 1 - reflected_leg, false, ""}};
                    ns.open.push_back(OpenEndT{nu, nv, g, !end.west, ne});
                    recurse_with(std::move(ns));
                }
            }
            // Y1 from a side edge: ours is one of the pair slabs; the parent
            // continues beyond the cusp and the sibling grows back
            if (u_is_k || v_is_k) {
                if (v == k1) {
                    // ours = (u, k1) = upper daughter; sibling (k2, w), parent (u, w)
                    for (int lv = level(g, k2) + 1; lv <= d->strands_at(g); ++lv) {
                        int w = d->strand_at(g, lv);
                        if (!level(ng, u) || !level(ng, w) || level(ng, u) >= level(ng, w)) continue;
                        State ns = s;
                        int vid = static_cast<int>(ns.verts.size());
                        ns.verts.push_back(Vert{VertexKind::Y1, "", ev + 1, -1, {}});
                        ns.y1++;
                        ns.edges[end.edge].v1 = vid;
                        int par = new_edge(ns, u, w, ng, vid);
                        int sib = new_edge(ns, k2, w, g, vid);
                        ns.verts[vid].pairs = {{par, 0, end.edge, 0, false, ""},
                                               {end.edge, 1, sib, 0, false, ""},
                                               {sib, 1, par, 1, false, ""}};
                        ns.open.push_back(OpenEndT{u, w, ng, end.west, par});
                        ns.open.push_back(OpenEndT{k2, w, g, !end.west, sib});
                        recurse_with(std::move(ns));
                    }
                }
                if (u == k2) {
                    // ours = (k2, v) = lower daughter; sibling (w, k1), parent (w, v)
                    for (int lv = 1; lv < level(g, k1); ++lv) {
                        int w = d->strand_at(g, lv);
                        if (!level(ng, w) || !level(ng, v) || level(ng, w) >= level(ng, v)) continue;
                        State ns = s;
                        int vid = static_cast<int>(ns.verts.size());
                        ns.verts.push_back(Vert{VertexKind::Y1, "", ev + 1, -1, {}});
                        ns.y1++;
                        ns.edges[end.edge].v1 = vid;
                        int par = new_edge(ns, w, v, ng, vid);
                        int sib = new_edge(ns, w, k1, g, vid);
                        ns.verts[vid].pairs = {{par, 0, sib, 0, false, ""},
                                               {sib, 1, end.edge, 0, false, ""},
                                               {end.edge, 1, par, 1, false, ""}};
                        ns.open.push_back(OpenEndT{w, v, ng, end.west, par});
                        ns.open.push_back(OpenEndT{w, k1, g, !end.west, sib});
                        recurse_with(std::move(ns));
                    }
                }
            }
            return;
        }
        // uninvolved slab passing the cusp (possibly over the dying tip)
        pass();
        // Y1 split: the cusp pair appears strictly inside the slab ahead
        if (level(ng, k1) && level(ng, u) && level(ng, v) && level(ng, u) < level(ng, k1) &&
            level(ng, k2) < level(ng, v)) {
            State ns = s;
            int vid = static_cast<int>(ns.verts.size());
            ns.verts.push_back(Vert{VertexKind::Y1, "", ev + 1, -1, {}});
            ns.y1++;
            ns.edges[end.edge].v1 = vid;
            int d1 = new_edge(ns, u, k1, ng, vid);
            int d2 = new_edge(ns, k2, v, ng, vid);
            ns.verts[vid].pairs = {{end.edge, 0, d1, 0, false, ""},
                                   {d1, 1, d2, 0, false, ""},
                                   {d2, 1, end.edge, 1, false, ""}};
            ns.open.push_back(OpenEndT{u, k1, ng, end.west, d1});
            ns.open.push_back(OpenEndT{k2, v, ng, end.west, d2});
            recurse_with(std::move(ns));
        }
        return;
    }

    // the k strands are born in the expansion direction (or already behind):
    // our legs cannot involve them on the near side
    // (u_is_k / v_is_k impossible here: k strands absent at gap g)
    pass();
    // Y1 split around the newborn pair
    if (level(ng, k1) && level(ng, u) && level(ng, v) && level(ng, u) < level(ng, k1) &&
        level(ng, k2) < level(ng, v)) {
        State ns = s;
        int vid = static_cast<int>(ns.verts.size());
        ns.verts.push_back(Vert{VertexKind::Y1, "", ev + 1, -1, {}});
        ns.y1++;
        ns.edges[end.edge].v1 = vid;
        int d1 = new_edge(ns, u, k1, ng, vid);
        int d2 = new_edge(ns, k2, v, ng, vid);
        ns.verts[vid].pairs = {{end.edge, 0, d1, 0, false, ""},
                               {d1, 1, d2, 0, false, ""},
                               {d2, 1, end.edge, 1, false, ""}};
        ns.open.push_back(OpenEndT{u, k1, ng, end.west, d1});
        ns.open.push_back(OpenEndT{k2, v, ng, end.west, d2});
        recurse_with(std::move(ns));
    }
}

std::vector<EventInfo> event_infos(const FrontDiagram& d) {
    std::vector<EventInfo> out;
    int na = 0, nc = 0;
    for (int e = 0; e < d.num_events(); ++e) {
        const FrontEvent& ev = d.events()[e];
        EventInfo info;
        info.kind = ev.kind;
        info.level = ev.position;
        if (ev.kind == EventKind::LeftCusp) {
            info.s_upper = d.strand_at(e + 1, ev.position);
            info.s_lower = d.strand_at(e + 1, ev.position + 1);
        } else {
            info.s_upper = d.strand_at(e, ev.position);
            info.s_lower = d.strand_at(e, ev.position + 1);
            info.label = ev.kind == EventKind::Crossing ? "a" + std::to_string(++na) : "c" + std::to_string(++nc);
        }
        out.push_back(info);
    }
    return out;
}

}  // namespace

std::vector<FlowTree> enumerate_rigid_trees(const FrontDiagram& d, const std::string& chord, int budget) {
    if (budget < 0) budget = default_tree_budget(d);
    auto infos = event_infos(d);
    int ev = -1;
    for (int e = 0; e < d.num_events(); ++e)
        if (infos[e].kind != EventKind::LeftCusp && infos[e].label == chord) ev = e;
    if (ev < 0) throw Error(Err::UnknownGenerator, chord);

    Searcher se;
    se.d = &d;
    se.events = infos;
    se.budget = budget;

    const EventInfo& E = infos[ev];
    if (E.kind == EventKind::RightCusp) {
        // east germ: the immediate End at the cusp (empty word)
        {
            State s;
            s.verts.push_back(Vert{VertexKind::PositivePuncture, chord, ev + 1, -1, {}});
            s.verts.push_back(Vert{VertexKind::End, "", ev + 1, -1, {}});
            s.ends++;
            se.pos_vertex = 0;
            se.pos_edge = -1;
            se.complete(s);
        }
        // west germ: slab between the cusp strands
        State s;
        s.verts.push_back(Vert{VertexKind::PositivePuncture, chord, ev + 1, -1, {}});
        se.pos_vertex = 0;
        se.pos_west = true;
        int e0 = se.new_edge(s, E.s_upper, E.s_lower, ev, 0);
        se.pos_edge = e0;
        s.open.push_back(OpenEndT{E.s_upper, E.s_lower, ev, true, e0});
        se.expand(std::move(s));
    } else {
        // west germ: slab (D, A) west of the crossing
        {
            State s;
            s.verts.push_back(Vert{VertexKind::PositivePuncture, chord, ev + 1, -1, {}});
            se.pos_vertex = 0;
            se.pos_west = true;
            int e0 = se.new_edge(s, E.s_upper, E.s_lower, ev, 0);
            se.pos_edge = e0;
            s.open.push_back(OpenEndT{E.s_upper, E.s_lower, ev, true, e0});
            se.expand(std::move(s));
        }
        // east germ: slab (A, D) east of the crossing
        {
            State s;
            s.verts.push_back(Vert{VertexKind::PositivePuncture, chord, ev + 1, -1, {}});
            se.pos_vertex = 0;
            se.pos_west = false;
            int e0 = se.new_edge(s, E.s_lower, E.s_upper, ev + 1, 0);
            se.pos_edge = e0;
            s.open.push_back(OpenEndT{E.s_lower, E.s_upper, ev + 1, false, e0});
            se.expand(std::move(s));
        }
    }
    return se.out;
}

Dga differential_via_trees(const FrontDiagram& d, int budget) {
    PotentialAssignment mu = maslov_potential(d);
    int m = mu.modulus;
    std::vector<Generator> gens;
    std::vector<std::string> labels = front_generator_labels(d);
    {
        int idx = 0;
        for (int e = 0; e < d.num_events(); ++e) {
            const FrontEvent& ev = d.events()[e];
            if (ev.kind == EventKind::LeftCusp) continue;
            int grading;
            if (ev.kind == EventKind::RightCusp) grading = 1;
            else grading = mu.potential.at({e, ev.position}) - mu.potential.at({e, ev.position + 1});
            gens.push_back({labels[idx++], grading});
        }
    }
    Dga A(Coeffs::F2, m, 0, gens);
    for (int g = 0; g < A.num_generators(); ++g) {
        DgaElement e;
        for (const FlowTree& t : enumerate_rigid_trees(d, A.generator(g).label, budget)) {
            Term term;
            for (const auto& w : t.word) term.word.push_back(A.index_of(w));
            e.toggle(term);
        }
        A.set_differential(g, e);
    }
    return A;
}

CrosscheckReport crosscheck(const FrontDiagram& d, int budget) {
    CrosscheckReport rep;
    Dga trees = differential_via_trees(d, budget);
    Dga polys = differential(resolve(d), Coeffs::F2);
    rep.generators = trees.num_generators();
    if (polys.num_generators() != trees.num_generators())
        throw Error(Err::UnknownGenerator, "generator sets differ between trees and polygons");
    for (int g = 0; g < trees.num_generators(); ++g) {
        // labels agree by construction; compare elements by translated words
        DgaElement translated;
        for (const auto& t : polys.differential(polys.index_of(trees.generator(g).label)).terms()) {
            Term u;
            for (int x : t.word) u.word.push_back(trees.index_of(polys.generator(x).label));
            translated.toggle(u);
        }
        if (!(translated == trees.differential(g))) {
            rep.pass = false;
            rep.mismatches.push_back(trees.generator(g).label + ": trees = " +
                                     trees.to_string(trees.differential(g)) + ", polygons = " +
                                     polys.to_string(polys.differential(polys.index_of(trees.generator(g).label))));
        }
    }
    return rep;
}

}  // namespace legendrian
