#pragma once

// The Lagrangian projection as a combinatorial planar diagram: a sequence of
// cap / cup / swap columns acting on vertically ordered strands, with arcs,
// crossings (quadrant-signed), and complementary regions.
//
// Built from a front by Ng resolution: front crossings become swaps, left
// cusps become caps, right cusps become a swap (the loop crossing) followed
// by a cup. Pinches insert dip columns (see pinch.hpp).

#include <array>
#include <map>
#include <string>
#include <vector>

#include "legendrian/front.hpp"

namespace legendrian {

enum class Quadrant { N = 0, W = 1, S = 2, E = 3 };
// Crossing ends in counterclockwise order.
enum CrossEnd { NE = 0, NW = 1, SW = 2, SE = 3 };

inline int ccw_next(int e) { return (e + 1) & 3; }
inline int cw_next(int e) { return (e + 3) & 3; }
inline int opposite_end(int e) { return (e + 2) & 3; }
// Quadrant between end e and its ccw-next end.
inline Quadrant quadrant_after(int e) { return static_cast<Quadrant>(e); }

enum class Provenance { FrontCrossing, RightCusp, DipMax, DipMin };

struct Crossing {
    std::string label;
    int grading = 0;
    Provenance prov = Provenance::FrontCrossing;
    int prov_index = 0;                   // 1-based front event, or pinch gap for dips
    int dip_upper = 0, dip_lower = 0;     // strand levels at the pinch gap (dip chords)
    bool desc_upper = true;               // upper sheet rides the NW-SE diagonal
    double coord = 0;                     // base-line coordinate
    int col = -1;
    std::array<int, 4> end_arc{-1, -1, -1, -1};       // arc id per CrossEnd
    std::array<int, 4> end_arc_side{0, 0, 0, 0};      // which arc end (0/1) attaches here
    std::array<int, 4> quad_region{-1, -1, -1, -1};   // region id per Quadrant

    bool quad_positive(Quadrant q) const {
        bool ew = q == Quadrant::E || q == Quadrant::W;
        return desc_upper ? ew : !ew;
    }
    // cyclic (N,W,S,E) sign tuple
    std::array<char, 4> quadrant_signs() const {
        std::array<char, 4> s;
        for (int q = 0; q < 4; ++q) s[q] = quad_positive(static_cast<Quadrant>(q)) ? '+' : '-';
        return s;
    }
};

struct ArcAtom {
    bool connector = false;  // cap or cup piece
    bool cap = false;        // connector kind
    int gap = -1;            // for strand segments: resolved gap index
    int level = 0;
    int col = -1;            // for connectors: column index
    int strand = -1;         // front strand id (segments only)
    bool knot_east = true;   // knot orientation runs eastward here
    bool has_basepoint = false;
    int region_left_fwd = -1;   // fwd = eastward (segments) / top-to-bottom (connectors)
    int region_left_bwd = -1;
    double coord_lo = 0, coord_hi = 0;
};

struct Arc {
    std::array<std::pair<int, int>, 2> ends{{{-1, -1}, {-1, -1}}};  // (crossing, CrossEnd)
    std::vector<int> atoms;        // ordered from ends[0] to ends[1]
    std::vector<bool> atom_fwd;    // per atom: traversed fwd when walking ends[0] -> ends[1]
    double coord_lo = 0, coord_hi = 0;
    bool has_basepoint = false;
};

struct Region {
    int id = -1;
    bool unbounded = false;
    std::vector<std::pair<int, Quadrant>> corners;  // (crossing, quadrant)
    double coord_lo = 0, coord_hi = 0;
};

struct Column {
    enum class Kind { Cap, Cup, Swap } kind;
    int level = 0;
    int crossing = -1;
    double coord = 0;
};

class LagrangianDiagram {
public:
    const std::vector<Crossing>& crossings() const { return crossings_; }
    const std::vector<Arc>& arcs() const { return arcs_; }
    const std::vector<ArcAtom>& atoms() const { return atoms_; }
    const std::vector<Region>& regions() const;  // throws on degenerate diagrams
    const std::vector<Column>& columns() const { return columns_; }
    int num_crossings() const { return static_cast<int>(crossings_.size()); }
    int num_regions() const { return n_regions_; }
    int unbounded_region() const { return unbounded_; }
    int grading_modulus() const { return modulus_; }
    int crossing_by_label(const std::string& label) const;

    // strand levels per resolved gap (gap g between columns g-1 and g)
    int strands_at(int gap) const { return static_cast<int>(levels_[gap].size()); }
    int num_gaps() const { return static_cast<int>(levels_.size()); }
    const std::vector<int>& levels_at(int gap) const { return levels_[gap]; }
    double gap_coord(int gap) const { return gap_coords_[gap]; }

    friend LagrangianDiagram build_diagram(const FrontDiagram&, const std::vector<int>&);

private:
    std::vector<Crossing> crossings_;
    std::vector<Arc> arcs_;
    std::vector<ArcAtom> atoms_;
    std::vector<Region> regions_;
    std::vector<Column> columns_;
    std::vector<std::vector<int>> levels_;
    std::vector<double> gap_coords_;
    int n_regions_ = 0;
    int unbounded_ = -1;
    int modulus_ = 0;
};

// Ng resolution of a front diagram.
LagrangianDiagram resolve(const FrontDiagram& d);

// Resolution with combinatorial dips inserted at the given (sorted, distinct)
// front gaps. Each dip adds, per strand pair (i above j) at the gap, a chord
// of Morse index 1 (label b<gap>_<i>_<j>) and one of index 0 (d<gap>_<i>_<j>).
LagrangianDiagram resolve_with_dips(const FrontDiagram& d, const std::vector<int>& dip_gaps);

}  // namespace legendrian
