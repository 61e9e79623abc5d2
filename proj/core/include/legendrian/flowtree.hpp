#pragma once

// Rigid gradient flow trees of a 1-dimensional front, enumerated
// combinatorially (sheets ordered per event gap; flow data discrete), and the
// differential they compute. Serves as the independent cross-check against
// the polygon count on the resolved diagram.

#include <string>
#include <vector>

#include "legendrian/dga.hpp"
#include "legendrian/front.hpp"

namespace legendrian {

enum class VertexKind {
    PositivePuncture,
    NegativePuncture,
    End,
    Switch,
    Y0,
    Y1,
    TwoValentPuncture,
};

inline const char* vertex_kind_name(VertexKind k) {
    switch (k) {
        case VertexKind::PositivePuncture: return "PositivePuncture";
        case VertexKind::NegativePuncture: return "NegativePuncture";
        case VertexKind::End: return "End";
        case VertexKind::Switch: return "Switch";
        case VertexKind::Y0: return "Y0";
        case VertexKind::Y1: return "Y1";
        case VertexKind::TwoValentPuncture: return "TwoValentPuncture";
    }
    return "?";
}

// Maslov content of non-puncture vertices (Theorem 2.4).
inline int maslov_content(VertexKind k) {
    switch (k) {
        case VertexKind::End: return 1;
        case VertexKind::Y0: return 0;
        case VertexKind::Switch:
        case VertexKind::Y1: return -1;
        default: throw Error(Err::UnassignedIndex, "punctures carry Morse indices, not Maslov content");
    }
}

// Abstract census of a tree for the dimension formula. Morse indices of
// punctures must be assigned; special punctures use I = n + 1 (positive) and
// I = -1 (negative).
struct TreeSkeleton {
    int n = 1;  // base dimension
    std::vector<int> positive_I;
    std::vector<int> negative_I;
    int ends = 0;
    int switches = 0;
    int y0 = 0;
    int y1 = 0;
};

int tree_dimension(const TreeSkeleton& s);

struct FlowTreeVertex {
    VertexKind kind;
    std::string chord;   // generator label for punctures, empty otherwise
    int event = -1;      // 1-based front event for event-located vertices
    int gap = -1;        // event gap for Y0 vertices
    int morse_index = 1; // punctures only
};

struct FlowTreeEdge {
    int upper = -1, lower = -1;  // front strand ids, upper above lower
    int gap_lo = 0, gap_hi = 0;  // gaps the edge spans
    int v_a = -1, v_b = -1;      // incident vertices (west, east when spanning)
};

struct FlowTree {
    std::vector<FlowTreeVertex> vertices;
    std::vector<FlowTreeEdge> edges;
    std::vector<std::string> word;  // negative punctures in boundary order
    int dimension = 0;
};

// generator labels follow the resolution: a<k> for the k-th crossing event,
// c<k> for the k-th right cusp
std::vector<std::string> front_generator_labels(const FrontDiagram& d);

std::vector<FlowTree> enumerate_rigid_trees(const FrontDiagram& d, const std::string& chord, int budget = -1);

inline int default_tree_budget(const FrontDiagram& d) {
    return 2 * (d.num_crossings() + d.num_right_cusps()) + 4;
}

// F2 differential with da = sum over rigid trees of the negative-puncture
// word in boundary order.
Dga differential_via_trees(const FrontDiagram& d, int budget = -1);

struct CrosscheckReport {
    bool pass = true;
    std::vector<std::string> mismatches;  // "label: trees=..., polygons=..."
    int generators = 0;
};

// Compares differential_via_trees(d) with differential(resolve(d)) at t = 1.
CrosscheckReport crosscheck(const FrontDiagram& d, int budget = -1);

}  // namespace legendrian
