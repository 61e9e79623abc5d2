#pragma once

// Enumeration of admissible immersed polygons with one positive convex corner
// in a Lagrangian diagram, and assembly of the Chekanov-Eliashberg
// differential from their counts.

#include <map>
#include <vector>

#include "legendrian/dga.hpp"
#include "legendrian/diagram.hpp"

namespace legendrian {

struct BoundaryStep {
    int arc = -1;
    int from_side = 0;          // arc end the step enters from
    int corner_crossing = -1;   // -1: passes straight at the far vertex
    Quadrant corner_quad = Quadrant::N;
};

struct AdmissibleDisk {
    int pos_crossing = -1;
    Quadrant pos_quadrant = Quadrant::E;
    std::vector<BoundaryStep> boundary;       // cyclic word, starting after the + corner
    std::vector<int> neg_corners;             // crossings in boundary order
    std::map<int, int> region_mult;           // nonzero multiplicities
    int t_exponent = 0;
    double coord_lo = 0, coord_hi = 0;        // base-image extent
};

struct DiskSet {
    // disks[g] = all admissible disks with positive corner at crossing g
    std::vector<std::vector<AdmissibleDisk>> disks;
    long long walks_explored = 0;
};

inline int default_disk_budget(const LagrangianDiagram& d) { return 4 * d.num_crossings() + 8; }

// All admissible disks with positive corner at crossing `a`. The search is a
// depth-first boundary walk with the disk on its left, closed walks filtered
// by the region-multiplicity certificate. Throws SearchBudgetExceeded when a
// walk had to be abandoned at the step cap.
std::vector<AdmissibleDisk> enumerate_disks(const LagrangianDiagram& d, int a, int budget = -1);

DiskSet enumerate_all_disks(const LagrangianDiagram& d, int budget = -1);

// The Chekanov-Eliashberg differential: one generator per crossing,
// da = sum over disks of t^(t_exp) b_1...b_m.
Dga differential(const LagrangianDiagram& d, Coeffs coeffs, int budget = -1);
Dga differential_from_disks(const LagrangianDiagram& d, const DiskSet& disks, Coeffs coeffs);

// Independent small-scale oracle: exhaustive search over all closed boundary
// words up to `max_len` steps, filtered by the same certificate but found by
// brute enumeration of raw step sequences (no pruning, no canonical start).
// Intended for diagrams with very few crossings.
std::vector<AdmissibleDisk> brute_force_disks(const LagrangianDiagram& d, int a, int max_len);

}  // namespace legendrian
