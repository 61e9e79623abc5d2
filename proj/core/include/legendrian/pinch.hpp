#pragma once

// Combinatorial pinching (dipping) of a knot front: dip chords inserted at a
// base gap, chord region labels, restricted DGAs, and the push-out checks.

#include <map>
#include <string>
#include <vector>

#include "legendrian/diagram.hpp"
#include "legendrian/disks.hpp"

namespace legendrian {

enum class Zone { Q1, N, Q2 };

inline const char* zone_name(Zone z) { return z == Zone::Q1 ? "Q1" : (z == Zone::N ? "N" : "Q2"); }

struct PinchedDiagram {
    FrontDiagram front;
    std::vector<int> pinch_gaps;   // sorted front gaps carrying dips
    LagrangianDiagram diagram;     // resolution with all dips inserted
    // per pinch: generator label -> zone (mutable so tests can corrupt it)
    std::vector<std::map<std::string, Zone>> region_of;
    // per pinch: coordinate extent of its dip columns
    std::vector<std::pair<double, double>> dip_span;
};

// Event gaps where a dip makes sense (>= 2 strands).
std::vector<int> pinch_points(const FrontDiagram& d);

PinchedDiagram dip(const FrontDiagram& d, int gap);
// Additional pinch at another gap of the same front.
PinchedDiagram dip(const PinchedDiagram& p, int gap);

// Which piece of the pinched base line a coordinate interval lies over.
enum class Piece { N, Q1, Q2 };

struct RestrictReport {
    bool any_dropped = false;
    std::vector<std::string> dropped_terms;  // "label -> term"
};

struct RestrictedDga {
    Dga dga;  // generators over the piece; differential keeps only disks whose
              // base image lies entirely over the piece
    RestrictReport report;
};

// `A` must be the differential of p.diagram with the same coefficients.
RestrictedDga restrict_dga(const Dga& A, const PinchedDiagram& p, int pinch, Piece piece, int budget = -1);

struct PushoutReport {
    bool pass = true;
    bool region_labels_consistent = true;   // region_of matches base coordinates
    bool square_commutes = true;            // i1 . j1 == i2 . j2 on N generators
    bool partition_exact = true;            // Gen(Q1) u Gen(Q2) = all, intersection = Gen(N)
    bool q1_restriction_equals_ambient = true;  // on generators over Q1
    bool q2_restriction_equals_ambient = true;
    bool disks_one_sided = true;            // no disk spans R1-N and R2-N
    bool restricted_d_squared = true;       // (d|N)^2 = (d|Q1)^2 = (d|Q2)^2 = 0
    bool gradings_preserved = true;
    std::vector<std::string> failures;
};

PushoutReport verify_pushout(const Dga& A, const PinchedDiagram& p, int pinch, int budget = -1);
// Convenience: verify every pinch of p.
PushoutReport verify_pushout(const Dga& A, const PinchedDiagram& p);

}  // namespace legendrian
