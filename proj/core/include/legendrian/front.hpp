#pragma once

// Front projections of Legendrian knots in J^1(R), encoded as plat-style
// event words on strands numbered from the top.

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "legendrian/errors.hpp"

namespace legendrian {

enum class EventKind { LeftCusp, RightCusp, Crossing };

struct FrontEvent {
    EventKind kind;
    int position;  // 1-based strand position of the upper strand involved
};

// Basepoint: sits on strand `strand` (1-based from the top) in event gap `gap`
// (gap g lies between events g and g+1; gap 0 is west of everything).
struct Basepoint {
    int gap;
    int strand;
    bool operator==(const Basepoint&) const = default;
};

class FrontDiagram {
public:
    FrontDiagram() = default;
    FrontDiagram(std::vector<FrontEvent> events, std::optional<Basepoint> basepoint);

    const std::vector<FrontEvent>& events() const { return events_; }
    const Basepoint& basepoint() const { return basepoint_; }

    int num_events() const { return static_cast<int>(events_.size()); }
    // Strand count on gap g (between events g and g+1), g in [0, num_events()].
    int strands_at(int gap) const { return counts_[gap]; }
    int num_crossings() const { return n_crossings_; }
    int num_right_cusps() const { return n_right_cusps_; }
    int num_left_cusps() const { return n_left_cusps_; }

    // Global id of the strand occupying level `level` (1-based) on gap `gap`.
    // Strands are maximal x-monotone pieces of the knot; each is born at a
    // left cusp and dies at a right cusp.
    int strand_at(int gap, int level) const { return levels_[gap][level - 1]; }
    int num_strands() const { return n_strands_; }
    // Level of strand s on gap g, or 0 if absent.
    int level_of(int gap, int strand) const;

    std::string serialize() const;

private:
    std::vector<FrontEvent> events_;
    Basepoint basepoint_{};
    std::vector<int> counts_;               // strand count per gap
    std::vector<std::vector<int>> levels_;  // per gap: strand ids top to bottom
    int n_strands_ = 0;
    int n_crossings_ = 0;
    int n_right_cusps_ = 0;
    int n_left_cusps_ = 0;

    void validate_and_index();
};

// Parses a whitespace-separated event word: tokens L<i>, R<i>, X<i> and an
// optional basepoint token B<gap>,<strand>.
FrontDiagram parse_front(const std::string& text);

struct ClassicalInvariants {
    int tb;
    int rot;
};

ClassicalInvariants classical_invariants(const FrontDiagram& d);

// Orientation of the knot: for each strand, true when the traversal that
// sends the basepoint strand left-to-right runs this strand left-to-right.
std::vector<bool> orientation(const FrontDiagram& d);

struct PotentialAssignment {
    // potential on strand-segment (gap, level); constant along each strand
    std::map<std::pair<int, int>, int> potential;
    int modulus = 0;  // 2*|rot|, 0 when rot == 0

    int of_strand(const FrontDiagram& d, int strand) const;
};

PotentialAssignment maslov_potential(const FrontDiagram& d);

}  // namespace legendrian
