#include "legendrian/front.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

namespace legendrian {

FrontDiagram::FrontDiagram(std::vector<FrontEvent> events, std::optional<Basepoint> basepoint)
    : events_(std::move(events)) {
    validate_and_index();
    if (basepoint) {
        basepoint_ = *basepoint;
        if (basepoint_.gap < 0 || basepoint_.gap > num_events())
            throw Error(Err::MalformedToken, "basepoint gap out of range");
        if (basepoint_.strand < 1 || basepoint_.strand > counts_[basepoint_.gap])
            throw Error(Err::MalformedToken, "basepoint strand out of range");
    } else if (!events_.empty()) {
        basepoint_ = Basepoint{1, 1};
    } else {
        basepoint_ = Basepoint{0, 0};
    }
}

void FrontDiagram::validate_and_index() {
    counts_.assign(num_events() + 1, 0);
    levels_.assign(num_events() + 1, {});
    n_strands_ = 0;
    n_crossings_ = n_right_cusps_ = n_left_cusps_ = 0;

    std::vector<int> cur;  // strand ids, top to bottom
    for (int e = 0; e < num_events(); ++e) {
        const FrontEvent& ev = events_[e];
        int k = static_cast<int>(cur.size());
        int i = ev.position;
        switch (ev.kind) {
            case EventKind::LeftCusp: {
                if (i < 1 || i > k + 1)
                    throw Error(Err::StrandCountUnderflow,
                                "left cusp position " + std::to_string(i) + " at event " +
                                    std::to_string(e + 1) + " with " + std::to_string(k) + " strands");
                int a = n_strands_++, b = n_strands_++;
                cur.insert(cur.begin() + (i - 1), {a, b});
                ++n_left_cusps_;
                break;
            }
            case EventKind::RightCusp:
            case EventKind::Crossing: {
                if (i < 1 || i + 1 > k)
                    throw Error(Err::StrandCountUnderflow,
                                "event at position " + std::to_string(i) + " needs " +
                                    std::to_string(i + 1) + " strands, have " + std::to_string(k));
                if (ev.kind == EventKind::RightCusp) {
                    cur.erase(cur.begin() + (i - 1), cur.begin() + (i + 1));
                    ++n_right_cusps_;
                } else {
                    std::swap(cur[i - 1], cur[i]);
                    ++n_crossings_;
                }
                break;
            }
        }
        counts_[e + 1] = static_cast<int>(cur.size());
        levels_[e + 1] = cur;
    }
    if (!cur.empty()) throw Error(Err::OpenEnds, std::to_string(cur.size()) + " strands open at the right end");

    if (events_.empty()) return;

    // Single-component check: strands and cusps form a 2-regular graph.
    // birth_partner / death_partner pair strands at their cusps.
    std::vector<int> birth_partner(n_strands_, -1), death_partner(n_strands_, -1);
    {
        std::vector<int> sim;
        for (int e = 0; e < num_events(); ++e) {
            const FrontEvent& ev = events_[e];
            int i = ev.position;
            if (ev.kind == EventKind::LeftCusp) {
                int a = levels_[e + 1][i - 1], b = levels_[e + 1][i];
                birth_partner[a] = b;
                birth_partner[b] = a;
            } else if (ev.kind == EventKind::RightCusp) {
                int a = levels_[e][i - 1], b = levels_[e][i];
                death_partner[a] = b;
                death_partner[b] = a;
            }
            (void)sim;
        }
    }
    std::vector<bool> seen(n_strands_, false);
    int components = 0;
    for (int s0 = 0; s0 < n_strands_; ++s0) {
        if (seen[s0]) continue;
        ++components;
        int s = s0;
        bool at_death = true;  // next hop uses the death cusp
        while (!seen[s]) {
            seen[s] = true;
            s = at_death ? death_partner[s] : birth_partner[s];
            at_death = !at_death;
        }
    }
    if (components != 1)
        throw Error(Err::MultipleComponents, std::to_string(components) + " components");
}

int FrontDiagram::level_of(int gap, int strand) const {
    const auto& lv = levels_[gap];
    for (int j = 0; j < static_cast<int>(lv.size()); ++j)
        if (lv[j] == strand) return j + 1;
    return 0;
}

std::string FrontDiagram::serialize() const {
    std::ostringstream out;
    for (int e = 0; e < num_events(); ++e) {
        if (e) out << ' ';
        const FrontEvent& ev = events_[e];
        char c = ev.kind == EventKind::LeftCusp ? 'L' : (ev.kind == EventKind::RightCusp ? 'R' : 'X');
        out << c << ev.position;
    }
    if (!events_.empty()) {
        out << " B" << basepoint_.gap << ',' << basepoint_.strand;
    }
    return out.str();
}

FrontDiagram parse_front(const std::string& text) {
    std::istringstream in(text);
    std::string tok;
    std::vector<FrontEvent> events;
    std::optional<Basepoint> bp;
    while (in >> tok) {
        char c = tok[0];
        if (c == 'B') {
            auto comma = tok.find(',');
            if (comma == std::string::npos || bp.has_value())
                throw Error(Err::MalformedToken, tok);
            try {
                bp = Basepoint{std::stoi(tok.substr(1, comma - 1)), std::stoi(tok.substr(comma + 1))};
            } catch (const std::exception&) {
                throw Error(Err::MalformedToken, tok);
            }
            continue;
        }
        EventKind kind;
        if (c == 'L') kind = EventKind::LeftCusp;
        else if (c == 'R') kind = EventKind::RightCusp;
        else if (c == 'X') kind = EventKind::Crossing;
        else throw Error(Err::MalformedToken, tok);
        if (tok.size() < 2 || !std::all_of(tok.begin() + 1, tok.end(), [](char ch) { return std::isdigit(ch); }))
            throw Error(Err::MalformedToken, tok);
        events.push_back(FrontEvent{kind, std::stoi(tok.substr(1))});
    }
    return FrontDiagram(std::move(events), bp);
}

// Knot traversal: orientation[s] is true when strand s runs left-to-right.
std::vector<bool> orientation(const FrontDiagram& d) {
    int n = d.num_strands();
    std::vector<int> birth_partner(n, -1), death_partner(n, -1);
    for (int e = 0; e < d.num_events(); ++e) {
        const FrontEvent& ev = d.events()[e];
        int i = ev.position;
        if (ev.kind == EventKind::LeftCusp) {
            int a = d.strand_at(e + 1, i), b = d.strand_at(e + 1, i + 1);
            birth_partner[a] = b;
            birth_partner[b] = a;
        } else if (ev.kind == EventKind::RightCusp) {
            int a = d.strand_at(e, i), b = d.strand_at(e, i + 1);
            death_partner[a] = b;
            death_partner[b] = a;
        }
    }
    std::vector<bool> dir(n, false);
    int start = d.strand_at(d.basepoint().gap, d.basepoint().strand);
    dir[start] = true;  // basepoint strand runs left-to-right
    int s = start;
    bool rightward = true;
    do {
        // rightward strands hop across their death cusp, leftward across birth
        int t = rightward ? death_partner[s] : birth_partner[s];
        rightward = !rightward;
        dir[t] = rightward;
        s = t;
    } while (s != start);
    return dir;
}

ClassicalInvariants classical_invariants(const FrontDiagram& d) {
    auto dir = orientation(d);
    int writhe = 0;
    for (int e = 0; e < d.num_events(); ++e) {
        const FrontEvent& ev = d.events()[e];
        if (ev.kind != EventKind::Crossing) continue;
        int desc = d.strand_at(e, ev.position);      // over-strand after resolution
        int asc = d.strand_at(e, ev.position + 1);
        writhe += (dir[desc] == dir[asc]) ? 1 : -1;
    }
    // Cusp orientation: a cusp is "down" when the traversal passes from its
    // upper strand to its lower strand.
    int down = 0, up = 0;
    for (int e = 0; e < d.num_events(); ++e) {
        const FrontEvent& ev = d.events()[e];
        int i = ev.position;
        if (ev.kind == EventKind::RightCusp) {
            int u = d.strand_at(e, i);
            (dir[u] ? down : up)++;  // arrives rightward on u => u -> lower
        } else if (ev.kind == EventKind::LeftCusp) {
            int u = d.strand_at(e + 1, i);
            // arrives leftward on u (dir[u] false) => passes u -> lower
            (!dir[u] ? down : up)++;
        }
    }
    return ClassicalInvariants{writhe - d.num_right_cusps(), (down - up) / 2};
}

int PotentialAssignment::of_strand(const FrontDiagram& d, int strand) const {
    for (int g = 0; g <= d.num_events(); ++g) {
        int lv = d.level_of(g, strand);
        if (lv) return potential.at({g, lv});
    }
    throw Error(Err::UnknownGenerator, "strand not present in diagram");
}

PotentialAssignment maslov_potential(const FrontDiagram& d) {
    int n = d.num_strands();
    int rot = classical_invariants(d).rot;
    int m = 2 * std::abs(rot);

    // Constraints mu(upper) = mu(lower) + 1 at every cusp; the strand/cusp
    // graph is a single cycle, so BFS assigns values and the one back edge is
    // consistent mod m.
    std::vector<std::vector<std::pair<int, int>>> adj(n);  // (other strand, my value - its value)
    for (int e = 0; e < d.num_events(); ++e) {
        const FrontEvent& ev = d.events()[e];
        int i = ev.position;
        int g = ev.kind == EventKind::LeftCusp ? e + 1 : e;
        if (ev.kind == EventKind::Crossing) continue;
        int u = d.strand_at(g, i), l = d.strand_at(g, i + 1);
        adj[u].push_back({l, 1});
        adj[l].push_back({u, -1});
    }
    std::vector<int> mu(n, 0);
    std::vector<bool> have(n, false);
    int start = d.strand_at(d.basepoint().gap, d.basepoint().strand);
    mu[start] = 0;
    have[start] = true;
    std::vector<int> stack{start};
    while (!stack.empty()) {
        int s = stack.back();
        stack.pop_back();
        for (auto [t, off] : adj[s]) {
            int want = mu[s] - off;
            if (!have[t]) {
                mu[t] = want;
                have[t] = true;
                stack.push_back(t);
            } else if (m == 0 ? mu[t] != want : ((mu[t] - want) % m + m) % m != 0) {
                throw Error(Err::GradingMismatch, "inconsistent Maslov potential");
            }
        }
    }

    PotentialAssignment out;
    out.modulus = m;
    for (int g = 0; g <= d.num_events(); ++g)
        for (int lv = 1; lv <= d.strands_at(g); ++lv) {
            int v = mu[d.strand_at(g, lv)];
            out.potential[{g, lv}] = m ? ((v % m) + m) % m : v;
        }
    return out;
}

}  // namespace legendrian
