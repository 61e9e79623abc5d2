#include <doctest.h>

#include "legendrian/corpus.hpp"
#include "legendrian/front.hpp"

using namespace legendrian;

TEST_CASE("parse minimal unknot word") {
    FrontDiagram d = parse_front("L1 R1");
    CHECK(d.num_events() == 2);
    CHECK(d.num_crossings() == 0);
    CHECK(d.num_right_cusps() == 1);
    CHECK(d.strands_at(1) == 2);
}

TEST_CASE("parse max-tb trefoil word") {
    FrontDiagram d = parse_front("L1 L1 X2 X2 X2 R1 R1");
    CHECK(d.num_crossings() == 3);
    CHECK(d.num_right_cusps() == 2);
    // strand count trace: 2 4 4 4 4 2 0
    CHECK(d.strands_at(2) == 4);
    CHECK(d.strands_at(6) == 2);
}

TEST_CASE("illegal words are rejected") {
    CHECK_THROWS_AS(parse_front("L1 R2"), Error);
    CHECK_THROWS_AS(parse_front("L1"), Error);       // open ends
    CHECK_THROWS_AS(parse_front("X1 L1 R1"), Error); // underflow
    CHECK_THROWS_AS(parse_front("L1 Q1 R1"), Error); // malformed token
    // two disjoint circles
    CHECK_THROWS_AS(parse_front("L1 R1 L1 R1"), Error);
    CHECK_THROWS_AS(parse_front("L1 L1 R1 R1"), Error);
}

TEST_CASE("round trip parse . serialize") {
    for (const auto& entry : bundled_corpus()) {
        FrontDiagram d = parse_front(entry.word);
        FrontDiagram d2 = parse_front(d.serialize());
        CHECK(d2.serialize() == d.serialize());
        CHECK(d2.num_events() == d.num_events());
    }
}

TEST_CASE("strand trace is a nonnegative excursion") {
    for (const auto& entry : bundled_corpus()) {
        FrontDiagram d = parse_front(entry.word);
        CHECK(d.strands_at(0) == 0);
        CHECK(d.strands_at(d.num_events()) == 0);
        for (int g = 0; g <= d.num_events(); ++g) CHECK(d.strands_at(g) >= 0);
    }
}

TEST_CASE("classical invariants of the unknot") {
    auto inv = classical_invariants(parse_front("L1 R1"));
    CHECK(inv.tb == -1);
    CHECK(inv.rot == 0);
}

TEST_CASE("classical invariants of the trefoil") {
    auto inv = classical_invariants(parse_front("L1 L1 X2 X2 X2 R1 R1"));
    CHECK(inv.tb == 1);
    CHECK(inv.rot == 0);
}

TEST_CASE("classical invariants of the wiggled unknot match the unknot") {
    auto inv = classical_invariants(parse_front("L1 L2 X1 R1 R1"));
    CHECK(inv.tb == -1);
    CHECK(inv.rot == 0);
}

TEST_CASE("stabilized unknot has rot = +-1 and modulus 2") {
    FrontDiagram d = parse_front("L1 X1 R1");
    auto inv = classical_invariants(d);
    CHECK(inv.tb == -2);
    CHECK(std::abs(inv.rot) == 1);
    CHECK(maslov_potential(d).modulus == 2);
}

TEST_CASE("maslov potential: cusp relation holds at every cusp") {
    for (const auto& entry : bundled_corpus()) {
        FrontDiagram d = parse_front(entry.word);
        PotentialAssignment mu = maslov_potential(d);
        int m = mu.modulus;
        auto eq = [m](int a, int b) { return m ? ((a - b) % m + m) % m == 0 : a == b; };
        for (int e = 0; e < d.num_events(); ++e) {
            const FrontEvent& ev = d.events()[e];
            int g = ev.kind == EventKind::LeftCusp ? e + 1 : e;
            if (ev.kind == EventKind::Crossing) {
                // transport unchanged along strands across the crossing
                int su = d.strand_at(e, ev.position);
                CHECK(eq(mu.potential.at({e, ev.position}), mu.of_strand(d, su)));
            } else {
                CHECK(eq(mu.potential.at({g, ev.position}), mu.potential.at({g, ev.position + 1}) + 1));
            }
        }
    }
}

TEST_CASE("unknot potential: upper strand one above lower, modulus 0") {
    FrontDiagram d = parse_front("L1 R1");
    PotentialAssignment mu = maslov_potential(d);
    CHECK(mu.modulus == 0);
    CHECK(mu.potential.at({1, 1}) - mu.potential.at({1, 2}) == 1);
    // basepoint strand normalized to 0
    CHECK(mu.potential.at({1, 1}) == 0);
}
