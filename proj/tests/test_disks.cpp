#include <doctest.h>

#include <algorithm>
#include <set>

#include "legendrian/disks.hpp"
#include "legendrian/front.hpp"

using namespace legendrian;

TEST_CASE("resolved unknot: 1 crossing, 3 regions, 2 arcs") {
    LagrangianDiagram L = resolve(parse_front("L1 R1"));
    CHECK(L.num_crossings() == 1);
    CHECK(L.num_regions() == 3);
    CHECK(L.arcs().size() == 2);
    CHECK(L.crossings()[0].label == "c1");
    CHECK(L.crossings()[0].grading == 1);
}

TEST_CASE("resolved trefoil: 5 crossings, 7 regions, gradings 0,0,0,1,1") {
    LagrangianDiagram L = resolve(parse_front("L1 L1 X2 X2 X2 R1 R1"));
    CHECK(L.num_crossings() == 5);
    CHECK(L.num_regions() == 7);
    std::multiset<int> gradings;
    for (const auto& c : L.crossings()) gradings.insert(c.grading);
    CHECK(gradings == std::multiset<int>({0, 0, 0, 1, 1}));
}

TEST_CASE("a crossing-free front resolves to one crossing per right cusp") {
    LagrangianDiagram L = resolve(parse_front("L1 R1"));
    CHECK(L.num_crossings() == 1);
}

TEST_CASE("degenerate empty diagram has no region structure") {
    LagrangianDiagram L = resolve(FrontDiagram({}, std::nullopt));
    CHECK(L.num_crossings() == 0);
    CHECK_THROWS_AS(L.regions(), Error);
}

TEST_CASE("unknot disks: exactly two monogons, t-exponents 0 and +-1") {
    LagrangianDiagram L = resolve(parse_front("L1 R1"));
    auto disks = enumerate_disks(L, 0);
    REQUIRE(disks.size() == 2);
    for (const auto& d : disks) CHECK(d.neg_corners.empty());
    std::multiset<int> texp{disks[0].t_exponent, disks[1].t_exponent};
    CHECK(texp.count(0) == 1);
    CHECK((texp.count(1) + texp.count(-1)) == 1);
}

TEST_CASE("unknot differential: da = 0 over F2, 1 + t^k over F2t") {
    LagrangianDiagram L = resolve(parse_front("L1 R1"));
    Dga A2 = differential(L, Coeffs::F2);
    CHECK(A2.differential(0).is_zero());
    Dga At = differential(L, Coeffs::F2t);
    CHECK(At.differential(0).terms().size() == 2);
    CHECK(At.differential(0).terms().count(Term{0, {}}) == 1);
}

TEST_CASE("trefoil differential: classical answer, d^2 = 0, degree -1") {
    LagrangianDiagram L = resolve(parse_front("L1 L1 X2 X2 X2 R1 R1"));
    Dga A = differential(L, Coeffs::F2);
    CHECK(check_d_squared(A).pass);
    CHECK(check_degree(A).pass);
    // crossings have zero differential; cusps hit 1 + a + c + word
    for (int g = 0; g < A.num_generators(); ++g) {
        const auto& gen = A.generator(g);
        if (gen.label[0] == 'a') CHECK(A.differential(g).is_zero());
        if (gen.label[0] == 'c') {
            CHECK(A.differential(g).terms().count(Term{0, {}}) == 1);  // the constant 1
            CHECK(A.differential(g).terms().size() == 4);
        }
    }
}

TEST_CASE("brute-force oracle matches the pruned search on small diagrams") {
    for (const char* word : {"L1 R1", "L1 L1 X2 R1 R1", "L1 X1 R1"}) {
        LagrangianDiagram L = resolve(parse_front(word));
        REQUIRE(L.num_crossings() <= 3);
        for (int a = 0; a < L.num_crossings(); ++a) {
            auto fast = enumerate_disks(L, a);
            auto brute = brute_force_disks(L, a, 12);
            auto key = [&](const AdmissibleDisk& d) {
                std::string s = std::to_string(static_cast<int>(d.pos_quadrant));
                for (const auto& st : d.boundary)
                    s += "|" + std::to_string(st.arc) + "," + std::to_string(st.from_side) + "," +
                         std::to_string(st.corner_crossing);
                return s;
            };
            std::multiset<std::string> fs, bs;
            for (const auto& d : fast) fs.insert(key(d));
            for (const auto& d : brute)
                if (d.boundary.size() <= 12) bs.insert(key(d));
            CHECK(fs == bs);
        }
    }
}

TEST_CASE("disk counts preserved: crossings = front crossings + right cusps") {
    for (const char* word : {"L1 R1", "L1 L1 X2 X2 X2 R1 R1", "L1 X1 R1", "L1 L1 X2 R1 R1"}) {
        FrontDiagram d = parse_front(word);
        LagrangianDiagram L = resolve(d);
        CHECK(L.num_crossings() == d.num_crossings() + d.num_right_cusps());
        CHECK(L.num_regions() == L.num_crossings() + 2);
    }
}
