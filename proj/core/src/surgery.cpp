#include "legendrian/surgery.hpp"

#include <algorithm>

#include "legendrian/linearize.hpp"

namespace legendrian {

SurgeryShapeReport check_surgery_shape(const Dga& A, const std::string& c, const std::string& d) {
    SurgeryShapeReport rep;
    int ci = A.index_of(c), di = A.index_of(d);
    auto fail = [&](bool& flag, const std::string& msg) {
        flag = false;
        rep.pass = false;
        rep.failures.push_back(msg);
    };

    DgaElement want = DgaElement::unit(0) + DgaElement::generator(di);
    if (!(A.differential(ci) == want)) fail(rep.dc_is_one_plus_d, "dc != 1 + " + d);
    if (!A.differential(di).is_zero()) fail(rep.dd_zero, "dd != 0");
    for (int g = 0; g < A.num_generators(); ++g) {
        if (g == ci) continue;
        for (const auto& t : A.differential(g).terms())
            if (std::find(t.word.begin(), t.word.end(), ci) != t.word.end()) {
                fail(rep.c_unused, c + " appears in d" + A.generator(g).label);
                break;
            }
    }
    if (A.normalize_grading(A.generator(ci).grading) != A.normalize_grading(A.generator(di).grading + 1))
        fail(rep.grading_step, "|c| != |d| + 1");
    return rep;
}

Dga surger(const Dga& A, const std::string& c, const std::string& d) {
    SurgeryShapeReport shape = check_surgery_shape(A, c, d);
    if (!shape.pass)
        throw Error(Err::ShapeViolation, shape.failures.empty() ? "surgery shape violated" : shape.failures[0]);
    int ci = A.index_of(c);
    std::vector<Generator> gens;
    std::vector<int> newidx(A.num_generators(), -1);
    for (int g = 0; g < A.num_generators(); ++g) {
        if (g == ci) continue;
        newidx[g] = static_cast<int>(gens.size());
        gens.push_back({A.generator(g).label + "^", A.generator(g).grading});
    }
    Dga out(A.coeffs(), A.grading_modulus(), A.t_degree(), gens);
    for (int g = 0; g < A.num_generators(); ++g) {
        if (g == ci) continue;
        DgaElement e;
        for (const auto& t : A.differential(g).terms()) {
            Term u;
            u.t_exp = t.t_exp;
            for (int x : t.word) u.word.push_back(newidx[x]);  // c never occurs
            e.toggle(u);
        }
        out.set_differential(newidx[g], e);
    }
    auto d2 = check_d_squared(out);
    if (!d2.pass) throw Error(Err::ShapeViolation, "surgered differential does not square to zero");
    return out;
}

SurgeryComparison compare_surgery_invariants(const Dga& before, const Dga& after, const std::string& d) {
    SurgeryComparison cmp;
    cmp.lch_before = lch_set(before);
    cmp.lch_after = lch_set(after);
    for (const auto& g : before.generators()) cmp.census_before[g.grading]++;
    for (const auto& g : after.generators()) cmp.census_after[g.grading]++;
    int di = before.index_of(d);
    auto augs = find_augmentations(before);
    cmp.n_augmentations_before = static_cast<int>(augs.size());
    cmp.before_has_augmentations = !augs.empty();
    for (const auto& eps : augs)
        if (!eps.values[di]) cmp.before_augmentations_force_d = false;
    cmp.n_augmentations_after = static_cast<int>(find_augmentations(after).size());
    return cmp;
}

Dga random_shape_valid_dga(std::mt19937_64& rng, int extra_generators, const std::string& c, const std::string& d) {
    // start from stabilization pairs, scramble with elementary automorphisms
    std::vector<Generator> gens;
    Dga A(Coeffs::F2, 0, 0, gens);
    int pairs = (extra_generators + 1) / 2;
    for (int i = 0; i < pairs; ++i) {
        int deg = static_cast<int>(rng() % 5) - 2;
        A = stabilize(A, deg);
    }
    for (int round = 0; round < 2 * pairs; ++round) {
        if (A.num_generators() == 0) break;
        int j = static_cast<int>(rng() % A.num_generators());
        // u: a random word of other generators with the right grading
        std::vector<int> candidates;
        for (int g = 0; g < A.num_generators(); ++g)
            if (g != j && A.generator(g).grading == A.generator(j).grading) candidates.push_back(g);
        if (candidates.empty()) continue;
        DgaElement u = DgaElement::generator(candidates[rng() % candidates.size()]);
        DgaMorphism phi = elementary_automorphism(A, j, u);
        A = phi.target();
    }
    // adjoin d then c with dc = 1 + d
    auto gens2 = A.generators();
    gens2.push_back({d, 0});
    gens2.push_back({c, 1});
    Dga out(A.coeffs(), 0, 0, gens2);
    for (int g = 0; g < A.num_generators(); ++g) out.set_differential(g, A.differential(g));
    int di = out.index_of(d), ci = out.index_of(c);
    out.set_differential(di, DgaElement::zero());
    out.set_differential(ci, DgaElement::unit(0) + DgaElement::generator(di));
    return out;
}

}  // namespace legendrian
