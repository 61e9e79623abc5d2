#include "legendrian/linearize.hpp"

#include <algorithm>

namespace legendrian {

bool is_augmentation(const Dga& A, const Augmentation& eps) {
    if (static_cast<int>(eps.values.size()) != A.num_generators()) return false;
    for (int g = 0; g < A.num_generators(); ++g)
        if (eps.values[g] && A.generator(g).grading != A.normalize_grading(0)) return false;
    for (int g = 0; g < A.num_generators(); ++g)
        if (eps.eval(A.differential(g))) return false;
    return true;
}

std::vector<Augmentation> find_augmentations(const Dga& A, int cap) {
    std::vector<int> zero_gens;
    for (int g = 0; g < A.num_generators(); ++g)
        if (A.generator(g).grading == A.normalize_grading(0)) zero_gens.push_back(g);
    int k = static_cast<int>(zero_gens.size());
    if (k > cap)
        throw Error(Err::BudgetExceeded,
                    std::to_string(k) + " grading-0 generators exceeds augmentation scan cap " + std::to_string(cap));
    std::vector<Augmentation> out;
    for (unsigned long long mask = 0; mask < (1ull << k); ++mask) {
        Augmentation eps;
        eps.values.assign(A.num_generators(), 0);
        for (int i = 0; i < k; ++i)
            if (mask >> i & 1) eps.values[zero_gens[i]] = 1;
        bool ok = true;
        for (int g = 0; g < A.num_generators() && ok; ++g) ok = eps.eval(A.differential(g)) == 0;
        if (ok) out.push_back(std::move(eps));
    }
    return out;
}

Dga twist(const Dga& A, const Augmentation& eps) {
    if (!is_augmentation(A, eps)) throw Error(Err::InvalidAugmentation, "eps . d != 0 or support off grading 0");
    Dga out(A.coeffs(), A.grading_modulus(), A.t_degree(), A.generators());
    for (int g = 0; g < A.num_generators(); ++g) {
        DgaElement twisted;
        for (const auto& t : A.differential(g).terms()) {
            DgaElement prod = DgaElement::unit(t.t_exp);
            for (int x : t.word) {
                DgaElement letter = DgaElement::generator(x);
                if (eps.values[x]) letter.add(DgaElement::unit(0));
                prod = prod * letter;
            }
            twisted.add(prod);
        }
        out.set_differential(g, twisted);
    }
    // constant part must vanish: H . d . H^{-1} kills it by the augmentation law
    for (int g = 0; g < A.num_generators(); ++g)
        for (const auto& t : out.differential(g).terms())
            if (t.word.empty())
                throw Error(Err::InvalidAugmentation, "twisted differential has constant term at " +
                                                          A.generator(g).label);
    return out;
}

LinearizedComplex linearized(const Dga& A) {
    for (int g = 0; g < A.num_generators(); ++g)
        for (const auto& t : A.differential(g).terms())
            if (t.word.empty())
                throw Error(Err::InvalidAugmentation, "nonzero constant part; twist by an augmentation first");

    LinearizedComplex C;
    C.modulus = A.grading_modulus();
    std::map<int, std::map<int, int>> pos;  // degree -> generator -> basis index
    for (int g = 0; g < A.num_generators(); ++g) {
        int deg = A.generator(g).grading;
        pos[deg][g] = static_cast<int>(C.basis[deg].size());
        C.basis[deg].push_back(g);
    }
    for (auto& [deg, gens] : C.basis) {
        int lo = C.lower(deg);
        int nlo = C.dim(lo);
        F2Matrix M(nlo, static_cast<int>(gens.size()));
        for (int j = 0; j < static_cast<int>(gens.size()); ++j) {
            for (const auto& t : A.differential(gens[j]).terms()) {
                if (t.word.size() != 1) continue;
                int h = t.word[0];
                auto it = pos.find(lo);
                if (it == pos.end() || !it->second.count(h))
                    throw Error(Err::GradingMismatch, "d1 not of degree -1 at " + A.generator(gens[j]).label);
                M.flip(it->second.at(h), j);
            }
        }
        C.d[deg] = std::move(M);
    }
    // consecutive matrices compose to zero
    for (auto& [deg, M] : C.d) {
        int lo = C.lower(deg);
        auto it = C.d.find(lo);
        if (it == C.d.end()) continue;
        for (int j = 0; j < M.cols(); ++j) {
            F2Vec col(M.rows(), 0);
            for (int r = 0; r < M.rows(); ++r) col[r] = M.get(r, j);
            F2Vec z = it->second.apply(col);
            if (std::any_of(z.begin(), z.end(), [](unsigned char v) { return v != 0; }))
                throw Error(Err::GradingMismatch, "d1^2 != 0");
        }
    }
    return C;
}

std::string BettiTable::polynomial() const {
    if (dims.empty()) return "0";
    std::string s;
    for (auto [deg, n] : dims) {
        if (!s.empty()) s += " + ";
        if (n != 1) s += std::to_string(n) + "*";
        s += "t^" + std::to_string(deg);
    }
    return s;
}

BettiTable homology(const LinearizedComplex& C) {
    BettiTable out;
    out.modulus = C.modulus;
    std::set<int> degrees;
    for (auto& [deg, b] : C.basis) {
        degrees.insert(deg);
        (void)b;
    }
    for (int deg : degrees) {
        int n = C.dim(deg);
        auto itd = C.d.find(deg);
        int rk_out = itd == C.d.end() ? 0 : itd->second.rank();
        int up = C.modulus ? (deg + 1) % C.modulus : deg + 1;
        auto itu = C.d.find(up);
        int rk_in = itu == C.d.end() ? 0 : itu->second.rank();
        int h = n - rk_out - rk_in;
        if (h != 0) out.dims[deg] = h;
    }
    return out;
}

std::set<std::string> lch_set(const Dga& A) {
    std::set<std::string> out;
    for (const auto& eps : find_augmentations(A)) out.insert(homology(linearized(twist(A, eps))).polynomial());
    return out;
}

namespace {

// homology with explicit classes and reduction to class coordinates
struct DegreeClasses {
    std::vector<F2Vec> reps;   // H-class representative cycles
    std::vector<F2Vec> bcols;  // boundary basis
    int dim_c = 0;
};

struct ComplexClasses {
    const LinearizedComplex* C = nullptr;
    std::map<int, DegreeClasses> at;

    void build(const LinearizedComplex& cx, const std::set<int>& degrees) {
        C = &cx;
        for (int deg : degrees) {
            DegreeClasses dc;
            dc.dim_c = cx.dim(deg);
            auto itd = cx.d.find(deg);
            std::vector<F2Vec> Z;
            if (dc.dim_c > 0) {
                if (itd != cx.d.end() && itd->second.rows() > 0) Z = itd->second.kernel_basis();
                else {
                    for (int i = 0; i < dc.dim_c; ++i) {
                        F2Vec v(dc.dim_c, 0);
                        v[i] = 1;
                        Z.push_back(v);
                    }
                }
            }
            int up = cx.modulus ? (deg + 1) % cx.modulus : deg + 1;
            auto itu = cx.d.find(up);
            if (itu != cx.d.end() && dc.dim_c > 0) dc.bcols = itu->second.column_space_basis();
            auto added = extend_basis(dc.bcols, Z);
            for (int i : added) dc.reps.push_back(Z[i]);
            at[deg] = std::move(dc);
        }
    }

    int dim_h(int deg) const {
        auto it = at.find(deg);
        return it == at.end() ? 0 : static_cast<int>(it->second.reps.size());
    }

    // reduce a cycle to H-class coordinates
    F2Vec reduce(int deg, const F2Vec& cycle) const {
        const DegreeClasses& dc = at.at(deg);
        std::vector<F2Vec> cols = dc.bcols;
        cols.insert(cols.end(), dc.reps.begin(), dc.reps.end());
        F2Matrix M = F2Matrix::from_columns(dc.dim_c, cols);
        auto sol = M.solve(cycle);
        if (!sol) throw Error(Err::NotShortExact, "vector not a cycle in reduction");
        F2Vec out(dc.reps.size(), 0);
        for (size_t i = 0; i < dc.reps.size(); ++i) out[i] = (*sol)[dc.bcols.size() + i];
        return out;
    }
};

}  // namespace

MVReport mayer_vietoris(const Dga& A, const PinchedDiagram& p, int pinch, const Augmentation& eps) {
    PushoutReport push = verify_pushout(A, p, pinch);
    if (!push.pass) throw Error(Err::PushoutNotVerified, push.failures.empty() ? "pushout failed" : push.failures[0]);
    if (!is_augmentation(A, eps)) throw Error(Err::InvalidAugmentation, "not an augmentation of the ambient Dga");

    const auto& zones = p.region_of[pinch];
    auto zone_of = [&](int g) { return zones.at(A.generator(g).label); };
    auto in_q1 = [&](int g) { return zone_of(g) != Zone::Q2; };
    auto in_q2 = [&](int g) { return zone_of(g) != Zone::Q1; };
    auto in_n = [&](int g) { return zone_of(g) == Zone::N; };

    MVReport rep;
    Dga At = twist(A, eps);
    LinearizedComplex full = linearized(At);

    // chain-level closure of the three generator spans under the twisted d1
    for (int g = 0; g < A.num_generators(); ++g) {
        for (const auto& t : At.differential(g).terms()) {
            if (t.word.size() != 1) continue;
            int h = t.word[0];
            auto leak = [&](bool gen_in, bool img_in, const char* piece) {
                if (gen_in && !img_in) {
                    rep.short_exact = false;
                    rep.failures.push_back(std::string("twisted d1 leaks ") + piece + " at " +
                                           A.generator(g).label + " -> " + A.generator(h).label);
                }
            };
            leak(in_n(g), in_n(h), "N");
            leak(in_q1(g), in_q1(h), "Q1");
            leak(in_q2(g), in_q2(h), "Q2");
        }
    }
    if (!rep.short_exact) {
        rep.pass = false;
        throw Error(Err::NotShortExact, rep.failures[0]);
    }

    // sub-complexes on generator spans
    auto subcomplex = [&](auto pred) {
        LinearizedComplex C;
        C.modulus = full.modulus;
        std::map<int, std::map<int, int>> pos;
        for (auto& [deg, gens] : full.basis)
            for (int g : gens)
                if (pred(g)) {
                    pos[deg][g] = static_cast<int>(C.basis[deg].size());
                    C.basis[deg].push_back(g);
                }
        for (auto& [deg, gens] : C.basis) {
            int lo = C.lower(deg);
            F2Matrix M(C.dim(lo), static_cast<int>(gens.size()));
            for (int j = 0; j < static_cast<int>(gens.size()); ++j)
                for (const auto& t : At.differential(gens[j]).terms())
                    if (t.word.size() == 1) M.flip(pos.at(lo).at(t.word[0]), j);
            C.d[deg] = std::move(M);
        }
        return C;
    };
    LinearizedComplex CN = subcomplex(in_n), CQ1 = subcomplex(in_q1), CQ2 = subcomplex(in_q2);

    std::set<int> degrees;
    if (full.modulus) {
        for (int k = 0; k < full.modulus; ++k) degrees.insert(k);
    } else {
        int lo = 0, hi = 0;
        for (auto& [deg, b] : full.basis) {
            lo = std::min(lo, deg - 1);
            hi = std::max(hi, deg + 1);
            (void)b;
        }
        for (int k = lo; k <= hi; ++k) degrees.insert(k);
    }

    ComplexClasses HN, HQ1, HQ2, HL;
    HN.build(CN, degrees);
    HQ1.build(CQ1, degrees);
    HQ2.build(CQ2, degrees);
    HL.build(full, degrees);

    for (int k : degrees) {
        if (HN.dim_h(k)) rep.dim_n[k] = HN.dim_h(k);
        if (HQ1.dim_h(k)) rep.dim_q1[k] = HQ1.dim_h(k);
        if (HQ2.dim_h(k)) rep.dim_q2[k] = HQ2.dim_h(k);
        if (HL.dim_h(k)) rep.dim_total[k] = HL.dim_h(k);
    }

    // coordinate embeddings between complexes
    auto embed = [&](const LinearizedComplex& src, const LinearizedComplex& dst, int deg, const F2Vec& v) {
        F2Vec out(dst.dim(deg), 0);
        auto its = src.basis.find(deg);
        auto itd = dst.basis.find(deg);
        if (its == src.basis.end()) return out;
        for (size_t i = 0; i < its->second.size(); ++i) {
            if (!v[i]) continue;
            int g = its->second[i];
            auto where = std::find(itd->second.begin(), itd->second.end(), g);
            out[where - itd->second.begin()] = 1;
        }
        return out;
    };

    // induced maps on homology, as column collections per degree
    std::map<int, std::vector<F2Vec>> j_img, i_img, del_img;   // images of basis classes
    for (int k : degrees) {
        // j* : H_k(N) -> H_k(Q1) + H_k(Q2)
        for (const auto& z : HN.at.at(k).reps) {
            F2Vec a = HQ1.reduce(k, embed(CN, CQ1, k, z));
            F2Vec b = HQ2.reduce(k, embed(CN, CQ2, k, z));
            F2Vec ab = a;
            ab.insert(ab.end(), b.begin(), b.end());
            j_img[k].push_back(std::move(ab));
        }
        // i* : H_k(Q1) + H_k(Q2) -> H_k(Lambda)
        for (const auto& z : HQ1.at.at(k).reps) i_img[k].push_back(HL.reduce(k, embed(CQ1, full, k, z)));
        for (const auto& z : HQ2.at.at(k).reps) i_img[k].push_back(HL.reduce(k, embed(CQ2, full, k, z)));
        // delta : H_k(Lambda) -> H_{k-1}(N), zig-zag through the lift (u, v)
        int lo = full.lower(k);
        if (!degrees.count(lo)) continue;
        for (const auto& z : HL.at.at(k).reps) {
            // u = the Q1 part of z
            F2Vec u(CQ1.dim(k), 0);
            auto itf = full.basis.find(k);
            if (itf != full.basis.end())
                for (size_t i = 0; i < itf->second.size(); ++i) {
                    int g = itf->second[i];
                    if (z[i] && in_q1(g)) {
                        const auto& bq = CQ1.basis.at(k);
                        u[std::find(bq.begin(), bq.end(), g) - bq.begin()] = 1;
                    }
                }
            F2Vec du(CQ1.dim(lo), 0);
            auto itd = CQ1.d.find(k);
            if (itd != CQ1.d.end() && CQ1.dim(k) > 0) du = itd->second.apply(u);
            // du is supported on N; express in C_N coordinates
            F2Vec w(CN.dim(lo), 0);
            auto itq = CQ1.basis.find(lo);
            if (itq != CQ1.basis.end())
                for (size_t i = 0; i < itq->second.size(); ++i) {
                    if (!du[i]) continue;
                    int g = itq->second[i];
                    if (!in_n(g)) throw Error(Err::NotShortExact, "connecting map left N at " + A.generator(g).label);
                    const auto& bn = CN.basis.at(lo);
                    w[std::find(bn.begin(), bn.end(), g) - bn.begin()] = 1;
                }
            del_img[k].push_back(HN.reduce(lo, w));
        }
    }

    // exactness: im == ker at every position in every degree
    auto subspace_equal = [&](const std::vector<F2Vec>& img, const F2Matrix& next, int domain_dim) {
        // ker(next) vs span(img): img must lie in ker and ranks must agree
        for (const auto& v : img) {
            F2Vec y = next.apply(v);
            if (std::any_of(y.begin(), y.end(), [](unsigned char c) { return c != 0; })) return false;
        }
        int dim_ker = domain_dim - next.rank();
        return rank_of(img) == dim_ker;
    };
    auto matrix_of = [&](const std::vector<F2Vec>& cols, int rows) { return F2Matrix::from_columns(rows, cols); };

    for (int k : degrees) {
        int up = full.modulus ? (k + 1) % full.modulus : k + 1;
        // position 0: at H_k(N): ker j* == im delta (from H_{k+1})
        {
            std::vector<F2Vec> img = degrees.count(up) && del_img.count(up) ? del_img[up] : std::vector<F2Vec>{};
            for (auto& v : img) v.resize(HN.dim_h(k), 0);
            F2Matrix next = matrix_of(j_img.count(k) ? j_img[k] : std::vector<F2Vec>{},
                                      HQ1.dim_h(k) + HQ2.dim_h(k));
            bool ok;
            if (HN.dim_h(k) == 0) ok = true;
            else ok = subspace_equal(img, next, HN.dim_h(k));
            rep.exact[{k, 0}] = ok;
            rep.pass = rep.pass && ok;
        }
        // position 1: at H_k(Q1) + H_k(Q2): ker i* == im j*
        {
            int dim = HQ1.dim_h(k) + HQ2.dim_h(k);
            F2Matrix next = matrix_of(i_img.count(k) ? i_img[k] : std::vector<F2Vec>{}, HL.dim_h(k));
            bool ok = dim == 0 ? true : subspace_equal(j_img.count(k) ? j_img[k] : std::vector<F2Vec>{}, next, dim);
            rep.exact[{k, 1}] = ok;
            rep.pass = rep.pass && ok;
        }
        // position 2: at H_k(Lambda): ker delta == im i*
        {
            int lo = full.lower(k);
            F2Matrix next = matrix_of(del_img.count(k) && degrees.count(lo) ? del_img[k] : std::vector<F2Vec>{},
                                      HN.dim_h(lo));
            bool ok = HL.dim_h(k) == 0
                          ? true
                          : subspace_equal(i_img.count(k) ? i_img[k] : std::vector<F2Vec>{}, next, HL.dim_h(k));
            rep.exact[{k, 2}] = ok;
            rep.pass = rep.pass && ok;
        }
    }

    // Euler identity over homology
    long long chi = 0;
    for (int k : degrees) {
        int sign = (k % 2 == 0) ? 1 : -1;
        chi += sign * (HN.dim_h(k) - HQ1.dim_h(k) - HQ2.dim_h(k) + HL.dim_h(k));
    }
    rep.euler_identity = chi;
    rep.pass = rep.pass && chi == 0;
    return rep;
}

}  // namespace legendrian
