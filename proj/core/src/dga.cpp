#include "legendrian/dga.hpp"

#include <algorithm>
#include <sstream>

#include "legendrian/linearize.hpp"

namespace legendrian {

DgaElement operator+(const DgaElement& a, const DgaElement& b) {
    DgaElement r = a;
    r.add(b);
    return r;
}

DgaElement operator*(const DgaElement& a, const DgaElement& b) {
    DgaElement r;
    for (const auto& s : a.terms())
        for (const auto& t : b.terms()) {
            Term u;
            u.t_exp = s.t_exp + t.t_exp;
            u.word = s.word;
            u.word.insert(u.word.end(), t.word.begin(), t.word.end());
            r.toggle(u);
        }
    return r;
}

Dga::Dga(Coeffs coeffs, int modulus, int t_degree, std::vector<Generator> gens)
    : coeffs_(coeffs), modulus_(modulus), t_degree_(t_degree), gens_(std::move(gens)) {
    for (int i = 0; i < num_generators(); ++i) {
        if (!by_label_.emplace(gens_[i].label, i).second)
            throw Error(Err::MalformedToken, "duplicate generator label " + gens_[i].label);
        gens_[i].grading = normalize_grading(gens_[i].grading);
    }
    diff_.assign(num_generators(), DgaElement{});
}

int Dga::index_of(const std::string& label) const {
    auto it = by_label_.find(label);
    if (it == by_label_.end()) throw Error(Err::UnknownGenerator, label);
    return it->second;
}

int Dga::term_degree(const Term& t) const {
    long long deg = static_cast<long long>(t.t_exp) * t_degree_;
    for (int g : t.word) deg += gens_[g].grading;
    return normalize_grading(static_cast<int>(deg));
}

bool Dga::is_homogeneous(const DgaElement& e, int degree) const {
    int want = normalize_grading(degree);
    for (const auto& t : e.terms())
        if (term_degree(t) != want) return false;
    return true;
}

DgaElement Dga::parse_element(const std::string& words) const {
    DgaElement out;
    std::string part;
    std::istringstream in(words);
    std::vector<std::string> chunks;
    {
        std::string tok;
        std::string cur;
        while (in >> tok) {
            if (tok == "+") {
                chunks.push_back(cur);
                cur.clear();
            } else {
                if (!cur.empty()) cur += ' ';
                cur += tok;
            }
        }
        chunks.push_back(cur);
    }
    for (const auto& chunk : chunks) {
        if (chunk.empty()) continue;
        Term t;
        std::istringstream cs(chunk);
        std::string w;
        while (cs >> w) {
            if (w == "1") continue;
            if (w.rfind("t^", 0) == 0) {
                t.t_exp += std::stoi(w.substr(2));
            } else if (w == "t") {
                t.t_exp += 1;
            } else {
                t.word.push_back(index_of(w));
            }
        }
        out.toggle(t);
    }
    return out;
}

std::string Dga::to_string(const Term& t) const {
    std::string s;
    if (t.t_exp != 0) s = "t^" + std::to_string(t.t_exp);
    for (int g : t.word) {
        if (!s.empty()) s += ' ';
        s += gens_[g].label;
    }
    if (s.empty()) s = "1";
    return s;
}

std::string Dga::to_string(const DgaElement& e) const {
    if (e.is_zero()) return "0";
    std::string s;
    for (const auto& t : e.terms()) {
        if (!s.empty()) s += " + ";
        s += to_string(t);
    }
    return s;
}

DgaElement apply_derivation(const Dga& A, const DgaElement& x) {
    DgaElement out;
    for (const auto& t : x.terms()) {
        for (int g : t.word)
            if (g < 0 || g >= A.num_generators()) throw Error(Err::UnknownGenerator, "index " + std::to_string(g));
        for (size_t i = 0; i < t.word.size(); ++i) {
            const DgaElement& dg = A.differential(t.word[i]);
            for (const auto& m : dg.terms()) {
                Term u;
                u.t_exp = t.t_exp + m.t_exp;
                u.word.assign(t.word.begin(), t.word.begin() + i);
                u.word.insert(u.word.end(), m.word.begin(), m.word.end());
                u.word.insert(u.word.end(), t.word.begin() + i + 1, t.word.end());
                out.toggle(u);
            }
        }
    }
    return out;
}

DSquaredReport check_d_squared(const Dga& A) {
    DSquaredReport rep;
    for (int g = 0; g < A.num_generators(); ++g) {
        bool ok = apply_derivation(A, A.differential(g)).is_zero();
        rep.per_generator.push_back({A.generator(g).label, ok});
        rep.pass = rep.pass && ok;
    }
    return rep;
}

DegreeReport check_degree(const Dga& A) {
    DegreeReport rep;
    for (int g = 0; g < A.num_generators(); ++g) {
        int want = A.normalize_grading(A.generator(g).grading - 1);
        for (const auto& t : A.differential(g).terms())
            if (A.term_degree(t) != want) {
                rep.pass = false;
                rep.violations.push_back(A.generator(g).label + " -> " + A.to_string(t));
            }
    }
    return rep;
}

Dga stabilize(const Dga& A, int degree) {
    auto gens = A.generators();
    int n = 1;
    auto fresh = [&](const std::string& stem) {
        while (A.has_label(stem + std::to_string(n))) ++n;
        return stem + std::to_string(n);
    };
    std::string bl = fresh("sb");
    std::string cl = fresh("sc");
    while (bl == cl || A.has_label(cl)) cl = "sc" + std::to_string(++n);
    gens.push_back({bl, degree});
    gens.push_back({cl, degree - 1});
    Dga out(A.coeffs(), A.grading_modulus(), A.t_degree(), gens);
    for (int g = 0; g < A.num_generators(); ++g) out.set_differential(g, A.differential(g));
    out.set_differential(A.num_generators(), DgaElement::generator(A.num_generators() + 1));
    return out;
}

DgaMorphism::DgaMorphism(Dga source, Dga target, std::vector<DgaElement> assignment)
    : source_(std::move(source)), target_(std::move(target)), assignment_(std::move(assignment)) {
    if (static_cast<int>(assignment_.size()) != source_.num_generators())
        throw Error(Err::SourceTargetMismatch, "assignment size mismatch");
}

DgaElement DgaMorphism::apply(const DgaElement& x) const {
    DgaElement out;
    for (const auto& t : x.terms()) {
        DgaElement prod = DgaElement::unit(t.t_exp);
        for (int g : t.word) prod = prod * assignment_[g];
        out.add(prod);
    }
    return out;
}

void DgaMorphism::validate() const {
    for (int g = 0; g < source_.num_generators(); ++g) {
        if (!target_.is_homogeneous(assignment_[g], source_.generator(g).grading))
            throw Error(Err::GradingMismatch, "morphism not grading-preserving at " + source_.generator(g).label);
        DgaElement lhs = apply(apply_derivation(source_, DgaElement::generator(g)));
        DgaElement rhs = apply_derivation(target_, assignment_[g]);
        if (!(lhs == rhs))
            throw Error(Err::SourceTargetMismatch, "not a chain map at " + source_.generator(g).label);
    }
}

DgaMorphism identity_morphism(const Dga& A) {
    std::vector<DgaElement> id;
    for (int g = 0; g < A.num_generators(); ++g) id.push_back(DgaElement::generator(g));
    return DgaMorphism(A, A, std::move(id));
}

DgaMorphism elementary_automorphism(const Dga& A, int j, const DgaElement& u) {
    if (j < 0 || j >= A.num_generators()) throw Error(Err::UnknownGenerator, "index " + std::to_string(j));
    for (const auto& t : u.terms())
        for (int g : t.word)
            if (g == j) throw Error(Err::SelfReference, "u contains generator " + A.generator(j).label);
    if (!A.is_homogeneous(u, A.generator(j).grading))
        throw Error(Err::GradingMismatch, "u not homogeneous of grading " + std::to_string(A.generator(j).grading));

    std::vector<DgaElement> phi;
    for (int g = 0; g < A.num_generators(); ++g) {
        DgaElement e = DgaElement::generator(g);
        if (g == j) e.add(u);
        phi.push_back(e);
    }
    // conjugated differential on the target copy; phi is an involution
    Dga target(A.coeffs(), A.grading_modulus(), A.t_degree(), A.generators());
    DgaMorphism raw(A, target, phi);
    for (int g = 0; g < A.num_generators(); ++g)
        target.set_differential(g, raw.apply(apply_derivation(A, raw.apply(DgaElement::generator(g)))));
    DgaMorphism out(A, target, phi);
    out.validate();
    return out;
}

DgaMorphism compose_morphisms(const DgaMorphism& g, const DgaMorphism& f) {
    // targets and sources must agree as presented algebras
    const Dga& mid1 = f.target();
    const Dga& mid2 = g.source();
    if (mid1.num_generators() != mid2.num_generators())
        throw Error(Err::SourceTargetMismatch, "generator count mismatch");
    for (int i = 0; i < mid1.num_generators(); ++i) {
        if (mid1.generator(i).label != mid2.generator(i).label ||
            mid1.generator(i).grading != mid2.generator(i).grading ||
            !(mid1.differential(i) == mid2.differential(i)))
            throw Error(Err::SourceTargetMismatch, "target(f) != source(g) at " + mid1.generator(i).label);
    }
    std::vector<DgaElement> comp;
    for (int i = 0; i < f.source().num_generators(); ++i) comp.push_back(g.apply(f.assignment()[i]));
    DgaMorphism out(f.source(), g.target(), std::move(comp));
    out.validate();
    return out;
}

std::string InvariantFingerprint::to_string() const {
    std::string s = "mod " + std::to_string(modulus) + "; census {";
    bool first = true;
    for (auto [deg, cnt] : graded_census) {
        if (!first) s += ", ";
        first = false;
        s += std::to_string(deg) + ": " + std::to_string(cnt);
    }
    s += "}; lch {";
    first = true;
    for (const auto& p : lch_polynomials) {
        if (!first) s += ", ";
        first = false;
        s += p;
    }
    return s + "}";
}

InvariantFingerprint fingerprint(const Dga& A) {
    if (!check_d_squared(A).pass) throw Error(Err::ShapeViolation, "fingerprint requires d^2 = 0");
    InvariantFingerprint fp;
    fp.modulus = A.grading_modulus();
    for (const auto& g : A.generators()) fp.graded_census[g.grading]++;
    fp.lch_polynomials = lch_set(A);
    return fp;
}

}  // namespace legendrian
