#pragma once

// Free unital differential graded algebra over F2, optionally with a Laurent
// variable t tracking H1 classes via basepoint crossings.

#include <map>
#include <set>
#include <string>
#include <vector>

#include "legendrian/errors.hpp"

namespace legendrian {

enum class Coeffs { F2, F2t };

// A term is t^exp * (word of generator indices); the empty word is 1.
struct Term {
    int t_exp = 0;
    std::vector<int> word;
    auto operator<=>(const Term&) const = default;
};

// Formal F2 sum of terms.
class DgaElement {
public:
    DgaElement() = default;
    static DgaElement unit(int t_exp = 0) {
        DgaElement e;
        e.toggle(Term{t_exp, {}});
        return e;
    }
    static DgaElement zero() { return {}; }
    static DgaElement generator(int g) {
        DgaElement e;
        e.toggle(Term{0, {g}});
        return e;
    }

    void toggle(const Term& t) {
        auto it = terms_.find(t);
        if (it == terms_.end()) terms_.insert(t);
        else terms_.erase(it);
    }
    void add(const DgaElement& o) {
        for (const auto& t : o.terms_) toggle(t);
    }
    bool is_zero() const { return terms_.empty(); }
    const std::set<Term>& terms() const { return terms_; }
    // drop t exponents (specialize t = 1)
    DgaElement at_t1() const {
        DgaElement e;
        for (auto t : terms_) {
            t.t_exp = 0;
            e.toggle(t);
        }
        return e;
    }
    bool operator==(const DgaElement&) const = default;

private:
    std::set<Term> terms_;
};

DgaElement operator+(const DgaElement& a, const DgaElement& b);
DgaElement operator*(const DgaElement& a, const DgaElement& b);

struct Generator {
    std::string label;
    int grading = 0;
};

struct DSquaredReport {
    bool pass = true;
    std::vector<std::pair<std::string, bool>> per_generator;
};

struct DegreeReport {
    bool pass = true;
    std::vector<std::string> violations;
};

class Dga {
public:
    Dga() = default;
    Dga(Coeffs coeffs, int modulus, int t_degree, std::vector<Generator> gens);

    Coeffs coeffs() const { return coeffs_; }
    int grading_modulus() const { return modulus_; }
    int t_degree() const { return t_degree_; }
    int num_generators() const { return static_cast<int>(gens_.size()); }
    const std::vector<Generator>& generators() const { return gens_; }
    const Generator& generator(int i) const { return gens_[i]; }
    int index_of(const std::string& label) const;
    bool has_label(const std::string& label) const { return by_label_.count(label) > 0; }

    void set_differential(int g, DgaElement e) { diff_[g] = std::move(e); }
    const DgaElement& differential(int g) const { return diff_[g]; }

    int normalize_grading(int g) const { return modulus_ ? ((g % modulus_) + modulus_) % modulus_ : g; }
    // grading of a term; requires homogeneous input for elements
    int term_degree(const Term& t) const;

    DgaElement parse_element(const std::string& words) const;  // "b1 b2 + 1 + t^2 c1"
    std::string to_string(const DgaElement& e) const;
    std::string to_string(const Term& t) const;

    bool is_homogeneous(const DgaElement& e, int degree) const;

private:
    Coeffs coeffs_ = Coeffs::F2;
    int modulus_ = 0;
    int t_degree_ = 0;
    std::vector<Generator> gens_;
    std::map<std::string, int> by_label_;
    std::vector<DgaElement> diff_;
};

// Linear + Leibniz extension of the generator differential.
DgaElement apply_derivation(const Dga& A, const DgaElement& x);

DSquaredReport check_d_squared(const Dga& A);
// Validates that the differential is homogeneous of degree -1.
DegreeReport check_degree(const Dga& A);

// Adds fresh generators b (grading `degree`), c (grading degree - 1) with
// db = c, dc = 0.
Dga stabilize(const Dga& A, int degree);

class DgaMorphism {
public:
    DgaMorphism() = default;
    DgaMorphism(Dga source, Dga target, std::vector<DgaElement> assignment);

    const Dga& source() const { return source_; }
    const Dga& target() const { return target_; }
    const std::vector<DgaElement>& assignment() const { return assignment_; }

    DgaElement apply(const DgaElement& x) const;
    // chain-map and grading validation; throws on failure
    void validate() const;

private:
    Dga source_, target_;
    std::vector<DgaElement> assignment_;
};

// The automorphism sending generator j to j + u (u a sum of words omitting j,
// homogeneous of grading(j)); returns the map from A to the conjugated Dga.
DgaMorphism elementary_automorphism(const Dga& A, int j, const DgaElement& u);

DgaMorphism compose_morphisms(const DgaMorphism& g, const DgaMorphism& f);
DgaMorphism identity_morphism(const Dga& A);

struct InvariantFingerprint {
    std::set<std::string> lch_polynomials;
    std::map<int, int> graded_census;
    int modulus = 0;
    bool operator==(const InvariantFingerprint&) const = default;
    std::string to_string() const;
};

// Set of LCH Poincare polynomials over all augmentations, plus graded
// generator census. The computable stand-in for stable tame equivalence.
InvariantFingerprint fingerprint(const Dga& A);

}  // namespace legendrian
