#pragma once

// The DGA-level transform of critical Legendrian ambient surgery: a shape
// check (dc = 1 + d, dd = 0, c unused elsewhere), deletion of c with hat
// renaming, and invariant comparison reporting.

#include <random>
#include <string>
#include <vector>

#include "legendrian/dga.hpp"

namespace legendrian {

struct SurgeryShapeReport {
    bool pass = true;
    bool dc_is_one_plus_d = true;
    bool dd_zero = true;
    bool c_unused = true;
    bool grading_step = true;  // |c| = |d| + 1
    std::vector<std::string> failures;
};

SurgeryShapeReport check_surgery_shape(const Dga& A, const std::string& c, const std::string& d);

// Deletes c, renames every other generator x to x^, transports differentials
// verbatim. Throws ShapeViolation unless check_surgery_shape passes.
Dga surger(const Dga& A, const std::string& c, const std::string& d);

struct SurgeryComparison {
    std::set<std::string> lch_before, lch_after;
    std::map<int, int> census_before, census_after;
    bool before_augmentations_force_d = true;  // every augmentation has eps(d) = 1
    bool before_has_augmentations = true;
    int n_augmentations_before = 0, n_augmentations_after = 0;
};

SurgeryComparison compare_surgery_invariants(const Dga& before, const Dga& after, const std::string& d);

// Random shape-valid Dgas for property tests: built from stabilizations and
// random elementary automorphisms, then a fresh (c, d) pair is adjoined.
Dga random_shape_valid_dga(std::mt19937_64& rng, int extra_generators, const std::string& c = "c",
                           const std::string& d = "d");

}  // namespace legendrian
