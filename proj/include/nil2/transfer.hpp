#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "nil2/cecomplex.hpp"
#include "nil2/report.hpp"

namespace nil2 {

// Candidate signs for splitting k leaves into a left subtree of u and a right
// subtree of v = k - u. The winner is frozen by calibrate_signs and recorded
// with every run.
inline constexpr int kNumSignVariants = 4;
// the calibrated variant, see calibrate_signs
inline constexpr int kFrozenSignVariant = 0;
int split_sign(int variant, int u, int v);
std::string sign_variant_formula(int variant);

// Transferred operations on harmonic representatives. Inputs and outputs are
// ambient elements lying in the harmonic subspace; the inclusion is the
// subspace inclusion, so i is implicit.
class Transfer {
public:
    explicit Transfer(Complex& cx, int variant = kFrozenSignVariant);

    Complex& complex() { return cx_; }
    int variant() const { return variant_; }

    Element m2(const Element& x, const Element& y);
    Element m3(const Element& x, const Element& y, const Element& z);
    // tree recursion; arity is args.size(), arity 1 gives zero (m1 = 0)
    Element mn(const std::vector<Element>& args);
    // the pre-projection tree sum over one arity
    Element tree_sum(const std::vector<Element>& args);

private:
    Complex& cx_;
    int variant_;
};

struct ShuffleTerm {
    int sign;
    std::vector<int> order;  // argument indices
};
// (p, q)-shuffles of arguments with the given homological degrees; the sign
// is one factor of (-1)^(deg a * deg b) per transposed pair, which is the
// permutation sign when every degree is odd
std::vector<ShuffleTerm> shuffle_terms(const std::vector<int>& degs, int p);

// identity suites; exhaustive over weight-1 generator tuples, sampled over
// harmonic tuples of mixed degree with a fixed seed
Report check_cinfty(Transfer& tr, int n_max, int mixed_samples, std::uint64_t seed);
Report check_stasheff(Transfer& tr, int n_max, int mixed_samples, std::uint64_t seed);

struct CalibrationResult {
    int variant = -1;   // frozen representative, -1 when calibration failed
    bool unique = true; // exactly one observational class passed the gates
    Report report;
};
// gates each candidate on reproducing the two-tree m3 at dim V = 3 and on the
// Stasheff identities up to arity 4 at dim V = 2 and 3, then collapses
// candidates that agree on every probe evaluation
CalibrationResult calibrate_signs(int mixed_samples = 200, std::uint64_t seed = 2026);

Report generation_closure(Transfer& tr);

}  // namespace nil2
