// Equivariant Riemann-Hurwitz over a rational base: H^1 of a G-cover of P^1
// from branch stabilizer classes, quotient genera, and the exhaustive search
// for admissible branch data under the rational-quotient constraint.
#pragma once

#include "equigen/class_function.hpp"

#include <vector>

namespace equigen {

struct BranchData {
    TablePtr table;
    std::vector<int> classes;  // multiset of class indices, each of order >= 2
};

// H^1(C) = sum_p (I_1 - I_<g_p>) - 2 I_1 + 2*trivial as a virtual character.
ClassFunction h1_from_branch_data(const BranchData& branch);

// dim H^1(C)^g / 2; throws verification_error unless the fixed dimension is a
// non-negative even integer.
long quotient_genus(const ClassFunction& h1, int c);

struct RHConstraints {
    bool require_genuine = true;
    bool require_rational_quotient = true;  // some class has quotient genus 0
    bool forbid_always_fixed_irreps = true; // irreps with fixed vectors at every class
};

struct RHSolution {
    BranchData data;
    ClassFunction h1;
    std::vector<Integer> decomposition;
    long genus = 0;
};

// All branch multisets with at most max_branch_points points passing the
// constraints, in lexicographic order of class indices. Classes of equal
// order inducing identical characters are merged to their smallest index.
// The parallel path enumerates candidates concurrently; the serial reference
// is kept for testing.
std::vector<RHSolution> enumerate_branch_data(TablePtr table, int max_branch_points,
                                              const RHConstraints& constraints);
std::vector<RHSolution> enumerate_branch_data_serial(TablePtr table, int max_branch_points,
                                                     const RHConstraints& constraints);

}  // namespace equigen
