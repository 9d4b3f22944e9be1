// Stratification calculus for compactified Jacobians of integral nodal curves
// with a finite group action: strata are partial normalizations, a g-stable
// stratum contributes (torus trace) x (alternating exterior trace on H^1 of
// the normalization), non-stable strata contribute only through their orbit
// stabilizers. Family-level aggregation induces stratum contributions from
// cyclic stabilizers, and orbit counts are solved as exact linear systems.
#pragma once

#include "equigen/class_function.hpp"

#include <optional>
#include <string>
#include <vector>

namespace equigen {

enum class BranchFlag { Fixed, Swapped };

// Action of one class representative on the nodes: a permutation, plus for
// each fixed node whether the two branches are fixed or swapped. Branch flags
// are per element, not class functions; the built-in examples use cyclic
// groups where class = element.
struct NodeAction {
    std::vector<int> permutation;
    std::vector<std::optional<BranchFlag>> flag;  // set exactly at fixed nodes
};

class NodalCurveData {
public:
    NodalCurveData(TablePtr table, ClassFunction normalization_h1, long nodes,
                   std::vector<NodeAction> action_by_class);

    const TablePtr& table() const { return table_; }
    const ClassFunction& normalization_h1() const { return h1_; }
    long nodes() const { return nodes_; }
    const NodeAction& action(int c) const { return action_.at(c); }

private:
    TablePtr table_;
    ClassFunction h1_;
    long nodes_;
    std::vector<NodeAction> action_;
    void validate() const;
};

struct TorusCycle {
    long length = 1;
    BranchFlag composite = BranchFlag::Fixed;
};

// Trace on the signed compactly-supported cohomology of a torus product:
// multiplicative over cycles; a cycle with identity composite contributes 0,
// a cycle with inversion composite contributes 2.
long torus_euler_trace(const std::vector<TorusCycle>& cycles);

// [e(Jbar C)] as a virtual character.
ClassFunction jac_euler_rep(const NodalCurveData& curve);

// True iff every class fixes a nonzero subspace of H^1 of the normalization
// (equivalently, no quotient of the normalization is rational); when true,
// jac_euler_rep vanishes and this is cross-checked.
bool vanishing_certificate(const NodalCurveData& curve);

struct StratumSpec {
    enum class Inducer { Cyclic, FullGroup, Matrix };
    Inducer inducer = Inducer::Cyclic;
    // Cyclic: stabilizer is <g> for a class of the ambient group; fiber data
    // lives over cyclic_table(order).
    int stabilizer_class = 0;
    // Matrix: explicit induction weights, rows = fiber-table classes,
    // columns = ambient classes.
    std::vector<std::vector<Rational>> induction_matrix;
    long base_euler = 1;
    std::optional<NodalCurveData> fiber;
    // shortcut for fibers only known through their Euler character
    std::optional<ClassFunction> fiber_euler_rep;
};

ClassFunction family_euler_rep(const TablePtr& group, const std::vector<StratumSpec>& strata);

struct OrbitSolveResult {
    enum class Status { Solved, Infeasible, UnderDetermined };
    Status status = Status::Infeasible;
    std::vector<Integer> counts;
    std::string message;
};

// Unique non-negative integer solution of sum_i n_i basis_i = target, solved
// exactly in irreducible-multiplicity coordinates.
OrbitSolveResult solve_orbit_counts(const ClassFunction& target,
                                    const std::vector<ClassFunction>& basis);

}  // namespace equigen
