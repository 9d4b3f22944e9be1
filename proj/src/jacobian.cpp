#include "equigen/jacobian.hpp"

#include "linalg.hpp"

#include <algorithm>

namespace equigen {

NodalCurveData::NodalCurveData(TablePtr table, ClassFunction normalization_h1, long nodes,
                               std::vector<NodeAction> action_by_class)
    : table_(std::move(table)),
      h1_(std::move(normalization_h1)),
      nodes_(nodes),
      action_(std::move(action_by_class)) {
    validate();
}

void NodalCurveData::validate() const {
    const auto& t = *table_;
    if (!same_table(h1_.table(), table_))
        throw schema_error("normalizationH1 lives on a different table");
    if (!h1_.dim().is_integer()) throw schema_error("normalizationH1 has non-integral dimension");
    const long dim = rational_to_long(h1_.dim().rational_value());
    if (dim < 0 || dim % 2 != 0)
        throw schema_error("normalizationH1 dimension must be even and non-negative");
    if (nodes_ < 0) throw schema_error("node count must be non-negative");
    if (nodes_ > 30) throw schema_error("node count too large (strata are enumerated per subset)");
    if (action_.size() != static_cast<size_t>(t.num_classes()))
        throw schema_error("node action needed for every class");
    for (int c = 0; c < t.num_classes(); ++c) {
        const auto& a = action_[c];
        if (a.permutation.size() != static_cast<size_t>(nodes_) ||
            a.flag.size() != static_cast<size_t>(nodes_))
            throw schema_error("node action of class " + t.cls(c).label + " has wrong length");
        std::vector<bool> seen(nodes_, false);
        for (long n = 0; n < nodes_; ++n) {
            const int img = a.permutation[n];
            if (img < 0 || img >= nodes_ || seen[img])
                throw schema_error("node action of class " + t.cls(c).label + " is not a permutation");
            seen[img] = true;
            const bool fixed = img == n;
            if (fixed != a.flag[n].has_value())
                throw schema_error("branch flag of class " + t.cls(c).label +
                                   " must be given exactly at fixed nodes");
        }
    }
    // homomorphism consistency against the power map
    const auto& identity = action_[t.identity_class()];
    for (long n = 0; n < nodes_; ++n) {
        if (identity.permutation[n] != n || identity.flag[n] != BranchFlag::Fixed)
            throw schema_error("identity class must fix every node and branch");
    }
    for (int c = 0; c < t.num_classes(); ++c) {
        const long order = t.cls(c).order;
        std::vector<int> power(nodes_);
        for (long n = 0; n < nodes_; ++n) power[n] = static_cast<int>(n);
        for (long k = 1; k <= order; ++k) {
            for (long n = 0; n < nodes_; ++n) power[n] = action_[c].permutation[power[n]];
            const auto& pk = action_[t.power_class(c, k)];
            for (long n = 0; n < nodes_; ++n) {
                if (pk.permutation[n] != power[n])
                    throw schema_error("node action is not a homomorphism: permutation of " +
                                       t.cls(t.power_class(c, k)).label + " does not match " +
                                       t.cls(c).label + "^" + std::to_string(k));
            }
        }
        // flags along cycles: the composite of a length-L cycle is the flag of
        // class c^L, which must agree on all nodes of the cycle
        std::vector<bool> visited(nodes_, false);
        for (long start = 0; start < nodes_; ++start) {
            if (visited[start]) continue;
            std::vector<long> cycle;
            long cur = start;
            do {
                visited[cur] = true;
                cycle.push_back(cur);
                cur = action_[c].permutation[cur];
            } while (cur != start);
            const int composite_class = t.power_class(c, static_cast<long>(cycle.size()));
            const auto& comp = action_[composite_class];
            for (size_t i = 1; i < cycle.size(); ++i) {
                if (comp.flag[cycle[i]] != comp.flag[cycle[0]])
                    throw schema_error("branch flags of class " + t.cls(composite_class).label +
                                       " differ along one cycle of " + t.cls(c).label);
            }
        }
        // flags at c-fixed nodes alternate with the exponent
        for (long n = 0; n < nodes_; ++n) {
            if (action_[c].permutation[n] != n) continue;
            const bool swapped = action_[c].flag[n] == BranchFlag::Swapped;
            for (long k = 1; k <= order; ++k) {
                const BranchFlag expected =
                    (swapped && k % 2 == 1) ? BranchFlag::Swapped : BranchFlag::Fixed;
                if (action_[t.power_class(c, k)].flag[n] != expected)
                    throw schema_error("branch flag of class " + t.cls(t.power_class(c, k)).label +
                                       " at node " + std::to_string(n) +
                                       " is inconsistent with the power of " + t.cls(c).label);
            }
        }
    }
}

long torus_euler_trace(const std::vector<TorusCycle>& cycles) {
    long trace = 1;
    for (const auto& cyc : cycles) {
        if (cyc.length < 1) throw precondition_error("cycle length must be positive");
        if (cyc.composite == BranchFlag::Fixed) return 0;
        trace *= 2;
    }
    return trace;
}

namespace {

// sum over g-stable node subsets of the torus trace of g on the unresolved
// factors
long stable_strata_torus_sum(const NodalCurveData& curve, int c) {
    const auto& t = *curve.table();
    const auto& act = curve.action(c);
    const long nodes = curve.nodes();
    // cycles of the permutation
    std::vector<long> cycle_of_node(nodes, -1);
    std::vector<long> cycle_length;
    std::vector<BranchFlag> cycle_flag;
    std::vector<bool> visited(nodes, false);
    for (long start = 0; start < nodes; ++start) {
        if (visited[start]) continue;
        std::vector<long> cycle;
        long cur = start;
        do {
            visited[cur] = true;
            cycle.push_back(cur);
            cur = act.permutation[cur];
        } while (cur != start);
        const long id = static_cast<long>(cycle_length.size());
        for (long n : cycle) cycle_of_node[n] = id;
        cycle_length.push_back(static_cast<long>(cycle.size()));
        const int composite_class = t.power_class(c, static_cast<long>(cycle.size()));
        cycle_flag.push_back(*curve.action(composite_class).flag[cycle[0]]);
    }
    // a g-stable subset is a union of cycles; a cycle with Fixed composite
    // zeroes its stratum, so only Swapped cycles contribute, each with factor
    // 2: sum over subsets of swapped cycles of prod 2 = prod (1 + 2) = 3^s
    long total = 1;
    for (size_t i = 0; i < cycle_length.size(); ++i) {
        if (cycle_flag[i] == BranchFlag::Swapped) total *= 3;
    }
    return total;
}

}  // namespace

ClassFunction jac_euler_rep(const NodalCurveData& curve) {
    const auto& t = *curve.table();
    const ClassFunction det_term = alternating_exterior_sum(curve.normalization_h1());
    std::vector<Cyclotomic> values(t.num_classes());
    for (int c = 0; c < t.num_classes(); ++c) {
        const long torus_sum = stable_strata_torus_sum(curve, c);
        values[c] = Cyclotomic(Rational(torus_sum)) * det_term.value(c);
    }
    return {curve.table(), std::move(values)};
}

bool vanishing_certificate(const NodalCurveData& curve) {
    const auto& t = *curve.table();
    bool all_fixed = true;
    for (int c = 0; c < t.num_classes(); ++c) {
        if (fixed_subspace_dim(curve.normalization_h1(), c) == 0) {
            all_fixed = false;
            break;
        }
    }
    if (all_fixed) {
        if (!jac_euler_rep(curve).is_zero())
            throw verification_error(
                "vanishing certificate holds but jac_euler_rep is nonzero: implementation fault");
    }
    return all_fixed;
}

ClassFunction family_euler_rep(const TablePtr& group, const std::vector<StratumSpec>& strata) {
    ClassFunction total(group);
    for (const auto& stratum : strata) {
        ClassFunction fiber_rep = [&]() -> ClassFunction {
            if (stratum.fiber) return jac_euler_rep(*stratum.fiber);
            if (stratum.fiber_euler_rep) return *stratum.fiber_euler_rep;
            throw precondition_error("stratum needs fiber curve data or a fiber Euler character");
        }();
        fiber_rep *= Cyclotomic(Rational(stratum.base_euler));
        switch (stratum.inducer) {
            case StratumSpec::Inducer::FullGroup:
                if (!same_table(fiber_rep.table(), group))
                    throw precondition_error("full-group stratum fiber must live on the ambient table");
                total += fiber_rep;
                break;
            case StratumSpec::Inducer::Cyclic: {
                const long order = group->cls(stratum.stabilizer_class).order;
                if (fiber_rep.table()->group_order() != order)
                    throw precondition_error(
                        "cyclic stratum fiber must live on the stabilizer's cyclic table");
                total += induce_cyclic_character(group, stratum.stabilizer_class, fiber_rep);
                break;
            }
            case StratumSpec::Inducer::Matrix: {
                const auto& m = stratum.induction_matrix;
                if (m.size() != static_cast<size_t>(fiber_rep.num_classes()))
                    throw precondition_error("induction matrix rows must match fiber classes");
                std::vector<Cyclotomic> v(group->num_classes());
                for (int k = 0; k < fiber_rep.num_classes(); ++k) {
                    if (m[k].size() != static_cast<size_t>(group->num_classes()))
                        throw precondition_error("induction matrix columns must match ambient classes");
                    for (int x = 0; x < group->num_classes(); ++x)
                        v[x] += fiber_rep.value(k) * Cyclotomic(m[k][x]);
                }
                total += ClassFunction(group, std::move(v));
                break;
            }
        }
    }
    return total;
}

OrbitSolveResult solve_orbit_counts(const ClassFunction& target,
                                    const std::vector<ClassFunction>& basis) {
    if (basis.empty()) throw precondition_error("orbit solve needs a non-empty basis");
    OrbitSolveResult out;
    const int irreps = target.table()->num_irreps();
    std::vector<std::vector<Rational>> a(irreps, std::vector<Rational>(basis.size()));
    std::vector<Rational> b(irreps);
    for (int i = 0; i < irreps; ++i) {
        const ClassFunction chi = ClassFunction::irreducible(target.table(), i);
        b[i] = inner_product(target, chi);
        for (size_t j = 0; j < basis.size(); ++j) {
            if (!same_table(basis[j].table(), target.table()))
                throw precondition_error("orbit solve: basis on a different table");
            a[i][j] = inner_product(basis[j], chi);
        }
    }
    auto res = detail::solve_linear(std::move(a), std::move(b));
    if (res.status == detail::LinearSolve::Status::Inconsistent) {
        out.status = OrbitSolveResult::Status::Infeasible;
        out.message = "no exact solution";
        return out;
    }
    if (res.status == detail::LinearSolve::Status::UnderDetermined) {
        out.status = OrbitSolveResult::Status::UnderDetermined;
        out.message = "basis does not determine the counts";
        return out;
    }
    out.counts.reserve(res.solution.size());
    for (const auto& q : res.solution) {
        if (!is_integer(q)) {
            out.status = OrbitSolveResult::Status::Infeasible;
            out.message = "solution is not integral: " + rational_str(q);
            out.counts.clear();
            return out;
        }
        if (q < 0) {
            out.status = OrbitSolveResult::Status::Infeasible;
            out.message = "solution has a negative count: " + rational_str(q);
            out.counts.clear();
            return out;
        }
        out.counts.push_back(q.get_num());
    }
    out.status = OrbitSolveResult::Status::Solved;
    return out;
}

}  // namespace equigen
