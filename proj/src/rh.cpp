#include "equigen/rh.hpp"

#include "equigen/parallel.hpp"

#include <algorithm>
#include <optional>

namespace equigen {

ClassFunction h1_from_branch_data(const BranchData& branch) {
    const TablePtr& table = branch.table;
    for (int c : branch.classes) {
        if (table->cls(c).order < 2)
            throw precondition_error("branch class " + table->cls(c).label + " is unramified");
    }
    const ClassFunction regular = ClassFunction::regular(table);
    ClassFunction h1 = regular * Cyclotomic(Rational(static_cast<long>(branch.classes.size()) - 2));
    for (int c : branch.classes) h1 -= induce_from_cyclic(table, c);
    h1 += ClassFunction::trivial(table) * Cyclotomic(Rational(2));
    return h1;
}

long quotient_genus(const ClassFunction& h1, int c) {
    const Rational fixed = fixed_subspace_dim(h1, c);
    if (!is_integer(fixed) || fixed < 0 || fixed.get_num() % 2 != 0)
        throw verification_error("fixed subspace dimension " + rational_str(fixed) +
                                 " at class " + h1.table()->cls(c).label +
                                 " is not a non-negative even integer");
    return rational_to_long(fixed) / 2;
}

namespace {

struct SearchContext {
    TablePtr table;
    std::vector<int> usable;          // canonical branch classes, order >= 2
    std::vector<bool> forbidden_irrep;
    RHConstraints constraints;
};

std::optional<RHSolution> evaluate_candidate(const SearchContext& ctx,
                                             const std::vector<int>& classes) {
    const auto& t = *ctx.table;
    // dimension prune: dim = (B-2)|G| - sum |G|/ord + 2
    long dim = (static_cast<long>(classes.size()) - 2) * t.group_order() + 2;
    for (int c : classes) dim -= t.group_order() / t.cls(c).order;
    if (dim < 0 || dim % 2 != 0) return std::nullopt;

    BranchData data{ctx.table, classes};
    ClassFunction h1 = h1_from_branch_data(data);
    std::vector<Integer> mult = decompose(h1);

    if (ctx.constraints.require_genuine) {
        for (const auto& m : mult)
            if (m < 0) return std::nullopt;
    }
    if (ctx.constraints.forbid_always_fixed_irreps) {
        for (size_t i = 0; i < mult.size(); ++i)
            if (ctx.forbidden_irrep[i] && mult[i] != 0) return std::nullopt;
    }
    if (ctx.constraints.require_rational_quotient) {
        bool some_rational = false;
        for (int c = 0; c < t.num_classes(); ++c) {
            if (fixed_subspace_dim(h1, c) == 0) {
                some_rational = true;
                break;
            }
        }
        if (!some_rational) return std::nullopt;
    }
    RHSolution sol{std::move(data), std::move(h1), std::move(mult), dim / 2};
    return sol;
}

SearchContext make_context(TablePtr table, const RHConstraints& constraints) {
    SearchContext ctx{std::move(table), {}, {}, constraints};
    const auto& t = *ctx.table;
    // merge classes with equal order and identical induced character to the
    // smallest index (7A/7B, 5A/5B style pairs give the same H^1)
    std::vector<ClassFunction> induced;
    induced.reserve(t.num_classes());
    for (int c = 0; c < t.num_classes(); ++c) induced.push_back(induce_from_cyclic(ctx.table, c));
    for (int c = 0; c < t.num_classes(); ++c) {
        if (t.cls(c).order < 2) continue;
        bool canonical = true;
        for (int d = 0; d < c; ++d) {
            if (t.cls(d).order == t.cls(c).order && induced[d] == induced[c]) {
                canonical = false;
                break;
            }
        }
        if (canonical) ctx.usable.push_back(c);
    }
    ctx.forbidden_irrep.assign(t.num_irreps(), false);
    for (int i = 0; i < t.num_irreps(); ++i) {
        bool always_fixed = true;
        const ClassFunction chi = ClassFunction::irreducible(ctx.table, i);
        for (int c = 0; c < t.num_classes(); ++c) {
            if (fixed_subspace_dim(chi, c) == 0) {
                always_fixed = false;
                break;
            }
        }
        ctx.forbidden_irrep[i] = always_fixed;
    }
    return ctx;
}

std::vector<std::vector<int>> candidate_multisets(const SearchContext& ctx, int max_branch_points) {
    std::vector<std::vector<int>> out;
    std::vector<int> current;
    auto rec = [&](auto&& self, size_t from) -> void {
        out.push_back(current);
        if (current.size() == static_cast<size_t>(max_branch_points)) return;
        for (size_t i = from; i < ctx.usable.size(); ++i) {
            current.push_back(ctx.usable[i]);
            self(self, i);
            current.pop_back();
        }
    };
    rec(rec, 0);
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    });
    return out;
}

}  // namespace

std::vector<RHSolution> enumerate_branch_data_serial(TablePtr table, int max_branch_points,
                                                     const RHConstraints& constraints) {
    if (max_branch_points < 0 || max_branch_points > 6)
        throw precondition_error("max branch points must be 0..6");
    const SearchContext ctx = make_context(std::move(table), constraints);
    std::vector<RHSolution> solutions;
    for (const auto& candidate : candidate_multisets(ctx, max_branch_points)) {
        if (auto sol = evaluate_candidate(ctx, candidate)) solutions.push_back(std::move(*sol));
    }
    return solutions;
}

std::vector<RHSolution> enumerate_branch_data(TablePtr table, int max_branch_points,
                                              const RHConstraints& constraints) {
    if (max_branch_points < 0 || max_branch_points > 6)
        throw precondition_error("max branch points must be 0..6");
    const SearchContext ctx = make_context(std::move(table), constraints);
    const auto candidates = candidate_multisets(ctx, max_branch_points);
    std::vector<std::optional<RHSolution>> slots(candidates.size());
    detail::parallel_for(static_cast<long>(candidates.size()),
                         [&](long i) { slots[i] = evaluate_candidate(ctx, candidates[i]); });
    std::vector<RHSolution> solutions;
    for (auto& slot : slots) {
        if (slot) solutions.push_back(std::move(*slot));
    }
    return solutions;
}

}  // namespace equigen
