#include "doctest.h"

#include "equigen/class_function.hpp"
#include "equigen/printing.hpp"

#include <initializer_list>
#include <numeric>

using namespace equigen;

namespace {

std::vector<Integer> mults(std::initializer_list<long> v) {
    std::vector<Integer> out;
    for (long x : v) out.emplace_back(x);
    return out;
}

// expected eigenvalue exponents (with multiplicity) of one table entry
void expect_eigs(const TablePtr& t, int irrep, const char* cls, std::initializer_list<long> exps) {
    const int c = t->class_index(cls);
    std::vector<long> expected(t->cls(c).order, 0);
    for (long e : exps) expected[e]++;
    CAPTURE(t->name());
    CAPTURE(irrep);
    CAPTURE(cls);
    CHECK(eigenvalue_multiset(*t, irrep, c) == expected);
}

void expect_induced(const TablePtr& t, const char* cls, std::vector<Integer> expected) {
    const ClassFunction ind = induce_from_cyclic(t, t->class_index(cls));
    CAPTURE(t->name());
    CAPTURE(cls);
    CHECK(decompose(ind) == expected);
    // dimension |G| / order
    CHECK(ind.dim().rational_value() == frac(t->group_order(), t->cls(t->class_index(cls)).order));
}

}  // namespace

TEST_CASE("verify_table passes for all built-ins") {
    for (const auto& name : builtin_table_names()) {
        const TablePtr t = builtin_table(name);
        CAPTURE(name);
        const auto report = t->verify();
        for (const auto& line : report) MESSAGE(line);
        CHECK(report.empty());
        long size_sum = 0;
        for (int c = 0; c < t->num_classes(); ++c) size_sum += t->cls(c).size;
        CHECK(size_sum == t->group_order());
    }
}

TEST_CASE("a perturbed character value is reported") {
    const TablePtr good = builtin_table("A5");
    std::vector<std::vector<Cyclotomic>> irreps;
    for (int i = 0; i < good->num_irreps(); ++i) irreps.push_back(good->irrep_row(i));
    irreps[3][1] += Cyclotomic(1);  // chi4 at 2B
    std::vector<std::vector<int>> pm;
    for (int c = 0; c < good->num_classes(); ++c) {
        pm.emplace_back();
        for (long k = 0; k < good->cls(c).order; ++k) pm.back().push_back(good->power_class(c, k));
    }
    CharacterTable bad("A5broken", good->group_order(), good->classes(), pm, irreps);
    const auto report = bad.verify();
    CHECK(!report.empty());
    bool mentions_row = false;
    for (const auto& line : report)
        if (line.find("row orthogonality") != std::string::npos) mentions_row = true;
    CHECK(mentions_row);
}

TEST_CASE("induced decompositions printed for PSL(2,7)") {
    const TablePtr t = builtin_table("PSL27");
    expect_induced(t, "2A", mults({1, 1, 1, 4, 3, 4}));
    expect_induced(t, "3A", mults({1, 1, 1, 2, 3, 2}));
    expect_induced(t, "4A", mults({1, 1, 1, 2, 1, 2}));
    expect_induced(t, "7A", mults({1, 0, 0, 0, 1, 2}));
    expect_induced(t, "7B", mults({1, 0, 0, 0, 1, 2}));
    CHECK(format_decomposition(induce_from_cyclic(t, t->class_index("7A"))) ==
          "χ1+χ5+2χ6");
}

TEST_CASE("induced decompositions printed for A5") {
    const TablePtr t = builtin_table("A5");
    expect_induced(t, "2B", mults({1, 1, 1, 2, 3}));
    expect_induced(t, "3A", mults({1, 1, 1, 2, 1}));
    expect_induced(t, "5A", mults({1, 1, 1, 0, 1}));
    expect_induced(t, "5B", mults({1, 1, 1, 0, 1}));
}

TEST_CASE("induced decompositions printed for A6") {
    const TablePtr t = builtin_table("A6");
    expect_induced(t, "2A", mults({1, 3, 3, 4, 4, 5, 4}));
    expect_induced(t, "3A", mults({1, 3, 1, 2, 2, 3, 4}));
    expect_induced(t, "3B", mults({1, 1, 3, 2, 2, 3, 4}));
    expect_induced(t, "4A", mults({1, 1, 1, 2, 2, 3, 2}));
    expect_induced(t, "5A", mults({1, 1, 1, 2, 2, 1, 2}));
    expect_induced(t, "5B", mults({1, 1, 1, 2, 2, 1, 2}));
}

TEST_CASE("induced decompositions printed for S5") {
    const TablePtr t = builtin_table("S5");
    expect_induced(t, "2A", mults({1, 0, 3, 1, 3, 2, 3}));
    expect_induced(t, "2B", mults({1, 1, 2, 2, 3, 3, 2}));
    expect_induced(t, "3A", mults({1, 1, 2, 2, 1, 1, 2}));
    expect_induced(t, "4A", mults({1, 0, 1, 1, 1, 2, 1}));
    expect_induced(t, "5A", mults({1, 1, 0, 0, 1, 1, 2}));
    expect_induced(t, "6A", mults({1, 0, 1, 1, 1, 0, 1}));
}

TEST_CASE("induction from the identity class is the regular character") {
    for (const auto& name : {"Z4", "A5", "S5"}) {
        const TablePtr t = builtin_table(name);
        CHECK(induce_from_cyclic(t, t->identity_class()) == ClassFunction::regular(t));
    }
}

TEST_CASE("inner products") {
    const TablePtr a5 = builtin_table("A5");
    const ClassFunction chi4 = ClassFunction::irreducible(a5, 3);
    CHECK(inner_product(chi4, chi4) == 1);
    const ClassFunction i5 = induce_from_cyclic(a5, a5->class_index("5A"));
    CHECK(inner_product(i5, ClassFunction::irreducible(a5, 4)) == 1);
    const TablePtr psl = builtin_table("PSL27");
    const ClassFunction i7 = induce_from_cyclic(psl, psl->class_index("7A"));
    CHECK(inner_product(i7, ClassFunction::irreducible(psl, 5)) == 2);
    CHECK_THROWS_AS(inner_product(chi4, ClassFunction::trivial(psl)), precondition_error);
}

TEST_CASE("decompose") {
    const TablePtr z2 = builtin_table("Z2");
    const ClassFunction reg = ClassFunction::regular(z2);
    CHECK(decompose(reg) == mults({1, 1}));
    // non-integral multiplicity rejected
    ClassFunction half = ClassFunction::trivial(z2);
    half *= Cyclotomic(frac(1, 2));
    CHECK_THROWS_AS(decompose(half), verification_error);
    CHECK(is_virtual_character(reg));
    CHECK(!is_virtual_character(half));
}

TEST_CASE("adams operations") {
    const TablePtr a5 = builtin_table("A5");
    const ClassFunction chi4 = ClassFunction::irreducible(a5, 3);
    CHECK(adams(chi4, 1) == chi4);
    CHECK(adams(chi4, 5).value(a5->class_index("5A")) == Cyclotomic(4));
    const TablePtr z2 = builtin_table("Z2");
    const ClassFunction sign = ClassFunction::irreducible(z2, 1);
    CHECK(adams(sign, 2) == ClassFunction::trivial(z2));
}

TEST_CASE("exterior powers") {
    const TablePtr z2 = builtin_table("Z2");
    const ClassFunction two_dim(z2, {Cyclotomic(2), Cyclotomic(-2)});  // eigenvalues -1, -1 at g
    CHECK(exterior_power(two_dim, 1) == two_dim);
    CHECK(exterior_power(two_dim, 2).value(1) == Cyclotomic(1));  // determinant
    CHECK(exterior_power(two_dim, 3).is_zero());
    const TablePtr psl = builtin_table("PSL27");
    const ClassFunction chi2 = ClassFunction::irreducible(psl, 1);
    CHECK(exterior_power(chi2, 3).value(psl->identity_class()) == Cyclotomic(1));
    // binomial dimensions
    const ClassFunction chi4 = ClassFunction::irreducible(psl, 3);  // dim 6
    CHECK(exterior_power(chi4, 2).dim() == Cyclotomic(15));
    CHECK(exterior_power(chi4, 7).is_zero());
}

TEST_CASE("refined eigenvalue table: PSL(2,7)") {
    const TablePtr t = builtin_table("PSL27");
    for (int i = 0; i < 6; ++i) {
        CHECK(eigenvalue_multiset(*t, i, t->identity_class()) ==
              std::vector<long>{t->irrep_dim(i)});
    }
    expect_eigs(t, 1, "2A", {0, 1, 1});
    expect_eigs(t, 1, "3A", {0, 1, 2});
    expect_eigs(t, 1, "4A", {0, 1, 3});
    expect_eigs(t, 1, "7A", {1, 2, 4});
    expect_eigs(t, 1, "7B", {3, 5, 6});
    expect_eigs(t, 2, "2A", {0, 1, 1});
    expect_eigs(t, 2, "3A", {0, 1, 2});
    expect_eigs(t, 2, "4A", {0, 1, 3});
    expect_eigs(t, 2, "7A", {3, 5, 6});
    expect_eigs(t, 2, "7B", {1, 2, 4});
    expect_eigs(t, 3, "2A", {0, 0, 0, 0, 1, 1});
    expect_eigs(t, 3, "3A", {0, 0, 1, 1, 2, 2});
    expect_eigs(t, 3, "4A", {0, 0, 1, 2, 2, 3});
    expect_eigs(t, 3, "7A", {1, 2, 3, 4, 5, 6});
    expect_eigs(t, 3, "7B", {1, 2, 3, 4, 5, 6});
    expect_eigs(t, 4, "2A", {0, 0, 0, 1, 1, 1, 1});
    expect_eigs(t, 4, "3A", {0, 0, 0, 1, 1, 2, 2});
    expect_eigs(t, 4, "4A", {0, 1, 1, 2, 2, 3, 3});
    expect_eigs(t, 4, "7A", {0, 1, 2, 3, 4, 5, 6});
    expect_eigs(t, 4, "7B", {0, 1, 2, 3, 4, 5, 6});
    expect_eigs(t, 5, "2A", {0, 0, 0, 0, 1, 1, 1, 1});
    expect_eigs(t, 5, "3A", {0, 0, 1, 1, 1, 2, 2, 2});
    expect_eigs(t, 5, "4A", {0, 0, 1, 1, 2, 2, 3, 3});
    expect_eigs(t, 5, "7A", {0, 0, 1, 2, 3, 4, 5, 6});
    expect_eigs(t, 5, "7B", {0, 0, 1, 2, 3, 4, 5, 6});
}

TEST_CASE("refined eigenvalue table: A5") {
    const TablePtr t = builtin_table("A5");
    expect_eigs(t, 1, "2B", {0, 1, 1});
    expect_eigs(t, 1, "3A", {0, 1, 2});
    expect_eigs(t, 1, "5A", {0, 1, 4});
    expect_eigs(t, 1, "5B", {0, 2, 3});
    expect_eigs(t, 2, "5A", {0, 2, 3});
    expect_eigs(t, 2, "5B", {0, 1, 4});
    expect_eigs(t, 3, "2B", {0, 0, 1, 1});
    expect_eigs(t, 3, "3A", {0, 0, 1, 2});
    expect_eigs(t, 3, "5A", {1, 2, 3, 4});
    expect_eigs(t, 3, "5B", {1, 2, 3, 4});
    expect_eigs(t, 4, "2B", {0, 0, 0, 1, 1});
    expect_eigs(t, 4, "3A", {0, 1, 1, 2, 2});
    expect_eigs(t, 4, "5A", {0, 1, 2, 3, 4});
    expect_eigs(t, 4, "5B", {0, 1, 2, 3, 4});
}

TEST_CASE("refined eigenvalue table: A6") {
    const TablePtr t = builtin_table("A6");
    expect_eigs(t, 1, "2A", {0, 0, 0, 1, 1});
    expect_eigs(t, 1, "3A", {0, 0, 0, 1, 2});
    expect_eigs(t, 1, "3B", {0, 1, 1, 2, 2});
    expect_eigs(t, 1, "4A", {0, 1, 2, 2, 3});
    expect_eigs(t, 1, "5A", {0, 1, 2, 3, 4});
    expect_eigs(t, 2, "3A", {0, 1, 1, 2, 2});
    expect_eigs(t, 2, "3B", {0, 0, 0, 1, 2});
    expect_eigs(t, 3, "2A", {0, 0, 0, 0, 1, 1, 1, 1});
    expect_eigs(t, 3, "3A", {0, 0, 1, 1, 1, 2, 2, 2});
    expect_eigs(t, 3, "4A", {0, 0, 1, 1, 2, 2, 3, 3});
    expect_eigs(t, 3, "5A", {0, 0, 1, 2, 2, 3, 3, 4});
    expect_eigs(t, 3, "5B", {0, 0, 1, 1, 2, 3, 4, 4});
    expect_eigs(t, 4, "5A", {0, 0, 1, 1, 2, 3, 4, 4});
    expect_eigs(t, 4, "5B", {0, 0, 1, 2, 2, 3, 3, 4});
    expect_eigs(t, 5, "2A", {0, 0, 0, 0, 0, 1, 1, 1, 1});
    expect_eigs(t, 5, "3A", {0, 0, 0, 1, 1, 1, 2, 2, 2});
    expect_eigs(t, 5, "4A", {0, 0, 0, 1, 1, 2, 2, 3, 3});
    expect_eigs(t, 5, "5A", {0, 1, 1, 2, 2, 3, 3, 4, 4});
    expect_eigs(t, 6, "2A", {0, 0, 0, 0, 1, 1, 1, 1, 1, 1});
    expect_eigs(t, 6, "3A", {0, 0, 0, 0, 1, 1, 1, 2, 2, 2});
    expect_eigs(t, 6, "4A", {0, 0, 1, 1, 1, 2, 2, 3, 3, 3});
    expect_eigs(t, 6, "5A", {0, 0, 1, 1, 2, 2, 3, 3, 4, 4});
}

TEST_CASE("refined eigenvalue table: S5") {
    const TablePtr t = builtin_table("S5");
    expect_eigs(t, 1, "2A", {1});
    expect_eigs(t, 1, "2B", {0});
    expect_eigs(t, 1, "4A", {2});
    expect_eigs(t, 1, "6A", {3});
    expect_eigs(t, 2, "2A", {0, 0, 0, 1});
    expect_eigs(t, 2, "2B", {0, 0, 1, 1});
    expect_eigs(t, 2, "3A", {0, 0, 1, 2});
    expect_eigs(t, 2, "4A", {0, 1, 2, 3});
    expect_eigs(t, 2, "5A", {1, 2, 3, 4});
    expect_eigs(t, 2, "6A", {0, 2, 3, 4});
    expect_eigs(t, 3, "2A", {0, 1, 1, 1});
    expect_eigs(t, 3, "6A", {0, 1, 3, 5});
    expect_eigs(t, 4, "2A", {0, 0, 0, 1, 1});
    expect_eigs(t, 4, "4A", {0, 1, 2, 2, 3});
    expect_eigs(t, 4, "6A", {0, 1, 2, 4, 5});
    expect_eigs(t, 5, "2A", {0, 0, 1, 1, 1});
    expect_eigs(t, 5, "4A", {0, 0, 1, 2, 3});
    expect_eigs(t, 5, "6A", {1, 2, 3, 4, 5});
    expect_eigs(t, 6, "2A", {0, 0, 0, 1, 1, 1});
    expect_eigs(t, 6, "2B", {0, 0, 1, 1, 1, 1});
    expect_eigs(t, 6, "3A", {0, 0, 1, 1, 2, 2});
    expect_eigs(t, 6, "4A", {0, 1, 1, 2, 3, 3});
    expect_eigs(t, 6, "5A", {0, 0, 1, 2, 3, 4});
    expect_eigs(t, 6, "6A", {0, 1, 2, 3, 4, 5});
}

TEST_CASE("eigenvalue multisets reconstruct characters and Adams values") {
    for (const auto& name : builtin_table_names()) {
        const TablePtr t = builtin_table(name);
        for (int i = 0; i < t->num_irreps(); ++i) {
            for (int c = 0; c < t->num_classes(); ++c) {
                const long n = t->cls(c).order;
                const auto mult = eigenvalue_multiset(*t, i, c);
                long total = std::accumulate(mult.begin(), mult.end(), 0L);
                CHECK(total == t->irrep_dim(i));
                for (long k = 1; k <= n; ++k) {
                    Cyclotomic sum_powers;
                    for (long j = 0; j < n; ++j) {
                        if (mult[j] == 0) continue;
                        sum_powers += Cyclotomic(Rational(mult[j])) * Cyclotomic::root_of_unity(n, j * k);
                    }
                    CHECK(sum_powers == t->value(i, t->power_class(c, k)));
                }
            }
        }
    }
}

TEST_CASE("alternating exterior sums factor through eigenvalues") {
    for (const auto& name : builtin_table_names()) {
        const TablePtr t = builtin_table(name);
        for (int i = 0; i < t->num_irreps(); ++i) {
            const ClassFunction chi = ClassFunction::irreducible(t, i);
            const ClassFunction alt = alternating_exterior_sum(chi);
            for (int c = 0; c < t->num_classes(); ++c) {
                const long n = t->cls(c).order;
                const auto mult = eigenvalue_multiset(*t, i, c);
                Cyclotomic prod(1);
                for (long j = 0; j < n; ++j) {
                    for (long k = 0; k < mult[j]; ++k)
                        prod *= Cyclotomic(1) - Cyclotomic::root_of_unity(n, j);
                }
                CHECK(alt.value(c) == prod);
            }
        }
    }
}

TEST_CASE("Frobenius reciprocity for cyclic induction") {
    for (const auto& name : builtin_table_names()) {
        const TablePtr t = builtin_table(name);
        for (int c = 0; c < t->num_classes(); ++c) {
            const ClassFunction ind = induce_from_cyclic(t, c);
            const long n = t->cls(c).order;
            for (int i = 0; i < t->num_irreps(); ++i) {
                Cyclotomic rhs;
                for (long k = 0; k < n; ++k) rhs += t->value(i, t->power_class(c, k));
                rhs *= frac(1, n);
                CHECK(Cyclotomic(inner_product(ind, ClassFunction::irreducible(t, i))) == rhs);
            }
        }
    }
}

TEST_CASE("fixed subspace dimensions") {
    const TablePtr psl = builtin_table("PSL27");
    const ClassFunction chi2 = ClassFunction::irreducible(psl, 1);
    CHECK(fixed_subspace_dim(chi2, psl->class_index("7A")) == 0);
    CHECK(fixed_subspace_dim(chi2, psl->class_index("2A")) == 1);
    CHECK(fixed_subspace_dim(chi2, psl->identity_class()) == 3);
}
