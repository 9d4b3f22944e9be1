// Class functions with exact cyclotomic values: virtual characters and the
// rational class functions that appear inside exp/log intermediates.
// Schur inner products, decomposition into irreducibles, induction from
// cyclic subgroups, Adams (power) operations, exterior powers, and the
// eigenvalue refinement of a character at a class.
#pragma once

#include "equigen/character_table.hpp"

#include <vector>

namespace equigen {

class ClassFunction {
public:
    explicit ClassFunction(TablePtr table);  // zero
    ClassFunction(TablePtr table, std::vector<Cyclotomic> values);

    static ClassFunction trivial(TablePtr table);
    static ClassFunction regular(TablePtr table);
    static ClassFunction irreducible(TablePtr table, int i);

    const TablePtr& table() const { return table_; }
    const Cyclotomic& value(int c) const { return values_.at(c); }
    const std::vector<Cyclotomic>& values() const { return values_; }
    int num_classes() const { return static_cast<int>(values_.size()); }

    bool is_zero() const;
    // value at the identity class
    const Cyclotomic& dim() const;

    ClassFunction operator-() const;
    ClassFunction& operator+=(const ClassFunction& o);
    ClassFunction& operator-=(const ClassFunction& o);
    ClassFunction& operator*=(const ClassFunction& o);  // pointwise (tensor product)
    ClassFunction& operator*=(const Cyclotomic& s);

    friend ClassFunction operator+(ClassFunction a, const ClassFunction& b) { return a += b; }
    friend ClassFunction operator-(ClassFunction a, const ClassFunction& b) { return a -= b; }
    friend ClassFunction operator*(ClassFunction a, const ClassFunction& b) { return a *= b; }
    friend ClassFunction operator*(ClassFunction a, const Cyclotomic& s) { return a *= s; }
    friend ClassFunction operator*(const Cyclotomic& s, ClassFunction a) { return a *= s; }

    bool operator==(const ClassFunction& o) const;
    bool operator!=(const ClassFunction& o) const { return !(*this == o); }

    ClassFunction conj() const;

private:
    TablePtr table_;
    std::vector<Cyclotomic> values_;
};

// (1/|G|) sum_c |c| f(c) conj(h(c)); throws verification_error when the result
// is not rational.
Rational inner_product(const ClassFunction& f, const ClassFunction& h);

// Multiplicities m_i with f = sum m_i chi_i; throws verification_error when a
// multiplicity is not an integer (f is not a virtual character).
std::vector<Integer> decompose(const ClassFunction& f);

bool is_virtual_character(const ClassFunction& f);
bool is_genuine_character(const ClassFunction& f);  // all multiplicities >= 0

// psi^k f (c) = f(c^k)
ClassFunction adams(const ClassFunction& f, long k);

// lambda^i f via the Newton recursion; lambda^0 = trivial.
ClassFunction exterior_power(const ClassFunction& f, long i);
std::vector<ClassFunction> exterior_powers(const ClassFunction& f, long max_i);

// sum_i (-1)^i lambda^i(f); equals c -> det(1 - g|f) on genuine characters.
ClassFunction alternating_exterior_sum(const ClassFunction& f);

// Ind_{<g>}^G 1 for g a representative of class c.
ClassFunction induce_from_cyclic(TablePtr table, int class_index);

// Ind_{<g>}^G of an arbitrary <g>-character given over cyclic_table(order(g)),
// class k of the cyclic table = g^k.
ClassFunction induce_cyclic_character(TablePtr table, int class_index, const ClassFunction& h_char);

// dim of the g-fixed subspace: (1/order) sum_k f(g^k). Exact rational.
Rational fixed_subspace_dim(const ClassFunction& f, int c);

// Multiplicity of zeta_n^j (j = 0..n-1, n = order of class c) among the
// eigenvalues of a class-c element on the character f. Throws
// verification_error when a multiplicity fails to be a non-negative integer.
std::vector<long> eigenvalue_multiset(const ClassFunction& f, int c);
std::vector<long> eigenvalue_multiset(const CharacterTable& table, int irrep, int c);

}  // namespace equigen
