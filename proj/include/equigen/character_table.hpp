// Conjugacy-class data and character tables of finite groups, with the power
// map (class of g^k) and exact cyclotomic character values.
#pragma once

#include "equigen/cyclotomic.hpp"

#include <memory>
#include <string>
#include <vector>

namespace equigen {

struct ConjClass {
    std::string label;
    long size = 1;
    long order = 1;  // element order
};

class CharacterTable {
public:
    // power_map[c] has length order(c); power_map[c][k] = class of g^k.
    // irreps[i][c] = chi_i(c).
    CharacterTable(std::string name, long group_order, std::vector<ConjClass> classes,
                   std::vector<std::vector<int>> power_map,
                   std::vector<std::vector<Cyclotomic>> irreps);

    const std::string& name() const { return name_; }
    long group_order() const { return group_order_; }
    int num_classes() const { return static_cast<int>(classes_.size()); }
    int num_irreps() const { return static_cast<int>(irreps_.size()); }
    const ConjClass& cls(int c) const { return classes_.at(c); }
    const std::vector<ConjClass>& classes() const { return classes_; }
    int identity_class() const { return identity_class_; }

    // class of g^k for a representative g of class c, any k >= 0
    int power_class(int c, long k) const;

    const Cyclotomic& value(int irrep, int c) const { return irreps_.at(irrep).at(c); }
    const std::vector<Cyclotomic>& irrep_row(int irrep) const { return irreps_.at(irrep); }
    long irrep_dim(int irrep) const;

    int class_index(const std::string& label_or_index) const;

    // Diagnostics for every violated table invariant (orthogonality, power-map
    // consistency, eigenvalue integrality); empty result = valid table.
    std::vector<std::string> verify() const;

private:
    std::string name_;
    long group_order_;
    std::vector<ConjClass> classes_;
    std::vector<std::vector<int>> power_map_;
    std::vector<std::vector<Cyclotomic>> irreps_;
    int identity_class_;
};

using TablePtr = std::shared_ptr<const CharacterTable>;

inline bool same_table(const TablePtr& a, const TablePtr& b) {
    return a == b || (a && b && a->name() == b->name() && a->num_classes() == b->num_classes());
}

// Built-in registry: TRIVIAL, Z2..Z8, PSL27, A5, A6, S5.
TablePtr builtin_table(const std::string& name);
std::vector<std::string> builtin_table_names();
TablePtr cyclic_table(long n);

}  // namespace equigen
