#include "equigen/character_table.hpp"

#include "equigen/class_function.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

namespace equigen {

CharacterTable::CharacterTable(std::string name, long group_order, std::vector<ConjClass> classes,
                               std::vector<std::vector<int>> power_map,
                               std::vector<std::vector<Cyclotomic>> irreps)
    : name_(std::move(name)),
      group_order_(group_order),
      classes_(std::move(classes)),
      power_map_(std::move(power_map)),
      irreps_(std::move(irreps)),
      identity_class_(-1) {
    if (group_order_ < 1) throw schema_error("group order must be positive");
    if (classes_.empty()) throw schema_error("table needs at least one class");
    if (power_map_.size() != classes_.size()) throw schema_error("powerMap size mismatch");
    for (size_t c = 0; c < classes_.size(); ++c) {
        const auto& cc = classes_[c];
        if (cc.size < 1 || cc.order < 1) throw schema_error("class size/order must be positive");
        if (group_order_ % cc.size != 0)
            throw schema_error("class size of " + cc.label + " does not divide group order");
        if (group_order_ % cc.order != 0)
            throw schema_error("element order of " + cc.label + " does not divide group order");
        if (power_map_[c].size() != static_cast<size_t>(cc.order))
            throw schema_error("powerMap row of " + cc.label + " must have length order");
        for (int target : power_map_[c]) {
            if (target < 0 || target >= static_cast<int>(classes_.size()))
                throw schema_error("powerMap entry out of range for " + cc.label);
        }
        if (cc.order == 1) {
            if (identity_class_ >= 0) throw schema_error("two classes of order 1");
            identity_class_ = static_cast<int>(c);
        }
    }
    if (identity_class_ < 0) throw schema_error("no identity class");
    for (const auto& row : irreps_) {
        if (row.size() != classes_.size()) throw schema_error("irrep row length mismatch");
    }
}

int CharacterTable::power_class(int c, long k) const {
    const auto& row = power_map_.at(c);
    long n = classes_[c].order;
    k %= n;
    if (k < 0) k += n;
    return row[k];
}

long CharacterTable::irrep_dim(int irrep) const {
    return rational_to_long(value(irrep, identity_class_).rational_value());
}

int CharacterTable::class_index(const std::string& label_or_index) const {
    for (size_t c = 0; c < classes_.size(); ++c) {
        if (classes_[c].label == label_or_index) return static_cast<int>(c);
    }
    if (!label_or_index.empty() &&
        std::all_of(label_or_index.begin(), label_or_index.end(),
                    [](unsigned char ch) { return std::isdigit(ch); })) {
        int c = std::stoi(label_or_index);
        if (c >= 0 && c < num_classes()) return c;
    }
    throw precondition_error("unknown class '" + label_or_index + "' in table " + name_);
}

std::vector<std::string> CharacterTable::verify() const {
    std::vector<std::string> report;
    auto complain = [&report](const std::string& msg) { report.push_back(msg); };

    long size_sum = 0;
    for (const auto& cc : classes_) size_sum += cc.size;
    if (size_sum != group_order_)
        complain("class sizes sum to " + std::to_string(size_sum) + ", expected " +
                 std::to_string(group_order_));
    if (num_irreps() != num_classes())
        complain("number of irreps differs from number of classes");

    for (int c = 0; c < num_classes(); ++c) {
        for (int d = c + 1; d < num_classes(); ++d) {
            if (classes_[c].label == classes_[d].label) complain("duplicate class label " + classes_[c].label);
        }
    }

    long dim2 = 0;
    bool dims_ok = true;
    for (int i = 0; i < num_irreps(); ++i) {
        const Cyclotomic& d = value(i, identity_class_);
        if (!d.is_integer()) {
            complain("irrep " + std::to_string(i + 1) + " has non-integral dimension " + d.str());
            dims_ok = false;
            continue;
        }
        dim2 += rational_to_long(d.rational_value()) * rational_to_long(d.rational_value());
    }
    if (dims_ok && dim2 != group_order_)
        complain("sum of squared dimensions is " + std::to_string(dim2) + ", expected " +
                 std::to_string(group_order_));

    // power-map consistency
    for (int c = 0; c < num_classes(); ++c) {
        const long n = classes_[c].order;
        if (power_class(c, 0) != identity_class_)
            complain("powerMap(" + classes_[c].label + ", 0) is not the identity class");
        for (long k = 0; k < n; ++k) {
            const int pc = power_class(c, k);
            const long expected = n / std::gcd(n, k == 0 ? n : k);
            if (classes_[pc].order != expected)
                complain("powerMap(" + classes_[c].label + ", " + std::to_string(k) +
                         ") has order " + std::to_string(classes_[pc].order) + ", expected " +
                         std::to_string(expected));
            for (long j = 0; j < n; ++j) {
                if (power_class(pc, j) != power_class(c, k * j))
                    complain("powerMap not multiplicative at (" + classes_[c].label + ", " +
                             std::to_string(k) + ", " + std::to_string(j) + ")");
            }
        }
    }

    // orthogonality
    if (num_irreps() == num_classes()) {
        for (int i = 0; i < num_irreps(); ++i) {
            for (int j = i; j < num_irreps(); ++j) {
                Cyclotomic s;
                for (int c = 0; c < num_classes(); ++c)
                    s += Cyclotomic(Rational(classes_[c].size)) * value(i, c) * value(j, c).conj();
                const Cyclotomic expected = (i == j) ? Cyclotomic(Rational(group_order_)) : Cyclotomic();
                if (s != expected)
                    complain("row orthogonality fails for chi" + std::to_string(i + 1) + ", chi" +
                             std::to_string(j + 1));
            }
        }
        for (int c = 0; c < num_classes(); ++c) {
            for (int d = c; d < num_classes(); ++d) {
                Cyclotomic s;
                for (int i = 0; i < num_irreps(); ++i) s += value(i, c) * value(i, d).conj();
                const Cyclotomic expected =
                    (c == d) ? Cyclotomic(frac(group_order_, classes_[c].size)) : Cyclotomic();
                if (s != expected)
                    complain("column orthogonality fails for " + classes_[c].label + ", " +
                             classes_[d].label);
            }
        }
        // eigenvalue integrality of every character at every class
        for (int i = 0; i < num_irreps(); ++i) {
            for (int c = 0; c < num_classes(); ++c) {
                try {
                    (void)eigenvalue_multiset(*this, i, c);
                } catch (const error& e) {
                    complain("eigenvalue refinement fails for chi" + std::to_string(i + 1) + " at " +
                             classes_[c].label + ": " + e.what());
                }
            }
        }
    }
    return report;
}

}  // namespace equigen
