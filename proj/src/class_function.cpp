#include "equigen/class_function.hpp"

#include <numeric>

namespace equigen {

namespace {

void require_same_table(const TablePtr& a, const TablePtr& b, const char* where) {
    if (!same_table(a, b))
        throw precondition_error(std::string(where) + ": mismatched character tables");
}

}  // namespace

ClassFunction::ClassFunction(TablePtr table)
    : table_(std::move(table)), values_(table_->num_classes()) {}

ClassFunction::ClassFunction(TablePtr table, std::vector<Cyclotomic> values)
    : table_(std::move(table)), values_(std::move(values)) {
    if (values_.size() != static_cast<size_t>(table_->num_classes()))
        throw precondition_error("class function needs one value per class");
}

ClassFunction ClassFunction::trivial(TablePtr table) {
    std::vector<Cyclotomic> v(table->num_classes(), Cyclotomic(1));
    return {std::move(table), std::move(v)};
}

ClassFunction ClassFunction::regular(TablePtr table) {
    std::vector<Cyclotomic> v(table->num_classes());
    v[table->identity_class()] = Cyclotomic(Rational(table->group_order()));
    return {std::move(table), std::move(v)};
}

ClassFunction ClassFunction::irreducible(TablePtr table, int i) {
    return {table, table->irrep_row(i)};
}

bool ClassFunction::is_zero() const {
    for (const auto& v : values_)
        if (!v.is_zero()) return false;
    return true;
}

const Cyclotomic& ClassFunction::dim() const { return values_[table_->identity_class()]; }

ClassFunction ClassFunction::operator-() const {
    ClassFunction out(table_);
    for (int c = 0; c < num_classes(); ++c) out.values_[c] = -values_[c];
    return out;
}

ClassFunction& ClassFunction::operator+=(const ClassFunction& o) {
    require_same_table(table_, o.table_, "class function sum");
    for (int c = 0; c < num_classes(); ++c) values_[c] += o.values_[c];
    return *this;
}

ClassFunction& ClassFunction::operator-=(const ClassFunction& o) {
    require_same_table(table_, o.table_, "class function difference");
    for (int c = 0; c < num_classes(); ++c) values_[c] -= o.values_[c];
    return *this;
}

ClassFunction& ClassFunction::operator*=(const ClassFunction& o) {
    require_same_table(table_, o.table_, "class function product");
    for (int c = 0; c < num_classes(); ++c) values_[c] *= o.values_[c];
    return *this;
}

ClassFunction& ClassFunction::operator*=(const Cyclotomic& s) {
    for (int c = 0; c < num_classes(); ++c) values_[c] *= s;
    return *this;
}

bool ClassFunction::operator==(const ClassFunction& o) const {
    return same_table(table_, o.table_) && values_ == o.values_;
}

ClassFunction ClassFunction::conj() const {
    ClassFunction out(table_);
    for (int c = 0; c < num_classes(); ++c) out.values_[c] = values_[c].conj();
    return out;
}

Rational inner_product(const ClassFunction& f, const ClassFunction& h) {
    require_same_table(f.table(), h.table(), "inner product");
    const auto& t = *f.table();
    Cyclotomic s;
    for (int c = 0; c < t.num_classes(); ++c)
        s += Cyclotomic(Rational(t.cls(c).size)) * f.value(c) * h.value(c).conj();
    if (!s.is_rational())
        throw verification_error("inner product is not rational: " + s.str());
    return s.rational_value() / Rational(t.group_order());
}

std::vector<Integer> decompose(const ClassFunction& f) {
    const auto& t = *f.table();
    std::vector<Integer> m(t.num_irreps());
    for (int i = 0; i < t.num_irreps(); ++i) {
        const Rational q = inner_product(f, ClassFunction::irreducible(f.table(), i));
        if (!is_integer(q))
            throw verification_error("non-integral multiplicity " + rational_str(q) +
                                     " at chi" + std::to_string(i + 1) +
                                     ": not a virtual character");
        m[i] = q.get_num();
    }
    return m;
}

bool is_virtual_character(const ClassFunction& f) {
    try {
        (void)decompose(f);
        return true;
    } catch (const verification_error&) {
        return false;
    }
}

bool is_genuine_character(const ClassFunction& f) {
    try {
        for (const auto& m : decompose(f))
            if (m < 0) return false;
        return true;
    } catch (const verification_error&) {
        return false;
    }
}

ClassFunction adams(const ClassFunction& f, long k) {
    const auto& t = *f.table();
    std::vector<Cyclotomic> v(t.num_classes());
    for (int c = 0; c < t.num_classes(); ++c) v[c] = f.value(t.power_class(c, k));
    return {f.table(), std::move(v)};
}

std::vector<ClassFunction> exterior_powers(const ClassFunction& f, long max_i) {
    // Newton: i * lambda^i = sum_{k=1}^{i} (-1)^{k-1} psi^k(f) lambda^{i-k}
    std::vector<ClassFunction> lambda;
    lambda.push_back(ClassFunction::trivial(f.table()));
    std::vector<ClassFunction> psi;  // psi[k-1] = adams(f, k)
    for (long i = 1; i <= max_i; ++i) {
        psi.push_back(adams(f, i));
        ClassFunction acc(f.table());
        for (long k = 1; k <= i; ++k) {
            ClassFunction term = psi[k - 1] * lambda[i - k];
            if (k % 2 == 0) acc -= term;
            else acc += term;
        }
        acc *= Cyclotomic(frac(1, i));
        lambda.push_back(std::move(acc));
    }
    return lambda;
}

ClassFunction exterior_power(const ClassFunction& f, long i) {
    if (i < 0) throw precondition_error("exterior power index must be non-negative");
    return exterior_powers(f, i).back();
}

ClassFunction alternating_exterior_sum(const ClassFunction& f) {
    if (!f.dim().is_integer())
        throw precondition_error("alternating exterior sum needs an integral dimension");
    const long d = rational_to_long(f.dim().rational_value());
    if (d < 0) throw precondition_error("alternating exterior sum needs dimension >= 0");
    auto lambda = exterior_powers(f, d);
    ClassFunction acc(f.table());
    for (long i = 0; i <= d; ++i) {
        if (i % 2 == 0) acc += lambda[i];
        else acc -= lambda[i];
    }
    return acc;
}

ClassFunction induce_from_cyclic(TablePtr table, int class_index) {
    const long n = table->cls(class_index).order;
    return induce_cyclic_character(std::move(table), class_index,
                                   ClassFunction::trivial(cyclic_table(n)));
}

ClassFunction induce_cyclic_character(TablePtr table, int class_index, const ClassFunction& h_char) {
    const auto& t = *table;
    const long n = t.cls(class_index).order;
    if (h_char.num_classes() != n || h_char.table()->group_order() != n)
        throw precondition_error("induced character must live on the cyclic table of the class order");
    std::vector<Cyclotomic> v(t.num_classes());
    for (long k = 0; k < n; ++k) {
        const int target = t.power_class(class_index, k);
        v[target] += h_char.value(static_cast<int>(k));
    }
    for (int c = 0; c < t.num_classes(); ++c) {
        v[c] *= frac(t.group_order(), n * t.cls(c).size);
    }
    return {std::move(table), std::move(v)};
}

Rational fixed_subspace_dim(const ClassFunction& f, int c) {
    const auto& t = *f.table();
    const long n = t.cls(c).order;
    Cyclotomic s;
    for (long k = 0; k < n; ++k) s += f.value(t.power_class(c, k));
    if (!s.is_rational())
        throw verification_error("fixed-subspace dimension is not rational at class " +
                                 t.cls(c).label);
    return s.rational_value() / Rational(n);
}

std::vector<long> eigenvalue_multiset(const ClassFunction& f, int c) {
    const auto& t = *f.table();
    const long n = t.cls(c).order;
    std::vector<Cyclotomic> at_powers(n);
    for (long k = 0; k < n; ++k) at_powers[k] = f.value(t.power_class(c, k));
    std::vector<long> mult(n, 0);
    for (long j = 0; j < n; ++j) {
        Cyclotomic s;
        for (long k = 0; k < n; ++k) s += at_powers[k] * Cyclotomic::root_of_unity(n, -j * k);
        if (!s.is_rational())
            throw verification_error("eigenvalue multiplicity not rational at class " + t.cls(c).label);
        const Rational m = s.rational_value() / Rational(n);
        if (!is_integer(m) || m < 0)
            throw verification_error("eigenvalue multiplicity " + rational_str(m) +
                                     " of zeta^" + std::to_string(j) + " at class " +
                                     t.cls(c).label + " is not a non-negative integer");
        mult[j] = rational_to_long(m);
    }
    return mult;
}

std::vector<long> eigenvalue_multiset(const CharacterTable& table, int irrep, int c) {
    const long n = table.cls(c).order;
    std::vector<long> mult(n, 0);
    for (long j = 0; j < n; ++j) {
        Cyclotomic s;
        for (long k = 0; k < n; ++k)
            s += table.value(irrep, table.power_class(c, k)) * Cyclotomic::root_of_unity(n, -j * k);
        if (!s.is_rational())
            throw verification_error("eigenvalue multiplicity not rational");
        const Rational m = s.rational_value() / Rational(n);
        if (!is_integer(m) || m < 0)
            throw verification_error("eigenvalue multiplicity " + rational_str(m) +
                                     " of zeta^" + std::to_string(j) +
                                     " is not a non-negative integer");
        mult[j] = rational_to_long(m);
    }
    return mult;
}

}  // namespace equigen
