#include "equigen/rep_series.hpp"

#include "equigen/parallel.hpp"

#include <algorithm>

namespace equigen {

GradedClassFunction::GradedClassFunction(TablePtr table, int degree, ClassFunction f)
    : table_(std::move(table)) {
    add_component(degree, f);
}

ClassFunction GradedClassFunction::component(int degree) const {
    auto it = comps_.find(degree);
    if (it != comps_.end()) return it->second;
    return ClassFunction(table_);
}

void GradedClassFunction::add_component(int degree, const ClassFunction& f) {
    if (degree < 0) throw precondition_error("cohomological degree must be non-negative");
    if (f.is_zero()) return;
    auto it = comps_.find(degree);
    if (it == comps_.end()) {
        comps_.emplace(degree, f);
    } else {
        it->second += f;
        if (it->second.is_zero()) comps_.erase(it);
    }
}

GradedClassFunction GradedClassFunction::operator-() const {
    GradedClassFunction out(table_);
    for (const auto& [d, f] : comps_) out.comps_.emplace(d, -f);
    return out;
}

GradedClassFunction& GradedClassFunction::operator+=(const GradedClassFunction& o) {
    for (const auto& [d, f] : o.comps_) add_component(d, f);
    return *this;
}

GradedClassFunction& GradedClassFunction::operator-=(const GradedClassFunction& o) {
    for (const auto& [d, f] : o.comps_) add_component(d, -f);
    return *this;
}

GradedClassFunction operator*(const GradedClassFunction& a, const GradedClassFunction& b) {
    if (!same_table(a.table(), b.table()))
        throw precondition_error("graded product: mismatched character tables");
    GradedClassFunction out(a.table());
    for (const auto& [da, fa] : a.components())
        for (const auto& [db, fb] : b.components()) out.add_component(da + db, fa * fb);
    return out;
}

bool GradedClassFunction::operator==(const GradedClassFunction& o) const {
    return same_table(table_, o.table_) && comps_ == o.comps_;
}

GradedClassFunction GradedClassFunction::shifted(int s) const {
    if (s < 0 || s % 2 != 0) throw precondition_error("degree shift must be even and non-negative");
    GradedClassFunction out(table_);
    for (const auto& [d, f] : comps_) out.comps_.emplace(d + s, f);
    return out;
}

ClassFunction GradedClassFunction::euler_collapse() const {
    ClassFunction acc(table_);
    for (const auto& [d, f] : comps_) {
        if (d % 2 == 0) acc += f;
        else acc -= f;
    }
    return acc;
}

Cyclotomic GradedClassFunction::trace(int c, bool signed_by_degree) const {
    Cyclotomic acc;
    for (const auto& [d, f] : comps_) {
        if (signed_by_degree && d % 2 != 0) acc -= f.value(c);
        else acc += f.value(c);
    }
    return acc;
}

std::vector<Rational> GradedClassFunction::dimension_poly() const {
    std::vector<Rational> z;
    for (const auto& [d, f] : comps_) {
        const Cyclotomic& dim = f.dim();
        if (!dim.is_rational())
            throw verification_error("irrational dimension in graded component");
        if (static_cast<int>(z.size()) <= d) z.resize(d + 1, Rational(0));
        z[d] = dim.rational_value();
    }
    return z;
}

RepSeries::RepSeries(TablePtr table, long order) : table_(table), order_(order) {
    if (order < 0) throw precondition_error("series order must be >= 0");
    coeffs_.assign(order + 1, GradedClassFunction(table));
}

RepSeries RepSeries::one(TablePtr table, long order) {
    RepSeries s(table, order);
    s.coeff(0).add_component(0, ClassFunction::trivial(table));
    return s;
}

bool RepSeries::operator==(const RepSeries& o) const {
    if (!same_table(table_, o.table_) || order_ != o.order_) return false;
    return coeffs_ == o.coeffs_;
}

namespace {
void require_same_table_series(const RepSeries& a, const RepSeries& b, const char* what) {
    if (!same_table(a.table(), b.table()))
        throw precondition_error(std::string(what) + ": mismatched character tables");
}
}  // namespace

RepSeries series_add(const RepSeries& a, const RepSeries& b) {
    require_same_table_series(a, b, "series sum");
    RepSeries s(a.table(), std::min(a.order(), b.order()));
    for (long n = 0; n <= s.order(); ++n) s.coeff(n) = a.coeff(n) + b.coeff(n);
    return s;
}

RepSeries series_sub(const RepSeries& a, const RepSeries& b) {
    require_same_table_series(a, b, "series difference");
    RepSeries s(a.table(), std::min(a.order(), b.order()));
    for (long n = 0; n <= s.order(); ++n) s.coeff(n) = a.coeff(n) - b.coeff(n);
    return s;
}

namespace {

GradedClassFunction convolution_coefficient(const RepSeries& a, const RepSeries& b, long n) {
    GradedClassFunction acc(a.table());
    for (long k = 0; k <= n; ++k) {
        if (a.coeff(k).is_zero() || b.coeff(n - k).is_zero()) continue;
        acc += a.coeff(k) * b.coeff(n - k);
    }
    return acc;
}

}  // namespace

RepSeries series_mul_serial(const RepSeries& a, const RepSeries& b) {
    require_same_table_series(a, b, "series product");
    RepSeries s(a.table(), std::min(a.order(), b.order()));
    for (long n = 0; n <= s.order(); ++n) s.coeff(n) = convolution_coefficient(a, b, n);
    return s;
}

RepSeries series_mul(const RepSeries& a, const RepSeries& b) {
    require_same_table_series(a, b, "series product");
    RepSeries s(a.table(), std::min(a.order(), b.order()));
    detail::parallel_for(s.order() + 1,
                         [&](long n) { s.coeff(n) = convolution_coefficient(a, b, n); });
    return s;
}

RepSeries series_inverse(const RepSeries& a) {
    const GradedClassFunction unit(a.table(), 0, ClassFunction::trivial(a.table()));
    if (a.coeff(0) != unit)
        throw precondition_error("series inverse needs constant coefficient 1 (trivial rep, degree 0)");
    RepSeries inv(a.table(), a.order());
    inv.coeff(0) = unit;
    for (long n = 1; n <= a.order(); ++n) {
        GradedClassFunction acc(a.table());
        for (long k = 1; k <= n; ++k) {
            if (a.coeff(k).is_zero()) continue;
            acc += a.coeff(k) * inv.coeff(n - k);
        }
        inv.coeff(n) = -acc;
    }
    return inv;
}

RepSeries series_reindex(const RepSeries& a, long m, int extra_shift_per_n, long order) {
    if (m < 1) throw precondition_error("re-index factor must be positive");
    RepSeries s(a.table(), order);
    for (long n = 0; n * m <= order && n <= a.order(); ++n) {
        if (a.coeff(n).is_zero()) continue;
        s.coeff(n * m) += a.coeff(n).shifted(static_cast<int>(extra_shift_per_n * n));
    }
    return s;
}

std::vector<Cyclotomic> trace_values(const RepSeries& a, int c, bool signed_by_degree) {
    std::vector<Cyclotomic> v(a.order() + 1);
    for (long n = 0; n <= a.order(); ++n) v[n] = a.coeff(n).trace(c, signed_by_degree);
    return v;
}

QSeries trace_at(const RepSeries& a, int c, bool signed_by_degree) {
    QSeries s(a.order());
    const auto v = trace_values(a, c, signed_by_degree);
    for (long n = 0; n <= a.order(); ++n) {
        if (!v[n].is_rational())
            throw verification_error("trace coefficient at t^" + std::to_string(n) +
                                     " is not rational: " + v[n].str());
        s.set_coeff(n, v[n].rational_value());
    }
    return s;
}

ZTPoly poincare_at(const RepSeries& a) {
    ZTPoly out(a.order());
    for (long n = 0; n <= a.order(); ++n) {
        const auto z = a.coeff(n).dimension_poly();
        for (size_t d = 0; d < z.size(); ++d) out.add(n, static_cast<long>(d), z[d]);
    }
    return out;
}

RepSeries degree_zero_series(TablePtr table, long order,
                             const std::vector<ClassFunction>& coefficients) {
    RepSeries s(table, order);
    for (long n = 0; n <= order && n < static_cast<long>(coefficients.size()); ++n)
        s.coeff(n).add_component(0, coefficients[n]);
    return s;
}

namespace {

// the degree-0 value vector of a coefficient, checking no higher degrees
std::vector<Cyclotomic> degree_zero_values(const RepSeries& a, long n, const char* what) {
    const auto& comps = a.coeff(n).components();
    if (comps.empty()) return std::vector<Cyclotomic>(a.table()->num_classes());
    if (comps.size() != 1 || comps.begin()->first != 0)
        throw precondition_error(std::string(what) + " needs degree-0 coefficients");
    return comps.begin()->second.values();
}

}  // namespace

RepSeries series_exp(const RepSeries& a) {
    const int num_classes = a.table()->num_classes();
    const long order = a.order();
    std::vector<std::vector<Cyclotomic>> coeff_values(order + 1);
    for (long n = 0; n <= order; ++n) coeff_values[n] = degree_zero_values(a, n, "series exp");
    for (const auto& v : coeff_values[0])
        if (!v.is_zero()) throw precondition_error("series exp needs zero constant coefficient");
    // class-wise scalar exp via e' = a' e
    std::vector<std::vector<Cyclotomic>> e(order + 1, std::vector<Cyclotomic>(num_classes));
    for (int c = 0; c < num_classes; ++c) e[0][c] = Cyclotomic(1);
    for (long n = 1; n <= order; ++n) {
        for (int c = 0; c < num_classes; ++c) {
            Cyclotomic acc;
            for (long k = 1; k <= n; ++k) {
                if (coeff_values[k][c].is_zero()) continue;
                acc += Cyclotomic(Rational(k)) * coeff_values[k][c] * e[n - k][c];
            }
            acc *= frac(1, n);
            e[n][c] = acc;
        }
    }
    RepSeries out(a.table(), order);
    for (long n = 0; n <= order; ++n)
        out.coeff(n).add_component(0, ClassFunction(a.table(), e[n]));
    return out;
}

RepSeries series_log(const RepSeries& a) {
    const int num_classes = a.table()->num_classes();
    const long order = a.order();
    std::vector<std::vector<Cyclotomic>> coeff_values(order + 1);
    for (long n = 0; n <= order; ++n) coeff_values[n] = degree_zero_values(a, n, "series log");
    for (const auto& v : coeff_values[0])
        if (v != Cyclotomic(1)) throw precondition_error("series log needs constant coefficient 1");
    std::vector<std::vector<Cyclotomic>> l(order + 1, std::vector<Cyclotomic>(num_classes));
    for (long n = 1; n <= order; ++n) {
        for (int c = 0; c < num_classes; ++c) {
            Cyclotomic acc = Cyclotomic(Rational(n)) * coeff_values[n][c];
            for (long k = 1; k < n; ++k) {
                if (l[k][c].is_zero()) continue;
                acc -= Cyclotomic(Rational(k)) * l[k][c] * coeff_values[n - k][c];
            }
            acc *= frac(1, n);
            l[n][c] = acc;
        }
    }
    RepSeries out(a.table(), order);
    for (long n = 0; n <= order; ++n)
        out.coeff(n).add_component(0, ClassFunction(a.table(), l[n]));
    return out;
}

}  // namespace equigen
