// Graded virtual representations (cohomological grading) and truncated power
// series over them: the coefficient ring R_C(G) with degree shifts, graded
// tensor products, signed Euler collapse, trace and Poincare specializations,
// and formal exp/log on degree-0 class-function series.
#pragma once

#include "equigen/class_function.hpp"
#include "equigen/qseries.hpp"

#include <map>

namespace equigen {

class GradedClassFunction {
public:
    explicit GradedClassFunction(TablePtr table) : table_(std::move(table)) {}
    GradedClassFunction(TablePtr table, int degree, ClassFunction f);

    const TablePtr& table() const { return table_; }
    const std::map<int, ClassFunction>& components() const { return comps_; }
    // zero when absent
    ClassFunction component(int degree) const;
    void add_component(int degree, const ClassFunction& f);  // drops zero results
    bool is_zero() const { return comps_.empty(); }
    int max_degree() const { return comps_.empty() ? 0 : comps_.rbegin()->first; }

    GradedClassFunction operator-() const;
    GradedClassFunction& operator+=(const GradedClassFunction& o);
    GradedClassFunction& operator-=(const GradedClassFunction& o);
    friend GradedClassFunction operator+(GradedClassFunction a, const GradedClassFunction& b) { return a += b; }
    friend GradedClassFunction operator-(GradedClassFunction a, const GradedClassFunction& b) { return a -= b; }
    // graded tensor product: degrees add
    friend GradedClassFunction operator*(const GradedClassFunction& a, const GradedClassFunction& b);
    bool operator==(const GradedClassFunction& o) const;
    bool operator!=(const GradedClassFunction& o) const { return !(*this == o); }

    // component at d moves to d + s (s even, non-negative)
    GradedClassFunction shifted(int s) const;

    // sum_d (-1)^d component(d)
    ClassFunction euler_collapse() const;

    // sum_d (+-1)^d value of component(d) at class c
    Cyclotomic trace(int c, bool signed_by_degree) const;

    // z-polynomial of dimensions: sum_d dim(component d) z^d
    std::vector<Rational> dimension_poly() const;

private:
    TablePtr table_;
    std::map<int, ClassFunction> comps_;
};

class RepSeries {
public:
    RepSeries(TablePtr table, long order);
    static RepSeries one(TablePtr table, long order);

    const TablePtr& table() const { return table_; }
    long order() const { return order_; }
    const GradedClassFunction& coeff(long n) const { return coeffs_.at(n); }
    GradedClassFunction& coeff(long n) { return coeffs_.at(n); }

    bool operator==(const RepSeries& o) const;
    bool operator!=(const RepSeries& o) const { return !(*this == o); }

private:
    TablePtr table_;
    long order_;
    std::vector<GradedClassFunction> coeffs_;
};

RepSeries series_add(const RepSeries& a, const RepSeries& b);
RepSeries series_sub(const RepSeries& a, const RepSeries& b);

// Cauchy product; parallel over output coefficients when OpenMP is enabled.
// series_mul_serial is the reference implementation kept for testing.
RepSeries series_mul(const RepSeries& a, const RepSeries& b);
RepSeries series_mul_serial(const RepSeries& a, const RepSeries& b);

// requires constant coefficient = trivial rep in degree 0
RepSeries series_inverse(const RepSeries& a);

// re-index t -> t^m and shift the t^{mn} coefficient by extra_shift_per_n * n
RepSeries series_reindex(const RepSeries& a, long m, int extra_shift_per_n, long order);

// signed (default) or unsigned trace specialization; rational output, throws
// verification_error if a coefficient is irrational
QSeries trace_at(const RepSeries& a, int c, bool signed_by_degree = true);
std::vector<Cyclotomic> trace_values(const RepSeries& a, int c, bool signed_by_degree = true);

// unsigned trace at the identity with degree recorded as a power of z
ZTPoly poincare_at(const RepSeries& a);

// formal exp/log for series whose coefficients are degree-0 class functions;
// exp needs zero constant coefficient, log needs constant coefficient 1.
RepSeries series_exp(const RepSeries& a);
RepSeries series_log(const RepSeries& a);

// helpers for building degree-0 series
RepSeries degree_zero_series(TablePtr table, long order,
                             const std::vector<ClassFunction>& coefficients);

}  // namespace equigen
