// Truncated q-series with exact rational coefficients, eta quotients, and
// partition generating functions. A series may carry a rational leading
// exponent ("offset"): eta factors contribute t^{a/24} prefactors which are
// tracked symbolically and cancel in every identity computed here.
#pragma once

#include "equigen/rational.hpp"

#include <string>
#include <vector>

namespace equigen {

class QSeries {
public:
    explicit QSeries(long order) : order_(order), offset_(0), c_(order + 1, Rational(0)) {
        if (order < 0) throw precondition_error("series order must be >= 0");
    }
    QSeries(long order, std::vector<Rational> coeffs, Rational offset = Rational(0));

    static QSeries one(long order);
    // t^k (integer k >= 0 folded into coefficients)
    static QSeries t_power(long order, long k);

    long order() const { return order_; }
    const Rational& offset() const { return offset_; }
    const Rational& coeff(long n) const { return c_.at(n); }
    void set_coeff(long n, const Rational& v) { c_.at(n) = v; }
    const std::vector<Rational>& coeffs() const { return c_; }

    QSeries truncated(long new_order) const;
    QSeries shifted(long k) const;  // multiply by t^k, k may be negative if divisible

    bool is_zero() const;
    bool integral() const;  // all coefficients integers and offset integer 0

    QSeries operator-() const;
    friend QSeries operator+(const QSeries& a, const QSeries& b);
    friend QSeries operator-(const QSeries& a, const QSeries& b);
    friend QSeries operator*(const QSeries& a, const QSeries& b);

    // reciprocal; requires nonzero constant coefficient
    QSeries inverse() const;
    QSeries pow(long e) const;  // integer exponent, negative allowed

    std::string str() const;  // "c0, c1, c2, ..." with "t^(r) *" prefix when offset != 0

private:
    long order_;
    Rational offset_;
    std::vector<Rational> c_;
};

struct QCompare {
    bool equal = true;
    long first_mismatch = -1;  // -1: none; -2: offset mismatch
    std::string message;
};
// Exact coefficient comparison to min(order, both series orders).
QCompare qseries_equal(const QSeries& a, const QSeries& b, long order);

// exp of a series with zero constant term; log of a series with constant 1.
QSeries qseries_exp(const QSeries& a);
QSeries qseries_log(const QSeries& a);

struct EtaFactor {
    long scale = 1;     // a in eta(t^a)
    long exponent = 0;  // e in eta(t^a)^e
};

class EtaQuotient {
public:
    EtaQuotient() = default;
    explicit EtaQuotient(std::vector<EtaFactor> factors);  // scales made distinct+sorted
    const std::vector<EtaFactor>& factors() const { return factors_; }
    // "1^8,2^8" = eta(t)^8 eta(t^2)^8
    static EtaQuotient parse(const std::string& spec);
    std::string str() const;

private:
    std::vector<EtaFactor> factors_;
};

// Expansion of prod_a (t^{a/24} prod_n (1 - t^{a n}))^{e_a}.
QSeries eta_quotient_expand(const EtaQuotient& q, long order);

// (sum of exponents) / 2
Rational eta_weight(const EtaQuotient& q);

// prod_{m>=1} (1 - t^{s m})^e to the given order (e may be negative).
QSeries euler_product_pow(long scale, long exponent, long order);

// partitions of n into exactly d parts
long partition_count(long n, long d);
// partitions of n into at most max_parts parts (max_parts < 0: unrestricted)
QSeries partition_series(long max_parts, long order);

// Dense bivariate polynomial, tz[n][d] = coefficient of t^n z^d.
class ZTPoly {
public:
    explicit ZTPoly(long t_order) : tz_(t_order + 1) {}
    long t_order() const { return static_cast<long>(tz_.size()) - 1; }
    long z_degree(long n) const { return static_cast<long>(tz_.at(n).size()) - 1; }
    Rational coeff(long n, long d) const;
    void add(long n, long d, const Rational& v);
    bool operator==(const ZTPoly& o) const;
    bool operator!=(const ZTPoly& o) const { return !(*this == o); }
    friend ZTPoly operator*(const ZTPoly& a, const ZTPoly& b);  // truncated in t
    friend ZTPoly operator+(const ZTPoly& a, const ZTPoly& b);
    QSeries at_z_one() const;
    std::string str() const;

private:
    std::vector<std::vector<Rational>> tz_;
    void trim(long n);
};

// sum_n sum_d #(d-cells of Hilb^n) t^n z^d = prod_{i>=1} 1/(1 - z^{i-1} t^i)
ZTPoly cell_count_series(long order);

}  // namespace equigen
