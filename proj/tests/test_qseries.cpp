#include "doctest.h"

#include "equigen/goettsche.hpp"
#include "equigen/qseries.hpp"

#include <functional>
#include <random>

using namespace equigen;

namespace {

// brute-force expansion of prod_{n=1..order} (1 - t^n)^e for e >= 0, written
// against plain integer vectors so it shares nothing with QSeries
std::vector<long> naive_euler_power(long e, long order) {
    std::vector<long> acc(order + 1, 0);
    acc[0] = 1;
    for (long n = 1; n <= order; ++n) {
        for (long rep = 0; rep < e; ++rep) {
            std::vector<long> next(order + 1, 0);
            for (long i = 0; i <= order; ++i) {
                if (acc[i] == 0) continue;
                next[i] += acc[i];
                if (i + n <= order) next[i + n] -= acc[i];
            }
            acc = std::move(next);
        }
    }
    return acc;
}

// all partitions of n, counted by number of parts (recursive enumeration)
void enumerate_partitions(long remaining, long max_part, long parts,
                          const std::function<void(long)>& visit) {
    if (remaining == 0) {
        visit(parts);
        return;
    }
    for (long p = std::min(remaining, max_part); p >= 1; --p)
        enumerate_partitions(remaining - p, p, parts + 1, visit);
}

}  // namespace

TEST_CASE("eta(t)^24 expands with offset 1") {
    const QSeries s = eta_quotient_expand(EtaQuotient({{1, 24}}), 6);
    CHECK(s.offset() == 1);
    const auto expected = naive_euler_power(24, 6);
    for (long n = 0; n <= 6; ++n) CHECK(s.coeff(n) == expected[n]);
    CHECK(s.coeff(1) == -24);
    CHECK(s.coeff(2) == 252);
    CHECK(s.coeff(3) == -1472);
}

TEST_CASE("t over eta(t)^8 eta(t^2)^8") {
    const QSeries q = eta_quotient_expand(EtaQuotient({{1, 8}, {2, 8}}), 10);
    CHECK(q.offset() == 1);
    const QSeries trace = QSeries(10, q.coeffs(), Rational(0)).inverse();
    CHECK(trace.offset() == 0);
    CHECK(trace.coeff(0) == 1);
    CHECK(trace.coeff(1) == 8);
    CHECK(trace.coeff(2) == 52);
    CHECK(trace.coeff(3) == 256);
}

TEST_CASE("empty quotient expands to 1") {
    const QSeries s = eta_quotient_expand(EtaQuotient(), 5);
    CHECK(s.offset() == 0);
    CHECK(s.coeff(0) == 1);
    for (long n = 1; n <= 5; ++n) CHECK(s.coeff(n) == 0);
}

TEST_CASE("eta weights") {
    CHECK(eta_weight(EtaQuotient({{1, 24}})) == 12);
    CHECK(eta_weight(EtaQuotient({{1, 8}, {2, 8}})) == 8);
    CHECK(eta_weight(EtaQuotient({{1, 4}, {2, 2}, {4, 4}})) == 5);
}

TEST_CASE("symplectic trace eta rows: scales sum to 24, weight = ceil(24/(N+1))") {
    for (long n = 1; n <= 8; ++n) {
        const EtaQuotient row = symplectic_trace_eta_row(n);
        long scale_sum = 0;
        for (const auto& f : row.factors()) scale_sum += f.scale * f.exponent;
        CHECK(scale_sum == 24);
        const long expected_weight = (24 + n) / (n + 1);  // ceil(24/(N+1))
        CHECK(eta_weight(row) == expected_weight);
    }
}

TEST_CASE("quotient of merged factors equals product of expansions") {
    const EtaQuotient merged({{1, 5}, {2, -3}, {1, -2}});  // eta^3 eta(t^2)^-3
    const QSeries a = eta_quotient_expand(merged, 12);
    const QSeries b =
        eta_quotient_expand(EtaQuotient({{1, 3}}), 12) * eta_quotient_expand(EtaQuotient({{2, -3}}), 12);
    CHECK(qseries_equal(a, b, 12).equal);
}

TEST_CASE("partition series against direct enumeration to order 30") {
    const QSeries inv = euler_product_pow(1, -1, 30);
    const QSeries ps = partition_series(-1, 30);
    for (long n = 0; n <= 30; ++n) {
        long count = 0;
        enumerate_partitions(n, n == 0 ? 1 : n, 0, [&](long) { ++count; });
        CHECK(inv.coeff(n) == count);
        CHECK(ps.coeff(n) == count);
    }
}

TEST_CASE("partition counts by number of parts") {
    CHECK(partition_count(0, 0) == 1);
    CHECK(partition_count(5, 2) == 2);  // 4+1, 3+2
    CHECK(partition_count(3, 1) == 1);
    // against enumeration
    for (long n = 1; n <= 12; ++n) {
        std::vector<long> by_parts(n + 1, 0);
        enumerate_partitions(n, n, 0, [&](long parts) { by_parts[parts]++; });
        for (long d = 0; d <= n; ++d) CHECK(partition_count(n, d) == by_parts[d]);
    }
}

TEST_CASE("cell counts of the punctual Hilbert scheme") {
    const ZTPoly cells = cell_count_series(8);
    // #d-cells of Hilb^n = p(n, n-d)
    for (long n = 0; n <= 8; ++n) {
        for (long d = 0; d <= n; ++d) CHECK(cells.coeff(n, d) == partition_count(n, n - d));
    }
    // n=3: one cell in each dimension 0,1,2
    CHECK(cells.coeff(3, 0) == 1);
    CHECK(cells.coeff(3, 1) == 1);
    CHECK(cells.coeff(3, 2) == 1);
    // z = 1 recovers the partition numbers
    const QSeries at_one = cells.at_z_one();
    const QSeries ps = partition_series(-1, 8);
    CHECK(qseries_equal(at_one, ps, 8).equal);
}

TEST_CASE("qseries_equal reports the first mismatch") {
    QSeries a = QSeries::one(5);
    QSeries b = QSeries::one(5);
    a.set_coeff(1, Rational(1));
    b.set_coeff(1, Rational(-1));
    const QCompare r = qseries_equal(a, b, 5);
    CHECK(!r.equal);
    CHECK(r.first_mismatch == 1);
    CHECK(qseries_equal(a, a, 5).equal);
}

TEST_CASE("exp and log round trip") {
    std::mt19937 rng(20240917);
    std::uniform_int_distribution<long> num(-6, 6);
    std::uniform_int_distribution<long> den(1, 5);
    for (int trial = 0; trial < 10; ++trial) {
        QSeries a(12);
        for (long n = 1; n <= 12; ++n) a.set_coeff(n, frac(num(rng), den(rng)));
        const QSeries back = qseries_log(qseries_exp(a));
        CHECK(qseries_equal(a, back, 12).equal);
    }
    CHECK(qseries_equal(qseries_exp(QSeries(7)), QSeries::one(7), 7).equal);
    // log(1-t) = -sum t^n/n
    QSeries one_minus_t = QSeries::one(9);
    one_minus_t.set_coeff(1, Rational(-1));
    const QSeries l = qseries_log(one_minus_t);
    for (long n = 1; n <= 9; ++n) CHECK(l.coeff(n) == -frac(1, n));
}

TEST_CASE("series inverse and powers") {
    // inverse of prod (1-t^m)^24 truncated at t^2 is 1 + 24t + 324t^2
    const QSeries inv24 = euler_product_pow(1, -24, 2);
    CHECK(inv24.coeff(0) == 1);
    CHECK(inv24.coeff(1) == 24);
    CHECK(inv24.coeff(2) == 324);
    // geometric series
    QSeries one_minus_t = QSeries::one(6);
    one_minus_t.set_coeff(1, Rational(-1));
    const QSeries geo = one_minus_t.inverse();
    for (long n = 0; n <= 6; ++n) CHECK(geo.coeff(n) == 1);
    CHECK(qseries_equal(one_minus_t.pow(-2) * one_minus_t.pow(2), QSeries::one(6), 6).equal);
    CHECK_THROWS_AS(QSeries(4).inverse(), precondition_error);
}
