#include "equigen/goettsche.hpp"

namespace equigen {

SurfaceCohomology::SurfaceCohomology(TablePtr table, std::vector<ClassFunction> characters)
    : table_(std::move(table)), h_(std::move(characters)) {
    if (h_.empty() || h_.size() % 2 == 0)
        throw schema_error("cohomology needs degrees 0..2N (odd count)");
    dim_n_ = static_cast<int>(h_.size() / 2);
    for (const auto& f : h_) {
        if (!same_table(f.table(), table_))
            throw schema_error("cohomology characters live on a different table");
        if (!f.dim().is_integer())
            throw schema_error("cohomology character with non-integral dimension");
    }
    for (int j = 0; j <= 2 * dim_n_; ++j) {
        if (betti(j) < 0) throw schema_error("negative Betti number");
        if (betti(j) != betti(2 * dim_n_ - j))
            throw schema_error("Poincare duality of dimensions fails at degree " + std::to_string(j));
    }
    if (betti(0) != 1 || betti(2 * dim_n_) != 1)
        throw schema_error("H^0 and H^2N must be 1-dimensional");
}

long SurfaceCohomology::betti(int j) const {
    return rational_to_long(h_.at(j).dim().rational_value());
}

RepSeries macdonald_series(const SurfaceCohomology& x, long order) {
    const TablePtr& table = x.table();
    RepSeries acc = RepSeries::one(table, order);
    for (int j = 0; j <= 2 * x.dimension(); ++j) {
        const long bj = x.betti(j);
        if (bj == 0) continue;
        auto lambda = exterior_powers(x.h(j), bj);
        RepSeries factor(table, order);
        for (long i = 0; i <= bj && i <= order; ++i) {
            ClassFunction li = lambda[i];
            // sign (-1)^{(j+1) i}: trivial for odd j, alternating for even j
            if (j % 2 == 0 && i % 2 == 1) li = -li;
            if (!li.is_zero()) factor.coeff(i).add_component(static_cast<int>(i) * j, li);
        }
        if (j % 2 == 1) {
            acc = series_mul(acc, factor);
        } else {
            acc = series_mul(acc, series_inverse(factor));
        }
    }
    return acc;
}

RepSeries goettsche_series(const SurfaceCohomology& s, long order) {
    if (s.dimension() != 2) throw precondition_error("Hilbert-series product needs a surface");
    const RepSeries mac = macdonald_series(s, order);
    RepSeries acc = RepSeries::one(s.table(), order);
    // the m-th factor only touches t^{>= m}
    for (long m = 1; m <= order; ++m) {
        const RepSeries factor = series_reindex(mac, m, static_cast<int>(2 * (m - 1)), order);
        acc = series_mul(acc, factor);
    }
    return acc;
}

RepSeries goettsche_series_quotient_form(const SurfaceCohomology& s, long order) {
    if (s.dimension() != 2) throw precondition_error("Hilbert-series product needs a surface");
    const TablePtr& table = s.table();
    RepSeries acc = RepSeries::one(table, order);
    std::vector<std::vector<ClassFunction>> lambda(5);
    for (int j = 0; j <= 4; ++j) lambda[j] = exterior_powers(s.h(j), s.betti(j));
    for (long m = 1; m <= order; ++m) {
        RepSeries numerator = RepSeries::one(table, order);
        RepSeries denominator = RepSeries::one(table, order);
        for (int j = 0; j <= 4; ++j) {
            const long bj = s.betti(j);
            if (bj == 0) continue;
            RepSeries factor(table, order);
            for (long i = 0; i <= bj && i * m <= order; ++i) {
                ClassFunction li = lambda[j][i];
                if (j % 2 == 0 && i % 2 == 1) li = -li;
                if (li.is_zero()) continue;
                const int degree = static_cast<int>(i) * j + static_cast<int>(2 * i * (m - 1));
                factor.coeff(i * m).add_component(degree, li);
            }
            if (j % 2 == 1) numerator = series_mul(numerator, factor);
            else denominator = series_mul(denominator, factor);
        }
        // the extra (1 - C[-2(m+1)] t^m) alongside the j=0 factor's shift:
        // j=0 contributes (1 - C[-2(m-1)] t^m) which is already in
        // `denominator`; j=4 contributes with top degree 4 + 2(m-1) = 2(m+1).
        acc = series_mul(acc, series_mul(numerator, series_inverse(denominator)));
    }
    return acc;
}

long symplectic_fixed_points(long n) {
    if (n < 1 || n > 8)
        throw precondition_error("symplectic automorphism order must be 1..8, got " + std::to_string(n));
    Rational denom(n);
    long m = n;
    for (long p = 2; p <= m; ++p) {
        if (m % p == 0) {
            denom *= frac(p + 1, p);
            while (m % p == 0) m /= p;
        }
    }
    const Rational eps = Rational(24) / denom;
    return rational_to_long(eps);
}

EtaQuotient symplectic_trace_eta_row(long n) {
    switch (n) {
        case 1: return EtaQuotient({{1, 24}});
        case 2: return EtaQuotient({{1, 8}, {2, 8}});
        case 3: return EtaQuotient({{1, 6}, {3, 6}});
        case 4: return EtaQuotient({{1, 4}, {2, 2}, {4, 4}});
        case 5: return EtaQuotient({{1, 4}, {5, 4}});
        case 6: return EtaQuotient({{1, 2}, {2, 2}, {3, 2}, {6, 2}});
        case 7: return EtaQuotient({{1, 3}, {7, 3}});
        case 8: return EtaQuotient({{1, 2}, {2, 1}, {4, 1}, {8, 2}});
        default: throw precondition_error("eta row defined for orders 1..8");
    }
}

QSeries euler_trace_series(const TablePtr& table, const std::vector<long>& lefschetz, int g,
                           long order) {
    if (lefschetz.size() != static_cast<size_t>(table->num_classes()))
        throw precondition_error("one Lefschetz number per class required");
    QSeries arg(order);
    for (long k = 1; k <= order; ++k) {
        const long l_k = lefschetz[table->power_class(g, k)];
        if (l_k == 0) continue;
        const Rational term = frac(l_k, k);
        for (long m = 1; m * k <= order; ++m) arg.set_coeff(m * k, arg.coeff(m * k) + term);
    }
    QSeries result = qseries_exp(arg);
    for (long n = 0; n <= order; ++n) {
        if (!is_integer(result.coeff(n)))
            throw verification_error("trace series coefficient at t^" + std::to_string(n) +
                                     " is not an integer: inconsistent Lefschetz data");
    }
    return result;
}

void K3ActionData::validate() const {
    if (!table) throw precondition_error("K3 action needs a character table");
    if (kind == Kind::Symplectic) {
        for (int c = 0; c < table->num_classes(); ++c) {
            if (table->cls(c).order > 8)
                throw precondition_error("symplectic action: class " + table->cls(c).label +
                                         " has order > 8");
        }
    } else {
        if (p < 2) throw precondition_error("non-symplectic action needs a prime order p >= 2");
        for (long q = 2; q * q <= p; ++q)
            if (p % q == 0) throw precondition_error("non-symplectic order must be prime");
        if (rank_t <= 0 || rank_t % (p - 1) != 0)
            throw precondition_error("rank T(g) must be a positive multiple of p-1");
    }
}

QSeries k3_trace_series(const K3ActionData& data, int g, long order) {
    data.validate();
    const TablePtr& table = data.table;
    if (data.kind == K3ActionData::Kind::Symplectic) {
        std::vector<long> lefschetz(table->num_classes());
        for (int c = 0; c < table->num_classes(); ++c)
            lefschetz[c] = symplectic_fixed_points(table->cls(c).order);
        return euler_trace_series(table, lefschetz, g, order);
    }
    if (g == table->identity_class()) {
        return euler_product_pow(1, -24, order);
    }
    const long d = data.rank_t / (data.p - 1);
    return euler_product_pow(1, d * data.p - 24, order) * euler_product_pow(data.p, -d, order);
}

StabilizationResult stabilization_check(const SurfaceCohomology& s, int degree, long order) {
    if (order < degree + 2)
        throw precondition_error("stabilization check needs order >= degree + 2");
    const RepSeries series = goettsche_series(s, order);
    std::vector<ClassFunction> comp;
    comp.reserve(order + 1);
    for (long n = 0; n <= order; ++n) comp.push_back(series.coeff(n).component(degree));
    const ClassFunction& stable = comp[degree];
    for (long n = degree; n <= order; ++n) {
        if (comp[n] != stable)
            throw verification_error("degree-" + std::to_string(degree) +
                                     " component unstable at n = " + std::to_string(n));
    }
    // a_{i,n} of (1-t) * series must vanish for n > i
    for (long n = degree + 1; n <= order; ++n) {
        if (comp[n] != comp[n - 1])
            throw verification_error("G(t) coefficient nonzero above the diagonal at n = " +
                                     std::to_string(n));
    }
    StabilizationResult out{stable, degree};
    for (long n = degree; n >= 1; --n) {
        if (comp[n - 1] == stable) out.first_stable_n = n - 1;
        else break;
    }
    return out;
}

}  // namespace equigen
