// Surface-level generating functions: the equivariant Macdonald formula for
// symmetric powers, the equivariant product formula for Hilbert schemes of
// points, K3 trace series for symplectic and non-symplectic actions, and the
// stabilization check for fixed cohomological degree.
#pragma once

#include "equigen/rep_series.hpp"

namespace equigen {

// H^0..H^{2N} of an N-dimensional variety as characters (curve N=1,
// surface N=2). Betti numbers are dimensions; Poincare duality of dimensions
// and 1-dimensionality of the end degrees are enforced.
class SurfaceCohomology {
public:
    SurfaceCohomology(TablePtr table, std::vector<ClassFunction> characters);

    const TablePtr& table() const { return table_; }
    int dimension() const { return dim_n_; }
    const ClassFunction& h(int j) const { return h_.at(j); }
    long betti(int j) const;

private:
    TablePtr table_;
    int dim_n_;
    std::vector<ClassFunction> h_;
};

// sum_k [H*(X^(k))] t^k as a product over cohomological degrees, with
// Lambda^i H^j placed in degree i*j.
RepSeries macdonald_series(const SurfaceCohomology& x, long order);

// sum_n [H*(S^[n])] t^n via the symmetric-power route: product over m of the
// Macdonald series re-indexed t -> t^m with degree shift 2n(m-1).
RepSeries goettsche_series(const SurfaceCohomology& s, long order);

// The same series expanded through the closed quotient form; an independent
// computation path used as an internal cross-check.
RepSeries goettsche_series_quotient_form(const SurfaceCohomology& s, long order);

// Fixed-point count of a symplectic automorphism of order n <= 8 on a K3.
long symplectic_fixed_points(long n);

// The eta quotient whose reciprocal (times t) is the order-N symplectic trace
// series, N = 1..8.
EtaQuotient symplectic_trace_eta_row(long n);

// exp(sum_{m,k} L(g^k) t^{mk} / k) with L given per class; integer
// coefficients are verified.
QSeries euler_trace_series(const TablePtr& table, const std::vector<long>& lefschetz, int g,
                           long order);

struct K3ActionData {
    enum class Kind { Symplectic, NonSymplecticPrime };
    TablePtr table;
    Kind kind = Kind::Symplectic;
    long p = 0;      // prime order (non-symplectic)
    long rank_t = 0; // rank of the transcendental complement; (p-1) | rank_t
    void validate() const;
};

// Trace generating series of g on the signed Hilbert-scheme cohomology of a
// K3 surface with the given action.
QSeries k3_trace_series(const K3ActionData& data, int g, long order);

struct StabilizationResult {
    ClassFunction stable;
    long first_stable_n = 0;
};

// Degree-i components of the Hilbert series coefficients must agree for
// i <= n <= order; returns the common character and the first n from which
// the value is constant. Throws verification_error on instability.
StabilizationResult stabilization_check(const SurfaceCohomology& s, int degree, long order);

}  // namespace equigen
