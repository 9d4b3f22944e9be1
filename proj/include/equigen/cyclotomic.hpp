// Exact elements of cyclotomic fields Q(zeta_n).
//
// Canonical form: coefficients over the power basis 1, z, ..., z^{phi(n)-1}
// of Q(zeta_n), reduced modulo the n-th cyclotomic polynomial, with n the
// least conductor containing the value. Two values are equal iff their
// canonical forms are identical; rational values always report conductor 1.
#pragma once

#include "equigen/rational.hpp"

#include <string>
#include <vector>

namespace equigen {

class Cyclotomic {
public:
    Cyclotomic() : conductor_(1), coeffs_{Rational(0)} {}
    Cyclotomic(long v) : conductor_(1), coeffs_{Rational(v)} {}
    Cyclotomic(const Rational& v) : conductor_(1), coeffs_{v} {}

    // zeta_n^k
    static Cyclotomic root_of_unity(long n, long k);

    // sum_j coeff[j] * zeta_n^j (j indexes the vector; size <= n)
    static Cyclotomic from_exponents(long n, const std::vector<Rational>& coeff);

    long conductor() const { return conductor_; }
    const std::vector<Rational>& coefficients() const { return coeffs_; }

    bool is_zero() const;
    bool is_rational() const { return conductor_ == 1; }
    bool is_integer() const { return conductor_ == 1 && equigen::is_integer(coeffs_[0]); }
    // Throws precondition_error unless conductor 1.
    const Rational& rational_value() const;

    Cyclotomic conj() const;
    // Galois automorphism z -> z^k; requires gcd(k, conductor) = 1.
    Cyclotomic galois(long k) const;

    Cyclotomic operator-() const;
    Cyclotomic& operator+=(const Cyclotomic& o);
    Cyclotomic& operator-=(const Cyclotomic& o);
    Cyclotomic& operator*=(const Cyclotomic& o);
    Cyclotomic& operator*=(const Rational& s);

    friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { return a += b; }
    friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { return a -= b; }
    friend Cyclotomic operator*(Cyclotomic a, const Cyclotomic& b) { return a *= b; }
    friend Cyclotomic operator*(Cyclotomic a, const Rational& s) { return a *= s; }
    friend Cyclotomic operator*(const Rational& s, Cyclotomic a) { return a *= s; }

    bool operator==(const Cyclotomic& o) const {
        return conductor_ == o.conductor_ && coeffs_ == o.coeffs_;
    }
    bool operator!=(const Cyclotomic& o) const { return !(*this == o); }

    // Literal "c0+c1*z+...@n"; conductor-1 values print as plain rationals.
    std::string str() const;
    static Cyclotomic parse(const std::string& literal);

private:
    long conductor_;
    std::vector<Rational> coeffs_;  // size phi(conductor_)

    void canonicalize_conductor();
    static Cyclotomic reduced(long n, std::vector<Rational> dense);
};

}  // namespace equigen
