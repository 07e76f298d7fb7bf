#pragma once

// Exact arithmetic in the cyclotomic field Q(zeta_N), zeta_N = exp(2*pi*i/N).
// Elements are polynomials in zeta_N reduced modulo the N-th cyclotomic
// polynomial Phi_N; the coefficient vector always has length deg(Phi_N) =
// euler_phi(N), so equality is coefficient-wise.
//
// Orders are capped at MAX_ORDER: the toolkit never needs more, and the cap
// prevents accidental blowup from bad input.

#include "cnx/rational.hpp"

#include <complex>
#include <string>
#include <vector>

namespace cnx {

inline constexpr int MAX_ORDER = 24;

int euler_phi(int n);

// Coefficients of Phi_N, ascending degree, monic; computed by dividing
// x^N - 1 by Phi_d for every proper divisor d of N.
const std::vector<Rational>& cyclotomic_poly(int order);

class Cyclotomic {
public:
    // Zero of the given order.
    explicit Cyclotomic(int order);
    Cyclotomic(int order, const Rational& constant);

    int order() const { return order_; }
    const std::vector<Rational>& coeffs() const { return coeffs_; }

    bool is_zero() const;
    // True iff all non-constant coefficients vanish.
    bool is_rational() const;
    // Constant term, throwing unless is_rational().
    Rational rational_value() const;

    Cyclotomic operator-() const;
    Cyclotomic& operator+=(const Cyclotomic& o);
    Cyclotomic& operator-=(const Cyclotomic& o);
    Cyclotomic& operator*=(const Cyclotomic& o);
    Cyclotomic& operator/=(const Cyclotomic& o);

    friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { return a += b; }
    friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { return a -= b; }
    friend Cyclotomic operator*(Cyclotomic a, const Cyclotomic& b) { return a *= b; }
    friend Cyclotomic operator/(Cyclotomic a, const Cyclotomic& b) { return a /= b; }

    Cyclotomic& operator+=(const Rational& r);
    Cyclotomic& operator-=(const Rational& r);
    Cyclotomic& operator*=(const Rational& r);
    friend Cyclotomic operator+(Cyclotomic a, const Rational& b) { return a += b; }
    friend Cyclotomic operator-(Cyclotomic a, const Rational& b) { return a -= b; }
    friend Cyclotomic operator*(Cyclotomic a, const Rational& b) { return a *= b; }
    friend Cyclotomic operator*(const Rational& a, Cyclotomic b) { return b *= a; }

    friend bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
        return a.order_ == b.order_ && a.coeffs_ == b.coeffs_;
    }
    friend bool operator!=(const Cyclotomic& a, const Cyclotomic& b) { return !(a == b); }

    // Complex conjugate (the substitution zeta -> zeta^{N-1}).
    Cyclotomic conj() const;
    // Multiplicative inverse via the product of all Galois conjugates.
    Cyclotomic inverse() const;

    // Numerical value at zeta_N = exp(2*pi*i/N).
    std::complex<double> to_complex() const;

    // Re-embeds into the field of the given order (a multiple of order()).
    Cyclotomic promoted(int new_order) const;

    // Rendering like "1 - 2/3*j + j^2" with j the order-N root.
    std::string str() const;

private:
    friend Cyclotomic zeta(int order, long long power);
    int order_;
    std::vector<Rational> coeffs_;  // length euler_phi(order_)
};

// zeta_N^k, reduced; zeta(N, 0) is the multiplicative identity.
Cyclotomic zeta(int order, long long power);

// Substitutes zeta -> zeta^s and re-reduces. A ring homomorphism whenever
// gcd(s, N) = 1; well-defined (though not injective) for any s.
Cyclotomic galois_map(const Cyclotomic& x, long long s);

}  // namespace cnx
