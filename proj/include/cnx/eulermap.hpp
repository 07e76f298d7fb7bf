#pragma once

// Floating-point layer: the generalized exponential map and its multi-sine
// components, the ternary logarithm and polar decomposition, norm-preserving
// invariance matrices, the two binary limit curves, and the duality map.
//
// Tolerances follow one rule: closed-form identities hold to 1e-12, round
// trips through the exponential to 1e-9. Phase inputs are clamped to
// |phi| <= 20 so exponential conditioning stays bounded.

#include "cnx/cn_number.hpp"

#include <Eigen/Dense>

#include <array>
#include <stdexcept>
#include <vector>

namespace cnx {

inline constexpr double PHASE_CLAMP = 20.0;

// Group parameters phi_1..phi_{N-1} (the q^0 direction only rescales).
struct PhaseVector {
    int order = 2;
    std::vector<double> phi;  // size order-1
};

// Components of exp(sum_k phi_k q^k) in the basis 1, q, ..., q^{N-1}.
struct MultiSine {
    int order = 2;
    int sign = 1;
    std::vector<double> m;  // size order
};

// The argument lies outside the cone where the real logarithm exists.
struct NonPositiveNorm : std::domain_error {
    NonPositiveNorm() : std::domain_error("cn_log: norm is not positive") {}
};

// The argument sits on an ideal plane: a conjugate linear combination
// vanishes and the logarithm diverges.
struct SingularCombination : std::domain_error {
    SingularCombination()
        : std::domain_error("cn_log: singular conjugate combination") {}
};

// exp(sum phi_k q^k) via the matrix exponential of the twisted-circulant
// multiplication operator; phi holds phi_1..phi_{N-1}.
MultiSine cn_exp(int order, int sign, const std::vector<double>& phi);
MultiSine cn_exp(int sign, const PhaseVector& phi);

struct LogResult {
    double l0 = 0.0;    // scalar part: one third of log norm
    PhaseVector phase;  // (log z)_1, (log z)_2
};

// Ternary logarithm: inverts z = exp(l0 + l1 q + l2 q^2) for z with
// positive norm away from the ideal planes.
LogResult cn_log(const std::array<double, 3>& z);

struct PolarResult {
    double rho = 1.0;    // cube root of the norm
    double theta = 0.0;  // compact angle, reduced into [0, 2*pi/sqrt(3))
    double phi = 0.0;    // noncompact parameter
};

// z = rho * exp(theta (q - q^2) + phi (q + q^2)).
PolarResult polar_decompose(const std::array<double, 3>& z);

// Multiplication by exp(sum phi_k q^k) in the coefficient basis: a
// determinant-one matrix that preserves the degree-N norm form.
Eigen::MatrixXd invariance_matrix(int order, int sign, const std::vector<double>& phi);

// Compact one-parameter curve: the three cosine combinations at
// phi = sqrt(3) * alpha. Satisfies c^2+s^2+t^2 = 1 and cs+st+tc = 0.
std::array<double, 3> so2_limit(double alpha);

// Noncompact one-parameter curve: (c, s) with (c-s)^2 (c+2s) = 1.
std::array<double, 2> so11_limit(double alpha);

// The product of the two nontrivial conjugates divided by the norm; on
// exponentials it flips the phase sign. Requires nonzero norm.
std::array<double, 3> duality_map(const std::array<double, 3>& z);

}  // namespace cnx
