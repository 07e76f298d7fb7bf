#pragma once

// The cubic surface x0^3 + x1^3 + x2^3 - 3 x0 x1 x2 = rho^3: its (a, theta)
// parametrization, the tangent-plane Jacobians and the cubic area identity
// (the ternary analogue of the Pythagorean theorem), the halved tetrahedron
// corollary, and the exhaustive search for integer quadruples
// a^3 + b^3 + c^3 - 3abc = d^3.

#include <array>
#include <vector>

namespace cnx {

// x0^3 + x1^3 + x2^3 - 3 x0 x1 x2.
double cubic_form_value(const std::array<double, 3>& x);

struct SurfacePoint {
    double rho;             // form radius: the cubic form of x equals rho^3
    double a;               // plane coordinate: x0 + x1 + x2
    double theta;           // polar angle around the trisectrice x0 = x1 = x2
    std::array<double, 3> x;
};

// Point of the surface at the given coordinates; requires rho > 0, a > 0 and
// finite inputs (std::invalid_argument otherwise).
SurfacePoint surface_point(double rho, double a, double theta);

// Squared Euclidean distance from x to its orthogonal projection on the
// trisectrice; equals (2/3) rho^3 / a on the surface.
double trisectrice_dist2(const SurfacePoint& p);

// Squared radial coordinate r^2 = (3/2) * trisectrice_dist2, normalized so
// that a * r^2 = rho^3.
double radial_r2(const SurfacePoint& p);

struct TangentFrame {
    std::array<double, 3> d_a;      // partial derivatives with respect to a
    std::array<double, 3> d_theta;  // partial derivatives with respect to theta
};

TangentFrame tangent_frame(const SurfacePoint& p);

struct Jacobians {
    double j01;   // coordinate-plane minors u_k v_l - u_l v_k of the frame
    double j12;
    double j20;
    double j012;  // determinant of (u; v; 1 1 1) = j01 + j12 + j20
};

// Minors of an arbitrary vector pair (u = first row, v = second row).
Jacobians pair_jacobians(const std::array<double, 3>& u, const std::array<double, 3>& v);

// Minors of the tangent frame at p.
Jacobians jacobians(const SurfacePoint& p);

struct PythagorasResidual {
    Jacobians j;
    double lhs;            // j01^3 + j12^3 + j20^3 - 3 j01 j12 j20
    double rhs;            // closed form rho^6 / (3 sqrt(3) a^3)
    double j012_cubed;     // j012^3; closed form rho^9 / (3 sqrt(3) a^6)
    double abs_residual;   // |lhs - rhs|
    double rel_residual;   // abs_residual / rhs
    bool j012_cubed_matches_lhs;  // true exactly on the slice rho == a
};

// Evaluates both sides of the cubic area identity at one point.
PythagorasResidual pythagoras_residual(double rho, double a, double theta);

struct PythagorasGridReport {
    double rho;
    int grid;                // grid x grid samples, a in [0.5, 5], theta in [0, 2pi)
    double max_abs_residual;
    double max_rel_residual;
    double worst_a;          // sample attaining max_rel_residual
    double worst_theta;
    bool pass;               // max_rel_residual < 1e-8
};

// Sweeps the identity over the sampling grid; grid must be in [2, 10000].
PythagorasGridReport pythagoras_check(double rho, int grid = 20);

struct TetrahedronReport {
    double s_a;   // halved projected parallelogram areas (signed)
    double s_b;
    double s_c;
    double s_d;   // half the row-of-ones determinant = s_a + s_b + s_c
    double lhs;   // s_a^3 + s_b^3 + s_c^3 - 3 s_a s_b s_c
    double rhs;   // s_d^3
    double abs_residual;
    double rel_residual;
    bool holds;   // residual below 1e-8 of the larger side, with a noise
                  // floor of 1e-9 * scale^6 absorbing machine cancellation
};

// Cubic identity for the four half-areas spanned by an arbitrary pair; holds
// automatically for surface tangent pairs with rho == a and degenerately
// whenever the minors sum to zero or their pairwise products sum to zero.
// Throws std::invalid_argument for parallel (or zero) input vectors.
TetrahedronReport tetrahedron_check(const std::array<double, 3>& u,
                                    const std::array<double, 3>& v);

struct CubicQuadruple {
    long long a;     // stored with a <= b <= c
    long long b;
    long long c;
    long long d;     // a^3 + b^3 + c^3 - 3abc = d^3, d >= 1
    bool primitive;  // gcd(a, b, c, d) == 1
};

// a^3 + b^3 + c^3 - 3abc in exact integer arithmetic.
long long cubic_form_exact(long long a, long long b, long long c);

// Largest r >= 0 with r^3 <= n; exact for every non-negative long long
// (floating-point seed plus integer correction). Throws on negative input.
long long integer_cube_root(long long n);

// All quadruples with 1 <= a <= b <= c <= limit whose form value is a
// positive perfect cube, sorted by (c, b, a). limit must lie in [1, 10000];
// workers >= 1 partitions the outer loop and merges deterministically.
std::vector<CubicQuadruple> diophantine_search(long long limit, unsigned workers = 1);

}  // namespace cnx
