#pragma once

// Conjugate-coordinate calculus: derivatives with respect to the N
// conjugate coordinates, the N-ary Cauchy-Riemann systems they induce, the
// N-ary Laplace operator as the norm form in derivative symbols, and
// polynomial-level harmonicity checks.

#include "cnx/cn_algebra.hpp"

#include <string>
#include <vector>

namespace cnx {

// F = f_0 + f_1 q + ... + f_{N-1} q^{N-1} with polynomial components in
// x_0..x_{N-1}. Carried as an algebra element whose coefficients are
// polynomials so that products of component functions reuse the algebra
// product directly.
using ComponentFunction = CnNumber<MultiPoly>;

// Derivative with respect to the s-th conjugate coordinate:
//   (1/N) sum_r zeta_N^{-s r} q^{N-r} (d_r F),
// expanded into components through the algebra product. The wrap q^N = eps
// makes the r = 0 term a scalar multiple of d_0 F.
ComponentFunction conj_derivative(const ComponentFunction& F, int s);

// z^k of the generic element (k >= 0); k = 0 gives the unit.
ComponentFunction generic_power(int order, int sign, int k);

// One equality chain of the first-type system: the N quantities that every
// nonzero-index conjugate derivative mixes with the same phase pattern.
// Chain m collects, for r = 0..N-1, the component-m coefficient of
// q^{N-r} d_r F; the first-type system holds exactly when each chain is
// constant in r.
struct CrChain {
    int residue = 0;                      // basis-power class m
    std::vector<std::string> term_names;  // e.g. "d1 f2", "-d2 f0"
    std::vector<MultiPoly> terms;
    bool holds = false;
    std::vector<std::string> failures;    // e.g. "d0 f0 != d1 f1"
};

struct CrReport {
    int order = 0;
    int type = 1;  // type k: derivatives k..N-1 must vanish; 1 = first type
    std::vector<bool> derivative_vanishes;  // s = 0..N-1
    bool holds = false;                     // the required subset vanishes
    std::vector<CrChain> chains;            // populated for the first type
    bool chains_hold = false;               // every chain constant (first type)
};

// Checks the type-k Cauchy-Riemann system; valid types are 1..N-1. For the
// first type the equivalent equality chains are evaluated as well.
CrReport cr_system_check(const ComponentFunction& F, int type);

// The norm form with x_r read as the derivative symbol d_r; 2 <= N <= 6.
MultiPoly nary_laplacian(int order, int sign);

// Interprets op as a polynomial in derivative symbols d_0..d_{n-1} and
// applies it to f by iterated differentiation.
MultiPoly apply_operator(const MultiPoly& op, const MultiPoly& f);

// Expands the product of the three linear ternary operators
// (d0+d1+d2)(d0+j d1+j^2 d2)(d0+j^2 d1+j d2) and compares with the cubic
// operator.
bool cubic_operator_factorizes();

// Verifies that the forward conjugate-derivative matrix and the displayed
// inverse multiply to sign * identity inside the algebra (the global sign
// is the wrap q^N = eps picked up by every product q^{N-r} q^r).
bool chain_rule_inverse_ok(int order, int sign);

}  // namespace cnx
