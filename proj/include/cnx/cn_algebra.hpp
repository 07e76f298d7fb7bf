#pragma once

// Module-level operations on C_N numbers: the N conjugations, norm forms,
// factorization identities, the regular representation as a polynomial
// matrix, and the textual exchange format "N=3,eps=+1:[1, 1, 0]".

#include "cnx/cn_number.hpp"
#include "cnx/polymatrix.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace cnx {

// s-th conjugation: coefficient x_m picks up the phase zeta_N^{s*m}. The
// coefficients must live in a cyclotomic field whose order is a multiple of
// the algebra order (usually equal to it).
CnNumber<Cyclotomic> conjugate(const CnNumber<Cyclotomic>& z, int s);
CnNumber<MultiPoly> conjugate(const CnNumber<MultiPoly>& z, int s);

// Product of all N conjugates. The result must collapse to the q^0 component
// with a Galois-fixed (rational) value; both facts are enforced with
// std::logic_error because a violation indicates an implementation bug.
Cyclotomic norm(const CnNumber<Cyclotomic>& z);
MultiPoly norm(const CnNumber<MultiPoly>& z);
Rational norm(const CnNumber<Rational>& z);
// Floating norm, evaluated through the cached symbolic norm form.
double norm(const CnNumber<double>& z);

struct NormForm {
    int order;
    int sign;
    MultiPoly form;  // homogeneous of degree N, rational coefficients
};

// Symbolic norm of the generic element, 2 <= N <= 8, memoized.
const NormForm& expand_norm_form(int order, int sign);

double norm_form_value(int order, int sign, const std::vector<double>& x);
Rational norm_form_value_exact(int order, int sign, const std::vector<Rational>& x);

struct FactorizationReport {
    int order;
    int sign;
    std::vector<MultiPoly> factors;
    bool equal;
    MultiPoly difference;  // expanded product minus the norm form
};

// Expands the claimed factored form of the norm and reports equality.
// Supported: (3,+1), (4,+1), (4,-1), (6,+1).
FactorizationReport factorization_check(int order, int sign);

// Regular representation with symbolic entries, as a polynomial matrix.
PolyMatrix regular_rep_matrix(const CnNumber<MultiPoly>& z);

// Generic symbolic element: coefficients x_0..x_{N-1} over the order-N field.
CnNumber<MultiPoly> generic_element(int order, int sign);

// Embeds rational coordinates into the cyclotomic coefficient field.
CnNumber<Cyclotomic> embed(const CnNumber<Rational>& z);

// Textual form "N=3,eps=+1:[1, 1, 0]".
std::string cn_str(const CnNumber<Rational>& z);
CnNumber<Rational> cn_parse(std::string_view text);

}  // namespace cnx
