#pragma once

// Sparse multivariate polynomials with cyclotomic coefficients.
//
// Terms live in a map from exponent vector to coefficient with no stored
// zeros, so the representation is canonical and equality is map equality.
// Every polynomial carries the number of variables and the cyclotomic order
// of its coefficient field; mixed-arity or mixed-order arithmetic throws.

#include "cnx/cyclotomic.hpp"

#include <map>
#include <string>
#include <vector>

namespace cnx {

using ExpVec = std::vector<int>;

class MultiPoly {
public:
    MultiPoly(int nvars, int order);

    static MultiPoly constant(int nvars, int order, const Rational& c);
    static MultiPoly constant(int nvars, const Cyclotomic& c);
    // The variable x_index.
    static MultiPoly variable(int nvars, int order, int index);
    static MultiPoly monomial(int nvars, const ExpVec& exps, const Cyclotomic& coeff);

    int nvars() const { return nvars_; }
    int order() const { return order_; }
    const std::map<ExpVec, Cyclotomic>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }

    // Coefficient of the given exponent vector (zero if absent).
    Cyclotomic coeff(const ExpVec& exps) const;

    MultiPoly operator-() const;
    MultiPoly& operator+=(const MultiPoly& o);
    MultiPoly& operator-=(const MultiPoly& o);
    MultiPoly& operator*=(const MultiPoly& o);
    friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);

    MultiPoly& operator*=(const Cyclotomic& c);
    MultiPoly& operator*=(const Rational& c);
    friend MultiPoly operator*(MultiPoly a, const Cyclotomic& b) { return a *= b; }
    friend MultiPoly operator*(MultiPoly a, const Rational& b) { return a *= b; }

    friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
        return a.nvars_ == b.nvars_ && a.order_ == b.order_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const MultiPoly& a, const MultiPoly& b) { return !(a == b); }

    MultiPoly partial_derivative(int var) const;

    int total_degree() const;  // -1 for the zero polynomial
    bool is_homogeneous(int* degree_out = nullptr) const;
    bool has_rational_coeffs() const;

    // Evaluation; the double variant requires rational coefficients.
    double eval_double(const std::vector<double>& x) const;
    std::complex<double> eval_complex(const std::vector<double>& x) const;
    Rational eval_rational(const std::vector<Rational>& x) const;
    Cyclotomic eval_cyclotomic(const std::vector<Cyclotomic>& x) const;

    // Map with all coefficients converted to Rational (throws when any
    // coefficient is irrational); used to compare polynomials across
    // different ambient cyclotomic orders.
    std::map<ExpVec, Rational> rational_terms() const;

    // Rendering in graded-lexicographic order, e.g. "3*x0^2*x1 + (j^2)*x2".
    std::string str() const;
    // Parses the same grammar: +, -, *, ^, integer and a/b literals, variables
    // x0..x9, the root-of-unity token j, and parentheses.
    static MultiPoly parse(std::string_view text, int nvars, int order);

private:
    void insert(const ExpVec& exps, const Cyclotomic& coeff);
    void check_compatible(const MultiPoly& o) const;

    int nvars_;
    int order_;
    std::map<ExpVec, Cyclotomic> terms_;
};

}  // namespace cnx
