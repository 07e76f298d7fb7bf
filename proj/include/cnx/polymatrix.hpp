#pragma once

// Square matrices of multivariate polynomials, with exact determinants by
// memoized cofactor expansion. Sizes are capped at 8: every matrix in the
// toolkit is at most 6x6, and cofactor expansion with memoization on column
// subsets is exact and fast at that scale.

#include "cnx/multipoly.hpp"

namespace cnx {

class PolyMatrix {
public:
    static constexpr int MAX_DET_DIM = 8;

    // Zero matrix.
    PolyMatrix(int dim, int nvars, int order);
    static PolyMatrix identity(int dim, int nvars, int order);

    int dim() const { return dim_; }
    int nvars() const { return nvars_; }
    int order() const { return order_; }

    MultiPoly& at(int i, int j);
    const MultiPoly& at(int i, int j) const;

    PolyMatrix operator-() const;
    PolyMatrix& operator+=(const PolyMatrix& o);
    PolyMatrix& operator-=(const PolyMatrix& o);
    friend PolyMatrix operator+(PolyMatrix a, const PolyMatrix& b) { return a += b; }
    friend PolyMatrix operator-(PolyMatrix a, const PolyMatrix& b) { return a -= b; }
    friend PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b);

    PolyMatrix& operator*=(const MultiPoly& p);
    friend PolyMatrix operator*(PolyMatrix a, const MultiPoly& b) { return a *= b; }

    friend bool operator==(const PolyMatrix& a, const PolyMatrix& b) {
        return a.dim_ == b.dim_ && a.nvars_ == b.nvars_ && a.order_ == b.order_ &&
               a.e_ == b.e_;
    }
    friend bool operator!=(const PolyMatrix& a, const PolyMatrix& b) { return !(a == b); }

    bool is_zero() const;

    PolyMatrix transposed() const;

    // Exact k-th power, k >= 1.
    PolyMatrix power(int k) const;

    // Exact determinant (dim <= MAX_DET_DIM).
    MultiPoly det() const;

private:
    void check_compatible(const PolyMatrix& o) const;

    int dim_;
    int nvars_;
    int order_;
    std::vector<MultiPoly> e_;  // row-major, dim*dim entries
};

PolyMatrix matrix_power(const PolyMatrix& m, int k);
MultiPoly poly_det(const PolyMatrix& m);

}  // namespace cnx
