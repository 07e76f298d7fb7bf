#pragma once

// Small dense matrices over the cyclotomic field: the exact carrier for
// character tables, rotation matrices, basis changes, and the generalized
// Clifford-type families. Header-only; sizes stay tiny (<= 8).

#include "cnx/cyclotomic.hpp"

#include <stdexcept>
#include <vector>

namespace cnx {

class CycMatrix {
public:
    CycMatrix(int dim, int order) : dim_(dim), order_(order) {
        if (dim < 1) throw std::invalid_argument("CycMatrix: dimension must be positive");
        e_.assign(static_cast<size_t>(dim) * dim, Cyclotomic(order));
    }

    static CycMatrix identity(int dim, int order) {
        CycMatrix m(dim, order);
        for (int i = 0; i < dim; ++i) m.at(i, i) = Cyclotomic(order, Rational(1));
        return m;
    }

    int dim() const { return dim_; }
    int order() const { return order_; }

    Cyclotomic& at(int i, int j) {
        if (i < 0 || i >= dim_ || j < 0 || j >= dim_)
            throw std::out_of_range("CycMatrix: index out of range");
        return e_[static_cast<size_t>(i) * dim_ + j];
    }
    const Cyclotomic& at(int i, int j) const {
        if (i < 0 || i >= dim_ || j < 0 || j >= dim_)
            throw std::out_of_range("CycMatrix: index out of range");
        return e_[static_cast<size_t>(i) * dim_ + j];
    }

    friend bool operator==(const CycMatrix& a, const CycMatrix& b) {
        return a.dim_ == b.dim_ && a.order_ == b.order_ && a.e_ == b.e_;
    }
    friend bool operator!=(const CycMatrix& a, const CycMatrix& b) { return !(a == b); }

    CycMatrix operator-() const {
        CycMatrix r = *this;
        for (auto& c : r.e_) c = -c;
        return r;
    }

    friend CycMatrix operator+(CycMatrix a, const CycMatrix& b) {
        a.check_compatible(b);
        for (size_t i = 0; i < a.e_.size(); ++i) a.e_[i] += b.e_[i];
        return a;
    }

    friend CycMatrix operator-(CycMatrix a, const CycMatrix& b) {
        a.check_compatible(b);
        for (size_t i = 0; i < a.e_.size(); ++i) a.e_[i] -= b.e_[i];
        return a;
    }

    friend CycMatrix operator*(const CycMatrix& a, const CycMatrix& b) {
        a.check_compatible(b);
        CycMatrix r(a.dim_, a.order_);
        for (int i = 0; i < a.dim_; ++i)
            for (int k = 0; k < a.dim_; ++k) {
                const Cyclotomic& aik = a.at(i, k);
                if (aik.is_zero()) continue;
                for (int j = 0; j < a.dim_; ++j) r.at(i, j) += aik * b.at(k, j);
            }
        return r;
    }

    CycMatrix& operator*=(const Cyclotomic& c) {
        for (auto& v : e_) v *= c;
        return *this;
    }
    friend CycMatrix operator*(CycMatrix a, const Cyclotomic& c) { return a *= c; }
    friend CycMatrix operator*(const Cyclotomic& c, CycMatrix a) { return a *= c; }

    CycMatrix power(int k) const {
        if (k < 0) throw std::invalid_argument("CycMatrix::power: negative exponent");
        CycMatrix acc = identity(dim_, order_);
        for (int i = 0; i < k; ++i) acc = acc * *this;
        return acc;
    }

    CycMatrix transposed() const {
        CycMatrix r(dim_, order_);
        for (int i = 0; i < dim_; ++i)
            for (int j = 0; j < dim_; ++j) r.at(i, j) = at(j, i);
        return r;
    }

    // Entry-wise complex conjugate combined with transposition.
    CycMatrix conj_transposed() const {
        CycMatrix r(dim_, order_);
        for (int i = 0; i < dim_; ++i)
            for (int j = 0; j < dim_; ++j) r.at(i, j) = at(j, i).conj();
        return r;
    }

    Cyclotomic trace() const {
        Cyclotomic acc(order_);
        for (int i = 0; i < dim_; ++i) acc += at(i, i);
        return acc;
    }

    bool is_zero() const {
        for (const auto& c : e_)
            if (!c.is_zero()) return false;
        return true;
    }

    // True when the matrix is a scalar multiple of the identity; the scalar
    // is written to *scalar_out when requested.
    bool is_scalar(Cyclotomic* scalar_out = nullptr) const {
        for (int i = 0; i < dim_; ++i)
            for (int j = 0; j < dim_; ++j) {
                if (i != j && !at(i, j).is_zero()) return false;
                if (i == j && !(at(i, i) == at(0, 0))) return false;
            }
        if (scalar_out) *scalar_out = at(0, 0);
        return true;
    }

    // Exactly one nonzero entry in every row and every column.
    bool is_generalized_permutation() const {
        for (int i = 0; i < dim_; ++i) {
            int row_nnz = 0, col_nnz = 0;
            for (int j = 0; j < dim_; ++j) {
                if (!at(i, j).is_zero()) ++row_nnz;
                if (!at(j, i).is_zero()) ++col_nnz;
            }
            if (row_nnz != 1 || col_nnz != 1) return false;
        }
        return true;
    }

    // Kronecker (tensor) product.
    friend CycMatrix kron(const CycMatrix& a, const CycMatrix& b) {
        if (a.order_ != b.order_) throw std::invalid_argument("kron: order mismatch");
        CycMatrix r(a.dim_ * b.dim_, a.order_);
        for (int i = 0; i < a.dim_; ++i)
            for (int j = 0; j < a.dim_; ++j) {
                if (a.at(i, j).is_zero()) continue;
                for (int k = 0; k < b.dim_; ++k)
                    for (int l = 0; l < b.dim_; ++l)
                        r.at(i * b.dim_ + k, j * b.dim_ + l) = a.at(i, j) * b.at(k, l);
            }
        return r;
    }

private:
    void check_compatible(const CycMatrix& o) const {
        if (dim_ != o.dim_ || order_ != o.order_)
            throw std::invalid_argument("CycMatrix: shape mismatch");
    }

    int dim_;
    int order_;
    std::vector<Cyclotomic> e_;
};

}  // namespace cnx
