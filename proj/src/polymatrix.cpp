#include "cnx/polymatrix.hpp"

#include <cstdint>
#include <map>
#include <stdexcept>

namespace cnx {

PolyMatrix::PolyMatrix(int dim, int nvars, int order)
    : dim_(dim), nvars_(nvars), order_(order) {
    if (dim < 1) throw std::invalid_argument("PolyMatrix: dimension must be positive");
    e_.assign(static_cast<size_t>(dim) * dim, MultiPoly(nvars, order));
}

PolyMatrix PolyMatrix::identity(int dim, int nvars, int order) {
    PolyMatrix m(dim, nvars, order);
    MultiPoly one = MultiPoly::constant(nvars, order, Rational(1));
    for (int i = 0; i < dim; ++i) m.at(i, i) = one;
    return m;
}

MultiPoly& PolyMatrix::at(int i, int j) {
    if (i < 0 || i >= dim_ || j < 0 || j >= dim_)
        throw std::out_of_range("PolyMatrix: index out of range");
    return e_[static_cast<size_t>(i) * dim_ + j];
}

const MultiPoly& PolyMatrix::at(int i, int j) const {
    if (i < 0 || i >= dim_ || j < 0 || j >= dim_)
        throw std::out_of_range("PolyMatrix: index out of range");
    return e_[static_cast<size_t>(i) * dim_ + j];
}

void PolyMatrix::check_compatible(const PolyMatrix& o) const {
    if (dim_ != o.dim_ || nvars_ != o.nvars_ || order_ != o.order_)
        throw std::invalid_argument("PolyMatrix: shape mismatch");
}

PolyMatrix PolyMatrix::operator-() const {
    PolyMatrix r(*this);
    for (auto& p : r.e_) p = -p;
    return r;
}

PolyMatrix& PolyMatrix::operator+=(const PolyMatrix& o) {
    check_compatible(o);
    for (size_t i = 0; i < e_.size(); ++i) e_[i] += o.e_[i];
    return *this;
}

PolyMatrix& PolyMatrix::operator-=(const PolyMatrix& o) {
    check_compatible(o);
    for (size_t i = 0; i < e_.size(); ++i) e_[i] -= o.e_[i];
    return *this;
}

PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b) {
    a.check_compatible(b);
    PolyMatrix r(a.dim_, a.nvars_, a.order_);
    for (int i = 0; i < a.dim_; ++i)
        for (int j = 0; j < a.dim_; ++j) {
            MultiPoly acc(a.nvars_, a.order_);
            for (int k = 0; k < a.dim_; ++k) acc += a.at(i, k) * b.at(k, j);
            r.at(i, j) = std::move(acc);
        }
    return r;
}

PolyMatrix& PolyMatrix::operator*=(const MultiPoly& p) {
    for (auto& q : e_) q *= p;
    return *this;
}

bool PolyMatrix::is_zero() const {
    for (const auto& p : e_)
        if (!p.is_zero()) return false;
    return true;
}

PolyMatrix PolyMatrix::transposed() const {
    PolyMatrix r(dim_, nvars_, order_);
    for (int i = 0; i < dim_; ++i)
        for (int j = 0; j < dim_; ++j) r.at(i, j) = at(j, i);
    return r;
}

PolyMatrix PolyMatrix::power(int k) const {
    if (k < 1) throw std::invalid_argument("PolyMatrix::power: exponent must be >= 1");
    PolyMatrix acc = *this;
    for (int i = 1; i < k; ++i) acc = acc * *this;
    return acc;
}

MultiPoly PolyMatrix::det() const {
    if (dim_ > MAX_DET_DIM)
        throw std::invalid_argument("PolyMatrix::det: dimension exceeds cofactor cap");
    // Cofactor expansion along successive rows, memoized on the set of
    // still-available columns (each subset determines a unique minor because
    // the row range is forced by the subset size).
    std::map<uint32_t, MultiPoly> memo;
    uint32_t full = (dim_ >= 32) ? ~UINT32_C(0) : ((UINT32_C(1) << dim_) - 1);

    auto minor_det = [&](auto&& self, uint32_t cols) -> MultiPoly {
        auto it = memo.find(cols);
        if (it != memo.end()) return it->second;
        int size = __builtin_popcount(cols);
        int row = dim_ - size;
        MultiPoly acc(nvars_, order_);
        if (size == 0) {
            acc = MultiPoly::constant(nvars_, order_, Rational(1));
        } else {
            int sign = 1;
            for (int j = 0; j < dim_; ++j) {
                if (!(cols & (UINT32_C(1) << j))) continue;
                const MultiPoly& entry = at(row, j);
                if (!entry.is_zero()) {
                    MultiPoly sub = self(self, cols & ~(UINT32_C(1) << j));
                    MultiPoly contrib = entry * sub;
                    if (sign < 0) contrib = -contrib;
                    acc += contrib;
                }
                sign = -sign;
            }
        }
        memo.emplace(cols, acc);
        return acc;
    };
    return minor_det(minor_det, full);
}

PolyMatrix matrix_power(const PolyMatrix& m, int k) { return m.power(k); }

MultiPoly poly_det(const PolyMatrix& m) { return m.det(); }

}  // namespace cnx
