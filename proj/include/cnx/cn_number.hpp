#pragma once

// The commutative algebra R[q]/(q^N - eps), eps = +-1, over a pluggable
// coefficient ring. One multiplication routine serves exact rational,
// cyclotomic, symbolic-polynomial, and floating instantiations; the ring is
// abstracted through RingOps, whose only nontrivial duty is making a zero of
// the right shape.

#include "cnx/cyclotomic.hpp"
#include "cnx/multipoly.hpp"

#include <stdexcept>
#include <vector>

namespace cnx {

template <class R>
struct RingOps {
    static R zero_like(const R&) { return R(0); }
};

template <>
struct RingOps<Cyclotomic> {
    static Cyclotomic zero_like(const Cyclotomic& model) { return Cyclotomic(model.order()); }
};

template <>
struct RingOps<MultiPoly> {
    static MultiPoly zero_like(const MultiPoly& model) {
        return MultiPoly(model.nvars(), model.order());
    }
};

template <class R>
class CnNumber {
public:
    CnNumber(int order, int sign, std::vector<R> coeffs)
        : order_(order), sign_(sign), coeffs_(std::move(coeffs)) {
        if (order_ < 2) throw std::invalid_argument("CnNumber: order must be >= 2");
        if (sign_ != 1 && sign_ != -1)
            throw std::invalid_argument("CnNumber: sign must be +1 or -1");
        if (static_cast<int>(coeffs_.size()) != order_)
            throw std::invalid_argument("CnNumber: coefficient count must equal the order");
    }

    int order() const { return order_; }
    int sign() const { return sign_; }
    const std::vector<R>& coeffs() const { return coeffs_; }
    const R& operator[](int i) const { return coeffs_.at(i); }

    friend bool operator==(const CnNumber& a, const CnNumber& b) {
        return a.order_ == b.order_ && a.sign_ == b.sign_ && a.coeffs_ == b.coeffs_;
    }
    friend bool operator!=(const CnNumber& a, const CnNumber& b) { return !(a == b); }

    CnNumber operator-() const {
        CnNumber r = *this;
        for (auto& c : r.coeffs_) c = -c;
        return r;
    }

    friend CnNumber operator+(CnNumber a, const CnNumber& b) {
        a.check_structure(b);
        for (int i = 0; i < a.order_; ++i) a.coeffs_[i] = a.coeffs_[i] + b.coeffs_[i];
        return a;
    }

    friend CnNumber operator-(CnNumber a, const CnNumber& b) {
        a.check_structure(b);
        for (int i = 0; i < a.order_; ++i) a.coeffs_[i] = a.coeffs_[i] - b.coeffs_[i];
        return a;
    }

    // The twisted convolution (ab)_m = sum over k+l == m (mod N) of
    // eps^{floor((k+l)/N)} a_k b_l; both factors have exponent < N, so the
    // twist fires exactly when the index sum wraps once.
    friend CnNumber operator*(const CnNumber& a, const CnNumber& b) {
        a.check_structure(b);
        int n = a.order_;
        std::vector<R> out(n, RingOps<R>::zero_like(a.coeffs_[0]));
        for (int k = 0; k < n; ++k) {
            for (int l = 0; l < n; ++l) {
                R term = a.coeffs_[k] * b.coeffs_[l];
                if (k + l >= n && a.sign_ < 0) term = -term;
                out[(k + l) % n] = out[(k + l) % n] + term;
            }
        }
        return CnNumber(n, a.sign_, std::move(out));
    }

private:
    void check_structure(const CnNumber& o) const {
        if (order_ != o.order_ || sign_ != o.sign_)
            throw std::invalid_argument("CnNumber: structure mismatch");
    }

    int order_;
    int sign_;
    std::vector<R> coeffs_;
};

template <class R>
CnNumber<R> cn_mul(const CnNumber<R>& a, const CnNumber<R>& b) {
    return a * b;
}

// Multiplication-by-z in the basis {1, q, ..., q^{N-1}}: row i holds the
// coefficients of z*q^i, so entry (i, j) is eps^{[i>j]} * x_{(j-i) mod N} and
// the determinant equals the norm of z for both signs.
template <class R>
std::vector<std::vector<R>> regular_rep(const CnNumber<R>& z) {
    int n = z.order();
    std::vector<std::vector<R>> rows;
    rows.reserve(n);
    for (int i = 0; i < n; ++i) {
        std::vector<R> row;
        row.reserve(n);
        for (int j = 0; j < n; ++j) {
            R entry = z[((j - i) % n + n) % n];
            if (i > j && z.sign() < 0) entry = -entry;
            row.push_back(std::move(entry));
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace cnx
