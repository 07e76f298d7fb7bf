#include "cnx/cyclotomic.hpp"

#include <array>
#include <cassert>
#include <cmath>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace cnx {

namespace {

void check_order(int order) {
    if (order < 1 || order > MAX_ORDER)
        throw std::invalid_argument("Cyclotomic: order must be in [1, " +
                                    std::to_string(MAX_ORDER) + "]");
}

// Dense univariate helpers over Rational (ascending coefficients).
using Poly = std::vector<Rational>;

void trim(Poly& p) {
    while (!p.empty() && p.back().is_zero()) p.pop_back();
}

Poly mul(const Poly& a, const Poly& b) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, Rational());
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    return r;
}

// Quotient of exact division (used for building Phi_N; remainder must vanish).
Poly div_exact(Poly num, const Poly& den) {
    Poly q(num.size() >= den.size() ? num.size() - den.size() + 1 : 0, Rational());
    while (num.size() >= den.size() && !num.empty()) {
        size_t shift = num.size() - den.size();
        Rational c = num.back() / den.back();
        q[shift] = c;
        for (size_t i = 0; i < den.size(); ++i) num[shift + i] -= c * den[i];
        trim(num);
    }
    if (!num.empty()) throw std::logic_error("cyclotomic_poly: non-exact division");
    return q;
}

struct OrderData {
    Poly phi;                        // Phi_N, monic
    std::vector<Poly> power_table;   // x^k mod Phi_N for k = 0..2N
};

// Reduce p modulo the monic polynomial phi (in place remainder).
Poly mod_phi(Poly p, const Poly& phi) {
    size_t deg = phi.size() - 1;
    while (p.size() > deg) {
        Rational c = p.back();
        size_t shift = p.size() - phi.size();
        if (!c.is_zero())
            for (size_t i = 0; i < phi.size(); ++i) p[shift + i] -= c * phi[i];
        p.pop_back();
        trim(p);
        if (p.size() <= deg) break;
    }
    p.resize(deg, Rational());
    return p;
}

const OrderData& order_data(int order) {
    static const std::array<OrderData, MAX_ORDER + 1> table = [] {
        std::array<OrderData, MAX_ORDER + 1> t;
        std::array<Poly, MAX_ORDER + 1> phis;
        for (int n = 1; n <= MAX_ORDER; ++n) {
            Poly xn_minus_1(n + 1, Rational());
            xn_minus_1[0] = Rational(-1);
            xn_minus_1[n] = Rational(1);
            Poly quot = xn_minus_1;
            for (int d = 1; d < n; ++d)
                if (n % d == 0) quot = div_exact(quot, phis[d]);
            phis[n] = quot;
            t[n].phi = quot;
            size_t deg = quot.size() - 1;
            t[n].power_table.resize(2 * n + 1);
            for (int k = 0; k <= 2 * n; ++k) {
                Poly xk(k + 1, Rational());
                xk[k] = Rational(1);
                Poly r = mod_phi(std::move(xk), quot);
                r.resize(deg, Rational());
                t[n].power_table[k] = std::move(r);
            }
        }
        return t;
    }();
    check_order(order);
    return table[order];
}

}  // namespace

int euler_phi(int n) {
    if (n < 1) throw std::invalid_argument("euler_phi: n must be positive");
    int result = n;
    for (int p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            while (n % p == 0) n /= p;
            result -= result / p;
        }
    }
    if (n > 1) result -= result / n;
    return result;
}

const std::vector<Rational>& cyclotomic_poly(int order) {
    return order_data(order).phi;
}

Cyclotomic::Cyclotomic(int order) : order_(order) {
    check_order(order);
    coeffs_.assign(euler_phi(order), Rational());
}

Cyclotomic::Cyclotomic(int order, const Rational& constant) : Cyclotomic(order) {
    coeffs_[0] = constant;
}

bool Cyclotomic::is_zero() const {
    for (const auto& c : coeffs_)
        if (!c.is_zero()) return false;
    return true;
}

bool Cyclotomic::is_rational() const {
    for (size_t i = 1; i < coeffs_.size(); ++i)
        if (!coeffs_[i].is_zero()) return false;
    return true;
}

Rational Cyclotomic::rational_value() const {
    if (!is_rational()) throw std::domain_error("Cyclotomic: value is not rational");
    return coeffs_[0];
}

Cyclotomic Cyclotomic::operator-() const {
    Cyclotomic r(*this);
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& o) {
    if (order_ != o.order_) throw std::invalid_argument("Cyclotomic: order mismatch");
    for (size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    return *this;
}

Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& o) {
    if (order_ != o.order_) throw std::invalid_argument("Cyclotomic: order mismatch");
    for (size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    return *this;
}

Cyclotomic& Cyclotomic::operator*=(const Cyclotomic& o) {
    if (order_ != o.order_) throw std::invalid_argument("Cyclotomic: order mismatch");
    const OrderData& data = order_data(order_);
    size_t deg = coeffs_.size();
    std::vector<Rational> conv(2 * deg, Rational());
    for (size_t i = 0; i < deg; ++i) {
        if (coeffs_[i].is_zero()) continue;
        for (size_t j = 0; j < deg; ++j) {
            if (o.coeffs_[j].is_zero()) continue;
            conv[i + j] += coeffs_[i] * o.coeffs_[j];
        }
    }
    std::vector<Rational> out(deg, Rational());
    for (size_t k = 0; k < conv.size(); ++k) {
        if (conv[k].is_zero()) continue;
        if (k < deg) {
            out[k] += conv[k];
        } else {
            const Poly& red = data.power_table[k];
            for (size_t i = 0; i < deg; ++i) out[i] += conv[k] * red[i];
        }
    }
    coeffs_ = std::move(out);
    return *this;
}

Cyclotomic& Cyclotomic::operator/=(const Cyclotomic& o) {
    return *this *= o.inverse();
}

Cyclotomic& Cyclotomic::operator+=(const Rational& r) {
    coeffs_[0] += r;
    return *this;
}

Cyclotomic& Cyclotomic::operator-=(const Rational& r) {
    coeffs_[0] -= r;
    return *this;
}

Cyclotomic& Cyclotomic::operator*=(const Rational& r) {
    for (auto& c : coeffs_) c *= r;
    return *this;
}

Cyclotomic Cyclotomic::conj() const { return galois_map(*this, order_ - 1 + (order_ == 1)); }

Cyclotomic Cyclotomic::inverse() const {
    if (is_zero()) throw std::domain_error("Cyclotomic: division by zero");
    // Multiply by every other Galois conjugate; the full product is the field
    // norm, a nonzero rational, by which we then divide.
    Cyclotomic prod(order_, Rational(1));
    for (int s = 2; s <= order_; ++s) {
        if (std::gcd(s, order_) != 1) continue;
        prod *= galois_map(*this, s);
    }
    Cyclotomic norm_elt = *this * prod;
    Rational norm = norm_elt.rational_value();  // throws if the trick failed
    if (norm.is_zero()) throw std::domain_error("Cyclotomic: division by zero");
    Rational inv_norm = Rational(1) / norm;
    return prod * inv_norm;
}

std::complex<double> Cyclotomic::to_complex() const {
    std::complex<double> acc(0.0, 0.0);
    constexpr double two_pi = 6.283185307179586476925286766559;
    for (size_t k = 0; k < coeffs_.size(); ++k) {
        if (coeffs_[k].is_zero()) continue;
        acc += coeffs_[k].to_double() *
               std::polar(1.0, two_pi * static_cast<double>(k) / order_);
    }
    return acc;
}

Cyclotomic Cyclotomic::promoted(int new_order) const {
    check_order(new_order);
    if (new_order == order_) return *this;
    if (new_order % order_ != 0)
        throw std::invalid_argument("Cyclotomic: can only promote to a multiple order");
    long long step = new_order / order_;
    Cyclotomic out(new_order);
    for (size_t k = 0; k < coeffs_.size(); ++k) {
        if (coeffs_[k].is_zero()) continue;
        out += zeta(new_order, step * static_cast<long long>(k)) * coeffs_[k];
    }
    return out;
}

std::string Cyclotomic::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (size_t k = 0; k < coeffs_.size(); ++k) {
        const Rational& c = coeffs_[k];
        if (c.is_zero()) continue;
        Rational a = abs(c);
        if (first) {
            if (c.sign() < 0) os << "-";
            first = false;
        } else {
            os << (c.sign() < 0 ? " - " : " + ");
        }
        bool unit = a.is_one();
        if (k == 0 || !unit) os << a.str();
        if (k > 0) {
            if (!unit) os << "*";
            os << "j";
            if (k > 1) os << "^" << k;
        }
    }
    return os.str();
}

Cyclotomic zeta(int order, long long power) {
    check_order(order);
    const OrderData& data = order_data(order);
    long long k = power % order;
    if (k < 0) k += order;
    Cyclotomic out(order);
    out.coeffs_ = data.power_table[static_cast<size_t>(k)];
    return out;
}

Cyclotomic galois_map(const Cyclotomic& x, long long s) {
    Cyclotomic out(x.order());
    const auto& cs = x.coeffs();
    for (size_t k = 0; k < cs.size(); ++k) {
        if (cs[k].is_zero()) continue;
        out += zeta(x.order(), s * static_cast<long long>(k)) * cs[k];
    }
    return out;
}

}  // namespace cnx
