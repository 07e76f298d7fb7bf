#include "cnx/cn_algebra.hpp"

#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace cnx {

namespace {

void check_sign(int sign) {
    if (sign != 1 && sign != -1)
        throw std::invalid_argument("cn_algebra: sign must be +1 or -1");
}

// Phase multiplier zeta_N^{s*m} expressed in the coefficient field of order
// M (which must be a multiple of N).
Cyclotomic phase(int coeff_order, int algebra_order, long long power) {
    if (coeff_order % algebra_order != 0)
        throw std::invalid_argument(
            "conjugate: coefficient field order must be a multiple of the algebra order");
    long long step = coeff_order / algebra_order;
    return zeta(coeff_order, power * step);
}

}  // namespace

CnNumber<Cyclotomic> conjugate(const CnNumber<Cyclotomic>& z, int s) {
    if (s < 0 || s >= z.order()) throw std::invalid_argument("conjugate: s out of range");
    std::vector<Cyclotomic> out;
    out.reserve(z.order());
    for (int m = 0; m < z.order(); ++m)
        out.push_back(z[m] * phase(z[m].order(), z.order(),
                                   static_cast<long long>(s) * m));
    return CnNumber<Cyclotomic>(z.order(), z.sign(), std::move(out));
}

CnNumber<MultiPoly> conjugate(const CnNumber<MultiPoly>& z, int s) {
    if (s < 0 || s >= z.order()) throw std::invalid_argument("conjugate: s out of range");
    std::vector<MultiPoly> out;
    out.reserve(z.order());
    for (int m = 0; m < z.order(); ++m)
        out.push_back(z[m] * phase(z[m].order(), z.order(),
                                   static_cast<long long>(s) * m));
    return CnNumber<MultiPoly>(z.order(), z.sign(), std::move(out));
}

namespace {

template <class R, class ZeroPred, class FixedPred>
R norm_impl(const CnNumber<R>& z, ZeroPred is_zero_elt, FixedPred is_fixed) {
    CnNumber<R> prod = z;
    for (int s = 1; s < z.order(); ++s) prod = prod * conjugate(z, s);
    for (int m = 1; m < z.order(); ++m)
        if (!is_zero_elt(prod[m]))
            throw std::logic_error("norm: conjugate product has a non-scalar component");
    if (!is_fixed(prod[0]))
        throw std::logic_error("norm: scalar component is not Galois-fixed");
    return prod[0];
}

}  // namespace

Cyclotomic norm(const CnNumber<Cyclotomic>& z) {
    return norm_impl(z, [](const Cyclotomic& c) { return c.is_zero(); },
                     [](const Cyclotomic& c) { return c.is_rational(); });
}

MultiPoly norm(const CnNumber<MultiPoly>& z) {
    return norm_impl(z, [](const MultiPoly& p) { return p.is_zero(); },
                     [](const MultiPoly& p) { return p.has_rational_coeffs(); });
}

Rational norm(const CnNumber<Rational>& z) {
    return norm(embed(z)).rational_value();
}

double norm(const CnNumber<double>& z) {
    return norm_form_value(z.order(), z.sign(), z.coeffs());
}

CnNumber<Cyclotomic> embed(const CnNumber<Rational>& z) {
    std::vector<Cyclotomic> out;
    out.reserve(z.order());
    for (int m = 0; m < z.order(); ++m) out.emplace_back(z.order(), z[m]);
    return CnNumber<Cyclotomic>(z.order(), z.sign(), std::move(out));
}

CnNumber<MultiPoly> generic_element(int order, int sign) {
    check_sign(sign);
    std::vector<MultiPoly> coords;
    coords.reserve(order);
    for (int i = 0; i < order; ++i)
        coords.push_back(MultiPoly::variable(order, order, i));
    return CnNumber<MultiPoly>(order, sign, std::move(coords));
}

const NormForm& expand_norm_form(int order, int sign) {
    check_sign(sign);
    if (order < 2 || order > 8)
        throw std::invalid_argument("expand_norm_form: order must be in [2, 8]");
    static std::map<std::pair<int, int>, NormForm> cache;
    static std::mutex mutex;
    std::lock_guard<std::mutex> lock(mutex);
    auto key = std::make_pair(order, sign);
    auto it = cache.find(key);
    if (it == cache.end()) {
        MultiPoly form = norm(generic_element(order, sign));
        int degree = 0;
        if (!form.is_homogeneous(&degree) || degree != order)
            throw std::logic_error("expand_norm_form: form is not homogeneous of degree N");
        it = cache.emplace(key, NormForm{order, sign, std::move(form)}).first;
    }
    return it->second;
}

double norm_form_value(int order, int sign, const std::vector<double>& x) {
    return expand_norm_form(order, sign).form.eval_double(x);
}

Rational norm_form_value_exact(int order, int sign, const std::vector<Rational>& x) {
    return expand_norm_form(order, sign).form.eval_rational(x);
}

FactorizationReport factorization_check(int order, int sign) {
    check_sign(sign);
    auto poly = [&](const char* text) { return MultiPoly::parse(text, order, order); };
    std::vector<MultiPoly> factors;
    if (order == 3 && sign == 1) {
        factors = {poly("x0 + x1 + x2"),
                   poly("x0^2 + x1^2 + x2^2 - x0*x1 - x1*x2 - x2*x0")};
    } else if (order == 4 && sign == 1) {
        factors = {poly("x0 + x1 + x2 + x3"), poly("x0 + x2 - x1 - x3"),
                   poly("(x0 - x2)^2 + (x1 - x3)^2")};
    } else if (order == 4 && sign == -1) {
        // Sum of two squares: written as two "factors" combined additively.
        MultiPoly a = poly("x3^2 - x1^2 + 2*x0*x2");
        MultiPoly b = poly("x0^2 - x2^2 + 2*x1*x3");
        const NormForm& nf = expand_norm_form(order, sign);
        MultiPoly combo = a * a + b * b;
        return FactorizationReport{order, sign, {a, b}, combo == nf.form, combo - nf.form};
    } else if (order == 6 && sign == 1) {
        MultiPoly qs = poly(
            "x0^2 + x1^2 + x2^2 + x3^2 + x4^2 + x5^2"
            " - x0*x2 - x0*x4 - x1*x3 - x1*x5 - x2*x4 - x3*x5");
        MultiPoly qa = poly(
            "x0*x1 - 2*x0*x3 + x0*x5 + x1*x2 - 2*x1*x4 + x2*x3 - 2*x2*x5 + x3*x4 + x4*x5");
        factors = {poly("x0 + x1 + x2 + x3 + x4 + x5"),
                   poly("x0 - x1 + x2 - x3 + x4 - x5"), qs + qa, qs - qa};
    } else {
        throw std::invalid_argument("factorization_check: unsupported (order, sign)");
    }
    const NormForm& nf = expand_norm_form(order, sign);
    MultiPoly product = factors[0];
    for (size_t i = 1; i < factors.size(); ++i) product *= factors[i];
    return FactorizationReport{order, sign, factors, product == nf.form, product - nf.form};
}

PolyMatrix regular_rep_matrix(const CnNumber<MultiPoly>& z) {
    auto rows = regular_rep(z);
    int n = z.order();
    PolyMatrix m(n, z[0].nvars(), z[0].order());
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m.at(i, j) = rows[i][j];
    return m;
}

std::string cn_str(const CnNumber<Rational>& z) {
    std::ostringstream os;
    os << "N=" << z.order() << ",eps=" << (z.sign() > 0 ? "+1" : "-1") << ":[";
    for (int i = 0; i < z.order(); ++i) {
        if (i) os << ", ";
        os << z[i].str();
    }
    os << "]";
    return os.str();
}

CnNumber<Rational> cn_parse(std::string_view text) {
    auto fail = [] { throw std::invalid_argument("cn_parse: expected N=<n>,eps=<+1|-1>:[...]"); };
    auto expect = [&](std::string_view prefix) {
        if (text.substr(0, prefix.size()) != prefix) fail();
        text.remove_prefix(prefix.size());
    };
    expect("N=");
    size_t comma = text.find(',');
    if (comma == std::string_view::npos) fail();
    int order = std::stoi(std::string(text.substr(0, comma)));
    text.remove_prefix(comma + 1);
    expect("eps=");
    int sign = 0;
    if (text.substr(0, 2) == "+1") sign = 1;
    else if (text.substr(0, 2) == "-1") sign = -1;
    else fail();
    text.remove_prefix(2);
    expect(":[");
    size_t close = text.find(']');
    if (close == std::string_view::npos) fail();
    std::string_view body = text.substr(0, close);
    if (text.substr(close + 1).find_first_not_of(" \t") != std::string_view::npos) fail();

    std::vector<Rational> coords;
    size_t start = 0;
    while (start <= body.size()) {
        size_t next = body.find(',', start);
        std::string_view piece =
            next == std::string_view::npos ? body.substr(start) : body.substr(start, next - start);
        coords.push_back(Rational::parse(piece));
        if (next == std::string_view::npos) break;
        start = next + 1;
    }
    if (static_cast<int>(coords.size()) != order)
        throw std::invalid_argument("cn_parse: coefficient count must equal the order");
    return CnNumber<Rational>(order, sign, std::move(coords));
}

}  // namespace cnx
