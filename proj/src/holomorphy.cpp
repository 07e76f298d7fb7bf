#include "cnx/holomorphy.hpp"

#include <stdexcept>

namespace cnx {

namespace {

// zeta_N^power inside the coefficient field of order M (M a multiple of N).
Cyclotomic subfield_root(int coeff_order, int algebra_order, int power) {
    if (coeff_order % algebra_order != 0)
        throw std::invalid_argument(
            "holomorphy: coefficient order must be a multiple of the algebra order");
    int p = ((power % algebra_order) + algebra_order) % algebra_order;
    return zeta(coeff_order, p * (coeff_order / algebra_order));
}

void check_components(const ComponentFunction& F) {
    for (const auto& f : F.coeffs())
        if (f.nvars() != F.order())
            throw std::invalid_argument(
                "holomorphy: components must use one variable per coordinate");
}

// Component-m coefficients of q^{N-r} d_r F for r = 0..N-1: the raw terms
// whose zeta-weighted averages are the conjugate derivatives. chain[m][r]
// is eps^{[m+r<N]} d_r f_{(m+r) mod N}.
std::vector<std::vector<MultiPoly>> chain_terms(const ComponentFunction& F) {
    int n = F.order();
    std::vector<std::vector<MultiPoly>> chains(
        static_cast<size_t>(n),
        std::vector<MultiPoly>(static_cast<size_t>(n),
                               MultiPoly(F[0].nvars(), F[0].order())));
    for (int m = 0; m < n; ++m)
        for (int r = 0; r < n; ++r) {
            MultiPoly d = F[(m + r) % n].partial_derivative(r);
            if (m + r < n && F.sign() < 0) d = -d;
            chains[static_cast<size_t>(m)][static_cast<size_t>(r)] = d;
        }
    return chains;
}

std::string chain_term_name(const ComponentFunction& F, int m, int r) {
    int n = F.order();
    std::string name;
    if (m + r < n && F.sign() < 0) name += "-";
    name += "d" + std::to_string(r) + " f" + std::to_string((m + r) % n);
    return name;
}

}  // namespace

ComponentFunction conj_derivative(const ComponentFunction& F, int s) {
    int n = F.order();
    if (s < 0 || s >= n)
        throw std::out_of_range("conj_derivative: conjugate index out of range");
    check_components(F);

    int coeff_order = F[0].order();
    Rational inv_n(BigInt(1), BigInt(n));
    auto chains = chain_terms(F);

    std::vector<MultiPoly> out;
    out.reserve(static_cast<size_t>(n));
    for (int m = 0; m < n; ++m) {
        MultiPoly acc(F[0].nvars(), coeff_order);
        for (int r = 0; r < n; ++r)
            acc += chains[static_cast<size_t>(m)][static_cast<size_t>(r)] *
                   subfield_root(coeff_order, n, -s * r);
        acc *= inv_n;
        out.push_back(std::move(acc));
    }
    return ComponentFunction(n, F.sign(), std::move(out));
}

ComponentFunction generic_power(int order, int sign, int k) {
    if (k < 0) throw std::invalid_argument("generic_power: exponent must be >= 0");
    ComponentFunction z = generic_element(order, sign);
    std::vector<MultiPoly> unit_coeffs(static_cast<size_t>(order),
                                       MultiPoly(order, z[0].order()));
    unit_coeffs[0] = MultiPoly::constant(order, z[0].order(), Rational(1));
    ComponentFunction acc(order, sign, std::move(unit_coeffs));
    for (int i = 0; i < k; ++i) acc = acc * z;
    return acc;
}

CrReport cr_system_check(const ComponentFunction& F, int type) {
    int n = F.order();
    if (type < 1 || type >= n)
        throw std::invalid_argument("cr_system_check: type must lie in 1..N-1");
    check_components(F);

    CrReport rep;
    rep.order = n;
    rep.type = type;
    for (int s = 0; s < n; ++s)
        rep.derivative_vanishes.push_back([&] {
            ComponentFunction d = conj_derivative(F, s);
            for (const auto& c : d.coeffs())
                if (!c.is_zero()) return false;
            return true;
        }());

    rep.holds = true;
    for (int s = type; s < n; ++s)
        if (!rep.derivative_vanishes[static_cast<size_t>(s)]) rep.holds = false;

    if (type == 1) {
        auto chains = chain_terms(F);
        rep.chains_hold = true;
        for (int m = 0; m < n; ++m) {
            CrChain chain;
            chain.residue = m;
            chain.holds = true;
            for (int r = 0; r < n; ++r) {
                chain.term_names.push_back(chain_term_name(F, m, r));
                chain.terms.push_back(chains[static_cast<size_t>(m)][static_cast<size_t>(r)]);
            }
            for (int r = 0; r + 1 < n; ++r)
                if (chain.terms[static_cast<size_t>(r)] !=
                    chain.terms[static_cast<size_t>(r) + 1]) {
                    chain.holds = false;
                    chain.failures.push_back(chain.term_names[static_cast<size_t>(r)] +
                                             " != " +
                                             chain.term_names[static_cast<size_t>(r) + 1]);
                }
            rep.chains_hold = rep.chains_hold && chain.holds;
            rep.chains.push_back(std::move(chain));
        }
    }
    return rep;
}

MultiPoly nary_laplacian(int order, int sign) {
    if (order < 2 || order > 6)
        throw std::invalid_argument("nary_laplacian: order must lie in 2..6");
    return expand_norm_form(order, sign).form;
}

MultiPoly apply_operator(const MultiPoly& op, const MultiPoly& f) {
    if (op.nvars() != f.nvars())
        throw std::invalid_argument("apply_operator: variable-count mismatch");
    if (op.order() != f.order())
        throw std::invalid_argument("apply_operator: coefficient-order mismatch");
    MultiPoly acc(f.nvars(), f.order());
    for (const auto& [exps, coeff] : op.terms()) {
        MultiPoly g = f;
        for (int var = 0; var < static_cast<int>(exps.size()); ++var)
            for (int k = 0; k < exps[static_cast<size_t>(var)]; ++k)
                g = g.partial_derivative(var);
        acc += g * coeff;
    }
    return acc;
}

bool cubic_operator_factorizes() {
    auto linear = [&](int phase) {
        MultiPoly acc(3, 3);
        for (int r = 0; r < 3; ++r)
            acc += MultiPoly::variable(3, 3, r) * zeta(3, (phase * r) % 3);
        return acc;
    };
    MultiPoly product = linear(0) * linear(1) * linear(2);
    return product == nary_laplacian(3, +1);
}

bool chain_rule_inverse_ok(int order, int sign) {
    int n = order;
    auto basis = [&](int k) {
        std::vector<Cyclotomic> c(static_cast<size_t>(n), Cyclotomic(n));
        c[static_cast<size_t>(((k % n) + n) % n)] = Cyclotomic(n, Rational(1));
        return CnNumber<Cyclotomic>(n, sign, std::move(c));
    };
    auto scaled = [&](CnNumber<Cyclotomic> v, const Cyclotomic& c) {
        std::vector<Cyclotomic> out;
        out.reserve(static_cast<size_t>(n));
        for (const auto& x : v.coeffs()) out.push_back(x * c);
        return CnNumber<Cyclotomic>(n, sign, std::move(out));
    };

    Rational inv_n(BigInt(1), BigInt(n));
    // Forward entries J[s][r] = (1/n) zeta^{-s r} q^{n-r}; inverse entries
    // M[r][s] = zeta^{r s} q^r.
    auto forward = [&](int s, int r) {
        CnNumber<Cyclotomic> v = basis(n - r);
        if (r == 0 && sign < 0) v = -v;  // q^n = eps
        return scaled(v, zeta(n, ((-s * r) % n + n) % n) * inv_n);
    };
    auto inverse = [&](int r, int s) {
        return scaled(basis(r), zeta(n, (r * s) % n));
    };

    auto zero = [&] {
        return CnNumber<Cyclotomic>(
            n, sign, std::vector<Cyclotomic>(static_cast<size_t>(n), Cyclotomic(n)));
    };
    CnNumber<Cyclotomic> unit = basis(0);

    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            CnNumber<Cyclotomic> jm = zero();
            CnNumber<Cyclotomic> mj = zero();
            for (int k = 0; k < n; ++k) {
                jm = jm + forward(a, k) * inverse(k, b);
                mj = mj + inverse(a, k) * forward(k, b);
            }
            CnNumber<Cyclotomic> want = a == b ? (sign < 0 ? -unit : unit) : zero();
            if (jm != want || mj != want) return false;
        }
    return true;
}

}  // namespace cnx
