#include "cnx/eulermap.hpp"

#include "cnx/cn_algebra.hpp"

#include <unsupported/Eigen/MatrixFunctions>

#include <algorithm>
#include <cmath>
#include <complex>

namespace cnx {

namespace {

constexpr double SINGULAR_THRESHOLD = 1e-12;

std::vector<double> clamped_phases(int order, const std::vector<double>& phi) {
    if (static_cast<int>(phi.size()) != order - 1)
        throw std::invalid_argument("cn_exp: expected one phase per power q^1..q^{N-1}");
    std::vector<double> full(static_cast<size_t>(order), 0.0);
    for (int k = 1; k < order; ++k) {
        double v = phi[static_cast<size_t>(k) - 1];
        if (!std::isfinite(v)) throw std::invalid_argument("cn_exp: non-finite phase");
        full[static_cast<size_t>(k)] = std::clamp(v, -PHASE_CLAMP, PHASE_CLAMP);
    }
    return full;
}

// Multiplication operator of sum_k c_k q^k acting on coefficient columns:
// entry (i, j) is eps^{[i<j]} c_{(i-j) mod N}.
Eigen::MatrixXd mult_operator(int order, int sign, const std::vector<double>& coeffs) {
    Eigen::MatrixXd g(order, order);
    for (int i = 0; i < order; ++i)
        for (int j = 0; j < order; ++j) {
            double v = coeffs[static_cast<size_t>(((i - j) % order + order) % order)];
            if (i < j && sign < 0) v = -v;
            g(i, j) = v;
        }
    return g;
}

}  // namespace

MultiSine cn_exp(int order, int sign, const std::vector<double>& phi) {
    if (order < 2 || order > MAX_ORDER)
        throw std::invalid_argument("cn_exp: unsupported order");
    if (sign != 1 && sign != -1) throw std::invalid_argument("cn_exp: sign must be +-1");

    Eigen::MatrixXd g = mult_operator(order, sign, clamped_phases(order, phi));
    Eigen::MatrixXd e = g.exp();

    MultiSine out;
    out.order = order;
    out.sign = sign;
    out.m.resize(static_cast<size_t>(order));
    for (int i = 0; i < order; ++i) out.m[static_cast<size_t>(i)] = e(i, 0);
    return out;
}

MultiSine cn_exp(int sign, const PhaseVector& phi) {
    return cn_exp(phi.order, sign, phi.phi);
}

LogResult cn_log(const std::array<double, 3>& z) {
    const std::complex<double> j = std::polar(1.0, 2.0 * M_PI / 3.0);
    const std::complex<double> j2 = std::conj(j);

    double scale = std::max({1.0, std::abs(z[0]), std::abs(z[1]), std::abs(z[2])});
    std::complex<double> combo = z[0] + j * z[1] + j2 * z[2];
    if (std::abs(combo) < SINGULAR_THRESHOLD * scale) throw SingularCombination();

    double lambda0 = z[0] + z[1] + z[2];
    double norm = lambda0 * std::norm(combo);
    if (norm <= 0.0) throw NonPositiveNorm();

    // Principal logs of the three conjugate combinations; the conjugate pair
    // is forced to stay a conjugate pair, which keeps every output real even
    // when the combination crosses the negative real axis.
    double big_l1 = std::log(lambda0);
    std::complex<double> big_l2 = std::log(combo);

    LogResult out;
    out.l0 = (big_l1 + 2.0 * std::real(big_l2)) / 3.0;
    out.phase.order = 3;
    out.phase.phi = {(big_l1 + 2.0 * std::real(j2 * big_l2)) / 3.0,
                     (big_l1 + 2.0 * std::real(j * big_l2)) / 3.0};
    return out;
}

PolarResult polar_decompose(const std::array<double, 3>& z) {
    LogResult lr = cn_log(z);
    double l1 = lr.phase.phi[0];
    double l2 = lr.phase.phi[1];

    PolarResult out;
    out.rho = std::exp(lr.l0);
    out.phi = (l1 + l2) / 2.0;
    double period = 2.0 * M_PI / std::sqrt(3.0);
    double theta = (l1 - l2) / 2.0;
    theta -= period * std::floor(theta / period);
    if (theta >= period) theta -= period;
    if (theta < 0.0) theta += period;
    out.theta = theta;
    return out;
}

Eigen::MatrixXd invariance_matrix(int order, int sign, const std::vector<double>& phi) {
    MultiSine ms = cn_exp(order, sign, phi);
    CnNumber<double> z(order, sign, ms.m);
    auto rows = regular_rep(z);
    Eigen::MatrixXd o(order, order);
    for (int i = 0; i < order; ++i)
        for (int j = 0; j < order; ++j)
            o(i, j) = rows[static_cast<size_t>(i)][static_cast<size_t>(j)];
    return o;
}

std::array<double, 3> so2_limit(double alpha) {
    double phi = std::sqrt(3.0) * alpha;
    double third = 1.0 / 3.0;
    return {third * (1.0 + 2.0 * std::cos(phi)),
            third * (1.0 + 2.0 * std::cos(phi + 2.0 * M_PI / 3.0)),
            third * (1.0 + 2.0 * std::cos(phi - 2.0 * M_PI / 3.0))};
}

std::array<double, 2> so11_limit(double alpha) {
    double grow = std::exp(2.0 * alpha);
    double decay = std::exp(-alpha);
    return {(grow + 2.0 * decay) / 3.0, (grow - decay) / 3.0};
}

std::array<double, 3> duality_map(const std::array<double, 3>& z) {
    double scale = std::max({1.0, std::abs(z[0]), std::abs(z[1]), std::abs(z[2])});
    double norm = norm_form_value(3, +1, {z[0], z[1], z[2]});
    if (std::abs(norm) < SINGULAR_THRESHOLD * scale * scale * scale)
        throw std::domain_error("duality_map: zero norm");
    return {(z[0] * z[0] - z[1] * z[2]) / norm,
            (z[2] * z[2] - z[0] * z[1]) / norm,
            (z[1] * z[1] - z[2] * z[0]) / norm};
}

}  // namespace cnx
