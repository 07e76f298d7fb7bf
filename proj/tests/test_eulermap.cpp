#include "doctest.h"

#include "cnx/cn_algebra.hpp"
#include "cnx/eulermap.hpp"
#include "cnx/oracle.hpp"

#include <cmath>
#include <complex>
#include <random>

using namespace cnx;

namespace {

std::array<double, 3> triple(const std::vector<double>& v) { return {v[0], v[1], v[2]}; }

double max_abs_diff(const std::vector<double>& a, const std::vector<double>& b) {
    double worst = 0.0;
    for (size_t i = 0; i < a.size(); ++i) worst = std::max(worst, std::abs(a[i] - b[i]));
    return worst;
}

}  // namespace

TEST_CASE("exp of zero phases is the unit") {
    for (int n : {2, 3, 4, 5, 6})
        for (int sign : {1, -1}) {
            CAPTURE(n);
            CAPTURE(sign);
            MultiSine ms = cn_exp(n, sign, std::vector<double>(static_cast<size_t>(n) - 1, 0.0));
            CHECK(ms.m[0] == doctest::Approx(1.0).epsilon(1e-15));
            for (int k = 1; k < n; ++k)
                CHECK(std::abs(ms.m[static_cast<size_t>(k)]) < 1e-15);
        }
}

TEST_CASE("exponential matches the frozen high-precision samples") {
    const Json& samples = oracle_data()["euler_samples"];
    REQUIRE(samples.size() == 51);
    for (const auto& s : samples) {
        int n = s["n"].get<int>();
        int eps = s["eps"].get<int>();
        std::vector<double> phi = json_double_vector(s["phi"]);
        std::vector<double> want = json_double_vector(s["m"]);
        CAPTURE(n);
        CAPTURE(eps);
        MultiSine ms = cn_exp(n, eps, phi);
        CHECK(max_abs_diff(ms.m, want) < 1e-12);
    }
}

TEST_CASE("ternary exponential component matches the spectral formula") {
    const std::complex<double> j = std::polar(1.0, 2.0 * M_PI / 3.0);
    for (auto [p1, p2] : {std::pair<double, double>{0.7, -0.2}, {0.3, 0.4}, {-1.1, 0.25}}) {
        MultiSine ms = cn_exp(3, +1, {p1, p2});
        std::complex<double> mixed = std::exp(j * p1 + j * j * p2);
        double c = (std::exp(p1 + p2) + 2.0 * std::real(mixed)) / 3.0;
        CHECK(ms.m[0] == doctest::Approx(c).epsilon(1e-12));
    }
    // Unimodularity at the cited point.
    MultiSine ms = cn_exp(3, +1, {1.0, 0.0});
    CHECK(norm_form_value(3, +1, ms.m) == doctest::Approx(1.0).epsilon(1e-10));
}

TEST_CASE("phases beyond the clamp behave like the clamp boundary") {
    MultiSine big = cn_exp(3, +1, {25.0, -0.5});
    MultiSine clamped = cn_exp(3, +1, {PHASE_CLAMP, -0.5});
    CHECK(big.m == clamped.m);
    CHECK_THROWS_AS(cn_exp(3, +1, {std::nan(""), 0.0}), std::invalid_argument);
    CHECK_THROWS_AS(cn_exp(3, +1, {0.0}), std::invalid_argument);
}

TEST_CASE("every exponential lands on the unit norm surface") {
    std::mt19937 rng(42);
    std::uniform_real_distribution<double> dist(-0.25, 0.25);
    for (int n : {3, 4, 6})
        for (int sign : {1, -1}) {
            CAPTURE(n);
            CAPTURE(sign);
            double worst = 0.0;
            for (int trial = 0; trial < 100; ++trial) {
                std::vector<double> phi(static_cast<size_t>(n) - 1);
                for (auto& p : phi) p = dist(rng);
                MultiSine ms = cn_exp(n, sign, phi);
                worst = std::max(worst, std::abs(norm_form_value(n, sign, ms.m) - 1.0));
            }
            CHECK(worst < 1e-9);
        }
}

TEST_CASE("the exponential turns phase addition into multiplication") {
    std::mt19937 rng(2026);
    std::uniform_real_distribution<double> dist(-0.25, 0.25);
    for (int n : {3, 4, 6})
        for (int sign : {1, -1}) {
            CAPTURE(n);
            CAPTURE(sign);
            for (int trial = 0; trial < 5; ++trial) {
                std::vector<double> a(static_cast<size_t>(n) - 1), b(a), sum(a);
                for (size_t k = 0; k < a.size(); ++k) {
                    a[k] = dist(rng);
                    b[k] = dist(rng);
                    sum[k] = a[k] + b[k];
                }
                CnNumber<double> za(n, sign, cn_exp(n, sign, a).m);
                CnNumber<double> zb(n, sign, cn_exp(n, sign, b).m);
                CnNumber<double> product = za * zb;
                std::vector<double> want = cn_exp(n, sign, sum).m;
                CHECK(max_abs_diff(product.coeffs(), want) < 1e-9);
            }
        }
}

TEST_CASE("logarithm matches the frozen samples and inverts the exponential") {
    for (const auto& s : oracle_data()["log_samples"]) {
        std::array<double, 3> z = triple(json_double_vector(s["z"]));
        std::vector<double> want = json_double_vector(s["log"]);
        LogResult lr = cn_log(z);
        CHECK(lr.l0 == doctest::Approx(want[0]).epsilon(1e-12));
        CHECK(lr.phase.phi[0] == doctest::Approx(want[1]).epsilon(1e-12));
        CHECK(lr.phase.phi[1] == doctest::Approx(want[2]).epsilon(1e-12));

        double rho = std::exp(lr.l0);
        MultiSine ms = cn_exp(3, +1, lr.phase.phi);
        for (int k = 0; k < 3; ++k)
            CHECK(rho * ms.m[static_cast<size_t>(k)] ==
                  doctest::Approx(z[static_cast<size_t>(k)]).epsilon(1e-9));
    }
}

TEST_CASE("logarithm edge cases") {
    LogResult unit = cn_log({1.0, 0.0, 0.0});
    CHECK(std::abs(unit.l0) < 1e-15);
    CHECK(std::abs(unit.phase.phi[0]) < 1e-15);
    CHECK(std::abs(unit.phase.phi[1]) < 1e-15);

    // Scaled exponential round trip at the cited phases.
    MultiSine ms = cn_exp(3, +1, {0.7, -0.2});
    std::array<double, 3> z;
    for (int k = 0; k < 3; ++k) z[static_cast<size_t>(k)] = 2.0 * ms.m[static_cast<size_t>(k)];
    LogResult lr = cn_log(z);
    CHECK(lr.l0 == doctest::Approx(std::log(2.0)).epsilon(1e-9));
    CHECK(lr.phase.phi[0] == doctest::Approx(0.7).epsilon(1e-9));
    CHECK(lr.phase.phi[1] == doctest::Approx(-0.2).epsilon(1e-9));

    CHECK_THROWS_AS(cn_log({1.0, 1.0, 1.0}), SingularCombination);
    CHECK_THROWS_AS(cn_log({-2.0, 0.0, 0.0}), NonPositiveNorm);
    CHECK_THROWS_AS(cn_log({1.0, -1.0, 0.0}), NonPositiveNorm);
}

TEST_CASE("polar decomposition matches the frozen samples") {
    for (const auto& s : oracle_data()["polar_samples"]) {
        std::array<double, 3> z = triple(json_double_vector(s["z"]));
        PolarResult pr = polar_decompose(z);
        CHECK(pr.rho == doctest::Approx(json_double(s["rho"])).epsilon(1e-12));
        // theta is an angle modulo 2*pi/sqrt(3); compare circularly so the
        // two representatives of the window boundary count as equal.
        double period = 2.0 * M_PI / std::sqrt(3.0);
        double delta = std::abs(pr.theta - json_double(s["theta"]));
        CHECK(std::min(delta, period - delta) < 1e-12);
        CHECK(pr.phi == doctest::Approx(json_double(s["phi"])).epsilon(1e-12));

        // Reconstruction: phases phi +- theta, scaled by rho.
        MultiSine ms = cn_exp(3, +1, {pr.phi + pr.theta, pr.phi - pr.theta});
        for (int k = 0; k < 3; ++k)
            CHECK(pr.rho * ms.m[static_cast<size_t>(k)] ==
                  doctest::Approx(z[static_cast<size_t>(k)]).epsilon(1e-9));
    }

    PolarResult pr = polar_decompose({2.0, 0.0, 0.0});
    CHECK(pr.rho == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(std::abs(pr.theta) < 1e-12);
    CHECK(std::abs(pr.phi) < 1e-12);
    double period = 2.0 * M_PI / std::sqrt(3.0);
    for (const auto& s : oracle_data()["polar_samples"]) {
        PolarResult p = polar_decompose(triple(json_double_vector(s["z"])));
        CHECK(p.theta >= 0.0);
        CHECK(p.theta < period);
    }
    CHECK_THROWS_AS(polar_decompose({1.0, -1.0, 0.0}), NonPositiveNorm);
}

TEST_CASE("invariance matrices have unit determinant and preserve the form") {
    std::mt19937 rng(7);
    std::uniform_real_distribution<double> dist(-0.25, 0.25);
    std::uniform_real_distribution<double> xdist(-1.0, 1.0);
    for (int n : {3, 4, 6})
        for (int sign : {1, -1}) {
            CAPTURE(n);
            CAPTURE(sign);
            std::vector<double> phi(static_cast<size_t>(n) - 1);
            for (auto& p : phi) p = dist(rng);
            Eigen::MatrixXd o = invariance_matrix(n, sign, phi);
            CHECK(o.determinant() == doctest::Approx(1.0).epsilon(1e-9));

            for (int trial = 0; trial < 10; ++trial) {
                Eigen::VectorXd x(n);
                for (int k = 0; k < n; ++k) x(k) = xdist(rng);
                Eigen::VectorXd y = o * x;
                std::vector<double> xv(x.data(), x.data() + n);
                std::vector<double> yv(y.data(), y.data() + n);
                double before = norm_form_value(n, sign, xv);
                double after = norm_form_value(n, sign, yv);
                CHECK(std::abs(after - before) <= 1e-8 * std::max(1.0, std::abs(before)));
            }
        }

    Eigen::MatrixXd id = invariance_matrix(4, -1, {0.0, 0.0, 0.0});
    CHECK((id - Eigen::MatrixXd::Identity(4, 4)).norm() < 1e-15);
}

TEST_CASE("invariance matrix columns are twisted shifts of the first") {
    for (int n : {3, 6})
        for (int sign : {1, -1}) {
            CAPTURE(n);
            CAPTURE(sign);
            std::vector<double> phi(static_cast<size_t>(n) - 1, 0.1);
            MultiSine ms = cn_exp(n, sign, phi);
            Eigen::MatrixXd o = invariance_matrix(n, sign, phi);
            // Entry check: o(i, j) = eps^{[i>j]} m_{(j-i) mod n}, so for
            // eps = +1 the matrix is an honest circulant.
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) {
                    double want = ms.m[static_cast<size_t>(((j - i) % n + n) % n)];
                    if (i > j && sign < 0) want = -want;
                    CHECK(o(i, j) == want);
                }
            // Column recursion: next column is the previous one shifted down,
            // with the wrapped entry scaled by eps.
            for (int j = 0; j + 1 < n; ++j) {
                for (int i = 1; i < n; ++i) CHECK(o(i, j + 1) == o(i - 1, j));
                CHECK(o(0, j + 1) == sign * o(n - 1, j));
            }
        }
}

TEST_CASE("compact limit curve") {
    auto at0 = so2_limit(0.0);
    CHECK(at0[0] == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(std::abs(at0[1]) < 1e-15);
    CHECK(std::abs(at0[2]) < 1e-15);

    for (double alpha : {0.0, 0.3, 1.0, -0.7, 2.5, 10.0}) {
        CAPTURE(alpha);
        auto [c, s, t] = so2_limit(alpha);
        CHECK(c + s + t == doctest::Approx(1.0).epsilon(1e-12));
        CHECK(c * c + s * s + t * t == doctest::Approx(1.0).epsilon(1e-12));
        CHECK(std::abs(c * s + s * t + t * c) < 1e-12);
        CHECK(norm_form_value(3, +1, {c, s, t}) == doctest::Approx(1.0).epsilon(1e-12));
    }

    for (const auto& sample : oracle_data()["so2_samples"]) {
        double alpha = json_double(sample["alpha"]);
        auto [c, s, t] = so2_limit(alpha);
        CHECK(c == doctest::Approx(json_double(sample["c0"])).epsilon(1e-13));
        CHECK(s == doctest::Approx(json_double(sample["s0"])).epsilon(1e-13));
        CHECK(t == doctest::Approx(json_double(sample["t0"])).epsilon(1e-13));
    }

    // The curve is the exponential at phases (alpha, -alpha). The cosine
    // labels pair up with the exponential as m = (c, t, s): the q-coefficient
    // carries the cos(phi - 2pi/3) combination.
    for (double alpha : {0.3, -0.7, 1.4}) {
        CAPTURE(alpha);
        auto [c, s, t] = so2_limit(alpha);
        MultiSine ms = cn_exp(3, +1, {alpha, -alpha});
        CHECK(ms.m[0] == doctest::Approx(c).epsilon(1e-10));
        CHECK(ms.m[1] == doctest::Approx(t).epsilon(1e-10));
        CHECK(ms.m[2] == doctest::Approx(s).epsilon(1e-10));
    }
}

TEST_CASE("noncompact limit curve") {
    auto at0 = so11_limit(0.0);
    CHECK(at0[0] == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(std::abs(at0[1]) < 1e-15);

    for (double alpha : {0.0, 0.3, 1.0, -0.7, 2.5}) {
        CAPTURE(alpha);
        auto [c, s] = so11_limit(alpha);
        CHECK((c - s) * (c - s) * (c + 2.0 * s) == doctest::Approx(1.0).epsilon(1e-12));
    }

    auto [c1, s1] = so11_limit(1.0);
    CHECK(c1 - s1 == doctest::Approx(std::exp(-1.0)).epsilon(1e-12));
    CHECK(c1 + 2.0 * s1 == doctest::Approx(std::exp(2.0)).epsilon(1e-12));

    for (const auto& sample : oracle_data()["so11_samples"]) {
        double alpha = json_double(sample["alpha"]);
        auto [c, s] = so11_limit(alpha);
        CHECK(c == doctest::Approx(json_double(sample["cp"])).epsilon(1e-13));
        CHECK(s == doctest::Approx(json_double(sample["sp"])).epsilon(1e-13));
    }

    // Exponential cross-check: phases (alpha, alpha) give m = (c, s, s).
    for (double alpha : {0.3, -0.7, 1.4}) {
        CAPTURE(alpha);
        auto [c, s] = so11_limit(alpha);
        MultiSine ms = cn_exp(3, +1, {alpha, alpha});
        CHECK(ms.m[0] == doctest::Approx(c).epsilon(1e-10));
        CHECK(ms.m[1] == doctest::Approx(s).epsilon(1e-10));
        CHECK(ms.m[2] == doctest::Approx(s).epsilon(1e-10));
    }
}

TEST_CASE("duality flips exponential phases") {
    auto fixed = duality_map({1.0, 0.0, 0.0});
    CHECK(fixed[0] == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(std::abs(fixed[1]) < 1e-15);
    CHECK(std::abs(fixed[2]) < 1e-15);

    for (const auto& s : oracle_data()["duality_samples"]) {
        std::array<double, 3> z = triple(json_double_vector(s["z"]));
        std::vector<double> want = json_double_vector(s["dual"]);
        auto dual = duality_map(z);
        for (int k = 0; k < 3; ++k)
            CHECK(dual[static_cast<size_t>(k)] ==
                  doctest::Approx(want[static_cast<size_t>(k)]).epsilon(1e-12));
    }

    for (auto [a, b] : {std::pair<double, double>{0.7, -0.2}, {0.3, 0.4}, {-1.1, 0.25}}) {
        CAPTURE(a);
        CAPTURE(b);
        MultiSine ms = cn_exp(3, +1, {a, b});
        auto dual = duality_map({ms.m[0], ms.m[1], ms.m[2]});
        MultiSine flipped = cn_exp(3, +1, {-a, -b});
        for (int k = 0; k < 3; ++k)
            CHECK(dual[static_cast<size_t>(k)] ==
                  doctest::Approx(flipped.m[static_cast<size_t>(k)]).epsilon(1e-9));
        // Exponentials have norm one, and so do their duals.
        CHECK(norm_form_value(3, +1, {dual[0], dual[1], dual[2]}) ==
              doctest::Approx(1.0).epsilon(1e-9));
    }

    CHECK_THROWS_AS(duality_map({1.0, 1.0, 1.0}), std::domain_error);
}
