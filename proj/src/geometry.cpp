#include "cnx/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <thread>
#include <tuple>

namespace cnx {

namespace {

const double SQRT3 = std::sqrt(3.0);

double cube(double v) { return v * v * v; }

void require_positive_finite(double rho, double a, double theta, const char* who) {
    if (!(std::isfinite(rho) && std::isfinite(a) && std::isfinite(theta)))
        throw std::invalid_argument(std::string(who) + ": non-finite input");
    if (rho <= 0.0 || a <= 0.0)
        throw std::invalid_argument(std::string(who) + ": rho and a must be positive");
}

}  // namespace

double cubic_form_value(const std::array<double, 3>& x) {
    return cube(x[0]) + cube(x[1]) + cube(x[2]) - 3.0 * x[0] * x[1] * x[2];
}

SurfacePoint surface_point(double rho, double a, double theta) {
    require_positive_finite(rho, a, theta, "surface_point");
    const double w = std::pow(rho, 1.5) / std::sqrt(a);
    const double c = std::cos(theta);
    const double s = std::sin(theta);
    SurfacePoint p;
    p.rho = rho;
    p.a = a;
    p.theta = theta;
    p.x = {a / 3.0 - (2.0 / 3.0) * w * c,
           a / 3.0 + (w / 3.0) * (c + SQRT3 * s),
           a / 3.0 + (w / 3.0) * (c - SQRT3 * s)};
    return p;
}

double trisectrice_dist2(const SurfacePoint& p) {
    const double mean = (p.x[0] + p.x[1] + p.x[2]) / 3.0;
    double d2 = 0.0;
    for (double c : p.x) d2 += (c - mean) * (c - mean);
    return d2;
}

double radial_r2(const SurfacePoint& p) { return 1.5 * trisectrice_dist2(p); }

TangentFrame tangent_frame(const SurfacePoint& p) {
    const double c = std::cos(p.theta);
    const double s = std::sin(p.theta);
    const double k = std::pow(p.rho, 1.5) / std::pow(p.a, 1.5);
    const double m = std::pow(p.rho, 1.5) / std::sqrt(p.a);
    TangentFrame f;
    f.d_a = {1.0 / 3.0 + (k / 3.0) * c,
             1.0 / 3.0 - (k / 6.0) * (c + SQRT3 * s),
             1.0 / 3.0 - (k / 6.0) * (c - SQRT3 * s)};
    f.d_theta = {(2.0 / 3.0) * m * s,
                 (m / 3.0) * (-s + SQRT3 * c),
                 (m / 3.0) * (-s - SQRT3 * c)};
    return f;
}

Jacobians pair_jacobians(const std::array<double, 3>& u, const std::array<double, 3>& v) {
    Jacobians j;
    j.j01 = u[0] * v[1] - u[1] * v[0];
    j.j12 = u[1] * v[2] - u[2] * v[1];
    j.j20 = u[2] * v[0] - u[0] * v[2];
    j.j012 = j.j01 + j.j12 + j.j20;
    return j;
}

Jacobians jacobians(const SurfacePoint& p) {
    const TangentFrame f = tangent_frame(p);
    return pair_jacobians(f.d_a, f.d_theta);
}

PythagorasResidual pythagoras_residual(double rho, double a, double theta) {
    require_positive_finite(rho, a, theta, "pythagoras_residual");
    PythagorasResidual r;
    r.j = jacobians(surface_point(rho, a, theta));
    r.lhs = cube(r.j.j01) + cube(r.j.j12) + cube(r.j.j20) - 3.0 * r.j.j01 * r.j.j12 * r.j.j20;
    r.rhs = cube(rho) * cube(rho) / (3.0 * SQRT3 * cube(a));
    r.j012_cubed = cube(r.j.j012);
    r.abs_residual = std::abs(r.lhs - r.rhs);
    r.rel_residual = r.abs_residual / r.rhs;
    r.j012_cubed_matches_lhs =
        std::abs(r.j012_cubed - r.lhs) <= 1e-8 * std::max(std::abs(r.j012_cubed), std::abs(r.lhs));
    return r;
}

PythagorasGridReport pythagoras_check(double rho, int grid) {
    if (!(std::isfinite(rho)) || rho <= 0.0)
        throw std::invalid_argument("pythagoras_check: rho must be positive");
    if (grid < 2 || grid > 10000)
        throw std::invalid_argument("pythagoras_check: grid must be in [2, 10000]");
    PythagorasGridReport rep;
    rep.rho = rho;
    rep.grid = grid;
    rep.max_abs_residual = 0.0;
    rep.max_rel_residual = 0.0;
    rep.worst_a = 0.0;
    rep.worst_theta = 0.0;
    for (int i = 0; i < grid; ++i) {
        const double a = 0.5 + 4.5 * static_cast<double>(i) / static_cast<double>(grid - 1);
        for (int jj = 0; jj < grid; ++jj) {
            const double theta = 2.0 * M_PI * static_cast<double>(jj) / static_cast<double>(grid);
            const PythagorasResidual r = pythagoras_residual(rho, a, theta);
            rep.max_abs_residual = std::max(rep.max_abs_residual, r.abs_residual);
            if (r.rel_residual > rep.max_rel_residual) {
                rep.max_rel_residual = r.rel_residual;
                rep.worst_a = a;
                rep.worst_theta = theta;
            }
        }
    }
    rep.pass = rep.max_rel_residual < 1e-8;
    return rep;
}

TetrahedronReport tetrahedron_check(const std::array<double, 3>& u,
                                    const std::array<double, 3>& v) {
    for (double c : u)
        if (!std::isfinite(c)) throw std::invalid_argument("tetrahedron_check: non-finite input");
    for (double c : v)
        if (!std::isfinite(c)) throw std::invalid_argument("tetrahedron_check: non-finite input");
    double scale = 0.0;
    for (double c : u) scale = std::max(scale, std::abs(c));
    for (double c : v) scale = std::max(scale, std::abs(c));
    const Jacobians j = pair_jacobians(u, v);
    const double minor_mag = std::max({std::abs(j.j01), std::abs(j.j12), std::abs(j.j20)});
    if (scale == 0.0 || minor_mag <= 1e-14 * scale * scale)
        throw std::invalid_argument("tetrahedron_check: parallel or zero vectors");
    TetrahedronReport r;
    r.s_a = 0.5 * j.j01;
    r.s_b = 0.5 * j.j12;
    r.s_c = 0.5 * j.j20;
    r.s_d = 0.5 * j.j012;
    r.lhs = cube(r.s_a) + cube(r.s_b) + cube(r.s_c) - 3.0 * r.s_a * r.s_b * r.s_c;
    r.rhs = cube(r.s_d);
    r.abs_residual = std::abs(r.lhs - r.rhs);
    const double denom = std::max(std::abs(r.lhs), std::abs(r.rhs));
    r.rel_residual = denom > 0.0 ? r.abs_residual / denom : 0.0;
    const double noise_floor = 1e-9 * std::pow(scale, 6);
    r.holds = r.abs_residual <= std::max(1e-8 * denom, noise_floor);
    return r;
}

long long cubic_form_exact(long long a, long long b, long long c) {
    return a * a * a + b * b * b + c * c * c - 3 * a * b * c;
}

long long integer_cube_root(long long n) {
    if (n < 0) throw std::invalid_argument("integer_cube_root: negative input");
    auto cubed = [](long long v) { return static_cast<__int128>(v) * v * v; };
    long long r = static_cast<long long>(std::llround(std::cbrt(static_cast<double>(n))));
    r = std::max(r, 0LL);
    while (r > 0 && cubed(r) > n) --r;
    while (cubed(r + 1) <= n) ++r;
    return r;
}

namespace {

// One stripe of the (a, b, c) scan: a = a0, a0 + stride, ...
std::vector<CubicQuadruple> search_stripe(long long limit, long long a0, long long stride) {
    std::vector<CubicQuadruple> out;
    for (long long a = a0; a <= limit; a += stride) {
        const long long a3 = a * a * a;
        for (long long b = a; b <= limit; ++b) {
            const long long ab3 = a3 + b * b * b;
            const long long ab = a * b;
            for (long long c = b; c <= limit; ++c) {
                const long long v = ab3 + c * c * c - 3 * ab * c;
                if (v <= 0) continue;  // zero only at a == b == c
                const long long d = integer_cube_root(v);
                if (d * d * d == v) {
                    const long long g = std::gcd(std::gcd(a, b), std::gcd(c, d));
                    out.push_back({a, b, c, d, g == 1});
                }
            }
        }
    }
    return out;
}

}  // namespace

std::vector<CubicQuadruple> diophantine_search(long long limit, unsigned workers) {
    if (limit < 1 || limit > 10000)
        throw std::invalid_argument("diophantine_search: limit must be in [1, 10000]");
    if (workers == 0) throw std::invalid_argument("diophantine_search: workers must be >= 1");
    std::vector<CubicQuadruple> all;
    if (workers == 1) {
        all = search_stripe(limit, 1, 1);
    } else {
        std::vector<std::vector<CubicQuadruple>> parts(workers);
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (unsigned w = 0; w < workers; ++w)
            pool.emplace_back(
                [&parts, limit, w, workers] { parts[w] = search_stripe(limit, w + 1, workers); });
        for (auto& t : pool) t.join();
        for (const auto& part : parts) all.insert(all.end(), part.begin(), part.end());
    }
    std::sort(all.begin(), all.end(), [](const CubicQuadruple& l, const CubicQuadruple& r) {
        return std::tie(l.c, l.b, l.a) < std::tie(r.c, r.b, r.a);
    });
    return all;
}

}  // namespace cnx
