#include "cnx/acceptance.hpp"

#include "cnx/berger.hpp"
#include "cnx/cn_algebra.hpp"
#include "cnx/cyclic_repr.hpp"
#include "cnx/dirac.hpp"
#include "cnx/eulermap.hpp"
#include "cnx/geometry.hpp"
#include "cnx/holomorphy.hpp"
#include "cnx/oracle.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <random>
#include <string>
#include <utility>
#include <vector>

namespace cnx {

namespace {

template <typename Fill>
Report timed_report(const std::string& command, Fill&& fill) {
    Report r;
    r.command = command;
    const auto start = std::chrono::steady_clock::now();
    fill(r);
    r.wall_time_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                         std::chrono::steady_clock::now() - start)
                         .count();
    return r;
}

std::string case_tag(int order, int sign) {
    return "(" + std::to_string(order) + "," + (sign > 0 ? "+1" : "-1") + ")";
}

const std::vector<std::pair<int, int>>& algebra_cases() {
    static const std::vector<std::pair<int, int>> cases = {
        {2, -1}, {3, 1}, {4, 1}, {4, -1}, {6, 1}, {6, -1}};
    return cases;
}

CnNumber<Rational> random_rational_element(std::mt19937& rng, int order, int sign) {
    std::uniform_int_distribution<int> num(-9, 9);
    std::uniform_int_distribution<int> den(1, 9);
    std::vector<Rational> coeffs;
    for (int i = 0; i < order; ++i) coeffs.push_back(Rational(num(rng), den(rng)));
    return CnNumber<Rational>(order, sign, std::move(coeffs));
}

std::string ratio(int good, int total) {
    return std::to_string(good) + "/" + std::to_string(total);
}

std::string k_tag(const std::vector<long long>& k) {
    std::string out = "(";
    for (size_t i = 0; i < k.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(k[i]);
    }
    return out + ")";
}

}  // namespace

Report acceptance_norm_multiplicativity(unsigned seed) {
    return timed_report("norm-multiplicativity", [&](Report& r) {
        std::mt19937 rng(seed);
        for (auto [order, sign] : algebra_cases()) {
            int exact = 0;
            const int total = 200;
            for (int t = 0; t < total; ++t) {
                auto a = random_rational_element(rng, order, sign);
                auto b = random_rational_element(rng, order, sign);
                if (norm(a * b) == norm(a) * norm(b)) ++exact;
            }
            r.checks.push_back(exact_check("norm-multiplicative-" + case_tag(order, sign),
                                           ratio(total, total), ratio(exact, total),
                                           kProvProperty));
        }
    });
}

Report acceptance_symbolic_norms() {
    return timed_report("symbolic-norms", [](Report& r) {
        const MultiPoly ternary = MultiPoly::parse("x0^3 + x1^3 + x2^3 - 3*x0*x1*x2", 3, 3);
        r.checks.push_back(bool_check("ternary-norm-closed-form", true,
                                      expand_norm_form(3, 1).form == ternary, kProvClosedForm));

        const Json& forms = oracle_data().at("norm_forms");
        for (int sign : {1, -1}) {
            const std::string key = sign > 0 ? "4p" : "4m";
            const bool same = expand_norm_form(4, sign).form.rational_terms() ==
                              json_poly_terms(forms.at(key).at("terms"));
            r.checks.push_back(bool_check("quartic-norm-fixture-" + case_tag(4, sign), true,
                                          same, kProvFrozenOracle));
        }
        for (int sign : {1, -1}) {
            const std::string key = sign > 0 ? "6p" : "6m";
            const bool same = expand_norm_form(6, sign).form.rational_terms() ==
                              json_poly_terms(forms.at(key).at("terms"));
            r.checks.push_back(bool_check("sextic-norm-fixture-" + case_tag(6, sign), true,
                                          same, kProvFrozenOracle));
        }

        for (auto [order, sign] : std::vector<std::pair<int, int>>{{4, 1}, {6, 1}}) {
            FactorizationReport f = factorization_check(order, sign);
            r.checks.push_back(bool_check("factorization-" + case_tag(order, sign), true,
                                          f.equal && f.difference.is_zero(), kProvClosedForm));
        }

        // Printed sextic displays versus the computed truth. Case A is
        // identical; the case-B display carries every odd-x0-degree term
        // with a flipped sign (equivalently: it is the norm of the reversed
        // coefficient vector). Reported, never gating.
        r.checks.push_back(
            info_check("sextic-case-a-display", "identical to computed form", "identical"));
        int flipped = 0;
        for (const auto& [exps, coeff] : expand_norm_form(6, -1).form.rational_terms()) {
            (void)coeff;
            if (exps[0] % 2 != 0) ++flipped;
        }
        r.checks.push_back(info_check(
            "sextic-case-b-display", "identical to computed form",
            std::to_string(flipped) + " sign-flipped terms (all of odd x0 degree)"));
    });
}

Report acceptance_cauchy_riemann() {
    return timed_report("cauchy-riemann-harmonicity", [](Report& r) {
        for (int order : {3, 4}) {
            const MultiPoly lap = nary_laplacian(order, 1);
            int chains_ok = 0;
            int harmonic_ok = 0;
            const int powers = 6;
            for (int k = 1; k <= powers; ++k) {
                ComponentFunction F = generic_power(order, 1, k);
                CrReport cr = cr_system_check(F, 1);
                if (cr.holds && cr.chains_hold) ++chains_ok;
                bool annihilated = true;
                for (int m = 0; m < order; ++m)
                    if (!apply_operator(lap, F[m]).is_zero()) annihilated = false;
                if (annihilated) ++harmonic_ok;
            }
            const std::string suffix = "-N" + std::to_string(order) + "-powers-1-6";
            r.checks.push_back(exact_check("cr-first-type" + suffix, ratio(powers, powers),
                                           ratio(chains_ok, powers), kProvClosedForm));
            r.checks.push_back(exact_check("laplacian-annihilates" + suffix,
                                           ratio(powers, powers), ratio(harmonic_ok, powers),
                                           kProvClosedForm));
        }
    });
}

Report acceptance_operator_diagonalization(unsigned seed) {
    return timed_report("operator-diagonalization", [&](Report& r) {
        TernaryCubeReport cube = ternary_dirac_cube();
        r.checks.push_back(
            bool_check("ternary-operator-cubed-scalar-form", true, cube.matches, kProvClosedForm));

        TernaryReport ternary = ternary_q_family();
        r.checks.push_back(bool_check("ternary-eta-table", true,
                                      ternary.composition_matches_reference,
                                      kProvReferenceTable));

        QuaternaryReport quart = quaternary_q_family(seed);
        r.checks.push_back(bool_check("quaternary-operator-fourth-scalar-form", true,
                                      quart.fourth_power_matches_form, kProvClosedForm));
        r.checks.push_back(bool_check("quaternary-eta-diagonal", true,
                                      quart.diagonal_matches_reference, kProvReferenceTable));
        int i = 0;
        for (const std::string& line : quart.mixed_value_diffs)
            r.checks.push_back(
                info_check("quaternary-eta-mixed-diff-" + std::to_string(++i), "match", line));
    });
}

Report acceptance_euler_unimodularity(unsigned seed) {
    return timed_report("euler-unimodularity", [&](Report& r) {
        std::mt19937 rng(seed);
        std::uniform_real_distribution<double> phase(-0.25, 0.25);
        for (auto [order, sign] : algebra_cases()) {
            double worst = 0.0;
            for (int t = 0; t < 100; ++t) {
                std::vector<double> phi(static_cast<size_t>(order - 1));
                for (double& p : phi) p = phase(rng);
                MultiSine e = cn_exp(order, sign, phi);
                worst = std::max(worst, std::abs(norm_form_value(order, sign, e.m) - 1.0));
            }
            r.checks.push_back(residual_check("unimodular-" + case_tag(order, sign), worst,
                                              1e-9, kProvProperty));
        }

        double sq = 0.0, pair = 0.0, cubic = 0.0;
        for (int t = 0; t < 25; ++t) {
            const double alpha = 2.0 * M_PI * t / 25.0;
            auto [c, s, u] = so2_limit(alpha);
            sq = std::max(sq, std::abs(c * c + s * s + u * u - 1.0));
            pair = std::max(pair, std::abs(c * s + s * u + u * c));
            cubic = std::max(cubic, std::abs(norm_form_value(3, 1, {c, s, u}) - 1.0));
        }
        r.checks.push_back(residual_check("compact-limit-square-sum", sq, 1e-12, kProvClosedForm));
        r.checks.push_back(residual_check("compact-limit-pair-sum", pair, 1e-12, kProvClosedForm));
        r.checks.push_back(
            residual_check("compact-limit-cubic-form", cubic, 1e-12, kProvClosedForm));

        double hyper = 0.0;
        for (int t = 0; t < 25; ++t) {
            const double alpha = -2.0 + 4.0 * t / 24.0;
            auto [c, s] = so11_limit(alpha);
            hyper = std::max(hyper, std::abs((c - s) * (c - s) * (c + 2.0 * s) - 1.0));
        }
        r.checks.push_back(
            residual_check("noncompact-limit-cubic-form", hyper, 1e-12, kProvClosedForm));

        for (int sign : {1, -1}) {
            double worst = 0.0;
            for (int t = 0; t < 25; ++t) {
                std::vector<double> phi = {phase(rng), phase(rng)};
                worst = std::max(
                    worst, std::abs(invariance_matrix(3, sign, phi).determinant() - 1.0));
            }
            const char* name = sign > 0 ? "invariance-det-case-a" : "invariance-det-case-b";
            r.checks.push_back(residual_check(name, worst, 1e-9, kProvProperty));
        }
    });
}

Report acceptance_ternary_pythagoras() {
    return timed_report("ternary-pythagoras", [](Report& r) {
        for (double rho : {1.0, 2.0}) {
            PythagorasGridReport g = pythagoras_check(rho, 20);
            const std::string tag = "-rho" + std::to_string(static_cast<int>(rho));
            r.checks.push_back(residual_check("jacobian-grid-max-relative" + tag,
                                              g.max_rel_residual, 1e-8, kProvClosedForm));
            r.checks.push_back(bool_check("jacobian-grid-pass" + tag, true, g.pass,
                                          kProvClosedForm));
        }
    });
}

Report acceptance_cube_table(unsigned workers) {
    return timed_report("diophantine-cube-table", [&](Report& r) {
        struct Row {
            long long a, b, c, d;
        };
        const Row printed[] = {{2, 3, 3, 2},    {2, 3, 4, 3},    {3, 19, 27, 28},
                               {3, 31, 38, 42}, {4, 6, 6, 4},    {4, 6, 8, 6},
                               {5, 25, 42, 42}, {6, 9, 9, 6},    {6, 9, 12, 9}};
        const auto rows = diophantine_search(45, workers);
        r.checks.push_back(info_check(
            "search-limit", "component bound 40",
            "bound raised to 45 so the (5,25,42) row fits inside its own sweep"));
        bool all_present = true;
        for (const Row& p : printed) {
            const bool present =
                std::any_of(rows.begin(), rows.end(), [&](const CubicQuadruple& q) {
                    return q.a == p.a && q.b == p.b && q.c == p.c && q.d == p.d;
                });
            const bool exact = cubic_form_exact(p.a, p.b, p.c) == p.d * p.d * p.d;
            all_present = all_present && present && exact;
            const std::string tag = "(" + std::to_string(p.a) + "," + std::to_string(p.b) + "," +
                                    std::to_string(p.c) + "," + std::to_string(p.d) + ")";
            r.checks.push_back(
                bool_check("cube-row-" + tag, true, present && exact, kProvReferenceTable));
        }
        r.checks.push_back(bool_check("cube-rows-all-present", true, all_present,
                                      kProvReferenceTable));
        r.checks.push_back(exact_check("cube-row-(5,25,42)-recomputed", "74088",
                                       std::to_string(cubic_form_exact(5, 25, 42)),
                                       kProvClosedForm));
        r.checks.push_back(exact_check("cube-count-limit-45", "51",
                                       std::to_string(rows.size()), kProvFrozenOracle));
    });
}

Report acceptance_berger_table() {
    return timed_report("berger-table", [](Report& r) {
        Table1Report rep = table1_report();
        const std::vector<long long> defect_k = {0, 1, 2, 3, 6};
        bool rank_all = true, h_all = true, casimir_all = true;
        bool affine_all = true, kernel_all = true;
        for (const Table1Entry& e : rep.entries) {
            if (!e.row.supported) continue;
            rank_all = rank_all && e.rank_matches;
            h_all = h_all && e.h_matches;
            casimir_all = casimir_all && e.casimir_matches;
            affine_all = affine_all && e.affine_pass;
            kernel_all = kernel_all && e.kernel_matches;
            if (e.row.k == defect_k) {
                // The printed determinant for this row is inconsistent with
                // the row's own adjugate structure (c * label^2 with c = 4);
                // gate on the frozen recomputation and report the printed
                // value as an informational diff.
                r.checks.push_back(exact_check("table-det-recomputed-" + k_tag(e.row.k), "4",
                                               e.det_nonaffine.str(), kProvFrozenOracle));
                r.checks.push_back(info_check("table-det-printed-" + k_tag(e.row.k),
                                              e.row.printed_det + " (printed)",
                                              e.det_nonaffine.str() + " (recomputed)"));
            } else {
                r.checks.push_back(exact_check("table-det-printed-" + k_tag(e.row.k),
                                               e.row.printed_det, e.det_nonaffine.str(),
                                               kProvReferenceTable));
            }
        }
        r.checks.push_back(exact_check("table-supported-rows", "17",
                                       std::to_string(rep.supported_rows), kProvReferenceTable));
        r.checks.push_back(bool_check("table-rank-strings", true, rank_all, kProvReferenceTable));
        r.checks.push_back(bool_check("table-coxeter-numbers", true, h_all, kProvReferenceTable));
        r.checks.push_back(bool_check("table-casimirs", true, casimir_all, kProvReferenceTable));
        r.checks.push_back(
            bool_check("stars-pass-affine-condition", true, affine_all, kProvClosedForm));
        r.checks.push_back(
            bool_check("stars-kernel-equals-labels", true, kernel_all, kProvClosedForm));

        // Named anchors: the 4^2 determinant and the n^{n-2} family.
        for (const Table1Entry& e : rep.entries)
            if (e.row.k == std::vector<long long>{0, 1, 1, 1, 1})
                r.checks.push_back(exact_check("table-det-(0,1,1,1,1)", "16",
                                               e.det_nonaffine.str(), kProvClosedForm));
        for (int n : {3, 4, 5}) {
            StarResult s = build_star(weight_vector(std::vector<long long>(n, 1)));
            long long expect = 1;
            for (int i = 0; i < n - 2; ++i) expect *= n;
            r.checks.push_back(exact_check(
                "ones-family-det-n" + std::to_string(n), std::to_string(expect),
                graph_invariants(s).det_nonaffine.str(), kProvClosedForm));
        }
    });
}

Report acceptance_character_tables() {
    return timed_report("character-tables", [](Report& r) {
        bool orth = true;
        for (int n = 1; n <= 12; ++n) {
            OrthogonalityReport o = orthogonality_check(char_table(n));
            orth = orth && o.rows_orthonormal && o.columns_orthonormal;
        }
        r.checks.push_back(bool_check("orthogonality-N1-12", true, orth, kProvClosedForm));

        C3VectorRep rep = c3_vector_rep();
        const CycMatrix id = CycMatrix::identity(3, 12);
        r.checks.push_back(bool_check("c3-rotation-cubed-identity", true,
                                      rep.r1.power(3) == id && rep.r2.power(3) == id,
                                      kProvClosedForm));

        XhatResult x = xhat();
        const bool det_is_form =
            x.det.rational_terms() == expand_norm_form(3, 1).form.rational_terms();
        r.checks.push_back(bool_check("xhat-det-cubic-form", true, det_is_form, kProvClosedForm));
    });
}

Report acceptance_round_trips(unsigned seed) {
    return timed_report("exp-log-round-trips", [&](Report& r) {
        std::mt19937 rng(seed);
        std::uniform_real_distribution<double> small(-0.5, 0.5);
        double worst_log = 0.0;
        for (int t = 0; t < 100; ++t) {
            const double l0 = small(rng), l1 = small(rng), l2 = small(rng);
            MultiSine e = cn_exp(3, 1, {l1, l2});
            const double scale = std::exp(l0);
            LogResult lr = cn_log({scale * e.m[0], scale * e.m[1], scale * e.m[2]});
            worst_log = std::max({worst_log, std::abs(lr.l0 - l0),
                                  std::abs(lr.phase.phi[0] - l1),
                                  std::abs(lr.phase.phi[1] - l2)});
        }
        r.checks.push_back(
            residual_check("log-after-exp-max-error", worst_log, 1e-9, kProvProperty));

        const double period = 2.0 * M_PI / std::sqrt(3.0);
        std::uniform_real_distribution<double> rho_dist(0.5, 2.0);
        std::uniform_real_distribution<double> theta_dist(0.0, period);
        double worst_polar = 0.0;
        for (int t = 0; t < 100; ++t) {
            const double rho = rho_dist(rng);
            const double theta = theta_dist(rng);
            const double phi = small(rng);
            MultiSine e = cn_exp(3, 1, {theta + phi, phi - theta});
            PolarResult p = polar_decompose({rho * e.m[0], rho * e.m[1], rho * e.m[2]});
            const double dt = std::abs(p.theta - theta);
            worst_polar = std::max({worst_polar, std::abs(p.rho - rho),
                                    std::min(dt, period - dt), std::abs(p.phi - phi)});
        }
        r.checks.push_back(
            residual_check("polar-after-exp-max-error", worst_polar, 1e-9, kProvProperty));
    });
}

std::vector<Report> run_acceptance_suite(unsigned seed, unsigned workers) {
    std::vector<Report> reports;
    reports.push_back(acceptance_norm_multiplicativity(seed));
    reports.push_back(acceptance_symbolic_norms());
    reports.push_back(acceptance_cauchy_riemann());
    reports.push_back(acceptance_operator_diagonalization(seed));
    reports.push_back(acceptance_euler_unimodularity(seed));
    reports.push_back(acceptance_ternary_pythagoras());
    reports.push_back(acceptance_cube_table(workers));
    reports.push_back(acceptance_berger_table());
    reports.push_back(acceptance_character_tables());
    reports.push_back(acceptance_round_trips(seed));
    return reports;
}

}  // namespace cnx
