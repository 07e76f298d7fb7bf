#include "doctest.h"

#include "cnx/holomorphy.hpp"
#include "cnx/oracle.hpp"

using namespace cnx;

namespace {

bool all_zero(const ComponentFunction& F) {
    for (const auto& c : F.coeffs())
        if (!c.is_zero()) return false;
    return true;
}

ComponentFunction from_strings(int order, int sign, int coeff_order,
                               const std::vector<std::string>& texts) {
    std::vector<MultiPoly> comps;
    for (const auto& t : texts) comps.push_back(MultiPoly::parse(t, order, coeff_order));
    return ComponentFunction(order, sign, std::move(comps));
}

}  // namespace

TEST_CASE("the identity function is holomorphic in itself") {
    for (int n : {2, 3, 4}) {
        CAPTURE(n);
        ComponentFunction z = generic_power(n, +1, 1);
        for (int s = 1; s < n; ++s) CHECK(all_zero(conj_derivative(z, s)));
        ComponentFunction d0 = conj_derivative(z, 0);
        CHECK(d0[0] == MultiPoly::constant(n, n, Rational(1)));
        for (int m = 1; m < n; ++m) CHECK(d0[m].is_zero());
    }
    CHECK_THROWS_AS(conj_derivative(generic_power(3, +1, 1), 3), std::out_of_range);
}

TEST_CASE("powers of the generic element match the frozen component tables") {
    const Json& pc = oracle_data()["power_components"];
    for (auto [key, order] : {std::pair<const char*, int>{"3p", 3}, {"4p", 4}}) {
        for (int k = 1; k <= 6; ++k) {
            CAPTURE(key);
            CAPTURE(k);
            ComponentFunction zk = generic_power(order, +1, k);
            const Json& comps = pc[key][std::to_string(k)];
            REQUIRE(static_cast<int>(comps.size()) == order);
            for (int m = 0; m < order; ++m)
                CHECK(zk[m].rational_terms() == json_poly_terms(comps[m]));
        }
    }
}

TEST_CASE("z squared: explicit components and derivative") {
    ComponentFunction z2 = generic_power(3, +1, 2);
    CHECK(z2[0] == MultiPoly::parse("x0^2 + 2*x1*x2", 3, 3));
    CHECK(z2[1] == MultiPoly::parse("x2^2 + 2*x0*x1", 3, 3));
    CHECK(z2[2] == MultiPoly::parse("x1^2 + 2*x0*x2", 3, 3));

    CHECK(all_zero(conj_derivative(z2, 1)));
    CHECK(all_zero(conj_derivative(z2, 2)));

    // d/dz of z^2 is 2z.
    ComponentFunction d0 = conj_derivative(z2, 0);
    ComponentFunction z = generic_power(3, +1, 1);
    for (int m = 0; m < 3; ++m) CHECK(d0[m] == z[m] * Rational(2));
}

TEST_CASE("first-type system holds for all small powers") {
    for (int n : {3, 4}) {
        for (int k = 1; k <= 6; ++k) {
            CAPTURE(n);
            CAPTURE(k);
            CrReport rep = cr_system_check(generic_power(n, +1, k), 1);
            CHECK(rep.holds);
            CHECK(rep.chains_hold);
            for (const auto& chain : rep.chains) CHECK(chain.failures.empty());
        }
    }
}

TEST_CASE("a non-holomorphic function fails with named chain breaks") {
    ComponentFunction F = from_strings(3, +1, 3, {"x0", "0", "0"});
    CrReport rep = cr_system_check(F, 1);
    CHECK(!rep.holds);
    CHECK(!rep.chains_hold);
    REQUIRE(!rep.chains.empty());
    bool found = false;
    for (const auto& chain : rep.chains)
        for (const auto& fail : chain.failures)
            if (fail == "d0 f0 != d1 f1") found = true;
    CHECK(found);
}

TEST_CASE("types beyond the first report which derivatives vanish") {
    CHECK_THROWS_AS(cr_system_check(generic_power(3, +1, 2), 0), std::invalid_argument);
    CHECK_THROWS_AS(cr_system_check(generic_power(3, +1, 2), 3), std::invalid_argument);

    // A first-type function satisfies every weaker type as well.
    CrReport rep = cr_system_check(generic_power(4, +1, 2), 3);
    CHECK(rep.holds);
    CHECK(rep.derivative_vanishes[1]);
    CHECK(rep.derivative_vanishes[2]);
    CHECK(rep.derivative_vanishes[3]);
    CHECK(rep.chains.empty());
}

TEST_CASE("chains constant exactly when the nonzero-index derivatives vanish") {
    std::vector<ComponentFunction> samples = {
        generic_power(3, +1, 3),
        from_strings(3, +1, 3, {"x0", "0", "0"}),
        from_strings(3, +1, 3, {"x0^2 + x1", "x2", "x1*x2"}),
        from_strings(3, -1, 3, {"x0^2 + 2*x1*x2", "x2^2 + 2*x0*x1", "x1^2 + 2*x0*x2"}),
    };
    for (size_t i = 0; i < samples.size(); ++i) {
        CAPTURE(i);
        CrReport rep = cr_system_check(samples[i], 1);
        bool nonzero_vanish = true;
        for (int s = 1; s < rep.order; ++s)
            nonzero_vanish = nonzero_vanish && rep.derivative_vanishes[static_cast<size_t>(s)];
        CHECK(rep.chains_hold == nonzero_vanish);
    }
}

TEST_CASE("binary baseline reproduces classical Cauchy-Riemann") {
    // Complex squaring: (x0 + x1 q)^2 with q^2 = -1.
    ComponentFunction z2 = generic_power(2, -1, 2);
    CHECK(z2[0] == MultiPoly::parse("x0^2 - x1^2", 2, 2));
    CHECK(z2[1] == MultiPoly::parse("2*x0*x1", 2, 2));
    CHECK(cr_system_check(z2, 1).holds);

    // Conjugation is not holomorphic.
    ComponentFunction conj = from_strings(2, -1, 2, {"x0", "-x1"});
    CHECK(!cr_system_check(conj, 1).holds);

    // Harmonicity of both parts of z^k under the ordinary Laplacian.
    MultiPoly lap = nary_laplacian(2, -1);
    CHECK(lap == MultiPoly::parse("x0^2 + x1^2", 2, 2));
    for (int k = 1; k <= 6; ++k) {
        ComponentFunction zk = generic_power(2, -1, k);
        CHECK(apply_operator(lap, zk[0]).is_zero());
        CHECK(apply_operator(lap, zk[1]).is_zero());
    }
}

TEST_CASE("the N-ary Laplacian is the norm form in derivative symbols") {
    CHECK(nary_laplacian(3, +1) == MultiPoly::parse("x0^3 + x1^3 + x2^3 - 3*x0*x1*x2", 3, 3));
    CHECK(nary_laplacian(4, +1) == expand_norm_form(4, +1).form);
    CHECK(nary_laplacian(4, +1).term_count() == 10);
    CHECK_THROWS_AS(nary_laplacian(7, +1), std::invalid_argument);
    CHECK_THROWS_AS(nary_laplacian(1, +1), std::invalid_argument);
}

TEST_CASE("operator application: iterated differentiation") {
    MultiPoly lap3 = nary_laplacian(3, +1);
    CHECK(apply_operator(lap3, MultiPoly::parse("x0^3", 3, 3)) ==
          MultiPoly::constant(3, 3, Rational(6)));

    for (int k = 1; k <= 6; ++k) {
        CAPTURE(k);
        ComponentFunction zk = generic_power(3, +1, k);
        for (int m = 0; m < 3; ++m) CHECK(apply_operator(lap3, zk[m]).is_zero());
    }

    MultiPoly lap4 = nary_laplacian(4, +1);
    ComponentFunction z3 = generic_power(4, +1, 3);
    for (int m = 0; m < 4; ++m) CHECK(apply_operator(lap4, z3[m]).is_zero());
}

TEST_CASE("products of first-type functions stay first-type") {
    ComponentFunction f = generic_power(3, +1, 2);
    ComponentFunction g = generic_power(3, +1, 3);
    CHECK(cr_system_check(f, 1).holds);
    CHECK(cr_system_check(g, 1).holds);
    CHECK(cr_system_check(f * g, 1).holds);
}

TEST_CASE("the cubic operator factors into three linear operators") {
    CHECK(cubic_operator_factorizes());
}

TEST_CASE("forward and inverse derivative matrices multiply to the identity") {
    CHECK(chain_rule_inverse_ok(3, +1));
    CHECK(chain_rule_inverse_ok(4, +1));
    CHECK(chain_rule_inverse_ok(2, -1));
    CHECK(chain_rule_inverse_ok(3, -1));
    CHECK(chain_rule_inverse_ok(6, +1));
}
