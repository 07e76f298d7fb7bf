#include "cnx/dirac.hpp"

#include "cnx/cn_algebra.hpp"

#include <algorithm>
#include <array>
#include <random>
#include <sstream>
#include <stdexcept>

namespace cnx {

namespace {

Cyclotomic c4(int value) { return Cyclotomic(4, Rational(value)); }

// The imaginary unit realized as the primitive fourth root.
Cyclotomic imag_unit() { return zeta(4, 1); }

CycMatrix from_rows(int order, const std::vector<std::vector<Cyclotomic>>& rows) {
    int dim = static_cast<int>(rows.size());
    CycMatrix m(dim, order);
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j) m.at(i, j) = rows[static_cast<size_t>(i)][static_cast<size_t>(j)];
    return m;
}

// Lifts an exact matrix into a polynomial matrix, scaling every entry.
PolyMatrix lift(const CycMatrix& m, int nvars, const MultiPoly& scale) {
    PolyMatrix r(m.dim(), nvars, m.order());
    for (int i = 0; i < m.dim(); ++i)
        for (int j = 0; j < m.dim(); ++j) {
            if (m.at(i, j).is_zero()) continue;
            r.at(i, j) = MultiPoly::constant(nvars, m.at(i, j)) * scale;
        }
    return r;
}

// scale * identity as a polynomial matrix.
PolyMatrix scalar_matrix(int dim, const MultiPoly& scale) {
    PolyMatrix r(dim, scale.nvars(), scale.order());
    for (int i = 0; i < dim; ++i) r.at(i, i) = scale;
    return r;
}

// Phased cyclic shifts: "up" places phases[r] at column (r+1) mod dim,
// "down" at column (r-1) mod dim.
CycMatrix phased_shift(int order, const std::vector<Cyclotomic>& phases, int step) {
    int dim = static_cast<int>(phases.size());
    CycMatrix m(dim, order);
    for (int r = 0; r < dim; ++r)
        m.at(r, ((r + step) % dim + dim) % dim) = phases[static_cast<size_t>(r)];
    return m;
}

}  // namespace

const CycMatrix& MatrixFamily::operator[](const std::string& name) const {
    for (const auto& [n, m] : members)
        if (n == name) return m;
    throw std::out_of_range("MatrixFamily: no member named " + name);
}

bool MatrixFamily::all_generalized_permutations() const {
    for (const auto& [n, m] : members)
        if (!m.is_generalized_permutation()) return false;
    return true;
}

MatrixFamily pauli_family() {
    Cyclotomic i = imag_unit();
    MatrixFamily fam;
    fam.order = 4;
    fam.dim = 2;
    fam.members.emplace_back("sigma0", CycMatrix::identity(2, 4));
    fam.members.emplace_back("sigma1", from_rows(4, {{c4(0), c4(1)}, {c4(1), c4(0)}}));
    fam.members.emplace_back("sigma2", from_rows(4, {{c4(0), -i}, {i, c4(0)}}));
    fam.members.emplace_back("sigma3", from_rows(4, {{c4(1), c4(0)}, {c4(0), c4(-1)}}));
    return fam;
}

PauliReport pauli_checks() {
    MatrixFamily fam = pauli_family();
    const CycMatrix& s0 = fam["sigma0"];
    const CycMatrix& s1 = fam["sigma1"];
    const CycMatrix& s2 = fam["sigma2"];
    const CycMatrix& s3 = fam["sigma3"];

    PauliReport rep;
    rep.squares_are_identity =
        s1 * s1 == s0 && s2 * s2 == s0 && s3 * s3 == s0;
    rep.sigma12_is_i_sigma3 = s1 * s2 == s3 * imag_unit();

    rep.anticommutators_match = true;
    std::vector<const CycMatrix*> s = {&s1, &s2, &s3};
    for (int m = 0; m < 3; ++m)
        for (int n = 0; n < 3; ++n) {
            CycMatrix anti = *s[m] * *s[n] + *s[n] * *s[m];
            CycMatrix want = m == n ? s0 * c4(2) : CycMatrix(2, 4);
            if (anti != want) rep.anticommutators_match = false;
        }
    return rep;
}

DiracSquareReport dirac_square_checks() {
    MatrixFamily fam = pauli_family();
    const int nvars = 4;
    auto var = [&](int k) { return MultiPoly::variable(nvars, 4, k); };

    DiracSquareReport rep;

    PolyMatrix d2 = lift(fam["sigma1"], nvars, var(0)) + lift(fam["sigma2"], nvars, var(1));
    rep.d2_square = d2.power(2) == scalar_matrix(2, var(0) * var(0) + var(1) * var(1));

    PolyMatrix d3 = d2 + lift(fam["sigma3"], nvars, var(2));
    rep.d3_square =
        d3.power(2) == scalar_matrix(2, var(0) * var(0) + var(1) * var(1) + var(2) * var(2));

    Cyclotomic i = imag_unit();
    PolyMatrix plus = lift(fam["sigma0"], nvars, var(0));
    PolyMatrix minus = plus;
    for (int k = 1; k <= 3; ++k) {
        std::string name = "sigma" + std::to_string(k);
        plus += lift(fam[name], nvars, var(k) * i);
        minus -= lift(fam[name], nvars, var(k) * i);
    }
    MultiPoly sum_sq(nvars, 4);
    for (int k = 0; k < 4; ++k) sum_sq += var(k) * var(k);
    rep.d4_factorization = plus * minus == scalar_matrix(2, sum_sq);
    return rep;
}

GammaReport gamma_family() {
    MatrixFamily pauli = pauli_family();
    GammaReport rep;
    rep.family.order = 4;
    rep.family.dim = 4;
    rep.family.members.emplace_back("gamma0", kron(pauli["sigma1"], pauli["sigma0"]));
    rep.family.members.emplace_back("gamma1", kron(pauli["sigma3"], pauli["sigma0"]));
    rep.family.members.emplace_back("gamma2", kron(pauli["sigma2"], pauli["sigma1"]));
    rep.family.members.emplace_back("gamma3", kron(pauli["sigma2"], pauli["sigma3"]));

    rep.metric_offdiag_zero = true;
    rep.metric_scalar = true;
    Rational half(BigInt(1), BigInt(2));
    for (int m = 0; m < 4; ++m) {
        for (int n = 0; n < 4; ++n) {
            const CycMatrix& gm = rep.family.members[static_cast<size_t>(m)].second;
            const CycMatrix& gn = rep.family.members[static_cast<size_t>(n)].second;
            CycMatrix anti = gm * gn + gn * gm;
            Cyclotomic scalar(4);
            if (!anti.is_scalar(&scalar) || !scalar.is_rational()) {
                rep.metric_scalar = false;
                continue;
            }
            Rational g = scalar.rational_value() * half;
            if (m == n)
                rep.metric_diag.push_back(g);
            else if (!(g == Rational(0)))
                rep.metric_offdiag_zero = false;
        }
    }
    return rep;
}

EtaTensor ternary_reference_eta() {
    EtaTensor ref;
    ref.order = 3;
    Cyclotomic one(3, Rational(1));
    Cyclotomic j = zeta(3, 1);
    Cyclotomic j2 = zeta(3, 2);
    for (int a = 1; a <= 3; ++a)
        for (int b = 1; b <= 3; ++b)
            for (int c = 1; c <= 3; ++c)
                ref.entries.emplace(
                    std::to_string(a) + std::to_string(b) + std::to_string(c),
                    Cyclotomic(3));
    for (const char* key : {"111", "222", "333"}) ref.entries.insert_or_assign(key, one);
    for (const char* key : {"123", "231", "312"}) ref.entries.insert_or_assign(key, j);
    for (const char* key : {"321", "213", "132"}) ref.entries.insert_or_assign(key, j2);
    return ref;
}

TernaryReport ternary_q_family() {
    Cyclotomic zero(3);
    Cyclotomic one(3, Rational(1));
    Cyclotomic j = zeta(3, 1);
    Cyclotomic j2 = zeta(3, 2);

    TernaryReport rep;
    rep.family.order = 3;
    rep.family.dim = 3;
    rep.family.members.emplace_back(
        "Q1", from_rows(3, {{zero, one, zero}, {zero, zero, one}, {one, zero, zero}}));
    rep.family.members.emplace_back(
        "Q2", from_rows(3, {{zero, one, zero}, {zero, zero, j}, {j2, zero, zero}}));
    rep.family.members.emplace_back(
        "Q3", from_rows(3, {{zero, one, zero}, {zero, zero, j2}, {j, zero, zero}}));

    const CycMatrix* Q[4] = {nullptr, &rep.family["Q1"], &rep.family["Q2"], &rep.family["Q3"]};

    rep.eta_composition.order = 3;
    rep.eta_standard.order = 3;
    rep.all_proportional = true;
    Rational third(BigInt(1), BigInt(3));

    auto eta_of = [&](const CycMatrix& sum, Cyclotomic* out) {
        Cyclotomic scalar(3);
        if (!sum.is_scalar(&scalar)) return false;
        *out = scalar * third;
        return true;
    };

    for (int a = 1; a <= 3; ++a)
        for (int b = 1; b <= 3; ++b)
            for (int c = 1; c <= 3; ++c) {
                std::string key =
                    std::to_string(a) + std::to_string(b) + std::to_string(c);
                // Literal reading: the word "abc" is the product Qa Qb Qc.
                CycMatrix std_sum =
                    *Q[a] * *Q[b] * *Q[c] + *Q[b] * *Q[c] * *Q[a] + *Q[c] * *Q[a] * *Q[b];
                // Composition reading: "abc" acts right-to-left, so the word
                // is the product Qc Qb Qa.
                CycMatrix comp_sum =
                    *Q[c] * *Q[b] * *Q[a] + *Q[a] * *Q[c] * *Q[b] + *Q[b] * *Q[a] * *Q[c];
                Cyclotomic es(3), ec(3);
                bool oks = eta_of(std_sum, &es);
                bool okc = eta_of(comp_sum, &ec);
                rep.all_proportional = rep.all_proportional && oks && okc;
                rep.eta_standard.entries.insert_or_assign(key, es);
                rep.eta_composition.entries.insert_or_assign(key, ec);
            }

    rep.cyclic_invariant = true;
    for (const auto* tensor : {&rep.eta_composition, &rep.eta_standard})
        for (int a = 1; a <= 3; ++a)
            for (int b = 1; b <= 3; ++b)
                for (int c = 1; c <= 3; ++c) {
                    std::string abc =
                        std::to_string(a) + std::to_string(b) + std::to_string(c);
                    std::string bca =
                        std::to_string(b) + std::to_string(c) + std::to_string(a);
                    if (!(tensor->entries.at(abc) == tensor->entries.at(bca)))
                        rep.cyclic_invariant = false;
                }

    CycMatrix s = *Q[1] + *Q[2] + *Q[3];
    rep.sum_cubed_zero = s.power(3).is_zero();

    EtaTensor ref = ternary_reference_eta();
    rep.composition_matches_reference = true;
    for (const auto& [key, want] : ref.entries) {
        const Cyclotomic& got = rep.eta_composition.entries.at(key);
        if (!(got == want)) {
            rep.composition_matches_reference = false;
            rep.reference_diffs.push_back(key + ": listed " + want.str() + ", computed " +
                                          got.str());
        }
    }
    return rep;
}

TernaryCubeReport ternary_dirac_cube() {
    TernaryReport fam = ternary_q_family();
    const int nvars = 3;
    auto var = [&](int k) { return MultiPoly::variable(nvars, 3, k); };

    PolyMatrix op = lift(fam.family["Q1"], nvars, var(0)) +
                    lift(fam.family["Q2"], nvars, var(1)) +
                    lift(fam.family["Q3"], nvars, var(2));

    TernaryCubeReport rep{MultiPoly::parse("x0^3 + x1^3 + x2^3 - 3*x0*x1*x2", nvars, 3), false};
    rep.matches = op.power(3) == scalar_matrix(3, rep.form);
    return rep;
}

QuaternaryReport quaternary_q_family(unsigned seed) {
    Cyclotomic one = c4(1);
    Cyclotomic i = imag_unit();
    Cyclotomic i2 = c4(-1);
    Cyclotomic i3 = -i;

    QuaternaryReport rep;
    rep.family.order = 4;
    rep.family.dim = 4;
    rep.family.members.emplace_back("q1", phased_shift(4, {one, one, one, one}, +1));
    rep.family.members.emplace_back("q2", phased_shift(4, {one, i, i2, i3}, +1));
    rep.family.members.emplace_back("q3", phased_shift(4, {one, i2, one, i2}, +1));
    rep.family.members.emplace_back("q4", phased_shift(4, {one, i3, i2, i}, +1));

    rep.second_family.order = 4;
    rep.second_family.dim = 4;
    rep.second_family.members.emplace_back("q9", phased_shift(4, {one, one, one, one}, -1));
    rep.second_family.members.emplace_back("q10", phased_shift(4, {one, i, i2, i3}, -1));
    rep.second_family.members.emplace_back("q11", phased_shift(4, {one, i2, one, i2}, -1));
    rep.second_family.members.emplace_back("q12", phased_shift(4, {one, i3, i2, i}, -1));

    const CycMatrix* q[5] = {nullptr, &rep.family["q1"], &rep.family["q2"],
                             &rep.family["q3"], &rep.family["q4"]};

    // All 256 ordered four-letter words, each the left-to-right product of
    // its letters; flat index (a-1)*64 + (b-1)*16 + (c-1)*4 + (d-1).
    auto widx = [](const std::array<int, 4>& w) {
        return (w[0] - 1) * 64 + (w[1] - 1) * 16 + (w[2] - 1) * 4 + (w[3] - 1);
    };
    std::vector<CycMatrix> word_prod;
    word_prod.reserve(256);
    for (int a = 1; a <= 4; ++a)
        for (int b = 1; b <= 4; ++b)
            for (int c = 1; c <= 4; ++c)
                for (int d = 1; d <= 4; ++d)
                    word_prod.push_back(*q[a] * *q[b] * *q[c] * *q[d]);

    std::vector<std::array<int, 4>> perms;
    {
        std::array<int, 4> p = {0, 1, 2, 3};
        do {
            perms.push_back(p);
        } while (std::next_permutation(p.begin(), p.end()));
    }

    rep.eta.order = 4;
    rep.all_proportional = true;
    auto symmetrized = [&](const std::array<int, 4>& word) {
        CycMatrix sum(4, 4);
        for (const auto& p : perms) {
            std::array<int, 4> w = {word[p[0]], word[p[1]], word[p[2]], word[p[3]]};
            sum = sum + word_prod[static_cast<size_t>(widx(w))];
        }
        return sum;
    };
    for (int a = 1; a <= 4; ++a)
        for (int b = 1; b <= 4; ++b)
            for (int c = 1; c <= 4; ++c)
                for (int d = 1; d <= 4; ++d) {
                    CycMatrix sum = symmetrized({a, b, c, d});
                    Cyclotomic scalar(4);
                    if (!sum.is_scalar(&scalar)) {
                        rep.all_proportional = false;
                        scalar = Cyclotomic(4);
                    }
                    std::string key = std::to_string(a) + std::to_string(b) +
                                      std::to_string(c) + std::to_string(d);
                    rep.eta.entries.insert_or_assign(key, scalar);
                }

    // Self-test: the symmetrized sum must not depend on letter order.
    rep.permutation_invariant = true;
    std::mt19937 rng(seed);
    for (int trial = 0; trial < 16; ++trial) {
        std::array<int, 4> word;
        for (auto& w : word) w = static_cast<int>(rng() % 4) + 1;
        std::array<int, 4> shuffled = word;
        for (int k = 3; k > 0; --k)
            std::swap(shuffled[static_cast<size_t>(k)],
                      shuffled[rng() % static_cast<unsigned>(k + 1)]);
        if (symmetrized(word) != symmetrized(shuffled)) rep.permutation_invariant = false;
    }

    CycMatrix id4 = CycMatrix::identity(4, 4);
    for (int k = 1; k <= 4; ++k) {
        CycMatrix p4 = q[k]->power(4);
        rep.generator_fourth_powers[k] = p4 == id4 ? 1 : (p4 == -id4 ? -1 : 0);
    }

    const int nvars = 4;
    auto var = [&](int k) { return MultiPoly::variable(nvars, 4, k); };
    PolyMatrix op = lift(*q[1], nvars, var(0)) + lift(*q[2], nvars, var(1)) +
                    lift(*q[3], nvars, var(2)) + lift(*q[4], nvars, var(3));
    const MultiPoly& quartic = expand_norm_form(4, +1).form;
    rep.fourth_power_matches_form = op.power(4) == scalar_matrix(4, quartic);

    auto crat = [](int v) { return Cyclotomic(4, Rational(v)); };
    rep.diagonal_matches_reference =
        rep.eta.entries.at("1111") == crat(24) && rep.eta.entries.at("2222") == crat(-24) &&
        rep.eta.entries.at("3333") == crat(24) && rep.eta.entries.at("4444") == crat(-24);

    // Listed mixed-index values (sorted words) versus the raw symmetrized
    // sums computed above. Differences are reported, not failed.
    std::map<std::string, int> listed = {{"1133", 2},  {"2244", -2}, {"1123", -4},
                                         {"1223", 4},  {"2334", -4}, {"1344", 4}};
    std::map<std::string, Cyclotomic> computed_mixed;
    for (const auto& [key, value] : rep.eta.entries) {
        std::string sorted_key = key;
        std::sort(sorted_key.begin(), sorted_key.end());
        bool diagonal = sorted_key[0] == sorted_key[3];
        if (!diagonal && !value.is_zero()) computed_mixed.emplace(sorted_key, value);
    }
    std::map<std::string, std::pair<std::string, std::string>> diff;
    for (const auto& [key, value] : listed) {
        auto it = computed_mixed.find(key);
        std::string got = it == computed_mixed.end() ? "0" : it->second.str();
        diff[key] = {std::to_string(value), got};
    }
    for (const auto& [key, value] : computed_mixed)
        if (!listed.count(key)) diff[key] = {"0", value.str()};
    for (const auto& [key, lg] : diff)
        if (lg.first != lg.second)
            rep.mixed_value_diffs.push_back(key + ": listed " + lg.first + ", computed " +
                                            lg.second);

    // Second quartet: compute and render only.
    for (int k = 0; k < 4; ++k) {
        CycMatrix p4 = rep.second_family.members[static_cast<size_t>(k)].second.power(4);
        rep.second_fourth_powers[9 + k] = p4 == id4 ? 1 : (p4 == -id4 ? -1 : 0);
    }
    PolyMatrix op2 = lift(rep.second_family["q9"], nvars, var(0)) +
                     lift(rep.second_family["q10"], nvars, var(1)) +
                     lift(rep.second_family["q11"], nvars, var(2)) +
                     lift(rep.second_family["q12"], nvars, var(3));
    PolyMatrix p2 = op2.power(4);
    rep.second_operator_scalar = true;
    for (int r = 0; r < 4 && rep.second_operator_scalar; ++r)
        for (int c = 0; c < 4; ++c) {
            const MultiPoly& want = r == c ? p2.at(0, 0) : MultiPoly(nvars, 4);
            if (p2.at(r, c) != want) {
                rep.second_operator_scalar = false;
                break;
            }
        }
    if (rep.second_operator_scalar) {
        rep.second_operator_diag = p2.at(0, 0).str();
        rep.second_matches_case_a = p2.at(0, 0) == quartic;
    } else {
        rep.second_operator_diag = "(non-scalar)";
    }
    return rep;
}

}  // namespace cnx
