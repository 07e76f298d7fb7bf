#include "cnx/cyclic_repr.hpp"

#include <stdexcept>

namespace cnx {

CharacterTable char_table(int order) {
    if (order < 1 || order > MAX_ORDER)
        throw std::invalid_argument("char_table: order out of range");
    CycMatrix t(order, order);
    for (int k = 0; k < order; ++k)
        for (int a = 0; a < order; ++a)
            t.at(k, a) = zeta(order, static_cast<long long>(k) * a);
    return CharacterTable{order, std::move(t)};
}

OrthogonalityReport orthogonality_check(const CharacterTable& t) {
    int n = t.order;
    Rational inv_n(BigInt(1), BigInt(n));
    bool rows = true, cols = true;
    for (int k = 0; k < n; ++k) {
        for (int l = 0; l < n; ++l) {
            Cyclotomic row_sum(n), col_sum(n);
            for (int a = 0; a < n; ++a) {
                row_sum += t.table.at(k, a) * t.table.at(l, a).conj();
                col_sum += t.table.at(a, k) * t.table.at(a, l).conj();
            }
            Cyclotomic expect(n, k == l ? Rational(1) : Rational(0));
            if (!(row_sum * inv_n == expect)) rows = false;
            if (!(col_sum * inv_n == expect)) cols = false;
        }
    }
    return OrthogonalityReport{rows, cols};
}

namespace {

// sqrt(3)/2 over the order-12 field: (zeta_12 + zeta_12^11) / 2.
Cyclotomic half_sqrt3() {
    return (zeta(12, 1) + zeta(12, 11)) * Rational(BigInt(1), BigInt(2));
}

}  // namespace

C3VectorRep c3_vector_rep() {
    const int ord = 12;
    Cyclotomic half(ord, Rational(BigInt(1), BigInt(2)));
    Cyclotomic s = half_sqrt3();

    CycMatrix r1(3, ord);
    r1.at(0, 0) = Cyclotomic(ord, Rational(1));
    r1.at(1, 1) = -half;
    r1.at(1, 2) = s;
    r1.at(2, 1) = -s;
    r1.at(2, 2) = -half;

    return C3VectorRep{CycMatrix::identity(3, ord), r1, r1 * r1};
}

XhatResult xhat() {
    C3VectorRep rep = c3_vector_rep();
    const CycMatrix* rs[3] = {&rep.r0, &rep.r1, &rep.r2};
    PolyMatrix m(3, 3, 12);
    for (int i = 0; i < 3; ++i) {
        MultiPoly xi = MultiPoly::variable(3, 12, i);
        for (int r = 0; r < 3; ++r)
            for (int c = 0; c < 3; ++c)
                m.at(r, c) += xi * MultiPoly::constant(3, rs[i]->at(r, c));
    }
    MultiPoly det = m.det();
    return XhatResult{std::move(m), std::move(det)};
}

DftConjugationReport dft_conjugation() {
    const int n = 3;
    CycMatrix s(n, n);
    for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) s.at(k, l) = zeta(n, static_cast<long long>(k) * l);

    CycMatrix three = CycMatrix::identity(n, n) * Cyclotomic(n, Rational(3));
    bool unitary_scaled = (s * s.conj_transposed() == three);

    // S^{-1} = (1/3) S^dagger once S S^dagger = 3I holds.
    CycMatrix s_inv = s.conj_transposed() * Cyclotomic(n, Rational(BigInt(1), BigInt(3)));

    CycMatrix q1(n, n);  // cyclic shift: row i has a 1 in column (i+1) mod 3
    q1.at(0, 1) = Cyclotomic(n, Rational(1));
    q1.at(1, 2) = Cyclotomic(n, Rational(1));
    q1.at(2, 0) = Cyclotomic(n, Rational(1));

    auto diag = [&](long long a, long long b, long long c) {
        CycMatrix d(n, n);
        d.at(0, 0) = zeta(n, a);
        d.at(1, 1) = zeta(n, b);
        d.at(2, 2) = zeta(n, c);
        return d;
    };

    bool q1_diag = (s_inv * q1 * s == diag(0, 1, 2));
    bool q1_sq_diag = (s_inv * (q1 * q1) * s == diag(0, 2, 1));
    bool id_fixed = (s_inv * CycMatrix::identity(n, n) * s == CycMatrix::identity(n, n));

    return DftConjugationReport{std::move(s), unitary_scaled, q1_diag, q1_sq_diag, id_fixed};
}

}  // namespace cnx
