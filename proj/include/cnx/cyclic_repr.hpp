#pragma once

// Character tables of the cyclic groups C_N, the three-dimensional vector
// representation of C_3, and the discrete-Fourier basis change that
// diagonalizes the cyclic shift.

#include "cnx/cyc_matrix.hpp"
#include "cnx/polymatrix.hpp"

namespace cnx {

struct CharacterTable {
    int order;
    CycMatrix table;  // entry (k, alpha) = zeta_N^{(k-1)(alpha-1)}, 0-indexed storage
};

// Exact character table, 1 <= N <= 24.
CharacterTable char_table(int order);

struct OrthogonalityReport {
    bool rows_orthonormal;     // (1/N) sum_a xi_a conj(eta_a) = delta
    bool columns_orthonormal;  // second orthogonality relation
};

OrthogonalityReport orthogonality_check(const CharacterTable& t);

// The vector representation of C_3 on R^3: R(q0) = I and the rotation by
// 2*pi/3 about the (1,1,1) axis, exact over the order-12 field (which hosts
// sqrt(3) = zeta_12 + zeta_12^11).
struct C3VectorRep {
    CycMatrix r0, r1, r2;  // R(q^0), R(q), R(q^2)
};

C3VectorRep c3_vector_rep();

struct XhatResult {
    PolyMatrix matrix;  // sum_i x_i R(q^i), symbols over the order-12 field
    MultiPoly det;
};

XhatResult xhat();

struct DftConjugationReport {
    CycMatrix s;          // unnormalized: entries j^{kl}, order 3
    bool unitary_scaled;  // S * S^dagger = 3 I
    bool q1_diagonalized;       // S^{-1} q1 S = diag(1, j, j^2)
    bool q1_squared_diagonalized;  // S^{-1} q1^2 S = diag(1, j^2, j)
    bool identity_fixed;
};

DftConjugationReport dft_conjugation();

}  // namespace cnx
