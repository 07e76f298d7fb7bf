#pragma once

// Generalized Clifford-type matrix systems: the Pauli baseline, the 4x4
// gamma tensor products, the ternary Q-triple with its eta tensor, and the
// quaternary shift-phase quadruples. Every relation is verified by exact
// matrix arithmetic; listed reference values that the computation does not
// reproduce are surfaced as structured diffs instead of hard failures.

#include "cnx/cyc_matrix.hpp"
#include "cnx/polymatrix.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace cnx {

// A named list of same-size matrices over one cyclotomic field.
struct MatrixFamily {
    int order = 1;  // cyclotomic order of the entries
    int dim = 1;    // matrix size
    std::vector<std::pair<std::string, CycMatrix>> members;

    // Lookup by name; throws std::out_of_range when absent.
    const CycMatrix& operator[](const std::string& name) const;
    // True when every member has exactly one nonzero root-of-unity entry in
    // each row and column.
    bool all_generalized_permutations() const;
};

// Coefficients indexed by digit words ("123", "1124", ...). Values live in
// the cyclotomic field of the stated order.
struct EtaTensor {
    int order = 1;
    std::map<std::string, Cyclotomic> entries;
};

// sigma0..sigma3 over the order-4 field (the imaginary unit is the
// primitive fourth root).
MatrixFamily pauli_family();

struct PauliReport {
    bool squares_are_identity = false;   // sigma_i^2 = sigma_0 for i = 1..3
    bool sigma12_is_i_sigma3 = false;    // sigma_1 sigma_2 = i sigma_3
    bool anticommutators_match = false;  // sigma_m sigma_n + sigma_n sigma_m = 2 delta_mn I
};
PauliReport pauli_checks();

struct DiracSquareReport {
    bool d2_square = false;         // (s1 t0 + s2 t1)^2 = (t0^2 + t1^2) I
    bool d3_square = false;         // (s1 t0 + s2 t1 + s3 t2)^2 = (t0^2 + t1^2 + t2^2) I
    bool d4_factorization = false;  // (s0 t0 + i s.t)(s0 t0 - i s.t) = (sum of four squares) I
};
DiracSquareReport dirac_square_checks();

struct GammaReport {
    MatrixFamily family;                // gamma_0..gamma_3 as tensor products
    std::vector<Rational> metric_diag;  // g_mm from (gamma_m gamma_n + gamma_n gamma_m)/2
    bool metric_offdiag_zero = false;
    bool metric_scalar = false;  // every anticommutator is a rational multiple of I
};
GammaReport gamma_family();

// Reference eta values for the ternary triple: 111 = 222 = 333 -> 1,
// 123 = 231 = 312 -> j, 321 = 213 = 132 -> j^2, every other word -> 0.
EtaTensor ternary_reference_eta();

struct TernaryReport {
    MatrixFamily family;       // Q1, Q2, Q3 over the order-3 field
    EtaTensor eta_composition; // word "abc" applied right-to-left: Qc Qb Qa
    EtaTensor eta_standard;    // word "abc" as the literal product Qa Qb Qc
    bool all_proportional = false;  // every cyclic sum is a scalar matrix
    bool cyclic_invariant = false;  // eta_abc = eta_bca = eta_cab, both readings
    bool sum_cubed_zero = false;    // (Q1 + Q2 + Q3)^3 = 0
    bool composition_matches_reference = false;
    std::vector<std::string> reference_diffs;  // words where composition reading disagrees
};
TernaryReport ternary_q_family();

struct TernaryCubeReport {
    MultiPoly form;        // x0^3 + x1^3 + x2^3 - 3 x0 x1 x2
    bool matches = false;  // (Q1 x0 + Q2 x1 + Q3 x2)^3 == form * I
};
TernaryCubeReport ternary_dirac_cube();

struct QuaternaryReport {
    MatrixFamily family;         // q1..q4, phased up-shifts over the order-4 field
    MatrixFamily second_family;  // q9..q12, phased down-shifts (exploratory)

    // Raw symmetrized sums: entries["abcd"] is the scalar S with
    // sum over all 24 orderings of q_a q_b q_c q_d = S * I.
    EtaTensor eta;
    bool all_proportional = false;        // every symmetrized sum is scalar
    bool permutation_invariant = false;   // symmetrizer self-test on sampled words
    std::map<int, int> generator_fourth_powers;  // k -> s with q_k^4 = s * I, s = +-1
    bool fourth_power_matches_form = false;  // (q1 x0 + ... + q4 x3)^4 = quartic form * I
    bool diagonal_matches_reference = false; // 1111, 2222, 3333, 4444 -> +24, -24, +24, -24
    // Informational: listed mixed-index values versus the computed sums,
    // keyed by sorted word. Never a hard failure.
    std::vector<std::string> mixed_value_diffs;

    // Second-quartet data: computed and rendered, never asserted.
    std::map<int, int> second_fourth_powers;  // k -> s with q_k^4 = s * I (0 if neither)
    bool second_operator_scalar = false;      // contracted fourth power scalar?
    bool second_matches_case_a = false;       // ... and equal to the same quartic form?
    std::string second_operator_diag;         // rendering of the scalar polynomial
};
QuaternaryReport quaternary_q_family(unsigned seed = 42);

}  // namespace cnx
