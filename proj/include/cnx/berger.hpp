#pragma once

// Berger matrices: the affine condition set (diagonal, off-diagonal,
// zero-symmetry, vanishing determinant, positive proper principal minors),
// star-graph construction from simply-laced weight vectors with Coxeter
// labels, graph invariants (Coxeter number, Casimir, non-affine
// determinants), the exact Gram matrix of the thirteen-root realization of
// the (0,1,1,1,1)[4] star, and the reference table of exceptional graphs.

#include "cnx/rational.hpp"

#include <string>
#include <utility>
#include <vector>

namespace cnx {

using IntMatrix = std::vector<std::vector<long long>>;

// Fraction-free determinant with row pivoting, exact over big integers.
// Throws std::invalid_argument for empty or non-square input.
BigInt exact_det(const IntMatrix& m);

struct LeadingMinors {
    std::vector<BigInt> minors;  // minors[k] = determinant of the (k+1) x (k+1)
                                 // leading block; stops after a zero entry
    bool complete;               // true when all n minors were computed
};

// Leading principal minors via one fraction-free elimination pass without
// pivoting; a vanishing intermediate minor ends the list (with the zero
// recorded), since elimination cannot continue past it.
LeadingMinors leading_principal_minors(const IntMatrix& m);

struct WeightVector {
    std::vector<long long> k;  // components as given, zeros allowed
    long long d;               // degree: sum of the components
    int positive_count;        // p: number of strictly positive components
    int cy_dim;                // p - 1 (2 for the K3 stars, 3 for CY3, 4 for CY4)
    bool simply_laced;         // every positive k_i divides d and is < d
};

// Classifies a component list. Throws unless entries are non-negative with
// at least one positive.
WeightVector weight_vector(const std::vector<long long>& components);

struct BergerRules {
    int size;
    bool diagonal_ok;      // 2 <= B_ii <= max_diagonal
    bool offdiagonal_ok;   // B_ij <= 0 away from the diagonal
    bool zero_symmetric;   // B_ij = 0 <=> B_ji = 0
    bool det_zero;         // determinant vanishes exactly
    bool minors_positive;  // every proper principal minor is positive
    bool minors_decided;   // false only when neither route below could settle it
    bool pass;             // conjunction of the five rule verdicts
    BigInt det;
    std::string minor_method;                         // "exhaustive" or "certificate"
    std::vector<std::pair<int, int>> zero_asymmetries;  // (i, j) with B_ij = 0, B_ji != 0
    std::vector<int> failing_minor;                   // indices of one non-positive minor
};

// Checks the affine condition set. Sizes up to 16 enumerate every nonempty
// proper principal submatrix (partitioned across workers); larger matrices
// must be symmetric and are settled by a certificate: positive leading
// minors, vanishing determinant and a nowhere-zero kernel vector force a
// positive-semidefinite matrix of corank one, whose proper principal
// submatrices are all positive definite. max_diagonal is 3 or 4.
BergerRules validate_berger(const IntMatrix& b, int max_diagonal = 3, unsigned workers = 1);

struct BergerGraph {
    WeightVector weight;
    int nodes;
    int center;                              // canonical index: the last node
    std::vector<long long> labels;           // Coxeter labels, canonical order
    std::vector<int> diagonal;               // 2 everywhere, cy_dim at the center
    std::vector<std::vector<int>> legs;      // node indices per leg, outer -> inner
    std::vector<std::pair<int, int>> edges;  // undirected adjacency
};

struct StarResult {
    BergerGraph graph;
    IntMatrix matrix;    // B_ii on the diagonal, -1 across each edge
    BergerRules rules;   // validation verdicts for the built matrix
};

// Star construction: one leg per positive component k with d/k - 1 nodes
// labeled k, 2k, ..., d - k from the outer end inward, all meeting a center
// node labeled d whose diagonal entry is cy_dim. Canonical node order lists
// the legs first and the center last. Requires the simply-laced predicate
// and cy_dim in {2, 3, 4}.
StarResult build_star(const WeightVector& w);

struct EndDeletion {
    int leg;          // which leg's outer end was deleted
    long long label;  // its Coxeter label
    BigInt det;       // determinant of the remaining matrix
};

struct GraphInvariants {
    int rank;                   // nodes - 1
    std::string rank_string;    // "8" for all-binary graphs, else "1_3+11" style
    long long h;                // Coxeter number: sum of all labels
    long long casimir;          // cy_dim * d
    BigInt det_nonaffine;       // determinant after deleting a minimal-label leg end
    std::vector<EndDeletion> end_deletions;  // every leg-end choice, for comparison
    BigInt adjugate_constant;   // c with adj(B) = c * labels * labels^T
    bool kernel_matches_labels;  // B * labels == 0 exactly
};

GraphInvariants graph_invariants(const StarResult& s);

struct GramReport {
    std::vector<std::vector<Rational>> gram;  // pairwise dot products
    bool integer_entries;
    IntMatrix gram_int;          // filled when every entry is an integer
    Rational det;
    int kernel_dimension;
    std::vector<BigInt> kernel;  // primitive integer generator (positive lead)
                                 // when the kernel is one-dimensional
};

// Exact Gram matrix and kernel of a list of equal-length rational vectors.
// Throws std::invalid_argument on a length mismatch.
GramReport roots_gram(const std::vector<std::vector<Rational>>& roots);

// The thirteen concrete roots realizing the (0,1,1,1,1)[4] star in R^12.
std::vector<std::vector<Rational>> reference_roots13();

// Companion 13 x 13 matrix kept verbatim from its source, including the
// asymmetric zero pattern in the last two rows; validation documents what
// fails rather than repairing it.
IntMatrix printed13_matrix();

struct Table1Row {
    std::vector<long long> k;
    long long degree;
    std::string printed_rank;     // verbatim rank column
    std::string printed_h;        // verbatim h column (formulas for the l-series)
    std::string printed_casimir;
    std::string printed_det;
    bool supported;               // false for the double-zero l-series rows
};

// All twenty printed rows of the reference table, in printed order.
const std::vector<Table1Row>& table1_rows();

struct Table1Entry {
    Table1Row row;
    bool built;               // false for unsupported rows
    std::string rank_string;  // computed values, valid when built
    long long h;
    long long casimir;
    BigInt det_nonaffine;
    bool affine_pass;     // the built star passes the full affine condition
    bool kernel_matches;  // its label vector spans the kernel exactly
    bool rank_matches;
    bool h_matches;
    bool casimir_matches;
    bool det_matches;
    bool all_match;
};

struct Table1Report {
    std::vector<Table1Entry> entries;
    int supported_rows;
    int matched_rows;
    bool all_supported_match;
};

// Rebuilds every supported row through build_star and diffs the computed
// invariants against the printed values.
Table1Report table1_report();

}  // namespace cnx
