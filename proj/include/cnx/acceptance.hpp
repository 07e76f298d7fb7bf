#pragma once

// The ten-part verification battery: exact algebraic identities, frozen
// reference data, transcribed source tables, and seeded property checks,
// each part returning one structured Report. The standalone acceptance
// binary prints one line per part; the command-line `suite` subcommand
// renders the same reports as text or JSON.

#include "cnx/report.hpp"

#include <vector>

namespace cnx {

Report acceptance_norm_multiplicativity(unsigned seed);
Report acceptance_symbolic_norms();
Report acceptance_cauchy_riemann();
Report acceptance_operator_diagonalization(unsigned seed);
Report acceptance_euler_unimodularity(unsigned seed);
Report acceptance_ternary_pythagoras();
Report acceptance_cube_table(unsigned workers = 1);
Report acceptance_berger_table();
Report acceptance_character_tables();
Report acceptance_round_trips(unsigned seed);

// All ten parts in order. The seed drives every randomized property check;
// workers parallelize the Diophantine sweep.
std::vector<Report> run_acceptance_suite(unsigned seed = 42, unsigned workers = 1);

}  // namespace cnx
