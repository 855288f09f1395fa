#pragma once

#include "redinv/report.hpp"

namespace redinv {

/// Runs every invariant suite exhaustively over S_n: permutations, words,
/// diagrams, tableaux, the bijection and the move graphs. Feasible up to n = 5.
Report verify_all(int n);

}  // namespace redinv
