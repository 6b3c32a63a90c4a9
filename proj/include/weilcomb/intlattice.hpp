#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "weilcomb/checked_int.hpp"

namespace weilcomb {

// Obstruction certificate for t not lying in the column lattice of B:
// after eliminating all earlier pivots exactly, the residual at `row` is
// `residue`, while the lattice can only reach multiples of `modulus` there
// (modulus 0 means the lattice is identically zero on that row).
struct LatticeObstruction {
  std::size_t row = 0;
  Coeff modulus = 0;
  Coeff residue = 0;
};

// Result of the exact membership test "is t an integer combination of the
// columns of B?".  On success `solution` holds x with B*x = t; on failure
// `obstruction` explains why no integer solution exists.
struct IntegerSolveResult {
  bool solvable = false;
  std::vector<Coeff> solution;
  std::optional<LatticeObstruction> obstruction;
};

// Decides t in columnLattice(B) over the integers by bringing B to column
// echelon (Hermite) form with unimodular column operations, tracked so a
// certificate in the original column coordinates is recovered.  All arithmetic
// is exact and overflow-checked.
//
// `columns` holds the basis vectors; all must share target.size().  An empty
// basis is permitted (membership iff t = 0).
IntegerSolveResult solve_integer_combination(const std::vector<std::vector<Coeff>>& columns,
                                             const std::vector<Coeff>& target);

}  // namespace weilcomb
