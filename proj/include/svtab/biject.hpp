#pragma once

#include <vector>

#include "svtab/path.hpp"
#include "svtab/permutation.hpp"
#include "svtab/poset.hpp"
#include "svtab/tableau.hpp"

namespace svtab {

/// SYT^{+k}(2 x b) with n = 2b + k entries -> 321-avoiding permutation of
/// [n-1]. Column by column: the top cell without its largest entry, the
/// bottom cell (n removed), then the largest top entry.
Permutation alpha(const SetValuedTableau& t);
/// Inverse of alpha. Segments end at the inner valleys and at the last
/// position; right-to-left minima of a segment fill its top cell, the rest
/// its bottom cell, and n+1 joins the last bottom cell.
SetValuedTableau alpha_inv(const Permutation& pi);

/// SYT^{+k}(2 x b) -> motzET(2b + k): cell minima of row 1/2 become U/D,
/// other entries of row 1/2 become u/d.
ColoredPath beta(const SetValuedTableau& t);
SetValuedTableau beta_inv(const ColoredPath& p);
/// The same rule on any straight shape with at most two rows; the image is
/// a ballotlike path ending at height (top row) - (bottom row).
ColoredPath beta_two_row(const SetValuedTableau& t);
SetValuedTableau beta_inv_ballotlike(const ColoredPath& p);

/// motzT(n) -> motz(n-1), contracting the two steps ending at the first D:
/// (u, D) -> D and (U, D) -> d. The all-u path loses one step.
ColoredPath phi(const ColoredPath& p);
/// motz(n-1) -> motzT(n): the first D becomes uD, or the first d becomes UD;
/// with neither present a u is appended.
ColoredPath phi_inv(const ColoredPath& p);

/// (T, cuts, picks): T a linear extension, 1 <= t_1 <= ... <= t_k <= n, and
/// picks[i] a maximal element of the ideal T^{-1}({1, ..., t_i}).
struct Triple {
  LinearExtension T;
  std::vector<int> cuts;
  std::vector<int> picks;  // 0-based elements
  friend bool operator==(const Triple&, const Triple&) = default;
};

/// Peels extra entries off from the largest down: p_i holds the largest
/// remaining non-minimal entry x, and t_i = x - i.
Triple decompose(const Poset& p, const SetValuedLinearExtension& s);
/// Inverse of decompose; InvalidPick if a pick is not maximal in its ideal,
/// InvalidArgument for a bad T or cut vector.
SetValuedLinearExtension compose(const Poset& p, const Triple& triple);
/// Owner word of compose(p, triple), without validation.
std::vector<int> compose_word(const std::vector<int>& order, const std::vector<int>& cuts,
                              const std::vector<int>& picks);

/// Tableau form of the triple: a standard tableau, cuts, and picked cells.
struct TableauTriple {
  SetValuedTableau T;
  std::vector<int> cuts;
  std::vector<Cell> picks;
};

TableauTriple decompose(const SetValuedTableau& s);
SetValuedTableau compose(const TableauTriple& triple);
/// lambda_i = cells of T holding 1..t_i (straight shapes only).
std::vector<Partition> chain_shapes(const TableauTriple& triple);

/// Half turn with i -> N+1-i. Shape (b+1, b) goes to (b+1, b+1)/(1) and
/// back; anything else is ShapeMismatch.
SetValuedTableau rotate_complement(const SetValuedTableau& t);

}  // namespace svtab
