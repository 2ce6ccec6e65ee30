#pragma once

#include <utility>
#include <vector>

#include "svtab/permutation.hpp"
#include "svtab/poset.hpp"
#include "svtab/qpoly.hpp"
#include "svtab/tableau.hpp"

namespace svtab {

/// Pieces of a set-valued filling cut at its non-minimal entries
/// d_1 < ... < d_k. Piece i covers the values [first, last].
struct DescentData {
  std::vector<int> extras;                    // d_1, ..., d_k
  std::vector<std::pair<int, int>> pieces;    // k + 1 value ranges
  std::vector<int> descents;                  // Des^{+k}, increasing
};

/// Works on owner words (owner_word[x-1] = 0-based element holding x,
/// compared as natural labels). n is the number of elements.
DescentData descent_data(const std::vector<int>& owner_word, int n);
/// Des^{+k}: the extras, plus each j with j+1 not an extra and
/// owner(j+1) < owner(j).
std::vector<int> descent_set_plus_k(const std::vector<int>& owner_word, int n);
int comaj_plus_k(const std::vector<int>& owner_word, int n);

std::vector<int> descent_set_plus_k(const SetValuedTableau& t);
std::vector<int> descent_set_plus_k(const SetValuedLinearExtension& s);
int comaj_plus_k(const SetValuedTableau& t);
int comaj_plus_k(const SetValuedLinearExtension& s);

/// Descents of an ordinary linear extension: positions j (1-based) with
/// order[j] labelled below order[j-1].
std::vector<int> descent_set(const LinearExtension& t);
int comaj(const LinearExtension& t);

/// 1-based positions j, 1 < j < m, with pi_{j-1} > pi_j < pi_{j+1}.
std::vector<int> inner_valleys(const Permutation& pi);
std::vector<int> inner_peaks(const Permutation& pi);
/// Values of the right-to-left minima, increasing.
std::vector<int> rl_minima(const Permutation& pi);

/// Top-row type of a member of the n-entry two-row union: a_1 < ... < a_m
/// the top-row entries, c_i = a_{i+1} - a_i with a_{m+1} = n, and mu[j] the
/// number of c_i equal to j (mu[0] unused).
struct DyckType {
  int m = 0;
  std::vector<int> composition;
  std::vector<int> mu;
  friend bool operator==(const DyckType&, const DyckType&) = default;
  friend auto operator<=>(const DyckType&, const DyckType&) = default;
};
DyckType dyck_type(const SetValuedTableau& t);
DyckType dyck_type_of_top_row(const std::vector<int>& top, int n);

/// Sum of q^{comaj^{+k}} over the two-row union with n+1 entries.
QPoly q_catalan_tilde(int n);
/// The same sum restricted to tableaux with m entries in the top row.
QPoly q_narayana_tilde(int n, int m);
/// All q_narayana_tilde(n, m), indexed by m (entry 0 unused).
std::vector<QPoly> q_narayana_row(int n);

/// Number of maximal elements of an order ideal.
int ddeg(const Poset& p, ElementMask ideal);

}  // namespace svtab
