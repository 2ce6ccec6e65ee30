#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "svtab/multipoly.hpp"
#include "svtab/path.hpp"
#include "svtab/permutation.hpp"
#include "svtab/tableau.hpp"

namespace svtab {

// Every generator is a depth-first visitor with polynomial delay; nothing is
// materialized unless the caller asks for a vector.

/// SYT^{+k}(shape) in lexicographic order of the cell-assignment word (the
/// row-major index of the cell receiving 1, 2, ..., n+k).
void for_each_svsyt(const SkewShape& shape, int k,
                    const std::function<void(const SetValuedTableau&)>& visit);
std::vector<SetValuedTableau> gen_svsyt(const SkewShape& shape, int k);
std::uint64_t count_svsyt(const SkewShape& shape, int k);

/// The disjoint union of SYT^{+k}(2 x b) over 2b + k = n, b ascending.
void for_each_two_row_union(int n, const std::function<void(const SetValuedTableau&)>& visit);
std::vector<SetValuedTableau> gen_two_row_union(int n);
std::uint64_t count_two_row_union(int n);

/// The disjoint union of SYT^{+k}(b, b - i) over 2b + k - i = n, b ascending.
void for_each_ballot_tableau(int n, int i,
                             const std::function<void(const SetValuedTableau&)>& visit);
std::uint64_t count_ballot_tableaux(int n, int i);

/// 321-avoiding permutations of [m] in lexicographic order.
void for_each_avoid321(int m, const std::function<void(const Permutation&)>& visit);
std::vector<Permutation> gen_avoid321(int m);
std::uint64_t count_avoid321(int m);

/// Paths of length n in a family, lexicographic with U < D < u < d. For
/// PathFamily::ballotlike this is every ballotlike path of length n,
/// whatever its final height.
void for_each_path(PathFamily family, int n, const std::function<void(const ColoredPath&)>& visit);
std::vector<ColoredPath> gen_paths(PathFamily family, int n);
std::uint64_t count_paths(PathFamily family, int n);

/// bal*(n, i): ballotlike paths ending at height i.
void for_each_ballotlike(int n, int i, const std::function<void(const ColoredPath&)>& visit);
std::vector<ColoredPath> gen_ballotlike(int n, int i);
std::uint64_t count_ballotlike(int n, int i);

/// Sum over the family of U^#U D^#D u^#u d^#d.
MultiPoly step_polynomial(PathFamily family, int n);

}  // namespace svtab
