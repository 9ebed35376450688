#pragma once

// Disjunctive / conjunctive normal forms of lattice polynomial functions.
//
// A coefficient map assigns one lattice element to every subset I of {1..n}.
// DNF evaluation:  join over I of ( c(I) ^ meet_{i in I} x_i )   (empty meet = top)
// CNF evaluation:  meet over I of ( c(I) v join_{i in I} x_i )   (empty join = bottom)
//
// For a function f, alpha(I) = f(e_I) and beta(I) = f(e_{complement I}), where
// e_I is top on the coordinates in I and bottom elsewhere. A table is a
// polynomial function exactly when alpha is monotone over subset inclusion and
// DNF-evaluating alpha reproduces the table everywhere.

#include <optional>
#include <vector>

#include "latpoly/fn_table.hpp"
#include "latpoly/lattice.hpp"

namespace latpoly {

// Coefficients indexed by subset bitmask (index I = mask over coordinates).
struct CoeffMap {
  int arity = 0;
  std::vector<Elem> values;  // size 1 << arity

  Elem at(SubsetMask I) const { return values[I]; }
  Elem& at(SubsetMask I) { return values[I]; }
  SubsetMask subsets() const { return SubsetMask{1} << arity; }

  bool operator==(const CoeffMap&) const = default;
};

// "{}", "{1}", "{1,3}", ... for a subset bitmask over 1-based slots.
std::string mask_str(SubsetMask I, int arity);

CoeffMap alpha(const FnTable& f);
CoeffMap beta(const FnTable& f);

// Keeps alpha(I) only where the join of all proper-subset coefficients is
// strictly below it; other entries collapse to bottom. Requires alpha monotone.
CoeffMap alpha_star(const FnTable& f);
// Dual: keeps beta(I) where the meet over proper subsets is strictly above.
CoeffMap beta_star(const FnTable& f);

// True when c is monotone over subset inclusion; otherwise reports the first
// (in mask order) covering pair I < I + {i} where it fails.
bool cube_monotone(const Lattice& lattice, const CoeffMap& c,
                   SubsetMask* bad_lo = nullptr, SubsetMask* bad_hi = nullptr);

Elem eval_dnf(const Lattice& lattice, const CoeffMap& c, std::span<const Elem> x);
Elem eval_cnf(const Lattice& lattice, const CoeffMap& c, std::span<const Elem> x);

FnTable tabulate_dnf(const LatticePtr& lattice, const CoeffMap& c,
                     std::size_t budget = kDefaultTableBudget);
FnTable tabulate_cnf(const LatticePtr& lattice, const CoeffMap& c,
                     std::size_t budget = kDefaultTableBudget);

// Structural membership test for the set of DNF representations of f:
//   every c(I) <= alpha(I), and whenever the proper-subset join of alpha is
//   strictly below alpha(I), the coefficients over subsets of I join to alpha(I).
// Requires f polynomial (PreconditionError otherwise).
bool in_dnf_set(const FnTable& f, const CoeffMap& c);
bool in_cnf_set(const FnTable& f, const CoeffMap& c);

// All coefficient maps whose DNF/CNF evaluation reproduces f, by brute force
// over size^(2^n) candidates, in lexicographic order of the coefficient vector
// (empty set first). The parallel path merges per-thread results back into that
// same order.
std::vector<CoeffMap> enumerate_dnf_set(const FnTable& f,
                                        std::size_t budget = kDefaultEnumBudget,
                                        bool parallel = true);
std::vector<CoeffMap> enumerate_cnf_set(const FnTable& f,
                                        std::size_t budget = kDefaultEnumBudget,
                                        bool parallel = true);

// Whether f has exactly one DNF (resp. CNF) representation. Decided from the
// coefficient structure alone: an entry with alpha(I) = bottom is pinned; any
// other entry must both exceed its proper-subset join strictly and admit no
// second solution b with  b v (proper-subset join) = alpha(I).
bool unique_dnf(const FnTable& f);
bool unique_cnf(const FnTable& f);

// The unique polynomial function extending a monotone 0/1-cube map; throws
// ValidationError naming a violating inclusion pair when g is not monotone.
FnTable extend_from_cube(const LatticePtr& lattice, const CoeffMap& g,
                         std::size_t budget = kDefaultTableBudget);

struct PolyCheck {
  enum class Fail { none, cube_not_monotone, table_mismatch };
  bool ok = true;
  Fail why = Fail::none;
  SubsetMask bad_lo = 0, bad_hi = 0;  // cube_not_monotone
  TupleIndex bad_point = 0;           // table_mismatch
};

// Polynomiality via the cube restriction: alpha monotone and DNF(alpha) == f.
PolyCheck check_polynomial(const FnTable& f);
bool is_polynomial(const FnTable& f);

}  // namespace latpoly
