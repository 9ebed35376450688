#pragma once

#include <array>
#include <cstdint>
#include <random>
#include <vector>

#include "latpoly/expr.hpp"
#include "latpoly/fn_table.hpp"
#include "latpoly/normal_form.hpp"
#include "latpoly/properties.hpp"

namespace latpoly {

// Which seven-condition equivalence profile a sweep evaluates.
enum class ProfileKind { main, sugeno };

// Aggregate outcome of running a profile over a universe of function tables.
// A "disagreement" is a table whose seven entries are neither all true nor
// all false; the equivalence claim under test says there are none.
struct SweepResult {
  long long tables = 0;
  long long profile_true = 0;             // tables with every condition true
  std::array<long long, 7> cond_true{};   // per-condition counts
  long long disagreement_count = 0;
  std::vector<std::vector<Elem>> disagreements;  // first few offending tables
  // Tables whose third condition would hold once the whole-range convexity
  // conjunct is dropped, while the full condition fails.  Recorded so runs
  // can report whether that conjunct ever made a difference.
  long long range_separation_count = 0;
  std::uint64_t seed = 0;  // generator seed for sampled runs, 0 otherwise
};

// Exhaustive sweep over all size^(size^arity) value tables.  Throws
// BudgetError when the universe is larger than `budget`.  The parallel path
// splits the index range across threads and merges deterministically; both
// paths report identical results.
SweepResult sweep_all_tables(const LatticePtr& lattice, int arity,
                             ProfileKind kind, long long budget = 1000000,
                             bool parallel = true);

// Seeded randomized sweep: each sample contributes a tabulated random
// expression and a one-entry perturbation of it (usually breaking the
// polynomial property), so both sides of the equivalence get exercised.
SweepResult sweep_samples(const LatticePtr& lattice, int arity,
                          ProfileKind kind, long long samples,
                          std::uint64_t seed);

// Random expression over x1..x_arity: node kinds drawn uniformly from
// variable / constant / meet / join (one quarter each); once the depth
// budget is spent only the two leaf kinds remain (one half each).
ExprPtr random_expr(std::mt19937_64& rng, const Lattice& lattice, int arity,
                    int max_depth = 5);

// Copy of `f` with one uniformly chosen entry replaced by a different value.
FnTable perturb_table(std::mt19937_64& rng, const FnTable& f);

// All monotone maps from the arity-cube into the lattice, in ascending
// lexicographic order of their value vectors.
std::vector<CoeffMap> all_monotone_cube_maps(const Lattice& lattice, int arity);

// Every polynomial function of the given arity, one table per monotone cube
// map, in the cube-map order above.
std::vector<FnTable> all_polynomial_tables(const LatticePtr& lattice,
                                           int arity);

// Value table of the index-th function in the exhaustive sweep order: the
// index written in base size(lattice), last tuple slot varying fastest.
std::vector<Elem> table_values_from_index(int lattice_size, TupleIndex points,
                                          long long index);

}  // namespace latpoly
