#pragma once

#include <span>
#include <string>
#include <vector>

#include "latpoly/expr.hpp"
#include "latpoly/fn_table.hpp"
#include "latpoly/lattice.hpp"
#include "latpoly/normal_form.hpp"
#include "latpoly/properties.hpp"

namespace latpoly {

// A capacity: monotone over subset inclusion with value bottom on the empty
// set and top on the full set. Throws ValidationError naming the violated
// condition.
void validate_measure(const Lattice& lattice, const CoeffMap& mu);

// Weighted disjunction of minima over subsets; the empty-subset term
// contributes mu({}) (its empty meet is top).
Elem sugeno_eval(const Lattice& lattice, const CoeffMap& mu,
                 std::span<const Elem> x);
FnTable tabulate_sugeno(const LatticePtr& lattice, const CoeffMap& mu);

// Idempotent polynomial function: polynomial fixing both bounds.
bool is_sugeno(const FnTable& f);

struct MeasureExtraction {
  CoeffMap mu;
  Elem lo = 0;  // value at the all-bottom tuple
  Elem hi = 0;  // value at the all-top tuple
};

// Capacity whose aggregation, clamped into [lo, hi] by a median, reproduces
// f exactly. The identity is re-checked on every extraction and a failure
// throws std::logic_error rather than returning silently.
MeasureExtraction measure_from_polynomial(const FnTable& f);

// Output is always one of the inputs — everywhere, or on 0/1 tuples only.
PropertyReport is_conservative(const FnTable& f);
PropertyReport is_weakly_conservative(const FnTable& f);

// Builds from projections alone: idempotent polynomial + weakly conservative.
bool is_term_function(const FnTable& f);

// Coefficients depend on subsets only through their size.
bool is_cardinality_based(const CoeffMap& c);

// Invariance under all argument permutations. Polynomial functions are
// decided through their cube coefficients; other tables fall back to the
// full permutation scan.
bool is_symmetric(const FnTable& f);

struct SymmetricWeights {
  std::vector<Elem> w;  // size n+1, isotone; w[k] = cube value on k-subsets
  std::vector<Elem> v;  // size n+1, antitone; v[i] = w[n-i]
};

// Requires a symmetric polynomial function.
SymmetricWeights symmetric_weights(const FnTable& f);

// k-th smallest of n inputs; k = 0 gives bottom, k = n+1 gives top.
Elem order_statistic(const Lattice& lattice, int n, int k,
                     std::span<const Elem> x);
FnTable tabulate_order_statistic(const LatticePtr& lattice, int n, int k);

// Median of an odd number of arguments (the middle order statistic).
Elem eval_median_k(const Lattice& lattice, std::span<const Elem> args);

// Weights for the layered form: f = join over k of (w[n-k] meet the
// (k+1)-th smallest input). Verifies that reconstruction, and the dual
// meet-of-joins form, reproduce the table; throws std::logic_error if not.
SymmetricWeights symmetric_os_form(const FnTable& f);

// Constants to append so that f(x) = median of (x1..xn, constants):
// all of w(0..n), or only w(1..n-1) when f fixes both bounds
// (sugeno_variant). Verified against the table.
std::vector<Elem> symmetric_median_form(const FnTable& f, bool sugeno_variant);

struct WeightVector {
  Elem w0 = 0;
  std::vector<Elem> w;  // per-coordinate weights
  bool verified = false;  // reconstruction reproduced the table
};

// Reads candidate weights off the boundary tuples (always returned, even on
// reconstruction failure, so near-misses can be inspected).
WeightVector extract_inf_weights(const FnTable& f);
WeightVector extract_sup_weights(const FnTable& f);

Elem eval_weighted_inf(const Lattice& lattice, const WeightVector& wv,
                       std::span<const Elem> x);
Elem eval_weighted_sup(const Lattice& lattice, const WeightVector& wv,
                       std::span<const Elem> x);

// Two independent decision paths — the pairwise homomorphism scan and the
// weight-reconstruction check — must agree for polynomial input; their
// disagreement throws std::logic_error.
bool is_weighted_infimum(const FnTable& f);
bool is_weighted_supremum(const FnTable& f);

// Nested-median expression (median / variable / constant nodes only) that
// re-tabulates to f, obtained by splitting variables in canonical order.
// Equal branches collapse; a bottom/top branch pair collapses to the bare
// variable.
ExprPtr median_normal_form(const FnTable& f);

}  // namespace latpoly
