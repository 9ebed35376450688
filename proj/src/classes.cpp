#include "latpoly/classes.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>

#include "latpoly/errors.hpp"

namespace latpoly {

namespace {

std::string tuple_str(const Lattice& L, const std::vector<Elem>& x) {
  std::string out = "(";
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (i) out += ", ";
    out += L.element_name(x[i]);
  }
  return out + ")";
}

int popcount_mask(SubsetMask I) { return std::popcount(I); }

}  // namespace

void validate_measure(const Lattice& L, const CoeffMap& mu) {
  const SubsetMask full = mu.subsets() - 1;
  if (mu.at(0) != L.bottom())
    throw ValidationError("measure value on the empty set must be " +
                          L.element_name(L.bottom()) + ", got " +
                          L.element_name(mu.at(0)));
  if (mu.at(full) != L.top())
    throw ValidationError("measure value on the full set must be " +
                          L.element_name(L.top()) + ", got " +
                          L.element_name(mu.at(full)));
  SubsetMask lo = 0, hi = 0;
  if (!cube_monotone(L, mu, &lo, &hi))
    throw ValidationError("measure is not monotone: value at " +
                          mask_str(lo, mu.arity) + " is not below value at " +
                          mask_str(hi, mu.arity));
}

Elem sugeno_eval(const Lattice& L, const CoeffMap& mu,
                 std::span<const Elem> x) {
  return eval_dnf(L, mu, x);
}

FnTable tabulate_sugeno(const LatticePtr& lattice, const CoeffMap& mu) {
  validate_measure(*lattice, mu);
  return tabulate_dnf(lattice, mu);
}

bool is_sugeno(const FnTable& f) {
  const Lattice& L = f.lattice();
  return value_at_cube(f, 0) == L.bottom() &&
         value_at_cube(f, (SubsetMask{1} << f.arity()) - 1) == L.top() &&
         is_polynomial(f);
}

MeasureExtraction measure_from_polynomial(const FnTable& f) {
  if (!is_polynomial(f))
    throw PreconditionError(
        "measure extraction requires a polynomial function");
  const Lattice& L = f.lattice();
  const LatticePtr& Lp = f.lattice_ptr();
  CoeffMap a = alpha(f);
  const SubsetMask full = a.subsets() - 1;
  MeasureExtraction out;
  out.mu = a;
  out.mu.at(0) = L.bottom();
  out.mu.at(full) = L.top();
  out.lo = a.at(0);
  out.hi = a.at(full);
  validate_measure(L, out.mu);
  // The clamped aggregation must reproduce f everywhere; anything else is an
  // internal bug and must not pass silently.
  FnTable s = tabulate_dnf(Lp, out.mu);
  for (TupleIndex t = 0; t < f.points(); ++t) {
    if (L.median(out.lo, s.value_at(t), out.hi) != f.value_at(t))
      throw std::logic_error(
          "measure extraction failed its reconstruction identity at tuple " +
          tuple_str(L, decode_tuple(L.size(), f.arity(), t)));
  }
  return out;
}

PropertyReport is_conservative(const FnTable& f) {
  const char* name = "conservative";
  const Lattice& L = f.lattice();
  std::vector<Elem> x(static_cast<std::size_t>(f.arity()), 0);
  do {
    Elem v = f(x);
    if (std::find(x.begin(), x.end(), v) == x.end()) {
      Witness w;
      w.x = x;
      w.note = "f" + tuple_str(L, x) + " = " + L.element_name(v) +
               " is not among the arguments";
      return {name, false, std::move(w)};
    }
  } while (next_tuple(L.size(), x));
  return {name, true, std::nullopt};
}

PropertyReport is_weakly_conservative(const FnTable& f) {
  const char* name = "weakly-conservative";
  const Lattice& L = f.lattice();
  for (SubsetMask I = 0; I < (SubsetMask{1} << f.arity()); ++I) {
    std::vector<Elem> x(static_cast<std::size_t>(f.arity()));
    for (int i = 0; i < f.arity(); ++i)
      x[static_cast<std::size_t>(i)] =
          (I & (SubsetMask{1} << i)) ? L.top() : L.bottom();
    Elem v = f(x);
    if (std::find(x.begin(), x.end(), v) == x.end()) {
      Witness w;
      w.x = x;
      w.note = "f" + tuple_str(L, x) + " = " + L.element_name(v) +
               " is not among the arguments";
      return {name, false, std::move(w)};
    }
  }
  return {name, true, std::nullopt};
}

bool is_term_function(const FnTable& f) {
  return is_sugeno(f) && is_weakly_conservative(f).holds;
}

bool is_cardinality_based(const CoeffMap& c) {
  std::vector<Elem> seen(static_cast<std::size_t>(c.arity) + 1, -1);
  for (SubsetMask I = 0; I < c.subsets(); ++I) {
    auto k = static_cast<std::size_t>(popcount_mask(I));
    if (seen[k] == -1)
      seen[k] = c.at(I);
    else if (seen[k] != c.at(I))
      return false;
  }
  return true;
}

bool is_symmetric(const FnTable& f) {
  if (is_polynomial(f)) return is_cardinality_based(alpha(f));
  const Lattice& L = f.lattice();
  std::vector<int> perm(static_cast<std::size_t>(f.arity()));
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<Elem> x(static_cast<std::size_t>(f.arity()), 0);
  std::vector<Elem> px(x.size());
  while (std::next_permutation(perm.begin(), perm.end())) {
    std::fill(x.begin(), x.end(), 0);
    do {
      for (std::size_t i = 0; i < x.size(); ++i)
        px[i] = x[static_cast<std::size_t>(perm[i])];
      if (f(x) != f(px)) return false;
    } while (next_tuple(L.size(), x));
  }
  return true;
}

SymmetricWeights symmetric_weights(const FnTable& f) {
  if (!is_polynomial(f) || !is_symmetric(f))
    throw PreconditionError(
        "symmetric weights require a symmetric polynomial function");
  const int n = f.arity();
  SymmetricWeights out;
  out.w.resize(static_cast<std::size_t>(n) + 1);
  out.v.resize(static_cast<std::size_t>(n) + 1);
  for (int k = 0; k <= n; ++k) {
    SubsetMask low_k = (SubsetMask{1} << k) - 1;  // the k lowest slots
    out.w[static_cast<std::size_t>(k)] = value_at_cube(f, low_k);
    SubsetMask complement = ((SubsetMask{1} << n) - 1) & ~low_k;
    out.v[static_cast<std::size_t>(k)] = value_at_cube(f, complement);
  }
  const Lattice& L = f.lattice();
  for (int k = 0; k < n; ++k) {
    if (!L.leq(out.w[static_cast<std::size_t>(k)],
               out.w[static_cast<std::size_t>(k) + 1]) ||
        !L.leq(out.v[static_cast<std::size_t>(k) + 1],
               out.v[static_cast<std::size_t>(k)]))
      throw std::logic_error("symmetric weights lost their monotonicity");
  }
  for (int i = 0; i <= n; ++i)
    if (out.v[static_cast<std::size_t>(i)] !=
        out.w[static_cast<std::size_t>(n - i)])
      throw std::logic_error(
          "symmetric weight vectors are not mirror images");
  return out;
}

Elem order_statistic(const Lattice& L, int n, int k, std::span<const Elem> x) {
  if (k < 0 || k > n + 1)
    throw PreconditionError("order statistic index " + std::to_string(k) +
                            " out of range 0.." + std::to_string(n + 1));
  if (static_cast<int>(x.size()) != n)
    throw PreconditionError("order statistic expects " + std::to_string(n) +
                            " arguments");
  if (k == 0) return L.bottom();
  if (k == n + 1) return L.top();
  const int take = n - k + 1;  // meet over every subset of this size
  Elem acc = L.bottom();
  for (SubsetMask I = 0; I < (SubsetMask{1} << n); ++I) {
    if (popcount_mask(I) != take) continue;
    Elem term = L.top();
    for (int i = 0; i < n; ++i)
      if (I & (SubsetMask{1} << i)) term = L.meet(term, x[static_cast<std::size_t>(i)]);
    acc = L.join(acc, term);
  }
  return acc;
}

FnTable tabulate_order_statistic(const LatticePtr& lattice, int n, int k) {
  const Lattice& L = *lattice;
  std::vector<Elem> vals(table_points(L.size(), n));
  std::vector<Elem> x(static_cast<std::size_t>(n), 0);
  TupleIndex t = 0;
  do {
    vals[t++] = order_statistic(L, n, k, x);
  } while (next_tuple(L.size(), x));
  return FnTable(lattice, n, std::move(vals),
                 "os" + std::to_string(k));
}

Elem eval_median_k(const Lattice& L, std::span<const Elem> args) {
  if (args.size() % 2 == 0)
    throw PreconditionError("median needs an odd number of arguments, got " +
                            std::to_string(args.size()));
  const int n = static_cast<int>(args.size());
  return order_statistic(L, n, (n + 1) / 2, args);
}

SymmetricWeights symmetric_os_form(const FnTable& f) {
  SymmetricWeights weights = symmetric_weights(f);
  const Lattice& L = f.lattice();
  const int n = f.arity();
  std::vector<Elem> x(static_cast<std::size_t>(n), 0);
  do {
    Elem joined = L.bottom();
    Elem met = L.top();
    for (int k = 0; k <= n; ++k) {
      joined = L.join(joined,
                      L.meet(weights.w[static_cast<std::size_t>(n - k)],
                             order_statistic(L, n, k + 1, x)));
      met = L.meet(met, L.join(weights.v[static_cast<std::size_t>(k)],
                               order_statistic(L, n, k, x)));
    }
    if (joined != f(x) || met != f(x))
      throw std::logic_error(
          "layered reconstruction failed at " + tuple_str(L, x));
  } while (next_tuple(L.size(), x));
  return weights;
}

std::vector<Elem> symmetric_median_form(const FnTable& f, bool sugeno_variant) {
  SymmetricWeights weights = symmetric_weights(f);
  const Lattice& L = f.lattice();
  const int n = f.arity();
  std::vector<Elem> constants;
  if (sugeno_variant) {
    if (!is_sugeno(f))
      throw PreconditionError(
          "the short median form requires both bounds to be fixed");
    for (int k = 1; k <= n - 1; ++k)
      constants.push_back(weights.w[static_cast<std::size_t>(k)]);
  } else {
    constants = weights.w;
  }
  std::vector<Elem> x(static_cast<std::size_t>(n), 0);
  std::vector<Elem> args;
  do {
    args.assign(x.begin(), x.end());
    args.insert(args.end(), constants.begin(), constants.end());
    if (eval_median_k(L, args) != f(x))
      throw std::logic_error("median reconstruction failed at " +
                             tuple_str(L, x));
  } while (next_tuple(L.size(), x));
  return constants;
}

WeightVector extract_inf_weights(const FnTable& f) {
  if (!is_polynomial(f))
    throw PreconditionError("weight extraction requires a polynomial function");
  const Lattice& L = f.lattice();
  const int n = f.arity();
  WeightVector out;
  const SubsetMask full = (SubsetMask{1} << n) - 1;
  out.w0 = value_at_cube(f, full);
  for (int i = 0; i < n; ++i)
    out.w.push_back(value_at_cube(f, full & ~(SubsetMask{1} << i)));
  std::vector<Elem> x(static_cast<std::size_t>(n), 0);
  out.verified = true;
  do {
    if (eval_weighted_inf(L, out, x) != f(x)) {
      out.verified = false;
      break;
    }
  } while (next_tuple(L.size(), x));
  return out;
}

WeightVector extract_sup_weights(const FnTable& f) {
  if (!is_polynomial(f))
    throw PreconditionError("weight extraction requires a polynomial function");
  const Lattice& L = f.lattice();
  const int n = f.arity();
  WeightVector out;
  out.w0 = value_at_cube(f, 0);
  for (int i = 0; i < n; ++i)
    out.w.push_back(value_at_cube(f, SubsetMask{1} << i));
  std::vector<Elem> x(static_cast<std::size_t>(n), 0);
  out.verified = true;
  do {
    if (eval_weighted_sup(L, out, x) != f(x)) {
      out.verified = false;
      break;
    }
  } while (next_tuple(L.size(), x));
  return out;
}

Elem eval_weighted_inf(const Lattice& L, const WeightVector& wv,
                       std::span<const Elem> x) {
  Elem acc = wv.w0;
  for (std::size_t i = 0; i < wv.w.size(); ++i)
    acc = L.meet(acc, L.join(wv.w[i], x[i]));
  return acc;
}

Elem eval_weighted_sup(const Lattice& L, const WeightVector& wv,
                       std::span<const Elem> x) {
  Elem acc = wv.w0;
  for (std::size_t i = 0; i < wv.w.size(); ++i)
    acc = L.join(acc, L.meet(wv.w[i], x[i]));
  return acc;
}

bool is_weighted_infimum(const FnTable& f) {
  if (!is_polynomial(f))
    throw PreconditionError(
        "the weighted-form test requires a polynomial function");
  bool by_homomorphism = global_meet_homomorphism(f).holds;
  bool by_weights = extract_inf_weights(f).verified;
  if (by_homomorphism != by_weights)
    throw std::logic_error(
        "the homomorphism scan and the weight reconstruction disagree");
  return by_weights;
}

bool is_weighted_supremum(const FnTable& f) {
  if (!is_polynomial(f))
    throw PreconditionError(
        "the weighted-form test requires a polynomial function");
  bool by_homomorphism = global_join_homomorphism(f).holds;
  bool by_weights = extract_sup_weights(f).verified;
  if (by_homomorphism != by_weights)
    throw std::logic_error(
        "the homomorphism scan and the weight reconstruction disagree");
  return by_weights;
}

namespace {

// Splits off one variable at a time in canonical order. vals holds the
// residual table over the remaining variables, first of them fastest.
ExprPtr median_split(const Lattice& L, const std::vector<Elem>& vals,
                     int first_var, int vars_left) {
  if (vars_left == 0) return Expr::constant(vals[0]);
  const auto m = static_cast<std::size_t>(L.size());
  const std::size_t rest = vals.size() / m;
  std::vector<Elem> lo(rest), hi(rest);
  for (std::size_t t = 0; t < rest; ++t) {
    lo[t] = vals[static_cast<std::size_t>(L.bottom()) + m * t];
    hi[t] = vals[static_cast<std::size_t>(L.top()) + m * t];
  }
  if (lo == hi) return median_split(L, lo, first_var + 1, vars_left - 1);
  bool lo_bot = std::all_of(lo.begin(), lo.end(),
                            [&](Elem e) { return e == L.bottom(); });
  bool hi_top = std::all_of(hi.begin(), hi.end(),
                            [&](Elem e) { return e == L.top(); });
  if (lo_bot && hi_top) return Expr::var(first_var);
  return Expr::med(median_split(L, lo, first_var + 1, vars_left - 1),
                   Expr::var(first_var),
                   median_split(L, hi, first_var + 1, vars_left - 1));
}

}  // namespace

ExprPtr median_normal_form(const FnTable& f) {
  if (!is_polynomial(f))
    throw PreconditionError(
        "the median normal form requires a polynomial function");
  return median_split(f.lattice(), f.values(), 1, f.arity());
}

}  // namespace latpoly
