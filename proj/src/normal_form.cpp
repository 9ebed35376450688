#include "latpoly/normal_form.hpp"

#include <algorithm>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace latpoly {

std::string mask_str(SubsetMask I, int arity) {
  if (I == 0) return "{}";
  std::string s = "{";
  for (int i = 0; i < arity; ++i)
    if (I & (SubsetMask{1} << i)) {
      if (s.size() > 1) s += ",";
      s += std::to_string(i + 1);
    }
  return s + "}";
}

namespace {

// Join of c over all proper subsets of I (bottom when I is empty).
Elem proper_subset_join(const Lattice& L, const CoeffMap& c, SubsetMask I) {
  Elem acc = L.bottom();
  if (I == 0) return acc;
  for (SubsetMask J = (I - 1) & I;; J = (J - 1) & I) {
    acc = L.join(acc, c.at(J));
    if (J == 0) break;
  }
  return acc;
}

Elem proper_subset_meet(const Lattice& L, const CoeffMap& c, SubsetMask I) {
  Elem acc = L.top();
  if (I == 0) return acc;
  for (SubsetMask J = (I - 1) & I;; J = (J - 1) & I) {
    acc = L.meet(acc, c.at(J));
    if (J == 0) break;
  }
  return acc;
}

}  // namespace

CoeffMap alpha(const FnTable& f) {
  CoeffMap c{f.arity(), {}};
  c.values.resize(std::size_t{1} << f.arity());
  for (SubsetMask I = 0; I < c.subsets(); ++I) c.at(I) = value_at_cube(f, I);
  return c;
}

CoeffMap beta(const FnTable& f) {
  const SubsetMask full = (SubsetMask{1} << f.arity()) - 1;
  CoeffMap c{f.arity(), {}};
  c.values.resize(std::size_t{1} << f.arity());
  for (SubsetMask I = 0; I <= full; ++I) c.at(I) = value_at_cube(f, full & ~I);
  return c;
}

bool cube_monotone(const Lattice& lattice, const CoeffMap& c, SubsetMask* bad_lo,
                   SubsetMask* bad_hi) {
  for (SubsetMask I = 0; I < c.subsets(); ++I)
    for (int i = 0; i < c.arity; ++i) {
      const SubsetMask bit = SubsetMask{1} << i;
      if (I & bit) continue;
      if (!lattice.leq(c.at(I), c.at(I | bit))) {
        if (bad_lo) *bad_lo = I;
        if (bad_hi) *bad_hi = I | bit;
        return false;
      }
    }
  return true;
}

CoeffMap alpha_star(const FnTable& f) {
  const Lattice& L = f.lattice();
  CoeffMap a = alpha(f);
  SubsetMask lo, hi;
  if (!cube_monotone(L, a, &lo, &hi))
    throw PreconditionError(
        "alpha_star requires a function that is nondecreasing on the 0/1 cube; " +
        mask_str(lo, a.arity) + " -> " + mask_str(hi, a.arity) + " violates it");
  CoeffMap out = a;
  for (SubsetMask I = 0; I < a.subsets(); ++I) {
    const Elem below = proper_subset_join(L, a, I);
    out.at(I) = L.lt(below, a.at(I)) ? a.at(I) : L.bottom();
  }
  return out;
}

CoeffMap beta_star(const FnTable& f) {
  const Lattice& L = f.lattice();
  CoeffMap b = beta(f);
  // beta of a cube-monotone function is antitone; reuse the alpha check on it.
  CoeffMap a = alpha(f);
  SubsetMask lo, hi;
  if (!cube_monotone(L, a, &lo, &hi))
    throw PreconditionError(
        "beta_star requires a function that is nondecreasing on the 0/1 cube; " +
        mask_str(lo, a.arity) + " -> " + mask_str(hi, a.arity) + " violates it");
  CoeffMap out = b;
  for (SubsetMask I = 0; I < b.subsets(); ++I) {
    const Elem above = proper_subset_meet(L, b, I);
    out.at(I) = L.lt(b.at(I), above) ? b.at(I) : L.top();
  }
  return out;
}

Elem eval_dnf(const Lattice& lattice, const CoeffMap& c, std::span<const Elem> x) {
  Elem acc = lattice.bottom();
  for (SubsetMask I = 0; I < c.subsets(); ++I) {
    Elem term = c.at(I);
    for (int i = 0; i < c.arity && term != lattice.bottom(); ++i)
      if (I & (SubsetMask{1} << i))
        term = lattice.meet(term, x[static_cast<std::size_t>(i)]);
    acc = lattice.join(acc, term);
  }
  return acc;
}

Elem eval_cnf(const Lattice& lattice, const CoeffMap& c, std::span<const Elem> x) {
  Elem acc = lattice.top();
  for (SubsetMask I = 0; I < c.subsets(); ++I) {
    Elem term = c.at(I);
    for (int i = 0; i < c.arity && term != lattice.top(); ++i)
      if (I & (SubsetMask{1} << i))
        term = lattice.join(term, x[static_cast<std::size_t>(i)]);
    acc = lattice.meet(acc, term);
  }
  return acc;
}

namespace {

template <typename Eval>
FnTable tabulate_form(const LatticePtr& lattice, const CoeffMap& c, std::size_t budget,
                      Eval&& eval) {
  const std::size_t n = table_points(lattice->size(), c.arity, budget);
  std::vector<Elem> vals(n);
  std::vector<Elem> x(static_cast<std::size_t>(c.arity), 0);
  std::size_t t = 0;
  do {
    vals[t++] = eval(*lattice, c, x);
  } while (next_tuple(lattice->size(), x));
  return FnTable(lattice, c.arity, std::move(vals));
}

}  // namespace

FnTable tabulate_dnf(const LatticePtr& lattice, const CoeffMap& c, std::size_t budget) {
  return tabulate_form(lattice, c, budget,
                       [](const Lattice& L, const CoeffMap& m, std::span<const Elem> x) {
                         return eval_dnf(L, m, x);
                       });
}

FnTable tabulate_cnf(const LatticePtr& lattice, const CoeffMap& c, std::size_t budget) {
  return tabulate_form(lattice, c, budget,
                       [](const Lattice& L, const CoeffMap& m, std::span<const Elem> x) {
                         return eval_cnf(L, m, x);
                       });
}

bool in_dnf_set(const FnTable& f, const CoeffMap& c) {
  if (!is_polynomial(f))
    throw PreconditionError("in_dnf_set requires a polynomial function");
  if (c.arity != f.arity())
    throw PreconditionError("coefficient map arity does not match function arity");
  const Lattice& L = f.lattice();
  const CoeffMap af = alpha(f);
  for (SubsetMask I = 0; I < c.subsets(); ++I)
    if (!L.leq(c.at(I), af.at(I))) return false;
  for (SubsetMask I = 0; I < c.subsets(); ++I) {
    const Elem below = proper_subset_join(L, af, I);
    if (!L.lt(below, af.at(I))) continue;
    Elem total = c.at(I);
    if (I != 0)
      for (SubsetMask J = (I - 1) & I;; J = (J - 1) & I) {
        total = L.join(total, c.at(J));
        if (J == 0) break;
      }
    if (total != af.at(I)) return false;
  }
  return true;
}

bool in_cnf_set(const FnTable& f, const CoeffMap& c) {
  if (!is_polynomial(f))
    throw PreconditionError("in_cnf_set requires a polynomial function");
  if (c.arity != f.arity())
    throw PreconditionError("coefficient map arity does not match function arity");
  const Lattice& L = f.lattice();
  const CoeffMap bf = beta(f);
  for (SubsetMask I = 0; I < c.subsets(); ++I)
    if (!L.leq(bf.at(I), c.at(I))) return false;
  for (SubsetMask I = 0; I < c.subsets(); ++I) {
    const Elem above = proper_subset_meet(L, bf, I);
    if (!L.lt(bf.at(I), above)) continue;
    Elem total = c.at(I);
    if (I != 0)
      for (SubsetMask J = (I - 1) & I;; J = (J - 1) & I) {
        total = L.meet(total, c.at(J));
        if (J == 0) break;
      }
    if (total != bf.at(I)) return false;
  }
  return true;
}

namespace {

// Candidate maps are numbered so that ascending index is ascending lexicographic
// order of (c({}), c({1}), c({2}), c({1,2}), ...): the empty-set coefficient is
// the most significant digit.
CoeffMap nth_coeff_map(int lattice_size, int arity, std::uint64_t index) {
  const int slots = 1 << arity;
  CoeffMap c{arity, std::vector<Elem>(static_cast<std::size_t>(slots))};
  for (int j = slots - 1; j >= 0; --j) {
    c.values[static_cast<std::size_t>(j)] =
        static_cast<Elem>(index % static_cast<std::uint64_t>(lattice_size));
    index /= static_cast<std::uint64_t>(lattice_size);
  }
  return c;
}

template <typename Eval>
std::vector<CoeffMap> enumerate_impl(const FnTable& f, std::size_t budget,
                                     bool parallel, Eval&& eval) {
  const Lattice& L = f.lattice();
  const int slots = 1 << f.arity();
  auto total = checked_pow(static_cast<std::uint64_t>(L.size()),
                           static_cast<unsigned>(slots), budget);
  if (!total)
    throw BudgetError("enumerating " + std::to_string(L.size()) + "^" +
                      std::to_string(slots) + " coefficient maps exceeds budget " +
                      std::to_string(budget));
  const std::int64_t n = static_cast<std::int64_t>(*total);

  auto matches = [&](std::uint64_t index) {
    const CoeffMap c = nth_coeff_map(L.size(), f.arity(), index);
    std::vector<Elem> x(static_cast<std::size_t>(f.arity()), 0);
    TupleIndex t = 0;
    do {
      if (eval(L, c, x) != f.value_at(t)) return false;
      ++t;
    } while (next_tuple(L.size(), x));
    return true;
  };

  std::vector<std::uint64_t> hits;
  if (parallel) {
#ifdef _OPENMP
#pragma omp parallel
    {
      std::vector<std::uint64_t> mine;
#pragma omp for schedule(static) nowait
      for (std::int64_t i = 0; i < n; ++i)
        if (matches(static_cast<std::uint64_t>(i)))
          mine.push_back(static_cast<std::uint64_t>(i));
#pragma omp critical
      hits.insert(hits.end(), mine.begin(), mine.end());
    }
    std::sort(hits.begin(), hits.end());
#else
    parallel = false;
#endif
  }
  if (!parallel) {
    for (std::int64_t i = 0; i < n; ++i)
      if (matches(static_cast<std::uint64_t>(i)))
        hits.push_back(static_cast<std::uint64_t>(i));
  }

  std::vector<CoeffMap> out;
  out.reserve(hits.size());
  for (std::uint64_t i : hits) out.push_back(nth_coeff_map(L.size(), f.arity(), i));
  return out;
}

}  // namespace

std::vector<CoeffMap> enumerate_dnf_set(const FnTable& f, std::size_t budget,
                                        bool parallel) {
  return enumerate_impl(f, budget, parallel,
                        [](const Lattice& L, const CoeffMap& c, std::span<const Elem> x) {
                          return eval_dnf(L, c, x);
                        });
}

std::vector<CoeffMap> enumerate_cnf_set(const FnTable& f, std::size_t budget,
                                        bool parallel) {
  return enumerate_impl(f, budget, parallel,
                        [](const Lattice& L, const CoeffMap& c, std::span<const Elem> x) {
                          return eval_cnf(L, c, x);
                        });
}

bool unique_dnf(const FnTable& f) {
  if (!is_polynomial(f))
    throw PreconditionError("unique_dnf requires a polynomial function");
  const Lattice& L = f.lattice();
  const CoeffMap af = alpha(f);
  for (SubsetMask I = 0; I < af.subsets(); ++I) {
    // A bottom coefficient forces every representation to bottom there.
    if (af.at(I) == L.bottom()) continue;
    const Elem below = proper_subset_join(L, af, I);
    if (!L.lt(below, af.at(I))) return false;
    for (Elem b = 0; b < L.size(); ++b)
      if (b != af.at(I) && L.join(b, below) == af.at(I)) return false;
  }
  return true;
}

bool unique_cnf(const FnTable& f) {
  if (!is_polynomial(f))
    throw PreconditionError("unique_cnf requires a polynomial function");
  const Lattice& L = f.lattice();
  const CoeffMap bf = beta(f);
  for (SubsetMask I = 0; I < bf.subsets(); ++I) {
    if (bf.at(I) == L.top()) continue;
    const Elem above = proper_subset_meet(L, bf, I);
    if (!L.lt(bf.at(I), above)) return false;
    for (Elem b = 0; b < L.size(); ++b)
      if (b != bf.at(I) && L.meet(b, above) == bf.at(I)) return false;
  }
  return true;
}

FnTable extend_from_cube(const LatticePtr& lattice, const CoeffMap& g,
                         std::size_t budget) {
  SubsetMask lo, hi;
  if (!cube_monotone(*lattice, g, &lo, &hi))
    throw ValidationError("cube map is not nondecreasing: value at " +
                          mask_str(lo, g.arity) + " is not below value at " +
                          mask_str(hi, g.arity));
  return tabulate_dnf(lattice, g, budget);
}

PolyCheck check_polynomial(const FnTable& f) {
  const Lattice& L = f.lattice();
  PolyCheck r;
  const CoeffMap af = alpha(f);
  SubsetMask lo, hi;
  if (!cube_monotone(L, af, &lo, &hi)) {
    r.ok = false;
    r.why = PolyCheck::Fail::cube_not_monotone;
    r.bad_lo = lo;
    r.bad_hi = hi;
    return r;
  }
  std::vector<Elem> x(static_cast<std::size_t>(f.arity()), 0);
  TupleIndex t = 0;
  do {
    if (eval_dnf(L, af, x) != f.value_at(t)) {
      r.ok = false;
      r.why = PolyCheck::Fail::table_mismatch;
      r.bad_point = t;
      return r;
    }
    ++t;
  } while (next_tuple(L.size(), x));
  return r;
}

bool is_polynomial(const FnTable& f) { return check_polynomial(f).ok; }

}  // namespace latpoly
