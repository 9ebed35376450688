#include "latpoly/harness.hpp"

#include <algorithm>
#include <string>

#include "latpoly/errors.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace latpoly {

namespace {

constexpr std::size_t kMaxStoredDisagreements = 64;

Profile profile_for(const FnTable& f, ProfileKind kind) {
  return kind == ProfileKind::main ? theorem_profile_main(f)
                                   : theorem_profile_sugeno(f);
}

void absorb(SweepResult& agg, const FnTable& f, ProfileKind kind) {
  Profile p = profile_for(f, kind);
  ++agg.tables;
  bool all_true = true;
  bool all_false = true;
  for (int i = 0; i < 7; ++i) {
    if (p[static_cast<std::size_t>(i)]) {
      ++agg.cond_true[static_cast<std::size_t>(i)];
      all_false = false;
    } else {
      all_true = false;
    }
  }
  if (all_true) ++agg.profile_true;
  if (!all_true && !all_false) {
    ++agg.disagreement_count;
    if (agg.disagreements.size() < kMaxStoredDisagreements)
      agg.disagreements.push_back(f.values());
  }
  if (kind == ProfileKind::main && !p[2] &&
      main_condition_iii_without_convex_range(f))
    ++agg.range_separation_count;
}

void merge(SweepResult& agg, const SweepResult& part) {
  agg.tables += part.tables;
  agg.profile_true += part.profile_true;
  for (std::size_t i = 0; i < 7; ++i) agg.cond_true[i] += part.cond_true[i];
  agg.disagreement_count += part.disagreement_count;
  for (const auto& t : part.disagreements)
    if (agg.disagreements.size() < kMaxStoredDisagreements)
      agg.disagreements.push_back(t);
  agg.range_separation_count += part.range_separation_count;
}

}  // namespace

std::vector<Elem> table_values_from_index(int lattice_size, TupleIndex points,
                                          long long index) {
  std::vector<Elem> vals(points, 0);
  for (TupleIndex k = points; k-- > 0;) {
    vals[k] = static_cast<Elem>(index % lattice_size);
    index /= lattice_size;
  }
  return vals;
}

SweepResult sweep_all_tables(const LatticePtr& lattice, int arity,
                             ProfileKind kind, long long budget,
                             bool parallel) {
  const int m = lattice->size();
  const TupleIndex pts = table_points(m, arity);
  long long total = 1;
  for (TupleIndex k = 0; k < pts; ++k) {
    if (total > budget / m)
      throw BudgetError("sweeping all " + std::to_string(m) + "^" +
                        std::to_string(pts) + " tables exceeds budget " +
                        std::to_string(budget));
    total *= m;
  }

  SweepResult agg;
  if (parallel) {
#ifdef _OPENMP
    const int threads = omp_get_max_threads();
    std::vector<SweepResult> parts(static_cast<std::size_t>(threads));
#pragma omp parallel num_threads(threads)
    {
      SweepResult mine;
#pragma omp for schedule(static) nowait
      for (long long i = 0; i < total; ++i)
        absorb(mine,
               FnTable(lattice, arity, table_values_from_index(m, pts, i)),
               kind);
      parts[static_cast<std::size_t>(omp_get_thread_num())] = std::move(mine);
    }
    // static schedule hands out contiguous ascending chunks by thread id,
    // so merging in id order keeps the stored tables in sweep order
    for (const auto& part : parts) merge(agg, part);
    return agg;
#else
    parallel = false;
#endif
  }
  for (long long i = 0; i < total; ++i)
    absorb(agg, FnTable(lattice, arity, table_values_from_index(m, pts, i)),
           kind);
  return agg;
}

ExprPtr random_expr(std::mt19937_64& rng, const Lattice& lattice, int arity,
                    int max_depth) {
  if (arity < 1) throw PreconditionError("random expressions need arity >= 1");
  // modulo draws keep the stream identical across standard libraries
  const std::uint64_t kind = max_depth <= 0 ? rng() % 2 : rng() % 4;
  switch (kind) {
    case 0:
      return Expr::var(1 + static_cast<int>(rng() % arity));
    case 1:
      return Expr::constant(static_cast<Elem>(rng() % lattice.size()));
    case 2: {
      auto lhs = random_expr(rng, lattice, arity, max_depth - 1);
      auto rhs = random_expr(rng, lattice, arity, max_depth - 1);
      return Expr::meet(lhs, rhs);
    }
    default: {
      auto lhs = random_expr(rng, lattice, arity, max_depth - 1);
      auto rhs = random_expr(rng, lattice, arity, max_depth - 1);
      return Expr::join(lhs, rhs);
    }
  }
}

FnTable perturb_table(std::mt19937_64& rng, const FnTable& f) {
  const Lattice& L = f.lattice();
  if (L.size() < 2)
    throw PreconditionError("cannot perturb a table over a one-point lattice");
  std::vector<Elem> vals = f.values();
  const TupleIndex t = rng() % f.points();
  Elem nv = static_cast<Elem>(rng() % L.size());
  while (nv == vals[t]) nv = static_cast<Elem>(rng() % L.size());
  vals[t] = nv;
  return FnTable(f.lattice_ptr(), f.arity(), std::move(vals));
}

SweepResult sweep_samples(const LatticePtr& lattice, int arity,
                          ProfileKind kind, long long samples,
                          std::uint64_t seed) {
  SweepResult agg;
  agg.seed = seed;
  std::mt19937_64 rng(seed);
  for (long long s = 0; s < samples; ++s) {
    ExprPtr e = random_expr(rng, *lattice, arity);
    FnTable f = tabulate(lattice, *e, arity);
    absorb(agg, f, kind);
    absorb(agg, perturb_table(rng, f), kind);
  }
  return agg;
}

std::vector<CoeffMap> all_monotone_cube_maps(const Lattice& lattice,
                                             int arity) {
  const int slots = 1 << arity;
  std::vector<CoeffMap> out;
  CoeffMap c{arity, std::vector<Elem>(static_cast<std::size_t>(slots), 0)};
  while (true) {
    if (cube_monotone(lattice, c)) out.push_back(c);
    int j = slots - 1;
    for (; j >= 0; --j) {
      auto& v = c.values[static_cast<std::size_t>(j)];
      if (v + 1 < lattice.size()) {
        ++v;
        break;
      }
      v = 0;
    }
    if (j < 0) break;
  }
  return out;
}

std::vector<FnTable> all_polynomial_tables(const LatticePtr& lattice,
                                           int arity) {
  std::vector<FnTable> out;
  for (const auto& c : all_monotone_cube_maps(*lattice, arity))
    out.push_back(extend_from_cube(lattice, c));
  return out;
}

}  // namespace latpoly
