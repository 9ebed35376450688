// Acceptance gate: one pass/fail line per criterion, nonzero exit on failure.
// Each body throws with a description at the first violated requirement.
#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "latpoly/classes.hpp"
#include "latpoly/gallery.hpp"
#include "latpoly/harness.hpp"
#include "latpoly/properties.hpp"

using namespace latpoly;

namespace {

struct Failure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void require(bool ok, const std::string& what) {
  if (!ok) throw Failure(what);
}

FnTable from_expr(const LatticePtr& L, const char* text, int arity) {
  return tabulate(L, *parse_expr(text, *L, arity), arity);
}

std::vector<CoeffMap> all_coeff_maps(const Lattice& L, int arity) {
  const int slots = 1 << arity;
  std::vector<CoeffMap> out;
  CoeffMap c{arity, std::vector<Elem>(static_cast<std::size_t>(slots), 0)};
  while (true) {
    out.push_back(c);
    int j = slots - 1;
    for (; j >= 0; --j) {
      auto& v = c.values[static_cast<std::size_t>(j)];
      if (v + 1 < L.size()) {
        ++v;
        break;
      }
      v = 0;
    }
    if (j < 0) break;
  }
  return out;
}

LatticePtr chain3() { return make_chain({"0", "a", "1"}); }

// ---- criterion 1: normal forms of seeded random expressions round-trip ----
void criterion_round_trip() {
  const std::vector<LatticePtr> lattices = {
      make_chain(2), chain3(), make_chain(4), make_diamond(),
      make_product(chain3(), make_chain(2))};
  std::uint64_t seed = 1000;
  for (const auto& L : lattices) {
    std::mt19937_64 rng(seed++);
    for (int i = 0; i < 500; ++i) {
      const int arity = 1 + static_cast<int>(rng() % 3);
      FnTable f = tabulate(L, *random_expr(rng, *L, arity), arity);
      const CoeffMap a = alpha(f), b = beta(f);
      const CoeffMap as = alpha_star(f), bs = beta_star(f);
      for (TupleIndex t = 0; t < f.points(); ++t) {
        auto x = decode_tuple(L->size(), arity, t);
        const Elem y = f.value_at(t);
        require(eval_dnf(*L, a, x) == y, "join-of-meets form diverged on " + L->name());
        require(eval_cnf(*L, b, x) == y, "meet-of-joins form diverged on " + L->name());
        require(eval_dnf(*L, as, x) == y, "pruned join form diverged on " + L->name());
        require(eval_cnf(*L, bs, x) == y, "pruned meet form diverged on " + L->name());
      }
    }
  }
}

// ---- criterion 2: enumerated representation sets == membership-filtered ----
void criterion_representation_sets() {
  for (const auto& [L, n] : {std::pair{make_chain(2), 2}, std::pair{chain3(), 1}}) {
    const auto candidates = all_coeff_maps(*L, n);
    for (const auto& f : all_polynomial_tables(L, n)) {
      std::vector<CoeffMap> dnf_members, cnf_members;
      for (const auto& c : candidates) {
        if (in_dnf_set(f, c)) dnf_members.push_back(c);
        if (in_cnf_set(f, c)) cnf_members.push_back(c);
      }
      require(enumerate_dnf_set(f) == dnf_members,
              "join-form set mismatch on " + L->name());
      require(enumerate_cnf_set(f) == cnf_members,
              "meet-form set mismatch on " + L->name());
    }
  }
}

// ---- criterion 3: uniqueness verdicts match representation counts ----
void criterion_uniqueness() {
  for (const auto& [L, n] :
       {std::pair{make_chain(2), 1}, std::pair{make_chain(2), 2},
        std::pair{chain3(), 1}, std::pair{make_diamond(), 1}}) {
    for (const auto& f : all_polynomial_tables(L, n)) {
      require(unique_dnf(f) == (enumerate_dnf_set(f).size() == 1),
              "join-form uniqueness verdict mismatch on " + L->name());
      require(unique_cnf(f) == (enumerate_cnf_set(f).size() == 1),
              "meet-form uniqueness verdict mismatch on " + L->name());
    }
  }
  auto D = make_diamond();
  FnTable g = from_expr(D, "(join (meet (join c:a c:b) x1) c:a)", 1);
  require(!unique_dnf(g), "the two-coefficient diamond example must be non-unique");
}

const std::vector<std::pair<LatticePtr, int>>& profile_universes() {
  static const std::vector<std::pair<LatticePtr, int>> u = {
      {make_chain(2), 1}, {make_chain(2), 2}, {make_chain(2), 3},
      {chain3(), 1},      {chain3(), 2},      {make_diamond(), 1}};
  return u;
}

// ---- criterion 4: the seven-way polynomial profile never disagrees ----
void criterion_profile_main() {
  for (const auto& [L, n] : profile_universes()) {
    auto r = sweep_all_tables(L, n, ProfileKind::main);
    require(r.disagreement_count == 0,
            "profile disagreement on " + L->name() + " arity " + std::to_string(n));
  }
}

// ---- criterion 5: idempotent profile + independent boundary count ----
void criterion_profile_sugeno() {
  for (const auto& [L, n] : profile_universes()) {
    auto r = sweep_all_tables(L, n, ProfileKind::sugeno);
    require(r.disagreement_count == 0,
            "idempotent profile disagreement on " + L->name() + " arity " +
                std::to_string(n));
    const TupleIndex pts = table_points(L->size(), n);
    const SubsetMask full = (SubsetMask{1} << n) - 1;
    long long direct = 0;
    for (long long i = 0; i < r.tables; ++i) {
      FnTable f(L, n, table_values_from_index(L->size(), pts, i));
      if (check_polynomial(f).ok && value_at_cube(f, 0) == L->bottom() &&
          value_at_cube(f, full) == L->top())
        ++direct;
    }
    require(direct == r.profile_true,
            "idempotent polynomial count mismatch on " + L->name() + " arity " +
                std::to_string(n));
  }
}

// ---- criterion 6: measure extraction identity for every polynomial ----
void criterion_measure_identity() {
  for (const auto& [L, n] : profile_universes())
    for (const auto& f : all_polynomial_tables(L, n))
      measure_from_polynomial(f);  // throws if the clamp identity fails
}

// ---- criterion 7: symmetry conditions, layered forms, order statistics ----
void criterion_symmetric() {
  for (const auto& [L, n] : {std::pair{chain3(), 2}, std::pair{make_chain(2), 3}}) {
    std::vector<FnTable> symmetric_terms;
    for (const auto& f : all_polynomial_tables(L, n)) {
      // (a) direct permutation invariance
      std::vector<int> perm(static_cast<std::size_t>(n));
      std::iota(perm.begin(), perm.end(), 0);
      bool by_perm = true;
      while (by_perm && std::next_permutation(perm.begin(), perm.end())) {
        for (TupleIndex t = 0; t < f.points() && by_perm; ++t) {
          auto x = decode_tuple(L->size(), n, t);
          std::vector<Elem> px(x.size());
          for (int i = 0; i < n; ++i)
            px[static_cast<std::size_t>(i)] = x[static_cast<std::size_t>(perm[i])];
          if (f(px) != f.value_at(t)) by_perm = false;
        }
      }
      std::iota(perm.begin(), perm.end(), 0);
      // (b, d) cardinality-based coefficient maps
      const bool by_alpha = is_cardinality_based(alpha(f));
      const bool by_beta = is_cardinality_based(beta(f));
      // (c) isotone diagonal weights rebuilding f through ascending layers
      std::vector<Elem> w(static_cast<std::size_t>(n) + 1);
      std::vector<Elem> v(static_cast<std::size_t>(n) + 1);
      const SubsetMask full = (SubsetMask{1} << n) - 1;
      for (int k = 0; k <= n; ++k) {
        const SubsetMask low = (SubsetMask{1} << k) - 1;
        w[static_cast<std::size_t>(k)] = value_at_cube(f, low);
        v[static_cast<std::size_t>(k)] = value_at_cube(f, full & ~low);
      }
      bool w_isotone = true, v_antitone = true;
      for (int k = 0; k < n; ++k) {
        if (!L->leq(w[static_cast<std::size_t>(k)], w[static_cast<std::size_t>(k) + 1]))
          w_isotone = false;
        if (!L->leq(v[static_cast<std::size_t>(k) + 1], v[static_cast<std::size_t>(k)]))
          v_antitone = false;
      }
      bool w_rebuilds = w_isotone, v_rebuilds = v_antitone;
      for (TupleIndex t = 0; t < f.points() && (w_rebuilds || v_rebuilds); ++t) {
        auto x = decode_tuple(L->size(), n, t);
        Elem up = L->bottom(), down = L->top();
        for (int k = 0; k <= n; ++k) {
          up = L->join(up, L->meet(w[static_cast<std::size_t>(n - k)],
                                   order_statistic(*L, n, k + 1, x)));
          down = L->meet(down, L->join(v[static_cast<std::size_t>(k)],
                                       order_statistic(*L, n, k, x)));
        }
        if (up != f.value_at(t)) w_rebuilds = false;
        if (down != f.value_at(t)) v_rebuilds = false;
      }
      require(by_perm == by_alpha && by_alpha == w_rebuilds &&
                  w_rebuilds == by_beta && by_beta == v_rebuilds,
              "the five symmetry conditions disagree on " + L->name());

      if (by_perm) {
        auto os_form = symmetric_os_form(f);  // verifies both reconstructions
        require(os_form.w == w, "layered weights differ from the diagonal");
        auto constants = symmetric_median_form(f, false);
        for (TupleIndex t = 0; t < f.points(); ++t) {
          auto args = decode_tuple(L->size(), n, t);
          args.insert(args.end(), constants.begin(), constants.end());
          require(eval_median_k(*L, args) == f.value_at(t),
                  "wide median form diverges on " + L->name());
        }
        if (is_term_function(f)) symmetric_terms.push_back(f);
      }
    }
    // symmetric terms are exactly the order statistics
    std::set<std::vector<Elem>> got, want;
    for (const auto& f : symmetric_terms) got.insert(f.values());
    for (int k = 1; k <= n; ++k)
      want.insert(tabulate_order_statistic(L, n, k).values());
    require(got == want,
            "symmetric terms differ from the order statistics on " + L->name());
  }
}

// ---- criterion 8: weighted-form decision paths agree everywhere ----
void criterion_weighted() {
  for (const auto& [L, n] : {std::pair{chain3(), 2}, std::pair{make_diamond(), 2}}) {
    for (const auto& f : all_polynomial_tables(L, n)) {
      const bool inf_scan = global_meet_homomorphism(f).holds;
      const auto iw = extract_inf_weights(f);
      require(inf_scan == iw.verified,
              "infimum decision paths disagree on " + L->name());
      const bool sup_scan = global_join_homomorphism(f).holds;
      const auto sw = extract_sup_weights(f);
      require(sup_scan == sw.verified,
              "supremum decision paths disagree on " + L->name());

      if (iw.verified) {
        Elem wm = L->top();
        for (Elem wi : iw.w) wm = L->meet(wm, wi);
        const bool profile = iw.w0 == L->top() && wm == L->bottom();
        require(profile == is_sugeno(f),
                "idempotent infimum weight profile mismatch on " + L->name());
      }
      if (sw.verified) {
        Elem vj = L->bottom();
        for (Elem vi : sw.w) vj = L->join(vj, vi);
        const bool profile = sw.w0 == L->bottom() && vj == L->top();
        require(profile == is_sugeno(f),
                "idempotent supremum weight profile mismatch on " + L->name());
      }
    }
  }
}

// ---- criterion 9: weakly conservative idempotent polynomials = terms ----
void criterion_terms() {
  auto D = make_diamond();
  std::set<std::vector<Elem>> got, want;
  for (const auto& f : all_polynomial_tables(D, 2))
    if (is_sugeno(f) && is_weakly_conservative(f).holds) got.insert(f.values());
  for (const char* text : {"x1", "x2", "(meet x1 x2)", "(join x1 x2)"})
    want.insert(from_expr(D, text, 2).values());
  require(got == want,
          "diamond weakly conservative idempotent polynomials are not the four terms");

  auto C3 = chain3();
  int terms = 0;
  for (const auto& f : all_polynomial_tables(C3, 2))
    if (is_term_function(f)) {
      ++terms;
      require(is_conservative(f).holds, "a chain term function failed conservativeness");
    }
  require(terms == 4, "expected four binary terms on the three-chain");
}

// ---- criterion 10: the fixture gallery reproduces frozen profiles ----
void criterion_gallery() {
  auto outcomes = run_gallery();
  require(outcomes.size() == 8, "expected eight fixtures");
  for (const auto& o : outcomes)
    for (const auto& c : o.checks)
      require(c.expected == c.actual, o.fixture + ": " + c.check);
}

// ---- criterion 11: nested median forms re-tabulate exactly ----
void criterion_median_form() {
  for (const auto& [L, n] :
       {std::pair{make_chain(2), 1}, std::pair{make_chain(2), 2},
        std::pair{make_chain(2), 3}, std::pair{chain3(), 2}}) {
    for (const auto& f : all_polynomial_tables(L, n)) {
      auto e = median_normal_form(f);
      require(med_var_const_only(*e), "median form used a meet or join node");
      require(tabulate(L, *e, n).same_function(f),
              "median form re-tabulation mismatch on " + L->name());
    }
  }
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* label;
    std::function<void()> body;
  };
  const std::vector<Criterion> criteria = {
      {1, "normal forms of seeded random expressions round-trip", criterion_round_trip},
      {2, "enumerated representation sets match structural membership", criterion_representation_sets},
      {3, "uniqueness verdicts match representation counts", criterion_uniqueness},
      {4, "seven-way polynomial profile agrees on every table", criterion_profile_main},
      {5, "idempotent profile agrees and matches a direct count", criterion_profile_sugeno},
      {6, "measure extraction verifies its clamp identity", criterion_measure_identity},
      {7, "symmetry conditions, layered forms, order statistics coincide", criterion_symmetric},
      {8, "weighted-form decision paths and weight profiles agree", criterion_weighted},
      {9, "weakly conservative idempotent polynomials are the terms", criterion_terms},
      {10, "fixture gallery reproduces its frozen profiles", criterion_gallery},
      {11, "nested median forms re-tabulate exactly", criterion_median_form},
  };

  int failures = 0;
  for (const auto& c : criteria) {
    auto start = std::chrono::steady_clock::now();
    std::string verdict = "PASS", detail;
    try {
      c.body();
    } catch (const std::exception& e) {
      verdict = "FAIL";
      detail = e.what();
      ++failures;
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    std::printf("criterion %2d: %s  %6.2fs  %s%s%s\n", c.id, verdict.c_str(),
                secs, c.label, detail.empty() ? "" : " -- ", detail.c_str());
    std::fflush(stdout);
  }
  if (failures)
    std::printf("acceptance: %d of %zu criteria failed\n", failures,
                criteria.size());
  else
    std::printf("acceptance: all %zu criteria passed\n", criteria.size());
  return failures == 0 ? 0 : 1;
}
