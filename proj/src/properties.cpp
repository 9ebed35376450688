#include "latpoly/properties.hpp"

#include <algorithm>
#include <sstream>

#include "latpoly/errors.hpp"
#include "latpoly/normal_form.hpp"

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

std::vector<Elem> sorted_levels(const std::vector<Elem>& S) {
  if (S.empty()) throw PreconditionError("level set must be nonempty");
  std::vector<Elem> out = S;
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// Runs body(x) for every tuple in ascending encoding order until it returns
// false; returns true when no tuple stopped the scan.
template <typename Body>
bool scan_tuples(const Lattice& L, int arity, Body&& body) {
  std::vector<Elem> x(static_cast<std::size_t>(arity), 0);
  do {
    if (!body(x)) return false;
  } while (next_tuple(L.size(), x));
  return true;
}

PropertyReport pass(const char* name) { return {name, true, std::nullopt}; }

PropertyReport fail(const char* name, Witness w) {
  return {name, false, std::move(w)};
}

}  // namespace

std::vector<Elem> with_coord(std::vector<Elem> x, int k, Elem c) {
  x[static_cast<std::size_t>(k)] = c;
  return x;
}

std::vector<Elem> meet_scalar(const Lattice& L, std::vector<Elem> x, Elem c) {
  for (auto& v : x) v = L.meet(v, c);
  return x;
}

std::vector<Elem> join_scalar(const Lattice& L, std::vector<Elem> x, Elem c) {
  for (auto& v : x) v = L.join(v, c);
  return x;
}

std::vector<Elem> saturate_up(const Lattice& L, std::vector<Elem> x, Elem c) {
  for (auto& v : x)
    if (L.leq(c, v)) v = L.top();
  return x;
}

std::vector<Elem> saturate_down(const Lattice& L, std::vector<Elem> x, Elem c) {
  for (auto& v : x)
    if (L.leq(v, c)) v = L.bottom();
  return x;
}

std::vector<Elem> median_scalar(const Lattice& L, Elem r, std::vector<Elem> x,
                                Elem s) {
  for (auto& v : x) v = L.median(r, v, s);
  return x;
}

PropertyReport is_nondecreasing(const FnTable& f) {
  const char* name = "nondecreasing";
  const Lattice& L = f.lattice();
  Witness w;
  bool ok = scan_tuples(L, f.arity(), [&](const std::vector<Elem>& x) {
    for (int k = 0; k < f.arity(); ++k)
      for (Elem up : L.upper_covers(x[static_cast<std::size_t>(k)])) {
        auto y = with_coord(x, k, up);
        if (!L.leq(f(x), f(y))) {
          w.x = x;
          w.y = y;
          w.coord = k;
          w.note = "f" + tuple_str(L, x) + " = " + L.element_name(f(x)) +
                   " is not below f" + tuple_str(L, y) + " = " +
                   L.element_name(f(y));
          return false;
        }
      }
    return true;
  });
  return ok ? pass(name) : fail(name, std::move(w));
}

PropertyReport is_meet_homogeneous(const FnTable& f, const std::vector<Elem>& S) {
  const char* name = "meet-homogeneous";
  const Lattice& L = f.lattice();
  auto levels = sorted_levels(S);
  Witness w;
  bool ok = scan_tuples(L, f.arity(), [&](const std::vector<Elem>& x) {
    for (Elem c : levels) {
      Elem lhs = f(meet_scalar(L, x, c));
      Elem rhs = L.meet(f(x), c);
      if (lhs != rhs) {
        w.x = x;
        w.c = c;
        w.note = "f(x meet " + L.element_name(c) + ") = " + L.element_name(lhs) +
                 " but f(x) meet " + L.element_name(c) + " = " +
                 L.element_name(rhs) + " at x = " + tuple_str(L, x);
        return false;
      }
    }
    return true;
  });
  return ok ? pass(name) : fail(name, std::move(w));
}

PropertyReport is_join_homogeneous(const FnTable& f, const std::vector<Elem>& S) {
  const char* name = "join-homogeneous";
  const Lattice& L = f.lattice();
  auto levels = sorted_levels(S);
  Witness w;
  bool ok = scan_tuples(L, f.arity(), [&](const std::vector<Elem>& x) {
    for (Elem c : levels) {
      Elem lhs = f(join_scalar(L, x, c));
      Elem rhs = L.join(f(x), c);
      if (lhs != rhs) {
        w.x = x;
        w.c = c;
        w.note = "f(x join " + L.element_name(c) + ") = " + L.element_name(lhs) +
                 " but f(x) join " + L.element_name(c) + " = " +
                 L.element_name(rhs) + " at x = " + tuple_str(L, x);
        return false;
      }
    }
    return true;
  });
  return ok ? pass(name) : fail(name, std::move(w));
}

PropertyReport is_idempotent_over(const FnTable& f, const std::vector<Elem>& S) {
  const char* name = "idempotent";
  const Lattice& L = f.lattice();
  for (Elem c : sorted_levels(S)) {
    std::vector<Elem> diag(static_cast<std::size_t>(f.arity()), c);
    if (f(diag) != c) {
      Witness w;
      w.c = c;
      w.note = "f" + tuple_str(L, diag) + " = " + L.element_name(f(diag)) +
               " instead of " + L.element_name(c);
      return fail(name, std::move(w));
    }
  }
  return pass(name);
}

PropertyReport median_level_identity(const FnTable& f, const std::vector<Elem>& S) {
  const char* name = "median-level-identity";
  const Lattice& L = f.lattice();
  auto levels = sorted_levels(S);
  Witness w;
  bool ok = scan_tuples(L, f.arity(), [&](const std::vector<Elem>& x) {
    for (Elem r : levels)
      for (Elem s : levels) {
        Elem lhs = f(median_scalar(L, r, x, s));
        Elem rhs = L.median(r, f(x), s);
        if (lhs != rhs) {
          w.x = x;
          w.r = r;
          w.s = s;
          w.note = "f(median(" + L.element_name(r) + ", x, " +
                   L.element_name(s) + ")) = " + L.element_name(lhs) +
                   " but median(r, f(x), s) = " + L.element_name(rhs) +
                   " at x = " + tuple_str(L, x);
          return false;
        }
      }
    return true;
  });
  return ok ? pass(name) : fail(name, std::move(w));
}

PropertyReport horiz_meet_decomposable(const FnTable& f,
                                       const std::vector<Elem>& S) {
  const char* name = "horiz-meet-decomposable";
  const Lattice& L = f.lattice();
  auto levels = sorted_levels(S);
  Witness w;
  bool ok = scan_tuples(L, f.arity(), [&](const std::vector<Elem>& x) {
    for (Elem c : levels) {
      Elem rhs = L.meet(f(join_scalar(L, x, c)), f(saturate_up(L, x, c)));
      if (f(x) != rhs) {
        w.x = x;
        w.c = c;
        w.note = "f(x) = " + L.element_name(f(x)) +
                 " but f(x join c) meet f(saturated x) = " +
                 L.element_name(rhs) + " at x = " + tuple_str(L, x) +
                 ", c = " + L.element_name(c);
        return false;
      }
    }
    return true;
  });
  return ok ? pass(name) : fail(name, std::move(w));
}

PropertyReport horiz_join_decomposable(const FnTable& f,
                                       const std::vector<Elem>& S) {
  const char* name = "horiz-join-decomposable";
  const Lattice& L = f.lattice();
  auto levels = sorted_levels(S);
  Witness w;
  bool ok = scan_tuples(L, f.arity(), [&](const std::vector<Elem>& x) {
    for (Elem c : levels) {
      Elem rhs = L.join(f(meet_scalar(L, x, c)), f(saturate_down(L, x, c)));
      if (f(x) != rhs) {
        w.x = x;
        w.c = c;
        w.note = "f(x) = " + L.element_name(f(x)) +
                 " but f(x meet c) join f(saturated x) = " +
                 L.element_name(rhs) + " at x = " + tuple_str(L, x) +
                 ", c = " + L.element_name(c);
        return false;
      }
    }
    return true;
  });
  return ok ? pass(name) : fail(name, std::move(w));
}

PropertyReport is_median_decomposable(const FnTable& f) {
  const char* name = "median-decomposable";
  const Lattice& L = f.lattice();
  Witness w;
  bool ok = scan_tuples(L, f.arity(), [&](const std::vector<Elem>& x) {
    for (int k = 0; k < f.arity(); ++k) {
      Elem lo = f(with_coord(x, k, L.bottom()));
      Elem hi = f(with_coord(x, k, L.top()));
      Elem rhs = L.median(lo, x[static_cast<std::size_t>(k)], hi);
      if (f(x) != rhs) {
        w.x = x;
        w.coord = k;
        w.note = "f(x) = " + L.element_name(f(x)) + " but median(" +
                 L.element_name(lo) + ", x" + std::to_string(k + 1) + ", " +
                 L.element_name(hi) + ") = " + L.element_name(rhs) +
                 " at x = " + tuple_str(L, x);
        return false;
      }
    }
    return true;
  });
  return ok ? pass(name) : fail(name, std::move(w));
}

PropertyReport is_strongly_idempotent(const FnTable& f) {
  const char* name = "strongly-idempotent";
  const Lattice& L = f.lattice();
  Witness w;
  bool ok = scan_tuples(L, f.arity(), [&](const std::vector<Elem>& x) {
    for (int k = 0; k < f.arity(); ++k) {
      Elem sub = f(with_coord(x, k, f(x)));
      if (sub != f(x)) {
        w.x = x;
        w.coord = k;
        w.note = "substituting f(x) = " + L.element_name(f(x)) +
                 " into slot " + std::to_string(k + 1) + " gives " +
                 L.element_name(sub) + " at x = " + tuple_str(L, x);
        return false;
      }
    }
    return true;
  });
  return ok ? pass(name) : fail(name, std::move(w));
}

PropertyReport comp_meet_homomorphism(const FnTable& f) {
  const char* name = "comp-meet-homomorphism";
  const Lattice& L = f.lattice();
  Witness w;
  bool ok = scan_tuples(L, f.arity(), [&](const std::vector<Elem>& x) {
    for (int k = 0; k < f.arity(); ++k)
      for (Elem a = 0; a < L.size(); ++a)
        for (Elem b = 0; b < L.size(); ++b) {
          Elem lhs = f(with_coord(x, k, L.meet(a, b)));
          Elem rhs = L.meet(f(with_coord(x, k, a)), f(with_coord(x, k, b)));
          if (lhs != rhs) {
            w.x = x;
            w.coord = k;
            w.a = a;
            w.b = b;
            w.note = "slot " + std::to_string(k + 1) + " with values " +
                     L.element_name(a) + ", " + L.element_name(b) +
                     ": f at the meet gives " + L.element_name(lhs) +
                     " but the meet of values gives " + L.element_name(rhs) +
                     " at x = " + tuple_str(L, x);
            return false;
          }
        }
    return true;
  });
  return ok ? pass(name) : fail(name, std::move(w));
}

PropertyReport comp_join_homomorphism(const FnTable& f) {
  const char* name = "comp-join-homomorphism";
  const Lattice& L = f.lattice();
  Witness w;
  bool ok = scan_tuples(L, f.arity(), [&](const std::vector<Elem>& x) {
    for (int k = 0; k < f.arity(); ++k)
      for (Elem a = 0; a < L.size(); ++a)
        for (Elem b = 0; b < L.size(); ++b) {
          Elem lhs = f(with_coord(x, k, L.join(a, b)));
          Elem rhs = L.join(f(with_coord(x, k, a)), f(with_coord(x, k, b)));
          if (lhs != rhs) {
            w.x = x;
            w.coord = k;
            w.a = a;
            w.b = b;
            w.note = "slot " + std::to_string(k + 1) + " with values " +
                     L.element_name(a) + ", " + L.element_name(b) +
                     ": f at the join gives " + L.element_name(lhs) +
                     " but the join of values gives " + L.element_name(rhs) +
                     " at x = " + tuple_str(L, x);
            return false;
          }
        }
    return true;
  });
  return ok ? pass(name) : fail(name, std::move(w));
}

namespace {

// First order-gap in a set: elements r <= c <= s with r, s inside and c
// outside. Returns false when the set is convex.
bool find_gap(const Lattice& L, const ElemSet& set, Elem& r, Elem& c, Elem& s) {
  for (Elem mid = 0; mid < L.size(); ++mid) {
    if (set.contains(mid)) continue;
    for (Elem lo : set.elements())
      for (Elem hi : set.elements())
        if (L.leq(lo, mid) && L.leq(mid, hi)) {
          r = lo;
          c = mid;
          s = hi;
          return true;
        }
  }
  return false;
}

}  // namespace

PropertyReport has_convex_range(const FnTable& f) {
  const char* name = "convex-range";
  const Lattice& L = f.lattice();
  ElemSet range = range_of(f);
  Elem r, c, s;
  if (!find_gap(L, range, r, c, s)) return pass(name);
  Witness w;
  w.r = r;
  w.c = c;
  w.s = s;
  w.note = "range misses " + L.element_name(c) + " between " +
           L.element_name(r) + " and " + L.element_name(s);
  return fail(name, std::move(w));
}

PropertyReport has_componentwise_convex_range(const FnTable& f) {
  const char* name = "componentwise-convex-range";
  const Lattice& L = f.lattice();
  Witness w;
  bool ok = scan_tuples(L, f.arity(), [&](const std::vector<Elem>& x) {
    for (int k = 0; k < f.arity(); ++k) {
      ElemSet section(L.size());
      for (Elem v = 0; v < L.size(); ++v) section.add(f(with_coord(x, k, v)));
      Elem r, c, s;
      if (find_gap(L, section, r, c, s)) {
        w.x = x;
        w.coord = k;
        w.r = r;
        w.c = c;
        w.s = s;
        w.note = "section along slot " + std::to_string(k + 1) + " through " +
                 tuple_str(L, x) + " misses " + L.element_name(c) +
                 " between " + L.element_name(r) + " and " + L.element_name(s);
        return false;
      }
    }
    return true;
  });
  return ok ? pass(name) : fail(name, std::move(w));
}

PropertyReport global_meet_homomorphism(const FnTable& f) {
  const char* name = "meet-homomorphism";
  const Lattice& L = f.lattice();
  Witness w;
  bool ok = scan_tuples(L, f.arity(), [&](const std::vector<Elem>& x) {
    return scan_tuples(L, f.arity(), [&](const std::vector<Elem>& y) {
      std::vector<Elem> m(x.size());
      for (std::size_t i = 0; i < x.size(); ++i) m[i] = L.meet(x[i], y[i]);
      if (f(m) != L.meet(f(x), f(y))) {
        w.x = x;
        w.y = y;
        w.note = "f(x meet y) = " + L.element_name(f(m)) +
                 " but f(x) meet f(y) = " + L.element_name(L.meet(f(x), f(y))) +
                 " at x = " + tuple_str(L, x) + ", y = " + tuple_str(L, y);
        return false;
      }
      return true;
    });
  });
  return ok ? pass(name) : fail(name, std::move(w));
}

PropertyReport global_join_homomorphism(const FnTable& f) {
  const char* name = "join-homomorphism";
  const Lattice& L = f.lattice();
  Witness w;
  bool ok = scan_tuples(L, f.arity(), [&](const std::vector<Elem>& x) {
    return scan_tuples(L, f.arity(), [&](const std::vector<Elem>& y) {
      std::vector<Elem> j(x.size());
      for (std::size_t i = 0; i < x.size(); ++i) j[i] = L.join(x[i], y[i]);
      if (f(j) != L.join(f(x), f(y))) {
        w.x = x;
        w.y = y;
        w.note = "f(x join y) = " + L.element_name(f(j)) +
                 " but f(x) join f(y) = " + L.element_name(L.join(f(x), f(y))) +
                 " at x = " + tuple_str(L, x) + ", y = " + tuple_str(L, y);
        return false;
      }
      return true;
    });
  });
  return ok ? pass(name) : fail(name, std::move(w));
}

ElemSet range_of(const FnTable& f) {
  ElemSet out(f.lattice().size());
  for (TupleIndex t = 0; t < f.points(); ++t) out.add(f.value_at(t));
  return out;
}

ElemSet range_hull(const FnTable& f) {
  const Lattice& L = f.lattice();
  if (is_nondecreasing(f).holds) {
    std::vector<Elem> bot(static_cast<std::size_t>(f.arity()), L.bottom());
    std::vector<Elem> top(static_cast<std::size_t>(f.arity()), L.top());
    return L.interval(f(bot), f(top));
  }
  return L.convex_hull(range_of(f));
}

std::vector<Elem> level_set(const FnTable& f, LevelSetMode mode) {
  switch (mode) {
    case LevelSetMode::range:
      return range_of(f).elements();
    case LevelSetMode::hull:
      return range_hull(f).elements();
    case LevelSetMode::full:
      return f.lattice().all_elements().elements();
  }
  throw PreconditionError("unknown level set mode");
}

bool replay(const FnTable& f, const PropertyReport& rep) {
  if (rep.holds || !rep.witness) return false;
  const Lattice& L = f.lattice();
  const Witness& w = *rep.witness;
  const std::string& p = rep.property;
  if (p == "nondecreasing") return !L.leq(f(w.x), f(w.y));
  if (p == "meet-homogeneous")
    return f(meet_scalar(L, w.x, w.c)) != L.meet(f(w.x), w.c);
  if (p == "join-homogeneous")
    return f(join_scalar(L, w.x, w.c)) != L.join(f(w.x), w.c);
  if (p == "idempotent") {
    std::vector<Elem> diag(static_cast<std::size_t>(f.arity()), w.c);
    return f(diag) != w.c;
  }
  if (p == "median-level-identity")
    return f(median_scalar(L, w.r, w.x, w.s)) != L.median(w.r, f(w.x), w.s);
  if (p == "horiz-meet-decomposable")
    return f(w.x) !=
           L.meet(f(join_scalar(L, w.x, w.c)), f(saturate_up(L, w.x, w.c)));
  if (p == "horiz-join-decomposable")
    return f(w.x) !=
           L.join(f(meet_scalar(L, w.x, w.c)), f(saturate_down(L, w.x, w.c)));
  if (p == "median-decomposable") {
    Elem lo = f(with_coord(w.x, w.coord, L.bottom()));
    Elem hi = f(with_coord(w.x, w.coord, L.top()));
    return f(w.x) !=
           L.median(lo, w.x[static_cast<std::size_t>(w.coord)], hi);
  }
  if (p == "strongly-idempotent")
    return f(with_coord(w.x, w.coord, f(w.x))) != f(w.x);
  if (p == "comp-meet-homomorphism")
    return f(with_coord(w.x, w.coord, L.meet(w.a, w.b))) !=
           L.meet(f(with_coord(w.x, w.coord, w.a)),
                  f(with_coord(w.x, w.coord, w.b)));
  if (p == "comp-join-homomorphism")
    return f(with_coord(w.x, w.coord, L.join(w.a, w.b))) !=
           L.join(f(with_coord(w.x, w.coord, w.a)),
                  f(with_coord(w.x, w.coord, w.b)));
  if (p == "convex-range") {
    ElemSet range = range_of(f);
    return range.contains(w.r) && range.contains(w.s) && !range.contains(w.c) &&
           L.leq(w.r, w.c) && L.leq(w.c, w.s);
  }
  if (p == "componentwise-convex-range") {
    ElemSet section(L.size());
    for (Elem v = 0; v < L.size(); ++v)
      section.add(f(with_coord(w.x, w.coord, v)));
    return section.contains(w.r) && section.contains(w.s) &&
           !section.contains(w.c) && L.leq(w.r, w.c) && L.leq(w.c, w.s);
  }
  if (p == "meet-homomorphism") {
    std::vector<Elem> m(w.x.size());
    for (std::size_t i = 0; i < m.size(); ++i) m[i] = L.meet(w.x[i], w.y[i]);
    return f(m) != L.meet(f(w.x), f(w.y));
  }
  if (p == "join-homomorphism") {
    std::vector<Elem> j(w.x.size());
    for (std::size_t i = 0; i < j.size(); ++i) j[i] = L.join(w.x[i], w.y[i]);
    return f(j) != L.join(f(w.x), f(w.y));
  }
  if (p == "polynomial") {
    auto r = check_polynomial(f);
    return !r.ok;
  }
  if (p == "conservative" || p == "weakly-conservative") {
    Elem v = f(w.x);
    return std::find(w.x.begin(), w.x.end(), v) == w.x.end();
  }
  throw PreconditionError("unknown property name: " + p);
}

namespace {

struct ProfileParts {
  bool pmeet, pjoin, strong, cvx, ccvx, nondec, meddec;
};

ProfileParts common_parts(const FnTable& f) {
  return {comp_meet_homomorphism(f).holds,
          comp_join_homomorphism(f).holds,
          is_strongly_idempotent(f).holds,
          has_convex_range(f).holds,
          has_componentwise_convex_range(f).holds,
          is_nondecreasing(f).holds,
          is_median_decomposable(f).holds};
}

}  // namespace

Profile theorem_profile_main(const FnTable& f) {
  ProfileParts p = common_parts(f);
  auto S = level_set(f, LevelSetMode::hull);
  bool mh = is_meet_homogeneous(f, S).holds;
  bool jh = is_join_homogeneous(f, S).holds;
  bool hmd = horiz_meet_decomposable(f, S).holds;
  bool hjd = horiz_join_decomposable(f, S).holds;
  bool idem = is_idempotent_over(f, S).holds;
  return {is_polynomial(f),
          p.meddec,
          p.pmeet && p.pjoin && p.strong && p.cvx && p.ccvx,
          p.nondec && mh && jh,
          p.pjoin && mh && hjd,
          p.pmeet && hmd && jh,
          p.pmeet && p.pjoin && idem && hmd && hjd};
}

Profile theorem_profile_sugeno(const FnTable& f) {
  const Lattice& L = f.lattice();
  ProfileParts p = common_parts(f);
  auto S = L.all_elements().elements();
  bool mh = is_meet_homogeneous(f, S).holds;
  bool jh = is_join_homogeneous(f, S).holds;
  bool hmd = horiz_meet_decomposable(f, S).holds;
  bool hjd = horiz_join_decomposable(f, S).holds;
  bool idem_all = is_idempotent_over(f, S).holds;
  bool idem_bot = is_idempotent_over(f, {L.bottom()}).holds;
  bool idem_top = is_idempotent_over(f, {L.top()}).holds;
  bool range_full = range_of(f).count() == L.size();
  return {is_polynomial(f) && idem_bot && idem_top,
          idem_bot && idem_top && p.meddec,
          p.pmeet && p.pjoin && p.strong && range_full && p.ccvx,
          p.nondec && mh && jh,
          p.pjoin && idem_top && mh && hjd,
          p.pmeet && idem_bot && hmd && jh,
          p.pmeet && p.pjoin && idem_all && hmd && hjd};
}

bool profile_all_equal(const Profile& p) {
  for (bool b : p)
    if (b != p[0]) return false;
  return true;
}

bool main_condition_iii_without_convex_range(const FnTable& f) {
  ProfileParts p = common_parts(f);
  return p.pmeet && p.pjoin && p.strong && p.ccvx;
}

std::vector<std::string> property_names() {
  return {"nondecreasing",
          "meet-homogeneous",
          "join-homogeneous",
          "idempotent",
          "median-level-identity",
          "horiz-meet-decomposable",
          "horiz-join-decomposable",
          "median-decomposable",
          "strongly-idempotent",
          "comp-meet-homomorphism",
          "comp-join-homomorphism",
          "convex-range",
          "componentwise-convex-range",
          "meet-homomorphism",
          "join-homomorphism",
          "polynomial"};
}

PropertyReport check_property(const FnTable& f, const std::string& name,
                              LevelSetMode mode) {
  if (name == "nondecreasing") return is_nondecreasing(f);
  if (name == "meet-homogeneous")
    return is_meet_homogeneous(f, level_set(f, mode));
  if (name == "join-homogeneous")
    return is_join_homogeneous(f, level_set(f, mode));
  if (name == "idempotent") return is_idempotent_over(f, level_set(f, mode));
  if (name == "median-level-identity")
    return median_level_identity(f, level_set(f, mode));
  if (name == "horiz-meet-decomposable")
    return horiz_meet_decomposable(f, level_set(f, mode));
  if (name == "horiz-join-decomposable")
    return horiz_join_decomposable(f, level_set(f, mode));
  if (name == "median-decomposable") return is_median_decomposable(f);
  if (name == "strongly-idempotent") return is_strongly_idempotent(f);
  if (name == "comp-meet-homomorphism") return comp_meet_homomorphism(f);
  if (name == "comp-join-homomorphism") return comp_join_homomorphism(f);
  if (name == "convex-range") return has_convex_range(f);
  if (name == "componentwise-convex-range")
    return has_componentwise_convex_range(f);
  if (name == "meet-homomorphism") return global_meet_homomorphism(f);
  if (name == "join-homomorphism") return global_join_homomorphism(f);
  if (name == "polynomial") {
    auto r = check_polynomial(f);
    if (r.ok) return pass("polynomial");
    const Lattice& L = f.lattice();
    Witness w;
    if (r.why == PolyCheck::Fail::cube_not_monotone) {
      w.note = "0/1 cube restriction is not nondecreasing between " +
               mask_str(r.bad_lo, f.arity()) + " and " +
               mask_str(r.bad_hi, f.arity());
    } else {
      w.x = decode_tuple(L.size(), f.arity(), r.bad_point);
      w.note = "table disagrees with its cube extension at " + tuple_str(L, w.x);
    }
    return fail("polynomial", std::move(w));
  }
  throw PreconditionError("unknown property name: " + name);
}

std::string describe(const PropertyReport& rep, const Lattice& L) {
  (void)L;
  std::ostringstream out;
  out << rep.property << ": " << (rep.holds ? "holds" : "fails");
  if (!rep.holds && rep.witness && !rep.witness->note.empty())
    out << " (" << rep.witness->note << ")";
  return out.str();
}

}  // namespace latpoly
