#include "latpoly/gallery.hpp"

#include "latpoly/classes.hpp"
#include "latpoly/expr.hpp"
#include "latpoly/normal_form.hpp"
#include "latpoly/properties.hpp"

namespace latpoly {

namespace {

struct FixtureBuilder {
  GalleryOutcome out;

  FixtureBuilder(std::string name, const Lattice& L, std::string fn) {
    out.fixture = std::move(name);
    out.lattice = L.name();
    out.function = std::move(fn);
  }

  void expect(const std::string& check, bool expected, bool actual) {
    out.checks.push_back({check, expected, actual});
    if (expected != actual) out.ok = false;
  }
};

FnTable from_expr(const LatticePtr& L, const char* text, int arity) {
  return tabulate(L, *parse_expr(text, *L, arity), arity);
}

// a two-valued function can be represented with or without the top
// coefficient, so its representation set has two members
GalleryOutcome projection_dnf_fixture() {
  auto C2 = make_chain(2);
  FnTable f = from_expr(C2, "x1", 2);
  FixtureBuilder b("nonunique-dnf", *C2, "x1 as a binary function");
  b.expect("polynomial", true, check_polynomial(f).ok);
  b.expect("unique-dnf", false, unique_dnf(f));
  auto set = enumerate_dnf_set(f);
  b.expect("two-representations", true, set.size() == 2);
  bool free_top = set.size() == 2 && set[0].values == std::vector<Elem>{0, 1, 0, 0} &&
                  set[1].values == std::vector<Elem>{0, 1, 0, 1};
  b.expect("free-top-coefficient", true, free_top);
  return b.out;
}

GalleryOutcome diamond_uniqueness_fixture() {
  auto D = make_diamond();
  FnTable f = from_expr(D, "(join (meet (join c:a c:b) x1) c:a)", 1);
  FixtureBuilder b("uniqueness-diamond", *D, "((a v b) ^ x) v a");
  b.expect("polynomial", true, check_polynomial(f).ok);
  b.expect("unique-dnf", false, unique_dnf(f));
  b.expect("equals-shorter-form", true,
           f.same_function(from_expr(D, "(join (meet c:b x1) c:a)", 1)));
  return b.out;
}

// nondecreasing, strongly idempotent, both range conditions, yet not a
// polynomial: the two componentwise homomorphism conditions fail
GalleryOutcome product_counterexample_fixture() {
  auto P = make_product(make_chain({"0", "a", "1"}), make_chain(2));
  FnTable f(P, 1, {3, 3, 4, 3, 4, 4});
  FixtureBuilder b("product-break", *P, "unary table on the six-element product");
  b.expect("polynomial", false, check_polynomial(f).ok);
  b.expect("nondecreasing", true, is_nondecreasing(f).holds);
  b.expect("strongly-idempotent", true, is_strongly_idempotent(f).holds);
  b.expect("convex-range", true, has_convex_range(f).holds);
  b.expect("componentwise-convex-range", true,
           has_componentwise_convex_range(f).holds);
  b.expect("comp-meet-homomorphism", false, comp_meet_homomorphism(f).holds);
  b.expect("comp-join-homomorphism", false, comp_join_homomorphism(f).holds);
  b.expect("median-decomposable", false, is_median_decomposable(f).holds);
  return b.out;
}

// everything except the componentwise convex range
GalleryOutcome section_range_fixture() {
  auto C3 = make_chain({"0", "a", "1"});
  FnTable f(C3, 2, {0, 0, 0, 0, 1, 2, 0, 1, 2});
  FixtureBuilder b("section-range-gap", *C3, "binary table with a gapped section");
  b.expect("polynomial", false, check_polynomial(f).ok);
  b.expect("comp-meet-homomorphism", true, comp_meet_homomorphism(f).holds);
  b.expect("comp-join-homomorphism", true, comp_join_homomorphism(f).holds);
  b.expect("strongly-idempotent", true, is_strongly_idempotent(f).holds);
  b.expect("convex-range", true, has_convex_range(f).holds);
  b.expect("componentwise-convex-range", false,
           has_componentwise_convex_range(f).holds);
  return b.out;
}

// homogeneity over the two-point range survives, over its hull it does not;
// horizontal decomposability survives in both, median decomposability fails
GalleryOutcome step_function_fixture() {
  auto C4 = make_chain(4);
  FnTable f(C4, 1, {0, 0, 3, 3});
  FixtureBuilder b("chain-step", *C4, "0,0,3,3 step on the four-chain");
  std::vector<Elem> range = level_set(f, LevelSetMode::range);
  std::vector<Elem> hull = level_set(f, LevelSetMode::hull);
  b.expect("polynomial", false, check_polynomial(f).ok);
  b.expect("median-decomposable", false, is_median_decomposable(f).holds);
  b.expect("meet-homogeneous-range", true, is_meet_homogeneous(f, range).holds);
  b.expect("join-homogeneous-range", true, is_join_homogeneous(f, range).holds);
  b.expect("horiz-meet-decomposable-range", true,
           horiz_meet_decomposable(f, range).holds);
  b.expect("horiz-join-decomposable-range", true,
           horiz_join_decomposable(f, range).holds);
  b.expect("meet-homogeneous-hull", false, is_meet_homogeneous(f, hull).holds);
  b.expect("join-homogeneous-hull", false, is_join_homogeneous(f, hull).holds);
  b.expect("horiz-meet-decomposable-hull", true,
           horiz_meet_decomposable(f, hull).holds);
  b.expect("horiz-join-decomposable-hull", true,
           horiz_join_decomposable(f, hull).holds);
  return b.out;
}

// x ^ a: all the idempotent-profile conditions of one direction except
// fixing the top, so it is not an idempotent polynomial
GalleryOutcome meet_constant_fixture() {
  auto C3 = make_chain({"0", "a", "1"});
  FnTable f = from_expr(C3, "(meet x1 c:a)", 1);
  std::vector<Elem> all = level_set(f, LevelSetMode::full);
  FixtureBuilder b("meet-constant", *C3, "x ^ a");
  b.expect("polynomial", true, check_polynomial(f).ok);
  b.expect("sugeno", false, is_sugeno(f));
  b.expect("comp-join-homomorphism", true, comp_join_homomorphism(f).holds);
  b.expect("meet-homogeneous-full", true, is_meet_homogeneous(f, all).holds);
  b.expect("horiz-join-decomposable-full", true,
           horiz_join_decomposable(f, all).holds);
  b.expect("fixes-bottom", true, value_at_cube(f, 0) == C3->bottom());
  b.expect("fixes-top", false,
           value_at_cube(f, SubsetMask{1}) == C3->top());
  return b.out;
}

GalleryOutcome join_constant_fixture() {
  auto C3 = make_chain({"0", "a", "1"});
  FnTable f = from_expr(C3, "(join x1 c:a)", 1);
  std::vector<Elem> all = level_set(f, LevelSetMode::full);
  FixtureBuilder b("join-constant", *C3, "x v a");
  b.expect("polynomial", true, check_polynomial(f).ok);
  b.expect("sugeno", false, is_sugeno(f));
  b.expect("comp-meet-homomorphism", true, comp_meet_homomorphism(f).holds);
  b.expect("join-homogeneous-full", true, is_join_homogeneous(f, all).holds);
  b.expect("horiz-meet-decomposable-full", true,
           horiz_meet_decomposable(f, all).holds);
  b.expect("fixes-bottom", false, value_at_cube(f, 0) == C3->bottom());
  b.expect("fixes-top", true,
           value_at_cube(f, SubsetMask{1}) == C3->top());
  return b.out;
}

// the join of two incomparable arguments leaves {x1, x2} yet stays inside
// the closure of pairs, separating the two conservativeness notions
GalleryOutcome diamond_join_fixture() {
  auto D = make_diamond();
  FnTable f = from_expr(D, "(join x1 x2)", 2);
  FixtureBuilder b("diamond-join", *D, "x1 v x2");
  b.expect("polynomial", true, check_polynomial(f).ok);
  b.expect("sugeno", true, is_sugeno(f));
  b.expect("term", true, is_term_function(f));
  b.expect("symmetric", true, is_symmetric(f));
  b.expect("conservative", false, is_conservative(f).holds);
  b.expect("weakly-conservative", true, is_weakly_conservative(f).holds);
  b.expect("weighted-infimum", false, is_weighted_infimum(f));
  b.expect("weighted-supremum", true, is_weighted_supremum(f));
  auto sv = extract_sup_weights(f);
  b.expect("sup-weights-bottom-top-top", true,
           sv.verified && sv.w0 == D->bottom() &&
               sv.w == std::vector<Elem>{D->top(), D->top()});
  return b.out;
}

}  // namespace

std::vector<GalleryOutcome> run_gallery() {
  return {projection_dnf_fixture(),   diamond_uniqueness_fixture(),
          product_counterexample_fixture(), section_range_fixture(),
          step_function_fixture(),    meet_constant_fixture(),
          join_constant_fixture(),    diamond_join_fixture()};
}

}  // namespace latpoly
