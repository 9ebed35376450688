#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "latpoly/lattice.hpp"

using namespace latpoly;

namespace {

ElemSet set_of(const Lattice& L, std::initializer_list<const char*> names) {
  ElemSet s(L.size());
  for (const char* n : names) s.add(*L.find_element(n));
  return s;
}

}  // namespace

TEST_CASE("chain construction and order") {
  auto L = make_chain(4);
  CHECK(L->size() == 4);
  CHECK(L->bottom() == 0);
  CHECK(L->top() == 3);
  CHECK(L->meet(1, 2) == 1);
  CHECK(L->join(1, 2) == 2);
  CHECK(L->leq(0, 3));
  CHECK(!L->leq(3, 1));
  CHECK(L->element_name(2) == "2");
  CHECK(L->find_element("3") == 3);
  CHECK(!L->find_element("x").has_value());
  CHECK_THROWS_AS(make_chain(0), ValidationError);
  CHECK_THROWS_AS(make_chain(65), ValidationError);
}

TEST_CASE("named chain keeps declared order") {
  auto L = make_chain({"0", "a", "1"});
  Elem a = *L->find_element("a");
  CHECK(L->lt(L->bottom(), a));
  CHECK(L->lt(a, L->top()));
}

TEST_CASE("boolean lattice matches product of two chains") {
  auto B = make_boolean(2);
  auto P = make_product(make_chain(2), make_chain(2));
  REQUIRE(B->size() == P->size());
  // Ids line up: bit 0 of the subset mask is the first product factor.
  for (Elem x = 0; x < B->size(); ++x)
    for (Elem y = 0; y < B->size(); ++y) {
      CHECK(B->meet(x, y) == P->meet(x, y));
      CHECK(B->join(x, y) == P->join(x, y));
    }
  CHECK(B->bottom() == P->bottom());
  CHECK(B->top() == P->top());
  CHECK_THROWS_AS(make_boolean(7), ValidationError);
}

TEST_CASE("diamond from covers") {
  auto D = make_diamond();
  Elem a = *D->find_element("a"), b = *D->find_element("b");
  Elem bot = D->bottom(), top = D->top();
  CHECK(D->meet(a, b) == bot);
  CHECK(D->join(a, b) == top);
  CHECK(!D->leq(a, b));
  CHECK(!D->leq(b, a));
  // median(a, b, 0) collapses to 0.
  CHECK(D->median(a, b, bot) == bot);
  CHECK(D->median(a, b, top) == top);
}

TEST_CASE("median agrees with its dual expansion on every triple") {
  for (const auto& L : {make_chain(4), make_diamond(),
                        make_product(make_chain({"0", "a", "1"}), make_chain(2))}) {
    for (Elem x = 0; x < L->size(); ++x)
      for (Elem y = 0; y < L->size(); ++y)
        for (Elem z = 0; z < L->size(); ++z) {
          // (x^y)v(y^z)v(z^x)
          Elem by_joins = L->join(L->join(L->meet(x, y), L->meet(y, z)), L->meet(z, x));
          // (xvy)^(yvz)^(zvx)
          Elem by_meets = L->meet(L->meet(L->join(x, y), L->join(y, z)), L->join(z, x));
          CHECK(by_joins == by_meets);
          CHECK(L->median(x, y, z) == by_joins);
          // Symmetric in all arguments.
          CHECK(L->median(x, y, z) == L->median(z, x, y));
          CHECK(L->median(x, y, z) == L->median(y, x, z));
        }
  }
}

TEST_CASE("pentagon is rejected as non-distributive") {
  // N5: 0 < a < b < 1 and 0 < c < 1 with c incomparable to both a and b.
  CHECK_THROWS_WITH_AS(
      from_covers("n5", {"0", "a", "b", "c", "1"},
                  {{"0", "a"}, {"a", "b"}, {"b", "1"}, {"0", "c"}, {"c", "1"}}, "0",
                  "1"),
      doctest::Contains("not distributive"), ValidationError);
}

TEST_CASE("m3 is rejected as non-distributive") {
  CHECK_THROWS_WITH_AS(
      from_covers("m3", {"0", "a", "b", "c", "1"},
                  {{"0", "a"}, {"0", "b"}, {"0", "c"}, {"a", "1"}, {"b", "1"}, {"c", "1"}},
                  "0", "1"),
      doctest::Contains("not distributive"), ValidationError);
}

TEST_CASE("cover-relation edge cases") {
  // A poset with no common upper bound for a, b.
  CHECK_THROWS_WITH_AS(from_covers("vee", {"0", "a", "b"}, {{"0", "a"}, {"0", "b"}},
                                   "0", "a"),
                       doctest::Contains("least upper bound"), ValidationError);
  // Cycle.
  CHECK_THROWS_WITH_AS(from_covers("loop", {"0", "a", "1"},
                                   {{"0", "a"}, {"a", "0"}, {"a", "1"}}, "0", "1"),
                       doctest::Contains("cycle"), ValidationError);
  // Wrong declared bottom.
  CHECK_THROWS_WITH_AS(from_covers("badbot", {"0", "1"}, {{"0", "1"}}, "1", "0"),
                       doctest::Contains("bottom"), ValidationError);
  // Unknown element in a cover.
  CHECK_THROWS_WITH_AS(from_covers("unk", {"0", "1"}, {{"0", "z"}}, "0", "1"),
                       doctest::Contains("unknown element"), ValidationError);
}

TEST_CASE("direct table constructor rejects broken algebra") {
  // 2-element tables with a non-commutative meet.
  std::vector<Elem> meet = {0, 0, 1, 1};  // meet(1,0)=1 but meet(0,1)=0
  std::vector<Elem> join = {0, 1, 1, 1};
  CHECK_THROWS_WITH_AS(Lattice("bad", {"0", "1"}, meet, join, 0, 1),
                       doctest::Contains("commutative"), ValidationError);
}

TEST_CASE("interval and convexity") {
  auto D = make_diamond();
  Elem a = *D->find_element("a"), b = *D->find_element("b");

  ElemSet i = D->interval(D->bottom(), a);
  CHECK(i.elements() == std::vector<Elem>{D->bottom(), a});
  CHECK_THROWS_AS(D->interval(a, b), PreconditionError);

  // {0,1} misses the middle elements.
  CHECK(!D->is_convex(set_of(*D, {"0", "1"})));
  // An antichain is convex.
  CHECK(D->is_convex(set_of(*D, {"a", "b"})));
  CHECK(D->is_convex(D->interval(D->bottom(), D->top())));

  ElemSet hull = D->convex_hull(set_of(*D, {"0", "1"}));
  CHECK(hull.count() == 4);
  CHECK(D->is_convex(hull));
  // Hull of a convex set is itself.
  CHECK(D->convex_hull(set_of(*D, {"a", "b"})) == set_of(*D, {"a", "b"}));
}

TEST_CASE("convex hull is the least convex superset on small lattices") {
  auto L = make_product(make_chain(3), make_chain(2));
  const int m = L->size();
  // Enumerate all subsets, compare fixpoint hull against brute-force minimum.
  for (int bits = 0; bits < (1 << m); ++bits) {
    ElemSet s(m);
    for (int e = 0; e < m; ++e)
      if (bits & (1 << e)) s.add(e);
    ElemSet hull = L->convex_hull(s);
    CHECK(L->is_convex(hull));
    // No strictly smaller convex superset of s exists.
    for (int cand = 0; cand < (1 << m); ++cand) {
      if ((cand & bits) != bits) continue;  // must contain s
      ElemSet c(m);
      for (int e = 0; e < m; ++e)
        if (cand & (1 << e)) c.add(e);
      if (!L->is_convex(c)) continue;
      // Every convex superset of s contains the hull.
      for (Elem e = 0; e < m; ++e)
        if (hull.contains(e)) CHECK(c.contains(e));
    }
  }
}

TEST_CASE("product names follow pair concatenation") {
  auto P = make_product(make_chain({"0", "a", "1"}), make_chain(2));
  CHECK(P->find_element("a1").has_value());
  CHECK(P->find_element("00").has_value());
  CHECK(P->size() == 6);
  CHECK(P->name() == "chain3xchain2");
}

TEST_CASE("topological order starts at bottom and ends at top") {
  for (const auto& L : {make_diamond(), make_boolean(3),
                        make_product(make_chain(3), make_chain(2))}) {
    auto order = L->topological_order();
    REQUIRE(static_cast<int>(order.size()) == L->size());
    CHECK(order.front() == L->bottom());
    CHECK(order.back() == L->top());
    // Never places an element before something below it.
    for (std::size_t i = 0; i < order.size(); ++i)
      for (std::size_t j = i + 1; j < order.size(); ++j)
        CHECK(!L->lt(order[j], order[i]));
  }
}

TEST_CASE("upper covers") {
  auto D = make_diamond();
  auto c0 = D->upper_covers(D->bottom());
  CHECK(c0.size() == 2);
  CHECK(D->upper_covers(D->top()).empty());
  auto C = make_chain(4);
  for (Elem e = 0; e + 1 < C->size(); ++e) {
    REQUIRE(C->upper_covers(e).size() == 1);
    CHECK(C->upper_covers(e)[0] == e + 1);
  }
}

TEST_CASE("size cap is enforced by builders") {
  CHECK_THROWS_AS(make_product(make_boolean(5), make_boolean(5)), ValidationError);
  CHECK(make_product(make_chain(8), make_chain(8))->size() == 64);
}
