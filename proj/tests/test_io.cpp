#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <filesystem>
#include <fstream>

#include "latpoly/io.hpp"
#include "latpoly/normal_form.hpp"

using namespace latpoly;

namespace {

// same partial order presented through element names, ids free to differ
void check_same_order(const Lattice& a, const Lattice& b) {
  REQUIRE(a.size() == b.size());
  for (Elem x = 0; x < a.size(); ++x) {
    auto bx = b.find_element(a.element_name(x));
    REQUIRE(bx.has_value());
    for (Elem y = 0; y < a.size(); ++y) {
      auto by = b.find_element(a.element_name(y));
      REQUIRE(by.has_value());
      CHECK(a.leq(x, y) == b.leq(*bx, *by));
    }
  }
  CHECK(a.element_name(a.bottom()) == b.element_name(b.bottom()));
  CHECK(a.element_name(a.top()) == b.element_name(b.top()));
}

std::filesystem::path temp_file(const std::string& name,
                                const std::string& content) {
  auto p = std::filesystem::temp_directory_path() / name;
  std::ofstream out(p);
  out << content;
  return p;
}

}  // namespace

TEST_CASE("shorthand lattice directives") {
  auto c4 = parse_lattice("chain 4\n");
  CHECK(c4->size() == 4);
  CHECK(c4->name() == "chain4");
  CHECK(c4->leq(0, 3));
  CHECK(!c4->leq(3, 2));

  auto b2 = parse_lattice("# subsets of {1,2}\nboolean 2\n");
  CHECK(b2->size() == 4);
  CHECK(b2->meet(1, 2) == 0);
  CHECK(b2->join(1, 2) == 3);

  CHECK_THROWS_AS(parse_lattice("chain x\n"), ParseError);
  CHECK_THROWS_WITH_AS(parse_lattice("chain 3\nbottom 0\n"),
                       doctest::Contains("only directive"), ParseError);
}

TEST_CASE("cover-form lattice files") {
  const char* text =
      "lattice diamond\n"
      "elements 0 a b 1\n"
      "bottom 0\n"
      "top 1\n"
      "cover 0 a\n"
      "cover 0 b\n"
      "cover a 1\n"
      "cover b 1\n";
  auto D = parse_lattice(text);
  check_same_order(*D, *make_diamond());

  // pentagon: a lattice, but not a distributive one
  const char* n5 =
      "lattice n5\n"
      "elements 0 a b c 1\n"
      "bottom 0\n"
      "top 1\n"
      "cover 0 a\ncover a c\ncover c 1\ncover 0 b\ncover b 1\n";
  CHECK_THROWS_WITH_AS(parse_lattice(n5), doctest::Contains("distributive"),
                       ValidationError);

  // two minimal upper bounds for {a, b}: not a lattice at all
  const char* no_lub =
      "lattice nolub\n"
      "elements 0 a b c d 1\n"
      "bottom 0\n"
      "top 1\n"
      "cover 0 a\ncover 0 b\ncover a c\ncover b c\ncover a d\ncover b d\n"
      "cover c 1\ncover d 1\n";
  CHECK_THROWS_WITH_AS(parse_lattice(no_lub),
                       doctest::Contains("least upper bound"), ValidationError);
}

TEST_CASE("table-form lattice files") {
  const char* text =
      "lattice two\n"
      "elements lo hi\n"
      "bottom lo\n"
      "top hi\n"
      "meet lo lo lo\nmeet lo hi lo\nmeet hi lo lo\nmeet hi hi hi\n"
      "join lo lo lo\njoin lo hi hi\njoin hi lo hi\njoin hi hi hi\n";
  auto L = parse_lattice(text);
  CHECK(L->size() == 2);
  CHECK(L->element_name(L->bottom()) == "lo");
  CHECK(L->meet(1, 0) == 0);

  std::string missing = text;
  missing.erase(missing.find("meet hi hi hi\n"), 14);
  CHECK_THROWS_WITH_AS(parse_lattice(missing),
                       doctest::Contains("missing meet entry"), ParseError);

  std::string dup = text;
  dup += "join lo lo lo\n";
  CHECK_THROWS_WITH_AS(parse_lattice(dup), doctest::Contains("duplicate join"),
                       ParseError);
}

TEST_CASE("lattice parse errors carry line numbers") {
  try {
    parse_lattice("lattice l\nelements 0 1\nbottom 0\ntop 1\ncover 0 q\n");
    FAIL("expected a parse error");
  } catch (const ValidationError& e) {
    // cover resolution happens inside lattice construction
    CHECK(std::string(e.what()).find("unknown element 'q'") != std::string::npos);
  }
  try {
    parse_lattice("lattice l\nbottom 0\n");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line == 2);
    CHECK(std::string(e.what()).find("after 'elements'") != std::string::npos);
  }
  CHECK_THROWS_WITH_AS(
      parse_lattice("lattice l\nelements 0 1\nbottom 0\ntop 1\n"
                    "cover 0 1\nmeet 0 0 0\n"),
      doctest::Contains("mix"), ParseError);
  CHECK_THROWS_WITH_AS(parse_lattice("lattice l\nlattice m\n"),
                       doctest::Contains("duplicate 'lattice'"), ParseError);
  CHECK_THROWS_WITH_AS(parse_lattice("elements 0 1\n"),
                       doctest::Contains("first directive"), ParseError);
  CHECK_THROWS_AS(parse_lattice("\n# only comments\n"), ParseError);
}

TEST_CASE("product shorthand reads its operand files") {
  auto dir = std::filesystem::temp_directory_path();
  temp_file("io_c3.lat", "chain 3\n");
  temp_file("io_c2.lat", "chain 2\n");
  auto p = temp_file("io_prod.lat", "product io_c3.lat io_c2.lat\n");
  auto L = read_lattice_file(p.string());
  CHECK(L->size() == 6);
  // componentwise order: (1,0) and (0,1) are incomparable
  auto a = L->find_element("10");
  auto b = L->find_element("01");
  REQUIRE(a.has_value());
  REQUIRE(b.has_value());
  CHECK(!L->leq(*a, *b));
  CHECK(!L->leq(*b, *a));
  CHECK(L->join(*a, *b) == *L->find_element("11"));

  CHECK_THROWS_WITH_AS(read_lattice_file((dir / "io_absent.lat").string()),
                       doctest::Contains("cannot open"), ParseError);
}

TEST_CASE("canonical lattice writer round-trips") {
  for (const auto& L : {make_diamond(), make_chain(4), make_boolean(2),
                        make_product(make_chain({"0", "a", "1"}), make_chain(2))}) {
    std::string text = write_lattice(*L);
    auto back = parse_lattice(text);
    check_same_order(*L, *back);
    // canonical form is a fixpoint of write(parse(.))
    CHECK(write_lattice(*back) == text);
  }
}

TEST_CASE("function tables round-trip through text") {
  auto C3 = make_chain({"0", "a", "1"});
  FnTable f = tabulate(C3, *parse_expr("(med x1 x2 c:a)", *C3, 2), 2, 1000, "m");
  std::string text = write_function(f);
  CHECK(text.find("function m arity 2 over chain3") == 0);
  FnTable back = parse_function(text, C3);
  CHECK(back.same_function(f));
  CHECK(back.fn_name() == "m");
}

TEST_CASE("expression-bodied function files") {
  auto C3 = make_chain({"0", "a", "1"});
  FnTable f = parse_function(
      "function g arity 2 over chain3\n(join x1 (meet x2 c:a))\n", C3);
  CHECK(f.same_function(tabulate(C3, *parse_expr("(join x1 (meet x2 c:a))", *C3, 2), 2)));
  CHECK(f.fn_name() == "g");

  CHECK_THROWS_WITH_AS(
      parse_function("function g arity 2 over chain3\nx1\nx2\n", C3),
      doctest::Contains("single line"), ParseError);
  try {
    parse_function("function g arity 2 over chain3\n(join x1\n", C3);
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line == 2);
  }
}

TEST_CASE("function file error reporting") {
  auto C2 = make_chain(2);
  CHECK_THROWS_WITH_AS(parse_function("function f arity 1 over chain3\nx1\n", C2),
                       doctest::Contains("over 'chain3'"), ParseError);
  CHECK_THROWS_WITH_AS(parse_function("function f arity 0 over chain2\nx1\n", C2),
                       doctest::Contains("arity must be >= 1"), ParseError);
  CHECK_THROWS_WITH_AS(parse_function("function f over chain2\nx1\n", C2),
                       doctest::Contains("expected 'function"), ParseError);
  CHECK_THROWS_WITH_AS(parse_function("function f arity 1 over chain2\n", C2),
                       doctest::Contains("missing function body"), ParseError);

  const char* base = "function f arity 1 over chain2\n0 -> 0\n1 -> 1\n";
  CHECK(parse_function(base, C2).same_function(
      tabulate(C2, *parse_expr("x1", *C2, 1), 1)));
  CHECK_THROWS_WITH_AS(
      parse_function("function f arity 1 over chain2\n0 -> 0\n", C2),
      doctest::Contains("missing an entry for (1)"), ParseError);
  CHECK_THROWS_WITH_AS(
      parse_function("function f arity 1 over chain2\n0 -> 0\n0 -> 1\n1 -> 1\n", C2),
      doctest::Contains("duplicate table entry for (0)"), ParseError);
  CHECK_THROWS_WITH_AS(
      parse_function("function f arity 1 over chain2\n0 -> 2\n1 -> 1\n", C2),
      doctest::Contains("unknown element '2'"), ParseError);
  try {
    parse_function("function f arity 2 over chain2\n0 -> 0\n", C2);
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line == 2);
    CHECK(std::string(e.what()).find("x2 ->") != std::string::npos);
  }
}

TEST_CASE("measure files round-trip with empty/full spellings") {
  auto C3 = make_chain({"0", "a", "1"});
  CoeffMap mu{2, {0, 1, 1, 2}};
  std::string text = write_measure(mu, *C3, "cap");
  CHECK(text.find("measure cap arity 2 over chain3") == 0);
  CHECK(text.find("empty -> 0") != std::string::npos);
  CHECK(text.find("1 -> a") != std::string::npos);
  CHECK(text.find("2 -> a") != std::string::npos);
  CHECK(text.find("full -> 1") != std::string::npos);
  auto back = parse_coeff_map(text, *C3);
  CHECK(back.map == mu);
  CHECK(back.name == "cap");
  CHECK(back.keyword == "measure");

  // subsets may list indices in any order
  auto alt = parse_coeff_map(
      "measure m arity 2 over chain3\nempty -> 0\n1 -> 0\n2 -> 0\nfull -> 1\n",
      *C3);
  CHECK(alt.map.values == std::vector<Elem>{0, 0, 0, 2});

  auto three = parse_coeff_map(
      "coefficients c arity 3 over chain3\nempty -> 0\n1 -> 0\n2 -> 0\n3 -> 0\n"
      "2,1 -> a\n1,3 -> a\n2,3 -> a\nfull -> 1\n",
      *C3);
  CHECK(three.keyword == "coefficients");
  CHECK(three.map.values[3] == 1);   // {1,2} from "2,1"
  CHECK(three.map.values[5] == 1);   // {1,3}
}

TEST_CASE("measure file error reporting") {
  auto C3 = make_chain({"0", "a", "1"});
  CHECK_THROWS_WITH_AS(
      parse_coeff_map("measure m arity 2 over chain3\nempty -> 0\n1 -> 0\n"
                      "2 -> 0\n", *C3),
      doctest::Contains("missing entry for subset {1,2}"), ParseError);
  CHECK_THROWS_WITH_AS(
      parse_coeff_map("measure m arity 2 over chain3\n3 -> 0\n", *C3),
      doctest::Contains("out of range"), ParseError);
  CHECK_THROWS_WITH_AS(
      parse_coeff_map("measure m arity 2 over chain3\n1,1 -> 0\n", *C3),
      doctest::Contains("repeated argument index"), ParseError);
  CHECK_THROWS_WITH_AS(
      parse_coeff_map("measure m arity 2 over chain3\nempty -> 0\nempty -> 0\n",
                      *C3),
      doctest::Contains("duplicate entry"), ParseError);
  CHECK_THROWS_WITH_AS(
      parse_coeff_map("measure m arity 2 over chain2\nempty -> 0\n", *C3),
      doctest::Contains("over 'chain2'"), ParseError);
}

TEST_CASE("coefficient maps from normal forms serialize and return") {
  auto D = make_diamond();
  FnTable f = tabulate(D, *parse_expr("(join (meet x1 x2) c:a)", *D, 2), 2);
  CoeffMap a = alpha(f);
  auto back = parse_coeff_map(write_coeff_map(a, *D, "alpha"), *D);
  CHECK(back.map == a);
  CHECK(tabulate_dnf(D, back.map).same_function(f));
}
