#include "latpoly/expr.hpp"

#include <algorithm>
#include <cctype>

namespace latpoly {

ExprPtr Expr::var(int index) {
  auto e = std::make_shared<Expr>();
  e->kind_ = Kind::var;
  e->var_index_ = index;
  return e;
}

ExprPtr Expr::constant(Elem value) {
  auto e = std::make_shared<Expr>();
  e->kind_ = Kind::constant;
  e->value_ = value;
  return e;
}

ExprPtr Expr::meet(ExprPtr l, ExprPtr r) {
  auto e = std::make_shared<Expr>();
  e->kind_ = Kind::meet;
  e->kids_[0] = std::move(l);
  e->kids_[1] = std::move(r);
  return e;
}

ExprPtr Expr::join(ExprPtr l, ExprPtr r) {
  auto e = std::make_shared<Expr>();
  e->kind_ = Kind::join;
  e->kids_[0] = std::move(l);
  e->kids_[1] = std::move(r);
  return e;
}

ExprPtr Expr::med(ExprPtr a, ExprPtr b, ExprPtr c) {
  auto e = std::make_shared<Expr>();
  e->kind_ = Kind::med;
  e->kids_[0] = std::move(a);
  e->kids_[1] = std::move(b);
  e->kids_[2] = std::move(c);
  return e;
}

namespace {

struct Parser {
  std::string_view text;
  std::size_t pos = 0;
  const Lattice& lattice;
  int arity;

  [[noreturn]] void error(const std::string& msg) const {
    throw ParseError("expression, position " + std::to_string(pos) + ": " + msg);
  }

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
      ++pos;
  }

  std::string_view token() {
    skip_ws();
    if (pos >= text.size()) error("unexpected end of input");
    const std::size_t start = pos;
    while (pos < text.size()) {
      char c = text[pos];
      if (std::isspace(static_cast<unsigned char>(c)) || c == '(' || c == ')') break;
      ++pos;
    }
    if (pos == start) error("expected a token");
    return text.substr(start, pos - start);
  }

  ExprPtr atom(std::string_view t) {
    if (t.size() >= 2 && t[0] == 'x' &&
        std::all_of(t.begin() + 1, t.end(),
                    [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
      int k = 0;
      for (std::size_t i = 1; i < t.size(); ++i) k = k * 10 + (t[i] - '0');
      if (k < 1 || k > arity)
        error("variable x" + std::to_string(k) + " out of range for arity " +
              std::to_string(arity));
      return Expr::var(k);
    }
    if (t.size() > 2 && t.substr(0, 2) == "c:") {
      auto name = std::string(t.substr(2));
      auto e = lattice.find_element(name);
      if (!e) error("unknown constant '" + name + "' in lattice '" + lattice.name() + "'");
      return Expr::constant(*e);
    }
    error("expected x<k>, c:<name>, or '(' but found '" + std::string(t) + "'");
  }

  ExprPtr parse() {
    skip_ws();
    if (pos >= text.size()) error("unexpected end of input");
    if (text[pos] != '(') return atom(token());
    ++pos;  // consume '('
    std::string_view op = token();
    ExprPtr out;
    if (op == "meet" || op == "join") {
      ExprPtr l = parse();
      ExprPtr r = parse();
      out = (op == "meet") ? Expr::meet(std::move(l), std::move(r))
                           : Expr::join(std::move(l), std::move(r));
    } else if (op == "med") {
      ExprPtr a = parse();
      ExprPtr b = parse();
      ExprPtr c = parse();
      out = Expr::med(std::move(a), std::move(b), std::move(c));
    } else {
      error("unknown operator '" + std::string(op) + "'");
    }
    skip_ws();
    if (pos >= text.size() || text[pos] != ')') error("expected ')'");
    ++pos;
    return out;
  }
};

}  // namespace

ExprPtr parse_expr(std::string_view text, const Lattice& lattice, int arity) {
  if (arity < 1) throw PreconditionError("expression arity must be >= 1");
  Parser p{text, 0, lattice, arity};
  ExprPtr e = p.parse();
  p.skip_ws();
  if (p.pos != text.size()) p.error("trailing input after expression");
  return e;
}

std::string to_string(const Expr& e, const Lattice& lattice) {
  switch (e.kind()) {
    case Expr::Kind::var:
      return "x" + std::to_string(e.var_index());
    case Expr::Kind::constant:
      return "c:" + lattice.element_name(e.constant_value());
    case Expr::Kind::meet:
      return "(meet " + to_string(*e.child(0), lattice) + " " +
             to_string(*e.child(1), lattice) + ")";
    case Expr::Kind::join:
      return "(join " + to_string(*e.child(0), lattice) + " " +
             to_string(*e.child(1), lattice) + ")";
    case Expr::Kind::med:
      return "(med " + to_string(*e.child(0), lattice) + " " +
             to_string(*e.child(1), lattice) + " " + to_string(*e.child(2), lattice) +
             ")";
  }
  return "";
}

Elem eval_expr(const Lattice& lattice, const Expr& e, std::span<const Elem> x) {
  switch (e.kind()) {
    case Expr::Kind::var:
      return x[static_cast<std::size_t>(e.var_index() - 1)];
    case Expr::Kind::constant:
      return e.constant_value();
    case Expr::Kind::meet:
      return lattice.meet(eval_expr(lattice, *e.child(0), x),
                          eval_expr(lattice, *e.child(1), x));
    case Expr::Kind::join:
      return lattice.join(eval_expr(lattice, *e.child(0), x),
                          eval_expr(lattice, *e.child(1), x));
    case Expr::Kind::med:
      return lattice.median(eval_expr(lattice, *e.child(0), x),
                            eval_expr(lattice, *e.child(1), x),
                            eval_expr(lattice, *e.child(2), x));
  }
  return 0;
}

int max_var_index(const Expr& e) {
  switch (e.kind()) {
    case Expr::Kind::var:
      return e.var_index();
    case Expr::Kind::constant:
      return 0;
    case Expr::Kind::meet:
    case Expr::Kind::join:
      return std::max(max_var_index(*e.child(0)), max_var_index(*e.child(1)));
    case Expr::Kind::med:
      return std::max({max_var_index(*e.child(0)), max_var_index(*e.child(1)),
                       max_var_index(*e.child(2))});
  }
  return 0;
}

bool med_var_const_only(const Expr& e) {
  switch (e.kind()) {
    case Expr::Kind::var:
    case Expr::Kind::constant:
      return true;
    case Expr::Kind::meet:
    case Expr::Kind::join:
      return false;
    case Expr::Kind::med:
      return med_var_const_only(*e.child(0)) && med_var_const_only(*e.child(1)) &&
             med_var_const_only(*e.child(2));
  }
  return false;
}

FnTable tabulate(const LatticePtr& lattice, const Expr& e, int arity,
                 std::size_t budget, std::string fn_name) {
  if (max_var_index(e) > arity)
    throw PreconditionError("expression uses x" + std::to_string(max_var_index(e)) +
                            " but arity is " + std::to_string(arity));
  const std::size_t n = table_points(lattice->size(), arity, budget);
  std::vector<Elem> vals(n);
  std::vector<Elem> x(static_cast<std::size_t>(arity), 0);
  std::size_t t = 0;
  do {
    vals[t++] = eval_expr(*lattice, e, x);
  } while (next_tuple(lattice->size(), x));
  return FnTable(lattice, arity, std::move(vals), std::move(fn_name));
}

}  // namespace latpoly
