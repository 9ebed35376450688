#pragma once

// Expression trees over a lattice: variables x1..xn, named constants, meet,
// join, and a primitive ternary median node. The median node is kept primitive
// (not desugared) so printed normal forms parse back to the same shape; its
// evaluation agrees with the meet/join expansion by construction.
//
// Text form:  (meet E E) | (join E E) | (med E E E) | x<k> | c:<name>

#include <memory>
#include <span>
#include <string>
#include <string_view>

#include "latpoly/fn_table.hpp"
#include "latpoly/lattice.hpp"

namespace latpoly {

class Expr;
using ExprPtr = std::shared_ptr<const Expr>;

class Expr {
 public:
  enum class Kind { var, constant, meet, join, med };

  Kind kind() const { return kind_; }
  int var_index() const { return var_index_; }       // 1-based, kind == var
  Elem constant_value() const { return value_; }     // kind == constant
  const ExprPtr& child(int i) const { return kids_[static_cast<std::size_t>(i)]; }

  static ExprPtr var(int index);
  static ExprPtr constant(Elem value);
  static ExprPtr meet(ExprPtr l, ExprPtr r);
  static ExprPtr join(ExprPtr l, ExprPtr r);
  static ExprPtr med(ExprPtr a, ExprPtr b, ExprPtr c);

 private:
  Kind kind_;
  int var_index_ = 0;
  Elem value_ = 0;
  ExprPtr kids_[3];
};

// Parses one s-expression. Constants are resolved against the lattice; variable
// indices must lie in 1..arity. Errors carry a character position.
ExprPtr parse_expr(std::string_view text, const Lattice& lattice, int arity);

std::string to_string(const Expr& e, const Lattice& lattice);

Elem eval_expr(const Lattice& lattice, const Expr& e, std::span<const Elem> x);

// Highest variable index appearing (0 for constant-only expressions).
int max_var_index(const Expr& e);

// True when the tree contains only med / var / constant nodes.
bool med_var_const_only(const Expr& e);

FnTable tabulate(const LatticePtr& lattice, const Expr& e, int arity,
                 std::size_t budget = kDefaultTableBudget, std::string fn_name = "");

}  // namespace latpoly
