#pragma once

// Dense tabulation of a function L^n -> L.
// Tuples are indexed mixed-radix, x1 varying fastest:
//   index(x1..xn) = x1 + m*x2 + m^2*x3 + ...

#include <span>
#include <string>
#include <vector>

#include "latpoly/lattice.hpp"

namespace latpoly {

// m^n as a size, with a budget check.
std::size_t table_points(int lattice_size, int arity,
                         std::size_t budget = kDefaultTableBudget);

TupleIndex encode_tuple(int lattice_size, std::span<const Elem> x);
std::vector<Elem> decode_tuple(int lattice_size, int arity, TupleIndex t);

// Odometer step in the canonical order; false once x wraps back to all-bottom...
// x must hold element ids valid for the lattice size.
bool next_tuple(int lattice_size, std::span<Elem> x);

class FnTable {
 public:
  FnTable(LatticePtr lattice, int arity, std::vector<Elem> values,
          std::string fn_name = "");

  static FnTable constant(LatticePtr lattice, int arity, Elem value);

  const Lattice& lattice() const { return *lattice_; }
  const LatticePtr& lattice_ptr() const { return lattice_; }
  int arity() const { return arity_; }
  const std::string& fn_name() const { return fn_name_; }
  std::size_t points() const { return values_.size(); }
  const std::vector<Elem>& values() const { return values_; }

  Elem value_at(TupleIndex t) const { return values_[t]; }
  Elem operator()(std::span<const Elem> x) const {
    return values_[encode_tuple(lattice_->size(), x)];
  }

  // Same lattice object, arity, and values.
  bool same_function(const FnTable& other) const {
    return lattice_ == other.lattice_ && arity_ == other.arity_ &&
           values_ == other.values_;
  }

 private:
  LatticePtr lattice_;
  int arity_;
  std::vector<Elem> values_;
  std::string fn_name_;
};

// Value at the 0/1 tuple e_I (top on the coordinates in I, bottom elsewhere).
Elem value_at_cube(const FnTable& f, SubsetMask I);

// Unary diagonal x -> f(x,...,x).
FnTable diagonal(const FnTable& f);

// Componentwise median(f(bot..bot), x_i, f(top..top)).
std::vector<Elem> clamp_to_range(const FnTable& f, std::span<const Elem> x);

}  // namespace latpoly
