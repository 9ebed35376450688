#include "latpoly/fn_table.hpp"

#include <string>

namespace latpoly {

std::size_t table_points(int lattice_size, int arity, std::size_t budget) {
  if (arity < 1) throw PreconditionError("arity must be >= 1");
  auto p = checked_pow(static_cast<std::uint64_t>(lattice_size),
                       static_cast<unsigned>(arity), budget);
  if (!p)
    throw BudgetError("table of " + std::to_string(lattice_size) + "^" +
                      std::to_string(arity) + " entries exceeds budget " +
                      std::to_string(budget));
  return static_cast<std::size_t>(*p);
}

TupleIndex encode_tuple(int lattice_size, std::span<const Elem> x) {
  TupleIndex t = 0;
  TupleIndex scale = 1;
  for (Elem xi : x) {
    t += scale * static_cast<TupleIndex>(xi);
    scale *= static_cast<TupleIndex>(lattice_size);
  }
  return t;
}

std::vector<Elem> decode_tuple(int lattice_size, int arity, TupleIndex t) {
  std::vector<Elem> x(static_cast<std::size_t>(arity));
  for (int i = 0; i < arity; ++i) {
    x[static_cast<std::size_t>(i)] =
        static_cast<Elem>(t % static_cast<TupleIndex>(lattice_size));
    t /= static_cast<TupleIndex>(lattice_size);
  }
  return x;
}

bool next_tuple(int lattice_size, std::span<Elem> x) {
  for (auto& xi : x) {
    if (xi + 1 < lattice_size) {
      ++xi;
      return true;
    }
    xi = 0;
  }
  return false;
}

FnTable::FnTable(LatticePtr lattice, int arity, std::vector<Elem> values,
                 std::string fn_name)
    : lattice_(std::move(lattice)), arity_(arity), values_(std::move(values)),
      fn_name_(std::move(fn_name)) {
  if (arity_ < 1) throw PreconditionError("function arity must be >= 1");
  const std::size_t expect = table_points(lattice_->size(), arity_);
  if (values_.size() != expect)
    throw PreconditionError("function table has " + std::to_string(values_.size()) +
                            " entries, expected " + std::to_string(expect));
  for (Elem v : values_)
    if (v < 0 || v >= lattice_->size())
      throw PreconditionError("function table value out of range");
}

FnTable FnTable::constant(LatticePtr lattice, int arity, Elem value) {
  const std::size_t n = table_points(lattice->size(), arity);
  return FnTable(std::move(lattice), arity, std::vector<Elem>(n, value));
}

Elem value_at_cube(const FnTable& f, SubsetMask I) {
  const Lattice& L = f.lattice();
  std::vector<Elem> x(static_cast<std::size_t>(f.arity()), L.bottom());
  for (int i = 0; i < f.arity(); ++i)
    if (I & (SubsetMask{1} << i)) x[static_cast<std::size_t>(i)] = L.top();
  return f(x);
}

FnTable diagonal(const FnTable& f) {
  const Lattice& L = f.lattice();
  std::vector<Elem> vals(static_cast<std::size_t>(L.size()));
  for (Elem c = 0; c < L.size(); ++c) {
    std::vector<Elem> x(static_cast<std::size_t>(f.arity()), c);
    vals[static_cast<std::size_t>(c)] = f(x);
  }
  return FnTable(f.lattice_ptr(), 1, std::move(vals),
                 f.fn_name().empty() ? "" : f.fn_name() + "_diag");
}

std::vector<Elem> clamp_to_range(const FnTable& f, std::span<const Elem> x) {
  const Lattice& L = f.lattice();
  std::vector<Elem> bot(static_cast<std::size_t>(f.arity()), L.bottom());
  std::vector<Elem> top(static_cast<std::size_t>(f.arity()), L.top());
  const Elem lo = f(bot), hi = f(top);
  std::vector<Elem> out(x.begin(), x.end());
  for (auto& xi : out) xi = L.median(lo, xi, hi);
  return out;
}

}  // namespace latpoly
