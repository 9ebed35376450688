#pragma once

// Finite bounded distributive lattices with dense operation tables.
// Construction always validates the full axiom set (commutativity, associativity,
// absorption, idempotency, distributivity, bounds) and rejects anything else
// with a witness in the error message.

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "latpoly/config.hpp"
#include "latpoly/errors.hpp"

namespace latpoly {

// Subset of one lattice's elements, dense bitmap keyed by element id.
class ElemSet {
 public:
  ElemSet() = default;
  explicit ElemSet(int universe) : bits_(static_cast<std::size_t>(universe), false) {}

  int universe() const { return static_cast<int>(bits_.size()); }
  bool contains(Elem a) const { return bits_[static_cast<std::size_t>(a)]; }
  void add(Elem a) { bits_[static_cast<std::size_t>(a)] = true; }
  void remove(Elem a) { bits_[static_cast<std::size_t>(a)] = false; }
  bool empty() const;
  int count() const;
  std::vector<Elem> elements() const;  // ascending ids

  bool operator==(const ElemSet&) const = default;

 private:
  std::vector<bool> bits_;
};

class Lattice {
 public:
  // Tables are row-major (index a * size + b). Throws ValidationError unless the
  // data describes a bounded distributive lattice with the given extrema.
  Lattice(std::string name, std::vector<std::string> element_names,
          std::vector<Elem> meet_table, std::vector<Elem> join_table,
          Elem bottom, Elem top);

  int size() const { return size_; }
  const std::string& name() const { return name_; }

  Elem meet(Elem a, Elem b) const { return meet_[idx(a, b)]; }
  Elem join(Elem a, Elem b) const { return join_[idx(a, b)]; }
  bool leq(Elem a, Elem b) const { return leq_[idx(a, b)] != 0; }
  bool lt(Elem a, Elem b) const { return a != b && leq(a, b); }
  Elem bottom() const { return bottom_; }
  Elem top() const { return top_; }

  // Ternary median (a^b)v(b^c)v(c^a); equals (avb)^(bvc)^(cva) by distributivity.
  Elem median(Elem a, Elem b, Elem c) const {
    return join(join(meet(a, b), meet(b, c)), meet(c, a));
  }

  const std::string& element_name(Elem a) const {
    return names_[static_cast<std::size_t>(a)];
  }
  std::optional<Elem> find_element(std::string_view name) const;

  // Elements directly above a (covering relation).
  const std::vector<Elem>& upper_covers(Elem a) const {
    return upper_covers_[static_cast<std::size_t>(a)];
  }

  // Deterministic linear extension of leq: ascending by down-set size,
  // ties broken by element name. Used for canonical serialization.
  std::vector<Elem> topological_order() const;

  // {c : a <= c <= b}; requires a <= b.
  ElemSet interval(Elem a, Elem b) const;

  // Every c with u <= c <= w for u,w in S is already in S.
  bool is_convex(const ElemSet& s) const;

  // Smallest convex superset, computed as a fixpoint of interval insertion.
  ElemSet convex_hull(const ElemSet& s) const;

  ElemSet all_elements() const;

 private:
  std::size_t idx(Elem a, Elem b) const {
    return static_cast<std::size_t>(a) * static_cast<std::size_t>(size_) +
           static_cast<std::size_t>(b);
  }
  void validate() const;

  std::string name_;
  int size_ = 0;
  std::vector<std::string> names_;
  std::vector<Elem> meet_, join_;
  std::vector<std::uint8_t> leq_;
  Elem bottom_ = 0, top_ = 0;
  std::vector<std::vector<Elem>> upper_covers_;
};

using LatticePtr = std::shared_ptr<const Lattice>;

// Total order 0 < 1 < ... < m-1 with numeric element names.
LatticePtr make_chain(int m, int size_cap = kDefaultLatticeCap);

// Chain with caller-supplied names, bottom first.
LatticePtr make_chain(const std::vector<std::string>& names,
                      int size_cap = kDefaultLatticeCap);

// Subsets of {1..k} ordered by inclusion; element ids are the bitmasks.
LatticePtr make_boolean(int k, int atom_cap = kDefaultBooleanCap);

// Componentwise order on pairs; id = a + |A|*b, names concatenated.
LatticePtr make_product(const LatticePtr& a, const LatticePtr& b,
                        int size_cap = kDefaultLatticeCap);

// The four-element lattice 0 < a,b < 1 with a,b incomparable.
LatticePtr make_diamond();

// Builds tables from a covering relation: reflexive-transitive closure, then
// pairwise glb/lub (error for any pair without one), then full validation.
LatticePtr from_covers(std::string lattice_name,
                       const std::vector<std::string>& names,
                       const std::vector<std::pair<std::string, std::string>>& covers,
                       const std::string& bottom_name, const std::string& top_name,
                       int size_cap = kDefaultLatticeCap);

}  // namespace latpoly
