#include "latpoly/lattice.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

namespace latpoly {

bool ElemSet::empty() const {
  return std::none_of(bits_.begin(), bits_.end(), [](bool b) { return b; });
}

int ElemSet::count() const {
  return static_cast<int>(std::count(bits_.begin(), bits_.end(), true));
}

std::vector<Elem> ElemSet::elements() const {
  std::vector<Elem> out;
  for (std::size_t i = 0; i < bits_.size(); ++i)
    if (bits_[i]) out.push_back(static_cast<Elem>(i));
  return out;
}

Lattice::Lattice(std::string name, std::vector<std::string> element_names,
                 std::vector<Elem> meet_table, std::vector<Elem> join_table,
                 Elem bottom, Elem top)
    : name_(std::move(name)),
      size_(static_cast<int>(element_names.size())),
      names_(std::move(element_names)),
      meet_(std::move(meet_table)),
      join_(std::move(join_table)),
      bottom_(bottom),
      top_(top) {
  validate();

  // Derive leq from meet, then the covering relation.
  const std::size_t m = static_cast<std::size_t>(size_);
  leq_.assign(m * m, 0);
  for (Elem a = 0; a < size_; ++a)
    for (Elem b = 0; b < size_; ++b)
      if (meet(a, b) == a) leq_[idx(a, b)] = 1;

  upper_covers_.assign(m, {});
  for (Elem a = 0; a < size_; ++a)
    for (Elem b = 0; b < size_; ++b) {
      if (!lt(a, b)) continue;
      bool covered = true;
      for (Elem c = 0; c < size_ && covered; ++c)
        if (lt(a, c) && lt(c, b)) covered = false;
      if (covered) upper_covers_[static_cast<std::size_t>(a)].push_back(b);
    }
}

namespace {

[[noreturn]] void fail(const std::string& lattice_name, const std::string& what) {
  throw ValidationError("lattice '" + lattice_name + "': " + what);
}

}  // namespace

void Lattice::validate() const {
  const std::size_t m = static_cast<std::size_t>(size_);
  if (size_ <= 0) fail(name_, "must have at least one element");
  {
    std::unordered_set<std::string> seen;
    for (const auto& n : names_) {
      if (n.empty()) fail(name_, "empty element name");
      if (!seen.insert(n).second) fail(name_, "duplicate element name '" + n + "'");
    }
  }
  if (meet_.size() != m * m || join_.size() != m * m)
    fail(name_, "operation tables must have size*size entries");
  for (Elem v : meet_)
    if (v < 0 || v >= size_) fail(name_, "meet table value out of range");
  for (Elem v : join_)
    if (v < 0 || v >= size_) fail(name_, "join table value out of range");
  if (bottom_ < 0 || bottom_ >= size_ || top_ < 0 || top_ >= size_)
    fail(name_, "bottom/top out of range");

  auto nm = [&](Elem a) { return names_[static_cast<std::size_t>(a)]; };
  auto pair_str = [&](Elem a, Elem b) { return "(" + nm(a) + ", " + nm(b) + ")"; };
  auto triple_str = [&](Elem a, Elem b, Elem c) {
    return "(" + nm(a) + ", " + nm(b) + ", " + nm(c) + ")";
  };

  for (Elem a = 0; a < size_; ++a) {
    if (meet(a, a) != a) fail(name_, "meet not idempotent at " + nm(a));
    if (join(a, a) != a) fail(name_, "join not idempotent at " + nm(a));
  }
  for (Elem a = 0; a < size_; ++a)
    for (Elem b = 0; b < size_; ++b) {
      if (meet(a, b) != meet(b, a))
        fail(name_, "meet not commutative at " + pair_str(a, b));
      if (join(a, b) != join(b, a))
        fail(name_, "join not commutative at " + pair_str(a, b));
      if (meet(a, join(a, b)) != a)
        fail(name_, "absorption a^(avb)=a fails at " + pair_str(a, b));
      if (join(a, meet(a, b)) != a)
        fail(name_, "absorption av(a^b)=a fails at " + pair_str(a, b));
    }
  for (Elem a = 0; a < size_; ++a)
    for (Elem b = 0; b < size_; ++b)
      for (Elem c = 0; c < size_; ++c) {
        if (meet(meet(a, b), c) != meet(a, meet(b, c)))
          fail(name_, "meet not associative at " + triple_str(a, b, c));
        if (join(join(a, b), c) != join(a, join(b, c)))
          fail(name_, "join not associative at " + triple_str(a, b, c));
        if (meet(a, join(b, c)) != join(meet(a, b), meet(a, c)))
          fail(name_, "not distributive: a^(bvc) != (a^b)v(a^c) at " +
                          triple_str(a, b, c));
      }
  for (Elem a = 0; a < size_; ++a) {
    if (meet(bottom_, a) != bottom_)
      fail(name_, "declared bottom '" + nm(bottom_) + "' is not below " + nm(a));
    if (join(top_, a) != top_)
      fail(name_, "declared top '" + nm(top_) + "' is not above " + nm(a));
  }
}

std::optional<Elem> Lattice::find_element(std::string_view name) const {
  for (Elem a = 0; a < size_; ++a)
    if (names_[static_cast<std::size_t>(a)] == name) return a;
  return std::nullopt;
}

std::vector<Elem> Lattice::topological_order() const {
  std::vector<int> downset(static_cast<std::size_t>(size_), 0);
  for (Elem a = 0; a < size_; ++a)
    for (Elem c = 0; c < size_; ++c)
      if (leq(c, a)) downset[static_cast<std::size_t>(a)]++;
  std::vector<Elem> order(static_cast<std::size_t>(size_));
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](Elem x, Elem y) {
    int dx = downset[static_cast<std::size_t>(x)];
    int dy = downset[static_cast<std::size_t>(y)];
    if (dx != dy) return dx < dy;
    return element_name(x) < element_name(y);
  });
  return order;
}

ElemSet Lattice::interval(Elem a, Elem b) const {
  if (!leq(a, b))
    throw PreconditionError("interval [" + element_name(a) + ", " + element_name(b) +
                            "] requires " + element_name(a) + " <= " + element_name(b));
  ElemSet out(size_);
  for (Elem c = 0; c < size_; ++c)
    if (leq(a, c) && leq(c, b)) out.add(c);
  return out;
}

bool Lattice::is_convex(const ElemSet& s) const {
  for (Elem u = 0; u < size_; ++u) {
    if (!s.contains(u)) continue;
    for (Elem w = 0; w < size_; ++w) {
      if (!s.contains(w) || !leq(u, w)) continue;
      for (Elem c = 0; c < size_; ++c)
        if (leq(u, c) && leq(c, w) && !s.contains(c)) return false;
    }
  }
  return true;
}

ElemSet Lattice::convex_hull(const ElemSet& s) const {
  ElemSet out = s;
  bool changed = true;
  while (changed) {
    changed = false;
    for (Elem u = 0; u < size_; ++u) {
      if (!out.contains(u)) continue;
      for (Elem w = 0; w < size_; ++w) {
        if (!out.contains(w) || !leq(u, w)) continue;
        for (Elem c = 0; c < size_; ++c)
          if (leq(u, c) && leq(c, w) && !out.contains(c)) {
            out.add(c);
            changed = true;
          }
      }
    }
  }
  return out;
}

ElemSet Lattice::all_elements() const {
  ElemSet out(size_);
  for (Elem a = 0; a < size_; ++a) out.add(a);
  return out;
}

namespace {

LatticePtr chain_impl(std::string name, std::vector<std::string> names, int size_cap) {
  const int m = static_cast<int>(names.size());
  if (m < 1) throw ValidationError("chain: need at least one element");
  if (m > size_cap)
    throw ValidationError("chain: " + std::to_string(m) + " elements exceeds cap " +
                          std::to_string(size_cap));
  const std::size_t sz = static_cast<std::size_t>(m);
  std::vector<Elem> meet(sz * sz), join(sz * sz);
  for (Elem a = 0; a < m; ++a)
    for (Elem b = 0; b < m; ++b) {
      meet[static_cast<std::size_t>(a) * sz + static_cast<std::size_t>(b)] = std::min(a, b);
      join[static_cast<std::size_t>(a) * sz + static_cast<std::size_t>(b)] = std::max(a, b);
    }
  return std::make_shared<Lattice>(std::move(name), std::move(names), std::move(meet),
                                   std::move(join), 0, m - 1);
}

}  // namespace

LatticePtr make_chain(int m, int size_cap) {
  if (m < 1) throw ValidationError("chain: size must be >= 1");
  std::vector<std::string> names;
  names.reserve(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) names.push_back(std::to_string(i));
  return chain_impl("chain" + std::to_string(m), std::move(names), size_cap);
}

LatticePtr make_chain(const std::vector<std::string>& names, int size_cap) {
  return chain_impl("chain" + std::to_string(names.size()), names, size_cap);
}

LatticePtr make_boolean(int k, int atom_cap) {
  if (k < 0) throw ValidationError("boolean: atom count must be >= 0");
  if (k > atom_cap)
    throw ValidationError("boolean: " + std::to_string(k) + " atoms exceeds cap " +
                          std::to_string(atom_cap));
  const int m = 1 << k;
  const std::size_t sz = static_cast<std::size_t>(m);
  std::vector<std::string> names(sz);
  for (int mask = 0; mask < m; ++mask) {
    if (mask == 0) {
      names[static_cast<std::size_t>(mask)] = "{}";
      continue;
    }
    std::string n = "{";
    for (int i = 0; i < k; ++i)
      if (mask & (1 << i)) {
        if (n.size() > 1) n += ",";
        n += std::to_string(i + 1);
      }
    n += "}";
    names[static_cast<std::size_t>(mask)] = n;
  }
  std::vector<Elem> meet(sz * sz), join(sz * sz);
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) {
      meet[static_cast<std::size_t>(a) * sz + static_cast<std::size_t>(b)] = a & b;
      join[static_cast<std::size_t>(a) * sz + static_cast<std::size_t>(b)] = a | b;
    }
  return std::make_shared<Lattice>("boolean" + std::to_string(k), std::move(names),
                                   std::move(meet), std::move(join), 0, m - 1);
}

LatticePtr make_product(const LatticePtr& a, const LatticePtr& b, int size_cap) {
  const int ma = a->size(), mb = b->size();
  const int m = ma * mb;
  if (m > size_cap)
    throw ValidationError("product: " + std::to_string(m) + " elements exceeds cap " +
                          std::to_string(size_cap));
  const std::size_t sz = static_cast<std::size_t>(m);
  auto id = [&](Elem x, Elem y) { return x + ma * y; };

  std::vector<std::string> names(sz);
  bool collision = false;
  {
    std::unordered_set<std::string> seen;
    for (Elem y = 0; y < mb; ++y)
      for (Elem x = 0; x < ma; ++x) {
        std::string n = a->element_name(x) + b->element_name(y);
        if (!seen.insert(n).second) collision = true;
        names[static_cast<std::size_t>(id(x, y))] = std::move(n);
      }
    if (collision)
      for (Elem y = 0; y < mb; ++y)
        for (Elem x = 0; x < ma; ++x)
          names[static_cast<std::size_t>(id(x, y))] =
              a->element_name(x) + "|" + b->element_name(y);
  }

  std::vector<Elem> meet(sz * sz), join(sz * sz);
  for (Elem y1 = 0; y1 < mb; ++y1)
    for (Elem x1 = 0; x1 < ma; ++x1)
      for (Elem y2 = 0; y2 < mb; ++y2)
        for (Elem x2 = 0; x2 < ma; ++x2) {
          const std::size_t at = static_cast<std::size_t>(id(x1, y1)) * sz +
                                 static_cast<std::size_t>(id(x2, y2));
          meet[at] = id(a->meet(x1, x2), b->meet(y1, y2));
          join[at] = id(a->join(x1, x2), b->join(y1, y2));
        }
  return std::make_shared<Lattice>(a->name() + "x" + b->name(), std::move(names),
                                   std::move(meet), std::move(join),
                                   id(a->bottom(), b->bottom()), id(a->top(), b->top()));
}

LatticePtr make_diamond() {
  return from_covers("diamond", {"0", "a", "b", "1"},
                     {{"0", "a"}, {"0", "b"}, {"a", "1"}, {"b", "1"}}, "0", "1");
}

LatticePtr from_covers(std::string lattice_name, const std::vector<std::string>& names,
                       const std::vector<std::pair<std::string, std::string>>& covers,
                       const std::string& bottom_name, const std::string& top_name,
                       int size_cap) {
  const int m = static_cast<int>(names.size());
  if (m < 1) throw ValidationError("lattice '" + lattice_name + "': no elements");
  if (m > size_cap)
    throw ValidationError("lattice '" + lattice_name + "': " + std::to_string(m) +
                          " elements exceeds cap " + std::to_string(size_cap));
  std::unordered_map<std::string, Elem> by_name;
  for (Elem i = 0; i < m; ++i) {
    if (!by_name.emplace(names[static_cast<std::size_t>(i)], i).second)
      throw ValidationError("lattice '" + lattice_name + "': duplicate element name '" +
                            names[static_cast<std::size_t>(i)] + "'");
  }
  auto resolve = [&](const std::string& n) -> Elem {
    auto it = by_name.find(n);
    if (it == by_name.end())
      throw ValidationError("lattice '" + lattice_name + "': unknown element '" + n + "'");
    return it->second;
  };

  const std::size_t sz = static_cast<std::size_t>(m);
  std::vector<std::uint8_t> leq(sz * sz, 0);
  auto at = [&](Elem a, Elem b) -> std::uint8_t& {
    return leq[static_cast<std::size_t>(a) * sz + static_cast<std::size_t>(b)];
  };
  for (Elem a = 0; a < m; ++a) at(a, a) = 1;
  for (const auto& [lo, hi] : covers) {
    Elem a = resolve(lo), b = resolve(hi);
    if (a == b)
      throw ValidationError("lattice '" + lattice_name + "': cover of '" + lo +
                            "' by itself");
    at(a, b) = 1;
  }
  // Warshall closure.
  for (Elem k = 0; k < m; ++k)
    for (Elem a = 0; a < m; ++a)
      if (at(a, k))
        for (Elem b = 0; b < m; ++b)
          if (at(k, b)) at(a, b) = 1;
  for (Elem a = 0; a < m; ++a)
    for (Elem b = 0; b < m; ++b)
      if (a != b && at(a, b) && at(b, a))
        throw ValidationError("lattice '" + lattice_name + "': cover cycle through '" +
                              names[static_cast<std::size_t>(a)] + "' and '" +
                              names[static_cast<std::size_t>(b)] + "'");

  std::vector<Elem> meet(sz * sz), join(sz * sz);
  for (Elem a = 0; a < m; ++a)
    for (Elem b = 0; b < m; ++b) {
      Elem glb = -1, lub = -1;
      for (Elem c = 0; c < m; ++c) {
        if (at(c, a) && at(c, b)) {
          bool greatest = true;
          for (Elem d = 0; d < m && greatest; ++d)
            if (at(d, a) && at(d, b) && !at(d, c)) greatest = false;
          if (greatest) glb = c;
        }
        if (at(a, c) && at(b, c)) {
          bool least = true;
          for (Elem d = 0; d < m && least; ++d)
            if (at(a, d) && at(b, d) && !at(c, d)) least = false;
          if (least) lub = c;
        }
      }
      const std::string pair_str = "(" + names[static_cast<std::size_t>(a)] + ", " +
                                   names[static_cast<std::size_t>(b)] + ")";
      if (glb < 0)
        throw ValidationError("lattice '" + lattice_name +
                              "': no greatest lower bound for " + pair_str);
      if (lub < 0)
        throw ValidationError("lattice '" + lattice_name +
                              "': no least upper bound for " + pair_str);
      meet[static_cast<std::size_t>(a) * sz + static_cast<std::size_t>(b)] = glb;
      join[static_cast<std::size_t>(a) * sz + static_cast<std::size_t>(b)] = lub;
    }

  Elem bot = resolve(bottom_name), top = resolve(top_name);
  return std::make_shared<Lattice>(std::move(lattice_name),
                                   std::vector<std::string>(names), std::move(meet),
                                   std::move(join), bot, top);
}

}  // namespace latpoly
