#include "latpoly/io.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <utility>
#include <vector>

namespace latpoly {

namespace {

struct Line {
  int number;
  std::vector<std::string> tokens;
};

// comment-stripped, whitespace-tokenized nonblank lines
std::vector<Line> tokenize(const std::string& text) {
  std::vector<Line> out;
  std::istringstream in(text);
  std::string raw;
  int number = 0;
  while (std::getline(in, raw)) {
    ++number;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    std::istringstream ls(raw);
    Line line{number, {}};
    std::string tok;
    while (ls >> tok) line.tokens.push_back(tok);
    if (!line.tokens.empty()) out.push_back(std::move(line));
  }
  return out;
}

int parse_int(const std::string& tok, const char* what, int line) {
  int value = 0;
  auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc{} || p != tok.data() + tok.size())
    throw ParseError(std::string(what) + " must be an integer, got '" + tok + "'",
                     line);
  return value;
}

Elem resolve_name(const Lattice& L, const std::string& name, int line) {
  if (auto e = L.find_element(name)) return *e;
  throw ParseError("unknown element '" + name + "'", line);
}

std::string tuple_names(const Lattice& L, const std::vector<Elem>& x) {
  std::string s = "(";
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (i) s += ", ";
    s += L.element_name(x[i]);
  }
  return s + ")";
}

// body of parse_lattice once the shorthand forms are ruled out
LatticePtr parse_full_lattice(const std::vector<Line>& lines) {
  std::string name;
  std::vector<std::string> element_names;
  std::string bottom, top;
  std::vector<std::pair<std::string, std::string>> covers;
  // tables keyed by name pairs until all elements are known
  std::vector<std::array<std::string, 3>> meet_rows, join_rows;
  bool saw_lattice = false, saw_elements = false;

  for (const auto& line : lines) {
    const auto& t = line.tokens;
    const std::string& kw = t[0];
    if (kw == "lattice") {
      if (saw_lattice) throw ParseError("duplicate 'lattice' directive", line.number);
      if (t.size() != 2) throw ParseError("expected 'lattice <name>'", line.number);
      name = t[1];
      saw_lattice = true;
      continue;
    }
    if (!saw_lattice)
      throw ParseError("the first directive must be 'lattice <name>'", line.number);
    if (kw == "elements") {
      if (saw_elements) throw ParseError("duplicate 'elements' directive", line.number);
      if (t.size() < 2) throw ParseError("'elements' needs at least one name", line.number);
      element_names.assign(t.begin() + 1, t.end());
      saw_elements = true;
      continue;
    }
    if (!saw_elements)
      throw ParseError("'" + kw + "' must come after 'elements'", line.number);
    if (kw == "bottom" || kw == "top") {
      std::string& slot = kw == "bottom" ? bottom : top;
      if (!slot.empty()) throw ParseError("duplicate '" + kw + "' directive", line.number);
      if (t.size() != 2) throw ParseError("expected '" + kw + " <name>'", line.number);
      slot = t[1];
      continue;
    }
    if (kw == "cover") {
      if (!meet_rows.empty() || !join_rows.empty())
        throw ParseError("cannot mix 'cover' lines with operation tables", line.number);
      if (t.size() != 3) throw ParseError("expected 'cover <lower> <upper>'", line.number);
      covers.emplace_back(t[1], t[2]);
      continue;
    }
    if (kw == "meet" || kw == "join") {
      if (!covers.empty())
        throw ParseError("cannot mix operation tables with 'cover' lines", line.number);
      if (t.size() != 4)
        throw ParseError("expected '" + kw + " <a> <b> <c>'", line.number);
      (kw == "meet" ? meet_rows : join_rows).push_back({t[1], t[2], t[3]});
      continue;
    }
    throw ParseError("unknown directive '" + kw + "'", line.number);
  }

  if (!saw_lattice) throw ParseError("missing 'lattice <name>' directive");
  if (!saw_elements) throw ParseError("missing 'elements' directive");
  if (bottom.empty()) throw ParseError("missing 'bottom' directive");
  if (top.empty()) throw ParseError("missing 'top' directive");

  if (meet_rows.empty() && join_rows.empty())
    return from_covers(name, element_names, covers, bottom, top);

  // table form: both tables, every pair exactly once
  const int m = static_cast<int>(element_names.size());
  auto id_of = [&](const std::string& n) -> Elem {
    for (int i = 0; i < m; ++i)
      if (element_names[static_cast<std::size_t>(i)] == n) return i;
    throw ParseError("unknown element '" + n + "'");
  };
  const std::size_t sz = static_cast<std::size_t>(m);
  std::vector<Elem> meet(sz * sz, -1), join(sz * sz, -1);
  auto fill = [&](const std::vector<std::array<std::string, 3>>& rows,
                  std::vector<Elem>& table, const char* op) {
    for (const auto& r : rows) {
      Elem a = id_of(r[0]), b = id_of(r[1]), c = id_of(r[2]);
      Elem& slot = table[static_cast<std::size_t>(a) * sz + static_cast<std::size_t>(b)];
      if (slot >= 0)
        throw ParseError("duplicate " + std::string(op) + " entry for (" + r[0] +
                         ", " + r[1] + ")");
      slot = c;
    }
    for (Elem a = 0; a < m; ++a)
      for (Elem b = 0; b < m; ++b)
        if (table[static_cast<std::size_t>(a) * sz + static_cast<std::size_t>(b)] < 0)
          throw ParseError("missing " + std::string(op) + " entry for (" +
                           element_names[static_cast<std::size_t>(a)] + ", " +
                           element_names[static_cast<std::size_t>(b)] + ")");
  };
  fill(meet_rows, meet, "meet");
  fill(join_rows, join, "join");
  return std::make_shared<Lattice>(name, element_names, std::move(meet),
                                   std::move(join), id_of(bottom), id_of(top));
}

}  // namespace

LatticePtr parse_lattice(const std::string& text, const std::string& base_dir) {
  auto lines = tokenize(text);
  if (lines.empty()) throw ParseError("empty lattice description");
  const auto& first = lines[0];
  const std::string& kw = first.tokens[0];
  if (kw == "chain" || kw == "boolean" || kw == "product") {
    if (lines.size() != 1)
      throw ParseError("'" + kw + "' shorthand must be the only directive",
                       lines[1].number);
    if (kw == "chain") {
      if (first.tokens.size() != 2)
        throw ParseError("expected 'chain <m>'", first.number);
      return make_chain(parse_int(first.tokens[1], "chain size", first.number));
    }
    if (kw == "boolean") {
      if (first.tokens.size() != 2)
        throw ParseError("expected 'boolean <k>'", first.number);
      return make_boolean(parse_int(first.tokens[1], "atom count", first.number));
    }
    if (first.tokens.size() != 3)
      throw ParseError("expected 'product <file1> <file2>'", first.number);
    namespace fs = std::filesystem;
    auto a = read_lattice_file((fs::path(base_dir) / first.tokens[1]).string());
    auto b = read_lattice_file((fs::path(base_dir) / first.tokens[2]).string());
    return make_product(a, b);
  }
  return parse_full_lattice(lines);
}

LatticePtr read_lattice_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open lattice file '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_lattice(buf.str(),
                       std::filesystem::path(path).parent_path().string());
}

FnTable parse_function(const std::string& text, const LatticePtr& lattice) {
  const Lattice& L = *lattice;
  auto lines = tokenize(text);
  if (lines.empty()) throw ParseError("empty function description");
  const auto& h = lines[0].tokens;
  if (h.size() != 6 || h[0] != "function" || h[2] != "arity" || h[4] != "over")
    throw ParseError("expected 'function <name> arity <n> over <lattice-name>'",
                     lines[0].number);
  const std::string& fname = h[1];
  const int arity = parse_int(h[3], "arity", lines[0].number);
  if (arity < 1) throw ParseError("arity must be >= 1", lines[0].number);
  if (h[5] != L.name())
    throw ParseError("function is over '" + h[5] + "' but the loaded lattice is '" +
                     L.name() + "'", lines[0].number);
  if (lines.size() < 2) throw ParseError("missing function body");

  TupleIndex points = 1;
  for (int i = 0; i < arity; ++i) {
    if (points > kDefaultTableBudget / static_cast<TupleIndex>(L.size()))
      throw BudgetError("function table over " + L.name() + " with arity " +
                        std::to_string(arity) + " exceeds the table budget");
    points *= static_cast<TupleIndex>(L.size());
  }

  // a body line without '->' is an expression; otherwise it is a table row
  bool is_expr = true;
  for (const auto& tok : lines[1].tokens)
    if (tok == "->") is_expr = false;
  if (is_expr) {
    if (lines.size() != 2)
      throw ParseError("an expression body must be a single line", lines[2].number);
    std::string body;
    for (const auto& tok : lines[1].tokens) {
      if (!body.empty()) body += " ";
      body += tok;
    }
    ExprPtr e;
    try {
      e = parse_expr(body, L, arity);
    } catch (const ParseError& err) {
      throw ParseError(std::string(err.what()), lines[1].number);
    }
    return tabulate(lattice, *e, arity, kDefaultTableBudget, fname);
  }

  std::vector<Elem> values(points, 0);
  std::vector<bool> seen(points, false);
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto& t = lines[i].tokens;
    if (t.size() != static_cast<std::size_t>(arity) + 2 ||
        t[static_cast<std::size_t>(arity)] != "->")
      throw ParseError("expected 'x1 ... x" + std::to_string(arity) + " -> y'",
                       lines[i].number);
    std::vector<Elem> x(static_cast<std::size_t>(arity));
    for (int k = 0; k < arity; ++k)
      x[static_cast<std::size_t>(k)] =
          resolve_name(L, t[static_cast<std::size_t>(k)], lines[i].number);
    Elem y = resolve_name(L, t[static_cast<std::size_t>(arity) + 1], lines[i].number);
    TupleIndex at = encode_tuple(L.size(), x);
    if (seen[at])
      throw ParseError("duplicate table entry for " + tuple_names(L, x),
                       lines[i].number);
    seen[at] = true;
    values[at] = y;
  }
  for (TupleIndex t = 0; t < points; ++t)
    if (!seen[t])
      throw ParseError("function table is missing an entry for " +
                       tuple_names(L, decode_tuple(L.size(), arity, t)));
  return FnTable(lattice, arity, std::move(values), fname);
}

FnTable read_function_file(const std::string& path, const LatticePtr& lattice) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open function file '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_function(buf.str(), lattice);
}

NamedCoeffMap parse_coeff_map(const std::string& text, const Lattice& lattice) {
  auto lines = tokenize(text);
  if (lines.empty()) throw ParseError("empty coefficient description");
  const auto& h = lines[0].tokens;
  if (h.size() != 6 || (h[0] != "measure" && h[0] != "coefficients") ||
      h[2] != "arity" || h[4] != "over")
    throw ParseError(
        "expected 'measure <name> arity <n> over <lattice-name>'",
        lines[0].number);
  const int arity = parse_int(h[3], "arity", lines[0].number);
  if (arity < 1 || arity > 20)
    throw ParseError("arity must be between 1 and 20", lines[0].number);
  if (h[5] != lattice.name())
    throw ParseError("values are over '" + h[5] + "' but the loaded lattice is '" +
                     lattice.name() + "'", lines[0].number);

  const SubsetMask full = (SubsetMask{1} << arity) - 1;
  std::vector<Elem> values(static_cast<std::size_t>(full) + 1, 0);
  std::vector<bool> seen(static_cast<std::size_t>(full) + 1, false);
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto& t = lines[i].tokens;
    if (t.size() != 3 || t[1] != "->")
      throw ParseError("expected '<subset> -> <value>'", lines[i].number);
    SubsetMask mask = 0;
    if (t[0] == "empty") {
      mask = 0;
    } else if (t[0] == "full") {
      mask = full;
    } else {
      std::istringstream ss(t[0]);
      std::string part;
      while (std::getline(ss, part, ',')) {
        int idx = parse_int(part, "argument index", lines[i].number);
        if (idx < 1 || idx > arity)
          throw ParseError("argument index " + std::to_string(idx) +
                           " out of range 1.." + std::to_string(arity),
                           lines[i].number);
        SubsetMask bit = SubsetMask{1} << (idx - 1);
        if (mask & bit)
          throw ParseError("repeated argument index " + std::to_string(idx),
                           lines[i].number);
        mask |= bit;
      }
      if (mask == 0) throw ParseError("empty subset spelled out; use 'empty'",
                                      lines[i].number);
    }
    if (seen[mask])
      throw ParseError("duplicate entry for subset " + mask_str(mask, arity),
                       lines[i].number);
    seen[mask] = true;
    values[mask] = resolve_name(lattice, t[2], lines[i].number);
  }
  for (SubsetMask m = 0; m <= full; ++m)
    if (!seen[m])
      throw ParseError("missing entry for subset " + mask_str(m, arity));
  return {h[1], h[0], CoeffMap{arity, std::move(values)}};
}

NamedCoeffMap read_coeff_map_file(const std::string& path,
                                  const Lattice& lattice) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open file '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_coeff_map(buf.str(), lattice);
}

std::string write_lattice(const Lattice& lattice) {
  std::vector<Elem> order = lattice.topological_order();
  std::vector<int> pos(static_cast<std::size_t>(lattice.size()), 0);
  for (std::size_t i = 0; i < order.size(); ++i)
    pos[static_cast<std::size_t>(order[i])] = static_cast<int>(i);

  std::string out = "lattice " + lattice.name() + "\nelements";
  for (Elem a : order) out += " " + lattice.element_name(a);
  out += "\nbottom " + lattice.element_name(lattice.bottom());
  out += "\ntop " + lattice.element_name(lattice.top());
  out += "\n";
  for (Elem a : order) {
    std::vector<Elem> ups = lattice.upper_covers(a);
    std::sort(ups.begin(), ups.end(), [&](Elem x, Elem y) {
      return pos[static_cast<std::size_t>(x)] < pos[static_cast<std::size_t>(y)];
    });
    for (Elem b : ups)
      out += "cover " + lattice.element_name(a) + " " + lattice.element_name(b) +
             "\n";
  }
  return out;
}

std::string write_function(const FnTable& f, const std::string& name) {
  const Lattice& L = f.lattice();
  std::string fname = name.empty() ? (f.fn_name().empty() ? "f" : f.fn_name())
                                   : name;
  std::string out = "function " + fname + " arity " + std::to_string(f.arity()) +
                    " over " + L.name() + "\n";
  for (TupleIndex t = 0; t < f.points(); ++t) {
    auto x = decode_tuple(L.size(), f.arity(), t);
    for (Elem xi : x) out += L.element_name(xi) + " ";
    out += "-> " + L.element_name(f.value_at(t)) + "\n";
  }
  return out;
}

std::string write_coeff_map(const CoeffMap& c, const Lattice& lattice,
                            const std::string& name,
                            const std::string& keyword) {
  const SubsetMask full = (SubsetMask{1} << c.arity) - 1;
  std::string out = keyword + " " + name + " arity " + std::to_string(c.arity) +
                    " over " + lattice.name() + "\n";
  for (SubsetMask m = 0; m <= full; ++m) {
    if (m == 0) {
      out += "empty";
    } else if (m == full) {
      out += "full";
    } else {
      bool first = true;
      for (int i = 0; i < c.arity; ++i)
        if (m & (SubsetMask{1} << i)) {
          if (!first) out += ",";
          out += std::to_string(i + 1);
          first = false;
        }
    }
    out += " -> " + lattice.element_name(c.values[m]) + "\n";
  }
  return out;
}

std::string write_measure(const CoeffMap& mu, const Lattice& lattice,
                          const std::string& name) {
  return write_coeff_map(mu, lattice, name, "measure");
}

}  // namespace latpoly
