#pragma once

#include <string>

#include "latpoly/expr.hpp"
#include "latpoly/fn_table.hpp"
#include "latpoly/lattice.hpp"
#include "latpoly/normal_form.hpp"

namespace latpoly {

// Lattice text, one directive per line; '#' starts a comment anywhere.
//   lattice <name>
//   elements <n1> <n2> ...
//   bottom <n>
//   top <n>
// then either `cover <lower> <upper>` lines, or complete operation tables as
// `meet <a> <b> <c>` / `join <a> <b> <c>` triples (every pair, both tables).
// A file may instead consist of a single shorthand directive:
//   chain <m>  |  boolean <k>  |  product <file1> <file2>
// Product operands are resolved relative to `base_dir`.
LatticePtr parse_lattice(const std::string& text,
                         const std::string& base_dir = ".");
LatticePtr read_lattice_file(const std::string& path);

// Function file: header `function <name> arity <n> over <lattice-name>`,
// then either size^n table lines `x1 ... xn -> y` (element names, any tuple
// order, each tuple exactly once) or a single s-expression line which gets
// tabulated. The header's lattice name must match the given lattice.
FnTable parse_function(const std::string& text, const LatticePtr& lattice);
FnTable read_function_file(const std::string& path, const LatticePtr& lattice);

// Subset-indexed value file: header `measure <name> arity <n> over
// <lattice-name>` (or `coefficients ...` for general coefficient maps), then
// one `I -> value` line per subset with I a comma-separated list of 1-based
// argument indices, `empty`, or `full`. Purely syntactic: measure axioms are
// checked separately by validate_measure.
struct NamedCoeffMap {
  std::string name;
  std::string keyword;  // "measure" or "coefficients"
  CoeffMap map;
};
NamedCoeffMap parse_coeff_map(const std::string& text, const Lattice& lattice);
NamedCoeffMap read_coeff_map_file(const std::string& path,
                                  const Lattice& lattice);

// Canonical writers; parsing their output reproduces the object exactly.
// write_lattice lists elements in topological order and emits cover lines.
std::string write_lattice(const Lattice& lattice);
std::string write_function(const FnTable& f, const std::string& name = "");
std::string write_coeff_map(const CoeffMap& c, const Lattice& lattice,
                            const std::string& name,
                            const std::string& keyword = "coefficients");
std::string write_measure(const CoeffMap& mu, const Lattice& lattice,
                          const std::string& name);

}  // namespace latpoly
