// command-line front end: validation, classification, normal forms,
// property checks, equivalence sweeps, and the built-in fixture gallery
#include <cstdint>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "latpoly/classes.hpp"
#include "latpoly/gallery.hpp"
#include "latpoly/harness.hpp"
#include "latpoly/io.hpp"

using namespace latpoly;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitViolation = 1;
constexpr int kExitInput = 2;
constexpr int kExitBudget = 3;

struct Options {
  bool machine = false;
  std::string lattice_spec;
  std::string file;
  std::string property;
  LevelSetMode mode = LevelSetMode::hull;
  bool form_dnf = false, form_cnf = false, form_median = false;
  bool kind_main = false, kind_sugeno = false;
  bool exhaustive = false;
  long long samples = 0;
  std::uint64_t seed = 1;
  long long sweep_budget = 1000000;
  std::size_t enum_budget = kDefaultEnumBudget;
};

// file path, or one of the inline spellings chain:<m>, boolean:<k>, diamond
LatticePtr load_lattice(const std::string& spec) {
  if (spec.empty()) throw ParseError("no lattice given; pass --lattice");
  if (spec == "diamond") return make_diamond();
  if (spec.rfind("chain:", 0) == 0)
    return make_chain(std::stoi(spec.substr(6)));
  if (spec.rfind("boolean:", 0) == 0)
    return make_boolean(std::stoi(spec.substr(8)));
  return read_lattice_file(spec);
}

std::string yn(bool b) { return b ? "yes" : "no"; }
std::string bit(bool b) { return b ? "1" : "0"; }

std::string joined_names(const Lattice& L, const std::vector<Elem>& xs) {
  std::string s;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) s += ",";
    s += L.element_name(xs[i]);
  }
  return s;
}

void print_witness_machine(const Lattice& L, const Witness& w) {
  if (!w.x.empty()) std::cout << "witness_x=" << joined_names(L, w.x) << "\n";
  if (!w.y.empty()) std::cout << "witness_y=" << joined_names(L, w.y) << "\n";
  if (w.coord >= 0) std::cout << "witness_coord=" << w.coord + 1 << "\n";
  for (auto [key, e] : {std::pair{"witness_c", w.c}, {"witness_r", w.r},
                        {"witness_s", w.s}, {"witness_a", w.a},
                        {"witness_b", w.b}})
    if (e >= 0) std::cout << key << "=" << L.element_name(e) << "\n";
}

int cmd_validate(const Options& opt) {
  auto L = read_lattice_file(opt.file);
  if (opt.machine) {
    std::cout << "name=" << L->name() << "\n"
              << "size=" << L->size() << "\n"
              << "bottom=" << L->element_name(L->bottom()) << "\n"
              << "top=" << L->element_name(L->top()) << "\n"
              << "valid=1\n";
  } else {
    std::cout << "lattice " << L->name() << ": " << L->size()
              << " elements, bottom " << L->element_name(L->bottom())
              << ", top " << L->element_name(L->top()) << "\n"
              << "bounded distributive lattice: yes\n";
  }
  return kExitOk;
}

int cmd_classify(const Options& opt) {
  auto L = load_lattice(opt.lattice_spec);
  FnTable f = read_function_file(opt.file, L);
  const std::string fname = f.fn_name().empty() ? "f" : f.fn_name();

  auto poly = check_property(f, "polynomial", LevelSetMode::hull);
  bool sug = poly.holds && is_sugeno(f);
  bool term = poly.holds && is_term_function(f);
  bool symmetric = is_symmetric(f);
  auto cons = is_conservative(f);
  auto weak = is_weakly_conservative(f);
  bool winf = poly.holds && is_weighted_infimum(f);
  bool wsup = poly.holds && is_weighted_supremum(f);

  if (opt.machine) {
    std::cout << "function=" << fname << "\narity=" << f.arity()
              << "\nlattice=" << L->name() << "\n"
              << "polynomial=" << bit(poly.holds) << "\n";
    if (!poly.holds && poly.witness)
      print_witness_machine(*L, *poly.witness);
    std::cout << "sugeno=" << bit(sug) << "\nterm=" << bit(term) << "\n"
              << "symmetric=" << bit(symmetric) << "\n"
              << "conservative=" << bit(cons.holds) << "\n"
              << "weakly_conservative=" << bit(weak.holds) << "\n"
              << "weighted_infimum=" << bit(winf) << "\n"
              << "weighted_supremum=" << bit(wsup) << "\n";
  } else {
    std::cout << "function " << fname << " arity " << f.arity() << " over "
              << L->name() << "\n"
              << "polynomial: " << yn(poly.holds) << "\n";
    if (!poly.holds) std::cout << "  " << describe(poly, *L) << "\n";
    std::cout << "sugeno integral: " << yn(sug) << "\n"
              << "term function: " << yn(term) << "\n"
              << "symmetric: " << yn(symmetric) << "\n"
              << "conservative: " << yn(cons.holds) << "\n"
              << "weakly conservative: " << yn(weak.holds) << "\n";
  }

  if (poly.holds && symmetric) {
    auto ws = symmetric_weights(f);
    if (opt.machine) {
      for (std::size_t i = 0; i < ws.w.size(); ++i)
        std::cout << "sym_w" << i << "=" << L->element_name(ws.w[i]) << "\n";
    } else {
      std::cout << "symmetric weights:";
      for (Elem w : ws.w) std::cout << " " << L->element_name(w);
      std::cout << "\n";
    }
  }

  if (poly.holds) {
    auto iw = extract_inf_weights(f);
    auto sw = extract_sup_weights(f);
    if (opt.machine) {
      if (winf) {
        std::cout << "inf_w0=" << L->element_name(iw.w0) << "\n";
        for (std::size_t i = 0; i < iw.w.size(); ++i)
          std::cout << "inf_w" << i + 1 << "=" << L->element_name(iw.w[i])
                    << "\n";
      }
      if (wsup) {
        std::cout << "sup_w0=" << L->element_name(sw.w0) << "\n";
        for (std::size_t i = 0; i < sw.w.size(); ++i)
          std::cout << "sup_w" << i + 1 << "=" << L->element_name(sw.w[i])
                    << "\n";
      }
    } else {
      std::cout << "weighted infimum: " << yn(winf);
      if (winf) {
        std::cout << " (w0=" << L->element_name(iw.w0);
        for (std::size_t i = 0; i < iw.w.size(); ++i)
          std::cout << ", w" << i + 1 << "=" << L->element_name(iw.w[i]);
        std::cout << ")";
      }
      std::cout << "\nweighted supremum: " << yn(wsup);
      if (wsup) {
        std::cout << " (v0=" << L->element_name(sw.w0);
        for (std::size_t i = 0; i < sw.w.size(); ++i)
          std::cout << ", v" << i + 1 << "=" << L->element_name(sw.w[i]);
        std::cout << ")";
      }
      std::cout << "\n";
    }

    auto ext = measure_from_polynomial(f);
    if (opt.machine) {
      for (SubsetMask m = 0; m < ext.mu.values.size(); ++m)
        std::cout << "mu_" << mask_str(m, f.arity()) << "="
                  << L->element_name(ext.mu.values[m]) << "\n";
      std::cout << "clamp_lo=" << L->element_name(ext.lo) << "\n"
                << "clamp_hi=" << L->element_name(ext.hi) << "\n";
    } else {
      std::cout << "extracted measure (clamp to ["
                << L->element_name(ext.lo) << ", " << L->element_name(ext.hi)
                << "]):\n"
                << write_measure(ext.mu, *L, fname);
    }
  } else if (!opt.machine) {
    std::cout << "weighted infimum: no\nweighted supremum: no\n";
  }
  return kExitOk;
}

int cmd_normal_form(const Options& opt) {
  auto L = load_lattice(opt.lattice_spec);
  FnTable f = read_function_file(opt.file, L);
  const std::string fname = f.fn_name().empty() ? "f" : f.fn_name();
  if (opt.form_median) {
    auto e = median_normal_form(f);
    if (opt.machine)
      std::cout << "form=median\nexpr=" << to_string(*e, *L) << "\n";
    else
      std::cout << to_string(*e, *L) << "\n";
    return kExitOk;
  }
  CoeffMap c = opt.form_dnf ? alpha(f) : beta(f);
  const char* which = opt.form_dnf ? "dnf" : "cnf";
  if (opt.machine) {
    std::cout << "form=" << which << "\n";
    for (SubsetMask m = 0; m < c.values.size(); ++m)
      std::cout << "coeff_" << mask_str(m, f.arity()) << "="
                << L->element_name(c.values[m]) << "\n";
  } else {
    std::cout << write_coeff_map(c, *L, fname + "_" + which);
  }
  return kExitOk;
}

int cmd_check(const Options& opt) {
  auto L = load_lattice(opt.lattice_spec);
  FnTable f = read_function_file(opt.file, L);
  auto rep = check_property(f, opt.property, opt.mode);
  const char* mode_name = opt.mode == LevelSetMode::range   ? "range"
                          : opt.mode == LevelSetMode::hull ? "hull"
                                                           : "full";
  if (opt.machine) {
    std::cout << "property=" << rep.property << "\nlevel_set=" << mode_name
              << "\nholds=" << bit(rep.holds) << "\n";
    if (rep.witness) print_witness_machine(*L, *rep.witness);
  } else {
    std::cout << describe(rep, *L) << "\n";
  }
  return rep.holds ? kExitOk : kExitViolation;
}

int run_verify(const Options& opt, int arity) {
  auto L = load_lattice(opt.lattice_spec);
  const ProfileKind kind =
      opt.kind_sugeno ? ProfileKind::sugeno : ProfileKind::main;
  SweepResult r;
  const bool sampled = opt.samples > 0;
  if (sampled)
    r = sweep_samples(L, arity, kind, opt.samples, opt.seed);
  else
    r = sweep_all_tables(L, arity, kind, opt.sweep_budget);

  const char* kind_name = kind == ProfileKind::main ? "main" : "sugeno";
  const char* mode_name = sampled ? "samples" : "exhaustive";
  if (opt.machine) {
    std::cout << "kind=" << kind_name << "\nlattice=" << L->name()
              << "\narity=" << arity << "\nmode=" << mode_name
              << "\nseed=" << r.seed << "\ntables=" << r.tables
              << "\nprofile_true=" << r.profile_true << "\n";
    for (std::size_t i = 0; i < 7; ++i)
      std::cout << "cond" << i + 1 << "=" << r.cond_true[i] << "\n";
    std::cout << "disagreements=" << r.disagreement_count << "\n"
              << "range_separations=" << r.range_separation_count << "\n";
    for (const auto& t : r.disagreements)
      std::cout << "disagreement_table=" << joined_names(*L, t) << "\n";
  } else {
    std::cout << "profile: " << kind_name << "\nlattice: " << L->name() << " ("
              << L->size() << " elements), arity " << arity << "\n"
              << "mode: " << mode_name;
    if (sampled) std::cout << " (n=" << opt.samples << ", seed=" << opt.seed << ")";
    std::cout << "\ntables checked: " << r.tables << "\n"
              << "all seven conditions true: " << r.profile_true << "\n"
              << "per-condition counts:";
    for (long long c : r.cond_true) std::cout << " " << c;
    std::cout << "\ndisagreements: " << r.disagreement_count << "\n"
              << "range-convexity separations: " << r.range_separation_count
              << "\n";
    for (const auto& t : r.disagreements)
      std::cout << "  disagreeing table: " << joined_names(*L, t) << "\n";
    std::cout << (r.disagreement_count == 0
                      ? "verdict: all profiles agree\n"
                      : "verdict: equivalence VIOLATED\n");
  }
  return r.disagreement_count == 0 ? kExitOk : kExitViolation;
}

int cmd_gallery(const Options& opt) {
  auto outcomes = run_gallery();
  bool all_ok = true;
  for (const auto& o : outcomes) {
    all_ok = all_ok && o.ok;
    if (opt.machine) {
      std::cout << "fixture=" << o.fixture << "\nok=" << bit(o.ok) << "\n";
      for (const auto& c : o.checks)
        if (c.expected != c.actual)
          std::cout << "mismatch=" << c.check << "\nexpected=" << bit(c.expected)
                    << "\nactual=" << bit(c.actual) << "\n";
    } else {
      std::cout << "fixture " << o.fixture << " (" << o.lattice << ", "
                << o.function << "): " << (o.ok ? "ok" : "MISMATCH") << "\n";
      for (const auto& c : o.checks) {
        if (o.ok) continue;
        std::cout << "  " << c.check << ": expected " << yn(c.expected)
                  << ", got " << yn(c.actual) << "\n";
      }
    }
  }
  if (!opt.machine)
    std::cout << (all_ok ? "gallery: all fixtures reproduced\n"
                         : "gallery: mismatches found\n");
  return all_ok ? kExitOk : kExitViolation;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact computation with lattice polynomial functions"};
  app.require_subcommand(1);
  Options opt;
  int arity = 1;
  app.add_flag("--machine", opt.machine, "line-oriented key=value output");

  auto* validate = app.add_subcommand("validate", "parse and audit a lattice file");
  validate->add_option("file", opt.file, "lattice file")->required();

  auto* classify = app.add_subcommand("classify", "full classification report");
  classify->add_option("--lattice", opt.lattice_spec,
                       "lattice file or chain:<m>|boolean:<k>|diamond")
      ->required();
  classify->add_option("file", opt.file, "function file")->required();

  auto* nf = app.add_subcommand("normal-form", "emit a normal form");
  nf->add_option("--lattice", opt.lattice_spec, "lattice source")->required();
  nf->add_option("file", opt.file, "function file")->required();
  nf->add_flag("--dnf", opt.form_dnf, "join-of-meets coefficients");
  nf->add_flag("--cnf", opt.form_cnf, "meet-of-joins coefficients");
  nf->add_flag("--median", opt.form_median, "nested median expression");

  auto* check = app.add_subcommand("check", "check one property");
  check->add_option("--lattice", opt.lattice_spec, "lattice source")->required();
  check->add_option("file", opt.file, "function file")->required();
  check->add_option("--property", opt.property, "property name")->required();
  std::map<std::string, LevelSetMode> modes{{"range", LevelSetMode::range},
                                            {"hull", LevelSetMode::hull},
                                            {"full", LevelSetMode::full}};
  check->add_option("--level-set", opt.mode, "level set for parameterized checks")
      ->transform(CLI::CheckedTransformer(modes, CLI::ignore_case));

  auto* verify = app.add_subcommand("verify-theorem", "profile equivalence sweep");
  verify->add_option("--lattice", opt.lattice_spec, "lattice source")->required();
  verify->add_option("--arity", arity, "function arity")->required();
  verify->add_flag("--main", opt.kind_main, "polynomial profile");
  verify->add_flag("--sugeno", opt.kind_sugeno, "idempotent polynomial profile");
  verify->add_flag("--exhaustive", opt.exhaustive, "sweep every table (default)");
  verify->add_option("--samples", opt.samples, "randomized sweep sample count");
  verify->add_option("--seed", opt.seed, "random seed (default 1)");
  verify->add_option("--budget", opt.sweep_budget,
                     "max tables for an exhaustive sweep");

  auto* gallery = app.add_subcommand("gallery", "replay built-in counterexamples");
  (void)gallery;

  // lets the global --machine flag appear after the subcommand too
  for (auto* sub : app.get_subcommands({})) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInput;
  }

  try {
    if (validate->parsed()) return cmd_validate(opt);
    if (classify->parsed()) return cmd_classify(opt);
    if (nf->parsed()) {
      if (static_cast<int>(opt.form_dnf) + static_cast<int>(opt.form_cnf) +
              static_cast<int>(opt.form_median) != 1) {
        std::cerr << "error: pass exactly one of --dnf, --cnf, --median\n";
        return kExitInput;
      }
      return cmd_normal_form(opt);
    }
    if (check->parsed()) return cmd_check(opt);
    if (verify->parsed()) {
      if (static_cast<int>(opt.kind_main) + static_cast<int>(opt.kind_sugeno) != 1) {
        std::cerr << "error: pass exactly one of --main, --sugeno\n";
        return kExitInput;
      }
      if (opt.exhaustive && opt.samples > 0) {
        std::cerr << "error: --exhaustive and --samples are mutually exclusive\n";
        return kExitInput;
      }
      return run_verify(opt, arity);
    }
    return cmd_gallery(opt);
  } catch (const BudgetError& e) {
    std::cerr << "error: " << e.what() << "\n";
    if (verify->parsed())
      std::cerr << "hint: use --samples N for a randomized sweep\n";
    return kExitBudget;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInput;
  }
}
