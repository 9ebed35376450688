#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "latpoly/fn_table.hpp"
#include "latpoly/lattice.hpp"

namespace latpoly {

// Which level set S a parameterized check runs over.
enum class LevelSetMode {
  range,  // values the function actually takes
  hull,   // convex hull of the range
  full,   // the whole lattice
};

// First violation found by a scan, lexicographically smallest under the
// canonical tuple encoding, then by parameter order. Unused fields stay at
// their defaults (-1 for elements/coordinates, empty for tuples).
struct Witness {
  std::vector<Elem> x{};  // primary point
  std::vector<Elem> y{};  // secondary point (pair scans, raised point)
  int coord = -1;         // coordinate index, 0-based
  Elem c = -1;            // level / gap element
  Elem r = -1;            // lower companion (range member, median scalar)
  Elem s = -1;            // upper companion
  Elem a = -1;            // first substituted value
  Elem b = -1;            // second substituted value
  std::string note{};     // human-readable equation instance
};

struct PropertyReport {
  std::string property;
  bool holds = false;
  std::optional<Witness> witness{};  // present iff !holds
};

// Exhaustive checkers. Those taking S scan every x in L^n against every c in
// S (ascending); S must be nonempty.
PropertyReport is_nondecreasing(const FnTable& f);
PropertyReport is_meet_homogeneous(const FnTable& f, const std::vector<Elem>& S);
PropertyReport is_join_homogeneous(const FnTable& f, const std::vector<Elem>& S);
PropertyReport is_idempotent_over(const FnTable& f, const std::vector<Elem>& S);
PropertyReport median_level_identity(const FnTable& f, const std::vector<Elem>& S);
PropertyReport horiz_meet_decomposable(const FnTable& f, const std::vector<Elem>& S);
PropertyReport horiz_join_decomposable(const FnTable& f, const std::vector<Elem>& S);
PropertyReport is_median_decomposable(const FnTable& f);
PropertyReport is_strongly_idempotent(const FnTable& f);
PropertyReport comp_meet_homomorphism(const FnTable& f);
PropertyReport comp_join_homomorphism(const FnTable& f);
PropertyReport has_convex_range(const FnTable& f);
PropertyReport has_componentwise_convex_range(const FnTable& f);
PropertyReport global_meet_homomorphism(const FnTable& f);
PropertyReport global_join_homomorphism(const FnTable& f);

ElemSet range_of(const FnTable& f);
// Convex hull of the range; for nondecreasing f this is the interval from
// f(bottom,...,bottom) to (top,...,top)'s value.
ElemSet range_hull(const FnTable& f);
std::vector<Elem> level_set(const FnTable& f, LevelSetMode mode);

// Substitution helpers shared by checkers and tests.
std::vector<Elem> with_coord(std::vector<Elem> x, int k, Elem c);
std::vector<Elem> meet_scalar(const Lattice& L, std::vector<Elem> x, Elem c);
std::vector<Elem> join_scalar(const Lattice& L, std::vector<Elem> x, Elem c);
// Coordinates at or above the level go to top; the rest stay.
std::vector<Elem> saturate_up(const Lattice& L, std::vector<Elem> x, Elem c);
// Coordinates at or below the level go to bottom; the rest stay.
std::vector<Elem> saturate_down(const Lattice& L, std::vector<Elem> x, Elem c);
std::vector<Elem> median_scalar(const Lattice& L, Elem r, std::vector<Elem> x,
                                Elem s);

// Re-evaluates the defining equation of a failed report at its stored
// witness; true iff the violation reproduces. Reports that hold yield false.
bool replay(const FnTable& f, const PropertyReport& report);

// Seven-way equivalence profiles. Every entry is a condition that holds
// exactly for polynomial functions (first profile, levels = hull of the
// range) or exactly for idempotent polynomial functions (second profile,
// levels = whole lattice plus boundary idempotency side conditions).
using Profile = std::array<bool, 7>;
Profile theorem_profile_main(const FnTable& f);
Profile theorem_profile_sugeno(const FnTable& f);
bool profile_all_equal(const Profile& p);

// The third profile condition with the range-convexity conjunct dropped;
// used to record whether that conjunct ever changes a verdict.
bool main_condition_iii_without_convex_range(const FnTable& f);

// Name-indexed dispatch for the command-line front end.
std::vector<std::string> property_names();
PropertyReport check_property(const FnTable& f, const std::string& name,
                              LevelSetMode mode);

// Renders a report with element names filled in.
std::string describe(const PropertyReport& report, const Lattice& L);

}  // namespace latpoly
