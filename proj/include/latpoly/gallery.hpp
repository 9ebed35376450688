#pragma once

#include <string>
#include <vector>

#include "latpoly/fn_table.hpp"

namespace latpoly {

// One frozen expectation inside a fixture: a named boolean check, the value
// it must have, and the value the current code computes.
struct GalleryCheck {
  std::string check;
  bool expected = false;
  bool actual = false;
};

// A built-in counterexample function together with its expected profile.
struct GalleryOutcome {
  std::string fixture;
  std::string lattice;
  std::string function;  // table or defining expression, for display
  std::vector<GalleryCheck> checks;
  bool ok = true;  // every check matched its expectation
};

// Replays every built-in fixture and compares against the frozen profiles.
std::vector<GalleryOutcome> run_gallery();

}  // namespace latpoly
