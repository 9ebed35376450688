#pragma once

#include <stdexcept>
#include <string>

namespace latpoly {

// Base class for everything this library throws on purpose.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed input text (lattice / function / expression files).
struct ParseError : Error {
  ParseError(const std::string& msg, int line = 0)
      : Error(line > 0 ? "line " + std::to_string(line) + ": " + msg : msg),
        line(line) {}
  int line;
};

// Structurally well-formed input that fails a semantic check
// (not a lattice, not distributive, bad bounds, non-extendable map, ...).
struct ValidationError : Error {
  using Error::Error;
};

// An operation was called outside its stated domain
// (e.g. a normal-form query on a table that is not a polynomial function).
struct PreconditionError : Error {
  using Error::Error;
};

// An exhaustive scan or enumeration would exceed its configured budget.
struct BudgetError : Error {
  using Error::Error;
};

}  // namespace latpoly
