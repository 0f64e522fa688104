#pragma once

#include <stdexcept>
#include <string>

namespace polya {

// Malformed textual input (cycle notation, polynomial strings, group files).
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A configured ceiling was hit: group closure size or lattice enumeration
// nodes. Never converted into a negative answer.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// The class group relation harvest did not stabilise at the maximum budget.
class Inconclusive : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace polya
