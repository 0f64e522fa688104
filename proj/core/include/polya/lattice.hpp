#pragma once

#include <cstdint>
#include <functional>
#include <optional>

#include "polya/ideal.hpp"

namespace polya {

// LLL reduction of a Z-basis (rows) of a full-rank sublattice of O_K with
// respect to the T2 form.
ElemMat lll_reduce(const MaximalOrder& O, ElemMat basis, double delta = 0.99);

struct EnumerationResult {
  std::uint64_t nodes = 0;
  bool completed = true;
};

// Visits every nonzero lattice vector with T2 <= bound exactly once up to
// sign. The visitor returns false to stop early.
EnumerationResult enumerate_short(const MaximalOrder& O, const ElemMat& basis, double bound, std::uint64_t max_nodes,
                                  const std::function<bool(const Elem&, double)>& visit);

struct PrincipalSearch {
  double safety = 2.0;
  std::uint64_t max_nodes = 2'000'000;
};

// T2 radius searched for a generator of an ideal of norm n:
// safety * 3 * (n * sqrt|d_K|)^(2/3).
double generator_search_bound(const MaximalOrder& O, Int n, double safety);

// A generator of I with T2 within the search bound, if one exists there.
// Throws BudgetExceeded when the node ceiling is hit first.
std::optional<Elem> find_generator(const MaximalOrder& O, const Ideal& I, const PrincipalSearch& opts = {});

}  // namespace polya
