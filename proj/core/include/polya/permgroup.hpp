#pragma once

#include <cstddef>
#include <vector>

#include "polya/perm.hpp"

namespace polya {

inline constexpr std::size_t kDefaultMaxGroupOrder = 1'000'000;

// A finite permutation group stored with its full element list, sorted
// lexicographically on image arrays (so the identity comes first).
class PermGroup {
 public:
  // Closure of `generators` under composition. Throws BudgetExceeded when the
  // element count would pass `max_order`.
  static PermGroup generate(int degree, std::vector<Perm> generators,
                            std::size_t max_order = kDefaultMaxGroupOrder);

  // Wraps an element set already known to be closed (e.g. a filtered
  // subgroup). A small generating set is extracted.
  static PermGroup from_elements(int degree, std::vector<Perm> elements);

  int degree() const { return degree_; }
  std::size_t order() const { return elements_.size(); }
  const std::vector<Perm>& generators() const { return generators_; }
  const std::vector<Perm>& elements() const { return elements_; }
  const Perm& identity() const { return elements_.front(); }

  bool contains(const Perm& g) const;
  // Position of g in elements(); throws std::out_of_range if absent.
  std::size_t index_of(const Perm& g) const;
  bool is_subgroup_of(const PermGroup& other) const;
  bool is_abelian() const;
  bool is_transitive() const;
  PermGroup stabilizer(int point) const;

  friend bool operator==(const PermGroup& a, const PermGroup& b) {
    return a.degree_ == b.degree_ && a.elements_ == b.elements_;
  }

 private:
  int degree_ = 0;
  std::vector<Perm> generators_;
  std::vector<Perm> elements_;
};

// Smallest subgroup containing `base` and `extra`; `extra` may be large,
// only elements outside the running closure trigger a re-closure.
PermGroup generated_subgroup(int degree, const std::vector<Perm>& base, const std::vector<Perm>& extra,
                             std::size_t max_order = kDefaultMaxGroupOrder);

// Right cosets H s of H in G with the action H s . g = H (s g).
class CosetAction {
 public:
  // Throws std::invalid_argument if H is not a subgroup of G.
  CosetAction(PermGroup group, PermGroup subgroup);

  const PermGroup& group() const { return group_; }
  const PermGroup& subgroup() const { return subgroup_; }
  std::size_t size() const { return representatives_.size(); }
  // Lexicographically least element of the coset; representative(0) = 1.
  const Perm& representative(std::size_t coset) const { return representatives_[coset]; }
  const std::vector<Perm>& representatives() const { return representatives_; }

  std::size_t coset_of(const Perm& g) const;
  std::size_t act(std::size_t coset, const Perm& g) const;
  // g as a permutation of the coset space (degree = size()).
  Perm on_cosets(const Perm& g) const;
  int fixed_cosets(const Perm& g) const;

 private:
  PermGroup group_;
  PermGroup subgroup_;
  std::vector<Perm> representatives_;
  std::vector<std::size_t> coset_by_element_;
};

// One cycle of g on the coset space: its length and the representative of
// the least coset index it contains.
struct CosetCycle {
  int length = 0;
  std::size_t least_coset = 0;
  Perm representative;
};

std::vector<CosetCycle> cycle_structure(const Perm& g, const CosetAction& action);

// Elements of H whose only fixed coset is H itself. Rejects H = G.
std::vector<Perm> compute_T(const PermGroup& G, const PermGroup& H);
// Same set through the criterion h not in T <=> s h s^-1 in H for some s outside H.
std::vector<Perm> compute_T_by_conjugation(const PermGroup& G, const PermGroup& H);

// Normal closure of generator commutators inside H.
PermGroup derived_subgroup(const PermGroup& H);
// Intersection of all conjugates g H g^-1.
PermGroup normal_core(const PermGroup& G, const PermGroup& H);

struct ConditionReport {
  std::vector<Perm> T;
  bool T_nonempty = false;
  PermGroup derived;    // H'
  PermGroup generated;  // <T, H'>
  bool holds = false;
};

// T non-empty and H = <T, H'>.
ConditionReport check_condition_2B(const PermGroup& G, const PermGroup& H);

bool is_frobenius(const PermGroup& G, const CosetAction& action);
bool is_2transitive(const PermGroup& G, const CosetAction& action);

}  // namespace polya
