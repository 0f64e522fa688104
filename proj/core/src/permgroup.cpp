#include "polya/permgroup.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>
#include <string>
#include <unordered_set>

#include "polya/errors.hpp"

namespace polya {

namespace {

using PermSet = std::unordered_set<Perm, PermHash>;

void check_degree(int degree, const std::vector<Perm>& perms) {
  if (degree <= 0) throw std::invalid_argument("group degree must be positive");
  for (const auto& p : perms)
    if (p.degree() != degree) throw std::invalid_argument("generator degree mismatch");
}

// Grows `elements` (already a group, or just {1}) to the closure under `gens`.
void close_under(PermSet& elements, const std::vector<Perm>& gens, std::size_t max_order) {
  std::deque<Perm> queue(elements.begin(), elements.end());
  while (!queue.empty()) {
    Perm x = std::move(queue.front());
    queue.pop_front();
    for (const auto& g : gens) {
      Perm y = x * g;
      if (elements.insert(y).second) {
        if (elements.size() > max_order)
          throw BudgetExceeded("group too large: more than " + std::to_string(max_order) + " elements");
        queue.push_back(std::move(y));
      }
    }
  }
}

std::vector<Perm> sorted(const PermSet& s) {
  std::vector<Perm> v(s.begin(), s.end());
  std::sort(v.begin(), v.end());
  return v;
}

}  // namespace

PermGroup PermGroup::generate(int degree, std::vector<Perm> generators, std::size_t max_order) {
  check_degree(degree, generators);
  std::erase_if(generators, [](const Perm& p) { return p.is_identity(); });
  PermSet set{Perm::identity(degree)};
  close_under(set, generators, max_order);
  PermGroup g;
  g.degree_ = degree;
  g.generators_ = std::move(generators);
  g.elements_ = sorted(set);
  return g;
}

PermGroup PermGroup::from_elements(int degree, std::vector<Perm> elements) {
  check_degree(degree, elements);
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  if (elements.empty() || !elements.front().is_identity())
    throw std::invalid_argument("element set does not contain the identity");
  PermGroup g;
  g.degree_ = degree;
  g.elements_ = std::move(elements);
  PermSet span{Perm::identity(degree)};
  for (const auto& e : g.elements_) {
    if (span.count(e)) continue;
    g.generators_.push_back(e);
    try {
      close_under(span, g.generators_, g.elements_.size());
    } catch (const BudgetExceeded&) {
      throw std::invalid_argument("element set is not closed");
    }
  }
  if (span.size() != g.elements_.size()) throw std::invalid_argument("element set is not closed");
  return g;
}

bool PermGroup::contains(const Perm& g) const {
  return g.degree() == degree_ && std::binary_search(elements_.begin(), elements_.end(), g);
}

std::size_t PermGroup::index_of(const Perm& g) const {
  auto it = std::lower_bound(elements_.begin(), elements_.end(), g);
  if (it == elements_.end() || *it != g) throw std::out_of_range("element not in group");
  return static_cast<std::size_t>(it - elements_.begin());
}

bool PermGroup::is_subgroup_of(const PermGroup& other) const {
  if (degree_ != other.degree_) return false;
  return std::all_of(generators_.begin(), generators_.end(), [&](const Perm& g) { return other.contains(g); });
}

bool PermGroup::is_abelian() const {
  for (std::size_t i = 0; i < generators_.size(); ++i)
    for (std::size_t j = i + 1; j < generators_.size(); ++j)
      if (generators_[i] * generators_[j] != generators_[j] * generators_[i]) return false;
  return true;
}

bool PermGroup::is_transitive() const {
  std::vector<bool> seen(static_cast<std::size_t>(degree_), false);
  std::vector<int> stack{0};
  seen[0] = true;
  std::size_t count = 1;
  while (!stack.empty()) {
    int x = stack.back();
    stack.pop_back();
    for (const auto& g : generators_) {
      int y = g[x];
      if (!seen[static_cast<std::size_t>(y)]) {
        seen[static_cast<std::size_t>(y)] = true;
        ++count;
        stack.push_back(y);
      }
    }
  }
  return count == static_cast<std::size_t>(degree_);
}

PermGroup PermGroup::stabilizer(int point) const {
  if (point < 0 || point >= degree_) throw std::invalid_argument("point out of range");
  std::vector<Perm> st;
  for (const auto& g : elements_)
    if (g[point] == point) st.push_back(g);
  return from_elements(degree_, std::move(st));
}

PermGroup generated_subgroup(int degree, const std::vector<Perm>& base, const std::vector<Perm>& extra,
                             std::size_t max_order) {
  check_degree(degree, base);
  check_degree(degree, extra);
  std::vector<Perm> gens;
  PermSet span{Perm::identity(degree)};
  auto consider = [&](const Perm& x) {
    if (span.count(x)) return;
    gens.push_back(x);
    close_under(span, gens, max_order);
  };
  for (const auto& x : base) consider(x);
  for (const auto& x : extra) consider(x);
  PermGroup g = PermGroup::generate(degree, gens, max_order);
  return g;
}

CosetAction::CosetAction(PermGroup group, PermGroup subgroup)
    : group_(std::move(group)), subgroup_(std::move(subgroup)) {
  if (!subgroup_.is_subgroup_of(group_)) throw std::invalid_argument("H is not a subgroup of G");
  const auto& elems = group_.elements();
  constexpr std::size_t kUnassigned = static_cast<std::size_t>(-1);
  coset_by_element_.assign(elems.size(), kUnassigned);
  for (std::size_t i = 0; i < elems.size(); ++i) {
    if (coset_by_element_[i] != kUnassigned) continue;
    std::size_t c = representatives_.size();
    representatives_.push_back(elems[i]);
    for (const auto& h : subgroup_.elements()) coset_by_element_[group_.index_of(h * elems[i])] = c;
  }
}

std::size_t CosetAction::coset_of(const Perm& g) const { return coset_by_element_[group_.index_of(g)]; }

std::size_t CosetAction::act(std::size_t coset, const Perm& g) const {
  return coset_of(representatives_.at(coset) * g);
}

Perm CosetAction::on_cosets(const Perm& g) const {
  if (size() > 255) throw std::invalid_argument("coset space too large for a permutation image");
  std::vector<std::uint8_t> im(size());
  for (std::size_t i = 0; i < size(); ++i) im[i] = static_cast<std::uint8_t>(act(i, g));
  return Perm(std::move(im));
}

int CosetAction::fixed_cosets(const Perm& g) const {
  int n = 0;
  for (std::size_t i = 0; i < size(); ++i) n += act(i, g) == i;
  return n;
}

std::vector<CosetCycle> cycle_structure(const Perm& g, const CosetAction& action) {
  if (!action.group().contains(g)) throw std::invalid_argument("element not in G");
  std::vector<CosetCycle> out;
  std::vector<bool> seen(action.size(), false);
  for (std::size_t start = 0; start < action.size(); ++start) {
    if (seen[start]) continue;
    int len = 0;
    for (std::size_t x = start; !seen[x]; x = action.act(x, g)) {
      seen[x] = true;
      ++len;
    }
    out.push_back({len, start, action.representative(start)});
  }
  return out;
}

namespace {

void check_proper(const PermGroup& G, const PermGroup& H) {
  if (!H.is_subgroup_of(G)) throw std::invalid_argument("H is not a subgroup of G");
  if (H.order() == G.order()) throw std::invalid_argument("H = G: the set T is undefined");
}

}  // namespace

std::vector<Perm> compute_T(const PermGroup& G, const PermGroup& H) {
  check_proper(G, H);
  CosetAction action(G, H);
  std::vector<Perm> T;
  for (const auto& h : H.elements()) {
    bool only_trivial_fixed = true;
    for (std::size_t i = 1; i < action.size() && only_trivial_fixed; ++i)
      only_trivial_fixed = action.act(i, h) != i;
    if (only_trivial_fixed) T.push_back(h);
  }
  return T;
}

std::vector<Perm> compute_T_by_conjugation(const PermGroup& G, const PermGroup& H) {
  check_proper(G, H);
  std::vector<Perm> outside;
  for (const auto& s : G.elements())
    if (!H.contains(s)) outside.push_back(s);
  std::vector<Perm> T;
  for (const auto& h : H.elements()) {
    bool conjugate_lands_in_H = false;
    for (const auto& s : outside) {
      if (H.contains(conjugate(s, h))) {
        conjugate_lands_in_H = true;
        break;
      }
    }
    if (!conjugate_lands_in_H) T.push_back(h);
  }
  return T;
}

PermGroup derived_subgroup(const PermGroup& H) {
  const auto& gens = H.generators();
  std::vector<Perm> comms;
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j) {
      Perm c = gens[i] * gens[j] * gens[i].inverse() * gens[j].inverse();
      if (!c.is_identity()) comms.push_back(std::move(c));
    }
  PermGroup N = PermGroup::generate(H.degree(), comms);
  // Normal closure: conjugate the generators of N by those of H until stable.
  for (bool grew = true; grew;) {
    grew = false;
    for (const auto& x : N.generators()) {
      for (const auto& h : gens) {
        Perm y = h.inverse() * x * h;
        if (!N.contains(y)) {
          comms.push_back(y);
          N = PermGroup::generate(H.degree(), comms);
          grew = true;
          break;
        }
      }
      if (grew) break;
    }
  }
  return N;
}

PermGroup normal_core(const PermGroup& G, const PermGroup& H) {
  CosetAction action(G, H);
  std::vector<Perm> core;
  for (const auto& x : H.elements()) {
    bool in_all = true;
    for (const auto& s : action.representatives()) {
      if (!H.contains(s * x * s.inverse())) {
        in_all = false;
        break;
      }
    }
    if (in_all) core.push_back(x);
  }
  return PermGroup::from_elements(G.degree(), std::move(core));
}

ConditionReport check_condition_2B(const PermGroup& G, const PermGroup& H) {
  ConditionReport r;
  r.T = compute_T(G, H);
  r.T_nonempty = !r.T.empty();
  r.derived = derived_subgroup(H);
  r.generated = generated_subgroup(H.degree(), r.derived.generators(), r.T);
  r.holds = r.T_nonempty && r.generated.order() == H.order();
  return r;
}

namespace {

bool action_transitive(const CosetAction& action) {
  std::vector<bool> seen(action.size(), false);
  std::vector<std::size_t> stack{0};
  seen[0] = true;
  std::size_t count = 1;
  while (!stack.empty()) {
    std::size_t x = stack.back();
    stack.pop_back();
    for (const auto& g : action.group().generators()) {
      std::size_t y = action.act(x, g);
      if (!seen[y]) {
        seen[y] = true;
        ++count;
        stack.push_back(y);
      }
    }
  }
  return count == action.size();
}

}  // namespace

bool is_frobenius(const PermGroup& G, const CosetAction& action) {
  if (!(action.group() == G)) throw std::invalid_argument("action is not an action of G");
  if (!action_transitive(action)) return false;
  bool some_fix = false;
  for (const auto& g : G.elements()) {
    if (g.is_identity()) continue;
    int fixed = action.fixed_cosets(g);
    if (fixed > 1) return false;
    some_fix |= fixed == 1;
  }
  return some_fix;
}

bool is_2transitive(const PermGroup& G, const CosetAction& action) {
  if (!(action.group() == G)) throw std::invalid_argument("action is not an action of G");
  const std::size_t n = action.size();
  if (n < 2) throw std::invalid_argument("2-transitivity needs at least two points");
  std::vector<std::vector<std::size_t>> gen_images;
  for (const auto& g : G.generators()) {
    std::vector<std::size_t> im(n);
    for (std::size_t i = 0; i < n; ++i) im[i] = action.act(i, g);
    gen_images.push_back(std::move(im));
  }
  std::vector<bool> seen(n * n, false);
  std::vector<std::size_t> stack{0 * n + 1};
  seen[1] = true;
  std::size_t count = 1;
  while (!stack.empty()) {
    std::size_t code = stack.back();
    stack.pop_back();
    std::size_t a = code / n, b = code % n;
    for (const auto& im : gen_images) {
      std::size_t c = im[a] * n + im[b];
      if (!seen[c]) {
        seen[c] = true;
        ++count;
        stack.push_back(c);
      }
    }
  }
  return count == n * (n - 1);
}

}  // namespace polya
