#pragma once

#include <random>
#include <set>
#include <string>
#include <vector>

#include "polya/families.hpp"
#include "polya/order.hpp"

namespace oracle {

using polya::Int;
using polya::Perm;
using polya::PermGroup;

// Closure by repeated all-pairs products.
std::set<Perm> closure(int degree, const std::vector<Perm>& gens);

// Subgroup generated by every commutator of every pair.
std::set<Perm> derived_all_pairs(const PermGroup& H);

// Right cosets as explicit element sets, H first.
std::vector<std::set<Perm>> right_cosets(const PermGroup& G, const PermGroup& H);

// Index of the coset containing x.
std::size_t coset_index(const std::vector<std::set<Perm>>& cosets, const Perm& x);

// Elements acting trivially on the cosets.
std::set<Perm> kernel_of_action(const PermGroup& G, const PermGroup& H);

// h in H with exactly one fixed coset, by direct coset multiplication.
std::set<Perm> T_direct(const PermGroup& G, const PermGroup& H);

// Number of x mod p with f(x) = 0 mod p.
int root_count(const polya::CubicPoly& f, Int p);

// [O_K : Z[t]] by counting the integral elements of (1/k) Z[t] modulo Z[t],
// where k is the largest integer with k^2 | disc(f).
Int index_by_enumeration(const polya::CubicPoly& f);

// Norm as a product of complex embeddings, rounded.
long double numeric_norm(const polya::MaximalOrder& O, const polya::Elem& a);

// Transitive groups of degree <= 7 used as the group corpus.
std::vector<polya::GroupPresentation> group_corpus();

// Fixture fields from tests/fixtures/fields.txt: polynomial and expected invariant factors.
struct FieldFixture {
  std::string poly;
  std::vector<Int> invariants;
};
std::vector<FieldFixture> field_fixtures();

std::string fixture_path(const std::string& name);

Perm random_element(const PermGroup& G, std::mt19937_64& rng);

}  // namespace oracle
