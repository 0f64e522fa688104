#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <vector>

namespace polya {

using Int = std::int64_t;

// Finite abelian group Z/d1 x ... x Z/dr with 1 < d1 | d2 | ... | dr.
// Elements are coordinate vectors reduced into [0, di).
class AbelianGroup {
 public:
  AbelianGroup() = default;
  explicit AbelianGroup(std::vector<Int> invariant_factors);

  const std::vector<Int>& invariant_factors() const { return factors_; }
  std::size_t rank() const { return factors_.size(); }
  Int order() const;
  bool is_trivial() const { return factors_.empty(); }

  std::vector<Int> zero() const { return std::vector<Int>(factors_.size(), 0); }
  std::vector<Int> reduce(std::vector<Int> v) const;
  std::vector<Int> add(std::span<const Int> a, std::span<const Int> b) const;
  std::vector<Int> neg(std::span<const Int> a) const;
  std::vector<Int> scale(std::span<const Int> a, Int k) const;
  bool is_zero(std::span<const Int> a) const;
  Int element_order(std::span<const Int> a) const;
  // Order of the subgroup generated by `gens`.
  Int subgroup_order(const std::vector<std::vector<Int>>& gens) const;
  // All elements, in lexicographic coordinate order. Intended for small groups.
  std::vector<std::vector<Int>> elements() const;

  friend bool operator==(const AbelianGroup&, const AbelianGroup&) = default;

 private:
  std::vector<Int> factors_;
};

// Z^k modulo the row span of a relation matrix, with the projection map
// from exponent vectors to invariant-factor coordinates.
class AbelianQuotient {
 public:
  // Throws std::domain_error when the relations do not have full rank.
  static AbelianQuotient from_relations(std::size_t generators, const std::vector<std::vector<Int>>& relations);

  const AbelianGroup& group() const { return group_; }
  std::size_t generators() const { return transform_.size(); }
  std::vector<Int> image(std::span<const Int> exponents) const;
  std::vector<Int> image_of_generator(std::size_t i) const { return transform_.at(i); }

 private:
  friend class RelationLattice;
  AbelianGroup group_;
  // Row i: image of the i-th generator.
  std::vector<std::vector<Int>> transform_;
};

// Invariant factors (including 1s and 0s for free parts) of an integer
// matrix, computed over arbitrary precision. Exposed for tests.
std::vector<Int> smith_diagonal(const std::vector<std::vector<Int>>& matrix);

// Incrementally maintained Hermite basis of a relation lattice in Z^k.
// Once full rank, entries are reduced modulo the current index.
class RelationLattice {
 public:
  explicit RelationLattice(std::size_t columns);
  ~RelationLattice();
  RelationLattice(RelationLattice&&) noexcept;
  RelationLattice& operator=(RelationLattice&&) noexcept;
  RelationLattice(const RelationLattice&);
  RelationLattice& operator=(const RelationLattice&);

  std::size_t columns() const;
  std::size_t relations_added() const;
  void add(std::span<const Int> relation);
  bool full_rank() const;
  // [Z^k : L] when full rank and representable.
  std::optional<Int> index() const;
  AbelianQuotient quotient() const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

}  // namespace polya
