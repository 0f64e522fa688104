#include "polya/abelian.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace polya {

namespace {

using MpzMatrix = std::vector<std::vector<mpz_class>>;

Int to_int(const mpz_class& z) {
  if (!z.fits_slong_p()) throw std::overflow_error("integer does not fit in 64 bits");
  return z.get_si();
}

Int floor_mod(Int a, Int m) {
  Int r = a % m;
  return r < 0 ? r + m : r;
}

// Smith normal form by elementary operations. Column operations are mirrored
// in `V` when given (A_final = U A V). Returns the diagonal, length min(m,k),
// nonnegative, with nonzero entries forming a divisibility chain.
std::vector<mpz_class> smith(MpzMatrix& A, std::size_t k, MpzMatrix* V) {
  const std::size_t m = A.size();
  if (V) {
    V->assign(k, std::vector<mpz_class>(k, 0));
    for (std::size_t i = 0; i < k; ++i) (*V)[i][i] = 1;
  }
  auto swap_cols = [&](std::size_t a, std::size_t b) {
    if (a == b) return;
    for (auto& row : A) std::swap(row[a], row[b]);
    if (V)
      for (auto& row : *V) std::swap(row[a], row[b]);
  };
  auto col_axpy = [&](std::size_t dst, std::size_t src, const mpz_class& q) {  // col_dst -= q col_src
    for (auto& row : A) row[dst] -= q * row[src];
    if (V)
      for (auto& row : *V) row[dst] -= q * row[src];
  };
  const std::size_t n = std::min(m, k);
  std::vector<mpz_class> diag;
  for (std::size_t t = 0; t < n; ++t) {
    auto bring_min_to_pivot = [&]() -> bool {
      bool found = false;
      std::size_t bi = t, bj = t;
      mpz_class best;
      for (std::size_t i = t; i < m; ++i)
        for (std::size_t j = t; j < k; ++j) {
          if (sgn(A[i][j]) == 0) continue;
          mpz_class a = abs(A[i][j]);
          if (!found || a < best) {
            best = a;
            bi = i;
            bj = j;
            found = true;
            if (best == 1) goto done;
          }
        }
    done:
      if (!found) return false;
      std::swap(A[t], A[bi]);
      swap_cols(t, bj);
      return true;
    };
    if (!bring_min_to_pivot()) break;
    for (;;) {
      bool clean = true;
      for (std::size_t i = t + 1; i < m; ++i) {
        if (sgn(A[i][t]) == 0) continue;
        mpz_class q;
        mpz_fdiv_q(q.get_mpz_t(), A[i][t].get_mpz_t(), A[t][t].get_mpz_t());
        for (std::size_t j = t; j < k; ++j) A[i][j] -= q * A[t][j];
        if (sgn(A[i][t]) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < k; ++j) {
        if (sgn(A[t][j]) == 0) continue;
        mpz_class q;
        mpz_fdiv_q(q.get_mpz_t(), A[t][j].get_mpz_t(), A[t][t].get_mpz_t());
        col_axpy(j, t, q);
        if (sgn(A[t][j]) != 0) clean = false;
      }
      if (!clean) {
        // Move the smallest nonzero entry of row/column t to the pivot.
        std::size_t bi = t, bj = t;
        mpz_class best = abs(A[t][t]);
        for (std::size_t i = t + 1; i < m; ++i)
          if (sgn(A[i][t]) != 0 && abs(A[i][t]) < best) best = abs(A[i][t]), bi = i, bj = t;
        for (std::size_t j = t + 1; j < k; ++j)
          if (sgn(A[t][j]) != 0 && abs(A[t][j]) < best) best = abs(A[t][j]), bi = t, bj = j;
        std::swap(A[t], A[bi]);
        swap_cols(t, bj);
        continue;
      }
      // Divisibility: fold an offending row into row t and repeat.
      bool divisible = true;
      for (std::size_t i = t + 1; i < m && divisible; ++i)
        for (std::size_t j = t + 1; j < k; ++j)
          if (!mpz_divisible_p(A[i][j].get_mpz_t(), A[t][t].get_mpz_t())) {
            for (std::size_t c = t; c < k; ++c) A[t][c] += A[i][c];
            divisible = false;
            break;
          }
      if (divisible) break;
    }
    if (sgn(A[t][t]) < 0)
      for (std::size_t j = t; j < k; ++j) A[t][j] = -A[t][j];
    diag.push_back(A[t][t]);
  }
  diag.resize(n, 0);
  return diag;
}

}  // namespace

AbelianGroup::AbelianGroup(std::vector<Int> invariant_factors) : factors_(std::move(invariant_factors)) {
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    if (factors_[i] <= 1) throw std::invalid_argument("invariant factors must exceed 1");
    if (i > 0 && factors_[i] % factors_[i - 1] != 0)
      throw std::invalid_argument("invariant factors must form a divisibility chain");
  }
}

Int AbelianGroup::order() const {
  Int o = 1;
  for (Int d : factors_) {
    if (__builtin_mul_overflow(o, d, &o)) throw std::overflow_error("group order overflow");
  }
  return o;
}

std::vector<Int> AbelianGroup::reduce(std::vector<Int> v) const {
  if (v.size() != factors_.size()) throw std::invalid_argument("coordinate vector has wrong length");
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = floor_mod(v[i], factors_[i]);
  return v;
}

std::vector<Int> AbelianGroup::add(std::span<const Int> a, std::span<const Int> b) const {
  if (a.size() != factors_.size() || b.size() != factors_.size())
    throw std::invalid_argument("coordinate vector has wrong length");
  std::vector<Int> r(a.size());
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = floor_mod(floor_mod(a[i], factors_[i]) + floor_mod(b[i], factors_[i]), factors_[i]);
  return r;
}

std::vector<Int> AbelianGroup::neg(std::span<const Int> a) const { return scale(a, -1); }

std::vector<Int> AbelianGroup::scale(std::span<const Int> a, Int k) const {
  if (a.size() != factors_.size()) throw std::invalid_argument("coordinate vector has wrong length");
  std::vector<Int> r(a.size());
  for (std::size_t i = 0; i < r.size(); ++i) {
    __int128 v = static_cast<__int128>(floor_mod(a[i], factors_[i])) * floor_mod(k, factors_[i]);
    r[i] = static_cast<Int>(v % factors_[i]);
  }
  return r;
}

bool AbelianGroup::is_zero(std::span<const Int> a) const {
  if (a.size() != factors_.size()) throw std::invalid_argument("coordinate vector has wrong length");
  for (std::size_t i = 0; i < a.size(); ++i)
    if (floor_mod(a[i], factors_[i]) != 0) return false;
  return true;
}

Int AbelianGroup::element_order(std::span<const Int> a) const {
  Int o = 1;
  for (std::size_t i = 0; i < a.size(); ++i) {
    Int d = factors_[i];
    o = std::lcm(o, d / std::gcd(floor_mod(a[i], d), d));
  }
  return o;
}

Int AbelianGroup::subgroup_order(const std::vector<std::vector<Int>>& gens) const {
  const std::size_t r = factors_.size();
  if (r == 0) return 1;
  MpzMatrix A;
  for (std::size_t i = 0; i < r; ++i) {
    std::vector<mpz_class> row(r, 0);
    row[i] = static_cast<long>(factors_[i]);
    A.push_back(std::move(row));
  }
  for (const auto& g : gens) {
    if (g.size() != r) throw std::invalid_argument("coordinate vector has wrong length");
    std::vector<mpz_class> row(r);
    for (std::size_t i = 0; i < r; ++i) row[i] = static_cast<long>(g[i]);
    A.push_back(std::move(row));
  }
  auto d = smith(A, r, nullptr);
  mpz_class quotient = 1;
  for (const auto& x : d) quotient *= x;
  return order() / to_int(quotient);
}

std::vector<std::vector<Int>> AbelianGroup::elements() const {
  if (order() > 1'000'000) throw std::length_error("group too large to enumerate");
  std::vector<std::vector<Int>> out;
  std::vector<Int> cur(factors_.size(), 0);
  for (;;) {
    out.push_back(cur);
    std::size_t i = factors_.size();
    while (i > 0) {
      --i;
      if (++cur[i] < factors_[i]) break;
      cur[i] = 0;
      if (i == 0) return out;
    }
    if (factors_.empty()) return out;
  }
}

std::vector<Int> smith_diagonal(const std::vector<std::vector<Int>>& matrix) {
  if (matrix.empty()) return {};
  const std::size_t k = matrix.front().size();
  MpzMatrix A;
  for (const auto& row : matrix) {
    if (row.size() != k) throw std::invalid_argument("ragged matrix");
    std::vector<mpz_class> r(k);
    for (std::size_t j = 0; j < k; ++j) r[j] = static_cast<long>(row[j]);
    A.push_back(std::move(r));
  }
  std::vector<Int> out;
  for (const auto& d : smith(A, k, nullptr)) out.push_back(to_int(d));
  return out;
}

AbelianQuotient AbelianQuotient::from_relations(std::size_t generators,
                                                const std::vector<std::vector<Int>>& relations) {
  RelationLattice lattice(generators);
  for (const auto& r : relations) lattice.add(r);
  return lattice.quotient();
}

std::vector<Int> AbelianQuotient::image(std::span<const Int> exponents) const {
  if (exponents.size() != transform_.size()) throw std::invalid_argument("exponent vector has wrong length");
  const auto& d = group_.invariant_factors();
  std::vector<Int> out(d.size(), 0);
  for (std::size_t i = 0; i < exponents.size(); ++i) {
    if (exponents[i] == 0) continue;
    for (std::size_t j = 0; j < d.size(); ++j) {
      __int128 v = static_cast<__int128>(floor_mod(exponents[i], d[j])) * transform_[i][j];
      out[j] = static_cast<Int>((out[j] + v) % d[j]);
    }
  }
  return out;
}

struct RelationLattice::Impl {
  std::size_t k;
  std::size_t added = 0;
  std::vector<std::vector<mpz_class>> pivots;  // pivots[j] empty if none
  std::size_t pivot_count = 0;
  mpz_class modulus = 0;  // index once full rank

  void refresh_modulus() {
    if (pivot_count < k) return;
    mpz_class d = 1;
    for (std::size_t j = 0; j < k; ++j) d *= pivots[j][j];
    modulus = d;
    for (std::size_t j = 0; j < k; ++j)
      for (std::size_t c = j + 1; c < k; ++c) mpz_fdiv_r(pivots[j][c].get_mpz_t(), pivots[j][c].get_mpz_t(), modulus.get_mpz_t());
  }
};

RelationLattice::RelationLattice(std::size_t columns) : impl_(std::make_unique<Impl>()) {
  impl_->k = columns;
  impl_->pivots.resize(columns);
}
RelationLattice::~RelationLattice() = default;
RelationLattice::RelationLattice(RelationLattice&&) noexcept = default;
RelationLattice& RelationLattice::operator=(RelationLattice&&) noexcept = default;
RelationLattice::RelationLattice(const RelationLattice& o) : impl_(std::make_unique<Impl>(*o.impl_)) {}
RelationLattice& RelationLattice::operator=(const RelationLattice& o) {
  if (this != &o) impl_ = std::make_unique<Impl>(*o.impl_);
  return *this;
}

std::size_t RelationLattice::columns() const { return impl_->k; }
std::size_t RelationLattice::relations_added() const { return impl_->added; }
bool RelationLattice::full_rank() const { return impl_->pivot_count == impl_->k; }

std::optional<Int> RelationLattice::index() const {
  if (!full_rank()) return std::nullopt;
  if (impl_->k == 0) return 1;
  if (!impl_->modulus.fits_slong_p()) return std::nullopt;
  return impl_->modulus.get_si();
}

void RelationLattice::add(std::span<const Int> relation) {
  auto& s = *impl_;
  if (relation.size() != s.k) throw std::invalid_argument("relation has wrong length");
  ++s.added;
  if (s.pivot_count == s.k && s.modulus == 1) return;
  std::vector<mpz_class> r(s.k);
  for (std::size_t j = 0; j < s.k; ++j) r[j] = static_cast<long>(relation[j]);
  const bool modular = s.pivot_count == s.k;
  auto reduce = [&](std::vector<mpz_class>& v, std::size_t from) {
    if (!modular) return;
    for (std::size_t c = from; c < s.k; ++c) mpz_fdiv_r(v[c].get_mpz_t(), v[c].get_mpz_t(), s.modulus.get_mpz_t());
  };
  reduce(r, 0);
  bool changed = false;
  for (std::size_t j = 0; j < s.k; ++j) {
    if (sgn(r[j]) == 0) continue;
    auto& P = s.pivots[j];
    if (P.empty()) {
      if (sgn(r[j]) < 0)
        for (auto& x : r) x = -x;
      P = std::move(r);
      ++s.pivot_count;
      changed = true;
      break;
    }
    if (mpz_divisible_p(r[j].get_mpz_t(), P[j].get_mpz_t())) {
      mpz_class q = r[j] / P[j];
      for (std::size_t c = j; c < s.k; ++c) r[c] -= q * P[c];
    } else {
      mpz_class g, a, b;
      mpz_gcdext(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t(), P[j].get_mpz_t(), r[j].get_mpz_t());
      mpz_class pj = P[j] / g, rj = r[j] / g;
      std::vector<mpz_class> np(s.k), nr(s.k);
      for (std::size_t c = j; c < s.k; ++c) {
        np[c] = a * P[c] + b * r[c];
        nr[c] = rj * P[c] - pj * r[c];
      }
      if (sgn(np[j]) < 0)
        for (auto& x : np) x = -x;
      P = std::move(np);
      r = std::move(nr);
      changed = true;
    }
    reduce(P, j + 1);
    reduce(r, j + 1);
  }
  if (changed) s.refresh_modulus();
}

AbelianQuotient RelationLattice::quotient() const {
  const auto& s = *impl_;
  if (!full_rank()) throw std::domain_error("relation lattice is not of full rank: quotient is infinite");
  AbelianQuotient q;
  if (s.k == 0) return q;
  MpzMatrix A = s.pivots;
  MpzMatrix V;
  auto diag = smith(A, s.k, &V);
  std::vector<Int> factors;
  std::vector<std::size_t> cols;
  for (std::size_t j = 0; j < diag.size(); ++j) {
    if (sgn(diag[j]) == 0) throw std::domain_error("quotient is infinite");
    if (diag[j] != 1) {
      factors.push_back(to_int(diag[j]));
      cols.push_back(j);
    }
  }
  q.group_ = AbelianGroup(factors);
  q.transform_.assign(s.k, std::vector<Int>(cols.size(), 0));
  for (std::size_t i = 0; i < s.k; ++i)
    for (std::size_t c = 0; c < cols.size(); ++c) {
      mpz_class v;
      mpz_fdiv_r(v.get_mpz_t(), V[i][cols[c]].get_mpz_t(), diag[cols[c]].get_mpz_t());
      q.transform_[i][c] = to_int(v);
    }
  return q;
}

}  // namespace polya
