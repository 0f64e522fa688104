#pragma once

#include <array>
#include <optional>
#include <string>

#include "polya/abelian.hpp"
#include "polya/cubic.hpp"

namespace polya {

// An element of O_K written in the integral basis w0 = 1, w1, w2.
using Elem = std::array<Int, 3>;
using ElemMat = std::array<Elem, 3>;

// The ring of integers of Q(t), f(t) = 0, for an irreducible monic cubic f.
//
// The integral basis is the lower-triangular Hermite basis of O_K in terms of
// 1, t, t^2, so w0 = 1 and w1 = (b10 + b11 t) / den, w2 = (b20 + b21 t + b22 t^2) / den.
class MaximalOrder {
 public:
  // Throws std::invalid_argument if f is reducible.
  explicit MaximalOrder(const CubicPoly& f);

  const CubicPoly& poly() const { return f_; }
  Int poly_discriminant() const { return poly_disc_; }
  Int discriminant() const { return disc_; }
  // [O_K : Z[t]]
  Int index() const { return index_; }
  int r1() const { return r1_; }
  int r2() const { return (3 - r1_) / 2; }

  // Rows are numerators of w_i in the power basis; divide by denominator().
  const ElemMat& basis() const { return basis_; }
  Int denominator() const { return den_; }

  Elem one() const { return {1, 0, 0}; }
  Elem from_int(Int n) const { return {n, 0, 0}; }
  const Elem& theta() const { return theta_; }

  Elem mul(const Elem& a, const Elem& b) const;
  Elem mul_mod(const Elem& a, const Elem& b, Int p) const;
  Elem pow_mod(Elem a, std::uint64_t e, Int p) const;
  Elem pow(const Elem& a, unsigned e) const;
  // Row i is a * w_i.
  ElemMat mult_matrix(const Elem& a) const;
  Int norm(const Elem& a) const;
  Int trace(const Elem& a) const;

  // Numerators of a in the power basis over denominator().
  std::array<Int, 3> to_power(const Elem& a) const;
  // (n0 + n1 t + n2 t^2) / d as an element, or nullopt if not integral.
  std::optional<Elem> from_power(const std::array<Int, 3>& numer, Int d) const;
  // Human-readable polynomial in t, e.g. "(1 + t^2)/2".
  std::string format(const Elem& a) const;

  // Real coordinates of w_i under the Minkowski map scaled so that the
  // squared length of embed(a) is T2(a) = sum |sigma(a)|^2.
  const std::array<std::array<double, 3>, 3>& embedding() const { return emb_; }
  std::array<double, 3> embed(const Elem& a) const;
  double t2(const Elem& a) const;

 private:
  void set_basis(const ElemMat& rows, Int den);
  void round2(Int p);
  void compute_embedding();

  CubicPoly f_;
  Int poly_disc_ = 0;
  Int disc_ = 0;
  Int index_ = 1;
  int r1_ = 3;
  ElemMat basis_{};
  Int den_ = 1;
  Elem theta_{};
  std::array<ElemMat, 3> table_{};  // table_[i][j] = w_i * w_j
  std::array<std::array<double, 3>, 3> emb_{};
};

// Dedekind's criterion: true iff p does not divide [O_K : Z[t]].
bool dedekind_p_maximal(const CubicPoly& f, Int p);

}  // namespace polya
