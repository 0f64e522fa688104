#include "polya/order.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "detail/linalg.hpp"
#include "polya/intmath.hpp"
#include "polya/polymod.hpp"

namespace polya {

namespace {

using I128 = __int128;
using detail::Mat3;
using detail::Row3;

Int narrow(I128 v) {
  if (v > INT64_MAX || v < INT64_MIN) throw std::overflow_error("number field arithmetic overflow");
  return static_cast<Int>(v);
}

// (sum a_i t^i)(sum b_i t^i) mod f, numerators only.
std::array<I128, 3> power_mul(const CubicPoly& f, const Row3& a, const Row3& b) {
  I128 c[5] = {0, 0, 0, 0, 0};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) c[i + j] += static_cast<I128>(a[static_cast<std::size_t>(i)]) * b[static_cast<std::size_t>(j)];
  for (int k = 4; k >= 3; --k) {
    c[k - 1] -= f.a2 * c[k];
    c[k - 2] -= f.a1 * c[k];
    c[k - 3] -= f.a0 * c[k];
  }
  return {c[0], c[1], c[2]};
}

// Lower-triangular Hermite form of the row span, then divided through by the
// common content with den.
std::pair<Mat3, Int> canonical_basis(const Mat3& rows, Int den) {
  std::vector<Row3> rev;
  for (const auto& r : rows) rev.push_back({r[2], r[1], r[0]});
  Mat3 h = detail::hnf3(rev, 0);
  Mat3 lower{};
  for (int i = 0; i < 3; ++i) {
    const auto& src = h[static_cast<std::size_t>(i)];
    lower[static_cast<std::size_t>(2 - i)] = {src[2], src[1], src[0]};
  }
  Int g = den;
  for (const auto& r : lower)
    for (Int x : r) g = std::gcd(g, x);
  for (auto& r : lower)
    for (Int& x : r) x /= g;
  return {lower, den / g};
}

fp::Poly lift_poly(const std::vector<I128>& a, Int p) {
  fp::Poly r;
  for (I128 c : a) {
    I128 m = c % p;
    if (m < 0) m += p;
    r.push_back(static_cast<Int>(m));
  }
  return fp::normalize(r, p);
}

std::vector<I128> zmul(const std::vector<I128>& a, const std::vector<I128>& b) {
  std::vector<I128> r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  return r;
}

}  // namespace

bool dedekind_p_maximal(const CubicPoly& f, Int p) {
  const fp::Poly F{f.a0, f.a1, f.a2, 1};
  auto factors = fp::factor_small(F, p);
  std::vector<I128> G{1};
  fp::Poly gbar{1}, hbar{1};
  for (const auto& [g, e] : factors) {
    std::vector<I128> gz(g.begin(), g.end());
    for (int k = 0; k < e; ++k) G = zmul(G, gz);
    gbar = fp::mul(gbar, g, p);
    for (int k = 0; k + 1 < e; ++k) hbar = fp::mul(hbar, g, p);
  }
  std::vector<I128> R(4, 0);
  for (std::size_t i = 0; i < 4; ++i) {
    I128 fi = F[i];
    I128 gi = i < G.size() ? G[i] : 0;
    if ((fi - gi) % p != 0) throw std::logic_error("Dedekind test: inexact division");
    R[i] = (fi - gi) / p;
  }
  fp::Poly d = fp::gcd(fp::gcd(lift_poly(R, p), gbar, p), hbar, p);
  return fp::degree(d) == 0;
}

MaximalOrder::MaximalOrder(const CubicPoly& f) : f_(f) {
  if (!is_irreducible(f)) throw std::invalid_argument("polynomial is reducible: " + f.to_string());
  poly_disc_ = polya::discriminant(f);
  r1_ = poly_disc_ > 0 ? 3 : 1;
  set_basis({Row3{1, 0, 0}, Row3{0, 1, 0}, Row3{0, 0, 1}}, 1);
  for (const auto& [p, k] : factorize(poly_disc_)) {
    if (k < 2) continue;
    if (dedekind_p_maximal(f_, p)) continue;
    round2(p);
  }
  I128 idx2 = static_cast<I128>(index_) * index_;
  if (poly_disc_ % idx2 != 0) throw std::logic_error("index does not divide the discriminant");
  disc_ = narrow(poly_disc_ / idx2);
  compute_embedding();
}

void MaximalOrder::set_basis(const ElemMat& rows, Int den) {
  auto [b, d] = canonical_basis(rows, den);
  basis_ = b;
  den_ = d;
  if (basis_[0][0] != den_) throw std::logic_error("order basis does not start with 1");
  const Int det = detail::det3(basis_);
  const Mat3 adj = detail::adjugate3(basis_);
  I128 d3 = static_cast<I128>(den_) * den_ * den_;
  if (d3 % det != 0) throw std::logic_error("non-integral index");
  index_ = narrow(d3 / det);
  const I128 scale = static_cast<I128>(den_) * det;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = i; j < 3; ++j) {
      auto P = power_mul(f_, basis_[i], basis_[j]);
      Elem c{};
      for (std::size_t k = 0; k < 3; ++k) {
        I128 s = 0;
        for (std::size_t m = 0; m < 3; ++m) s += P[m] * adj[m][k];
        if (s % scale != 0) throw std::logic_error("basis is not closed under multiplication");
        c[k] = narrow(s / scale);
      }
      table_[i][j] = c;
      table_[j][i] = c;
    }
  auto th = from_power({0, 1, 0}, 1);
  if (!th) throw std::logic_error("t is not in the order");
  theta_ = *th;
}

Elem MaximalOrder::mul(const Elem& a, const Elem& b) const {
  I128 acc[3] = {0, 0, 0};
  for (std::size_t i = 0; i < 3; ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < 3; ++j) {
      if (b[j] == 0) continue;
      I128 ab = static_cast<I128>(a[i]) * b[j];
      for (std::size_t k = 0; k < 3; ++k) acc[k] += ab * table_[i][j][k];
    }
  }
  return {narrow(acc[0]), narrow(acc[1]), narrow(acc[2])};
}

Elem MaximalOrder::mul_mod(const Elem& a, const Elem& b, Int p) const {
  I128 acc[3] = {0, 0, 0};
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) {
      I128 ab = (static_cast<I128>(floor_mod(a[i], p)) * floor_mod(b[j], p)) % p;
      for (std::size_t k = 0; k < 3; ++k) acc[k] = (acc[k] + ab * floor_mod(table_[i][j][k], p)) % p;
    }
  return {static_cast<Int>(acc[0]), static_cast<Int>(acc[1]), static_cast<Int>(acc[2])};
}

Elem MaximalOrder::pow_mod(Elem a, std::uint64_t e, Int p) const {
  Elem acc{1 % p, 0, 0};
  while (e) {
    if (e & 1) acc = mul_mod(acc, a, p);
    a = mul_mod(a, a, p);
    e >>= 1;
  }
  return acc;
}

Elem MaximalOrder::pow(const Elem& a, unsigned e) const {
  Elem acc = one();
  for (unsigned i = 0; i < e; ++i) acc = mul(acc, a);
  return acc;
}

ElemMat MaximalOrder::mult_matrix(const Elem& a) const {
  ElemMat m{};
  for (std::size_t i = 0; i < 3; ++i) {
    I128 acc[3] = {0, 0, 0};
    for (std::size_t j = 0; j < 3; ++j)
      for (std::size_t k = 0; k < 3; ++k) acc[k] += static_cast<I128>(a[j]) * table_[j][i][k];
    m[i] = {narrow(acc[0]), narrow(acc[1]), narrow(acc[2])};
  }
  return m;
}

Int MaximalOrder::norm(const Elem& a) const {
  auto m = mult_matrix(a);
  auto e = [&](std::size_t i, std::size_t j) { return static_cast<I128>(m[i][j]); };
  I128 d = e(0, 0) * (e(1, 1) * e(2, 2) - e(1, 2) * e(2, 1)) - e(0, 1) * (e(1, 0) * e(2, 2) - e(1, 2) * e(2, 0)) +
           e(0, 2) * (e(1, 0) * e(2, 1) - e(1, 1) * e(2, 0));
  return narrow(d);
}

Int MaximalOrder::trace(const Elem& a) const {
  auto m = mult_matrix(a);
  return checked_add(checked_add(m[0][0], m[1][1]), m[2][2]);
}

std::array<Int, 3> MaximalOrder::to_power(const Elem& a) const {
  I128 acc[3] = {0, 0, 0};
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t k = 0; k < 3; ++k) acc[k] += static_cast<I128>(a[i]) * basis_[i][k];
  return {narrow(acc[0]), narrow(acc[1]), narrow(acc[2])};
}

std::optional<Elem> MaximalOrder::from_power(const std::array<Int, 3>& numer, Int d) const {
  if (d == 0) throw std::domain_error("zero denominator");
  const Mat3 adj = detail::adjugate3(basis_);
  const I128 scale = static_cast<I128>(d) * detail::det3(basis_);
  Elem c{};
  for (std::size_t k = 0; k < 3; ++k) {
    I128 s = 0;
    for (std::size_t m = 0; m < 3; ++m) s += static_cast<I128>(numer[m]) * adj[m][k];
    s *= den_;
    if (s % scale != 0) return std::nullopt;
    c[k] = narrow(s / scale);
  }
  return c;
}

std::string MaximalOrder::format(const Elem& a) const {
  auto n = to_power(a);
  Int d = den_;
  Int g = std::gcd(std::gcd(std::gcd(n[0], n[1]), n[2]), d);
  if (g > 1)
    for (auto& x : n) x /= g;
  d /= g;
  static const char* mono[3] = {"", "t", "t^2"};
  std::string s;
  for (int i = 0; i < 3; ++i) {
    Int c = n[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    Int m = c < 0 ? -c : c;
    if (s.empty())
      s += c < 0 ? "-" : "";
    else
      s += c < 0 ? " - " : " + ";
    if (m != 1 || i == 0) s += std::to_string(m);
    if (i > 0 && m != 1) s += '*';
    s += mono[i];
  }
  if (s.empty()) s = "0";
  if (d != 1) s = "(" + s + ")/" + std::to_string(d);
  return s;
}

void MaximalOrder::compute_embedding() {
  using C = std::complex<long double>;
  auto fval = [&](C z) { return ((z + static_cast<long double>(f_.a2)) * z + static_cast<long double>(f_.a1)) * z + static_cast<long double>(f_.a0); };
  long double radius = 1;
  for (Int c : {f_.a2, f_.a1, f_.a0}) radius = std::max(radius, 1 + std::abs(static_cast<long double>(c)));
  C z[3] = {C(0.4L, 0.9L) * radius, std::pow(C(0.4L, 0.9L), 2) * radius, std::pow(C(0.4L, 0.9L), 3) * radius};
  for (int it = 0; it < 2000; ++it) {
    long double delta = 0;
    for (int k = 0; k < 3; ++k) {
      C den = 1;
      for (int j = 0; j < 3; ++j)
        if (j != k) den *= z[k] - z[j];
      C step = fval(z[k]) / den;
      z[k] -= step;
      delta = std::max(delta, std::abs(step));
    }
    if (delta < 1e-18L * radius) break;
  }
  // Newton polish.
  for (auto& r : z)
    for (int it = 0; it < 3; ++it) {
      C d = (3.0L * r + 2.0L * static_cast<long double>(f_.a2)) * r + static_cast<long double>(f_.a1);
      if (std::abs(d) > 0) r -= fval(r) / d;
    }
  std::sort(std::begin(z), std::end(z), [](C a, C b) { return std::abs(a.imag()) < std::abs(b.imag()); });
  auto value = [&](std::size_t i, C x) {
    C acc = 0;
    for (int k = 2; k >= 0; --k) acc = acc * x + static_cast<long double>(basis_[i][static_cast<std::size_t>(k)]);
    return acc / static_cast<long double>(den_);
  };
  if (r1_ == 3) {
    long double re[3] = {z[0].real(), z[1].real(), z[2].real()};
    std::sort(re, re + 3);
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t k = 0; k < 3; ++k) emb_[i][k] = static_cast<double>(value(i, C(re[k], 0)).real());
  } else {
    C real_root(z[0].real(), 0);
    C cx = z[1].imag() > 0 ? z[1] : z[2];
    const long double s2 = std::sqrt(2.0L);
    for (std::size_t i = 0; i < 3; ++i) {
      C v = value(i, cx);
      emb_[i] = {static_cast<double>(value(i, real_root).real()), static_cast<double>(s2 * v.real()),
                 static_cast<double>(s2 * v.imag())};
    }
  }
}

std::array<double, 3> MaximalOrder::embed(const Elem& a) const {
  std::array<double, 3> v{0, 0, 0};
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t k = 0; k < 3; ++k) v[k] += static_cast<double>(a[i]) * emb_[i][k];
  return v;
}

double MaximalOrder::t2(const Elem& a) const {
  auto v = embed(a);
  return v[0] * v[0] + v[1] * v[1] + v[2] * v[2];
}

void MaximalOrder::round2(Int p) {
  for (;;) {
    Int q = p;
    while (q < 3) q *= p;
    std::vector<std::vector<Int>> frob;
    for (std::size_t i = 0; i < 3; ++i) {
      Elem w{0, 0, 0};
      w[i] = 1;
      Elem r = pow_mod(w, static_cast<std::uint64_t>(q), p);
      frob.push_back({r[0], r[1], r[2]});
    }
    auto rad = detail::left_kernel_mod_p(frob, p);
    if (rad.empty()) return;
    std::vector<Row3> gens;
    for (const auto& v : rad) gens.push_back({v[0], v[1], v[2]});
    const Mat3 Ip = detail::hnf3(gens, p);

    std::vector<std::vector<Int>> phi(3, std::vector<Int>(9, 0));
    for (std::size_t i = 0; i < 3; ++i) {
      Elem w{0, 0, 0};
      w[i] = 1;
      for (std::size_t k = 0; k < 3; ++k) {
        Elem prod = mul(w, Ip[k]);
        Row3 y;
        if (!detail::solve_upper(Ip, prod, &y)) throw std::logic_error("radical is not an ideal");
        for (std::size_t m = 0; m < 3; ++m) phi[i][3 * k + m] = floor_mod(y[m], p);
      }
    }
    auto mult = detail::left_kernel_mod_p(phi, p);
    if (mult.empty()) return;
    std::vector<Row3> ugens;
    for (const auto& v : mult) ugens.push_back({v[0], v[1], v[2]});
    const Mat3 U = detail::hnf3(ugens, p);
    ElemMat rows{};
    for (std::size_t i = 0; i < 3; ++i) rows[i] = to_power(U[i]);
    set_basis(rows, checked_mul(den_, p));
  }
}

}  // namespace polya
