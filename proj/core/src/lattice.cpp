#include "polya/lattice.hpp"

#include <array>
#include <cmath>
#include <string>

#include "polya/errors.hpp"

namespace polya {

namespace {

using Vec = std::array<double, 3>;

double dot(const Vec& a, const Vec& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }

Elem combine(const ElemMat& b, const std::array<Int, 3>& x) {
  Elem r{0, 0, 0};
  for (std::size_t i = 0; i < 3; ++i) {
    if (x[i] == 0) continue;
    for (std::size_t k = 0; k < 3; ++k) r[k] = checked_add(r[k], checked_mul(x[i], b[i][k]));
  }
  return r;
}

}  // namespace

ElemMat lll_reduce(const MaximalOrder& O, ElemMat b, double delta) {
  std::array<Vec, 3> v;
  for (std::size_t i = 0; i < 3; ++i) v[i] = O.embed(b[i]);
  std::array<Vec, 3> bs;
  double mu[3][3] = {};
  double B[3] = {};
  auto gram_schmidt = [&] {
    for (std::size_t i = 0; i < 3; ++i) {
      bs[i] = v[i];
      for (std::size_t j = 0; j < i; ++j) {
        mu[i][j] = dot(v[i], bs[j]) / B[j];
        for (std::size_t k = 0; k < 3; ++k) bs[i][k] -= mu[i][j] * bs[j][k];
      }
      B[i] = dot(bs[i], bs[i]);
    }
  };
  gram_schmidt();
  std::size_t k = 1;
  int guard = 0;
  while (k < 3) {
    if (++guard > 10000) break;
    for (std::size_t jj = k; jj-- > 0;) {
      double q = std::round(mu[k][jj]);
      if (q == 0) continue;
      Int qi = static_cast<Int>(q);
      for (std::size_t c = 0; c < 3; ++c) b[k][c] = checked_add(b[k][c], -checked_mul(qi, b[jj][c]));
      v[k] = O.embed(b[k]);
      gram_schmidt();
    }
    if (B[k] >= (delta - mu[k][k - 1] * mu[k][k - 1]) * B[k - 1]) {
      ++k;
    } else {
      std::swap(b[k], b[k - 1]);
      std::swap(v[k], v[k - 1]);
      gram_schmidt();
      k = k > 1 ? k - 1 : 1;
    }
  }
  return b;
}

EnumerationResult enumerate_short(const MaximalOrder& O, const ElemMat& basis, double bound, std::uint64_t max_nodes,
                                  const std::function<bool(const Elem&, double)>& visit) {
  std::array<Vec, 3> v;
  for (std::size_t i = 0; i < 3; ++i) v[i] = O.embed(basis[i]);
  double Q[3][3];
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) Q[i][j] = dot(v[i], v[j]);
  // Q(x) = sum_i q[i][i] (x_i + sum_{j>i} q[i][j] x_j)^2
  double q[3][3] = {};
  for (int i = 0; i < 3; ++i) {
    q[i][i] = Q[i][i];
    for (int k = 0; k < i; ++k) q[i][i] -= q[k][k] * q[k][i] * q[k][i];
    for (int j = i + 1; j < 3; ++j) {
      q[i][j] = Q[i][j];
      for (int k = 0; k < i; ++k) q[i][j] -= q[k][k] * q[k][i] * q[k][j];
      q[i][j] /= q[i][i];
    }
  }
  const double limit = bound * (1 + 1e-9) + 1e-9;
  EnumerationResult res;
  std::array<Int, 3> x{0, 0, 0};
  bool stop = false;

  std::function<void(int, double)> rec = [&](int i, double used) {
    double c = 0;
    for (int j = i + 1; j < 3; ++j) c -= q[i][j] * static_cast<double>(x[static_cast<std::size_t>(j)]);
    double room = (limit - used) / q[i][i];
    if (room < 0) return;
    double r = std::sqrt(room);
    Int lo = static_cast<Int>(std::ceil(c - r - 1e-9));
    Int hi = static_cast<Int>(std::floor(c + r + 1e-9));
    bool upper_zero = true;
    for (int j = i + 1; j < 3; ++j) upper_zero = upper_zero && x[static_cast<std::size_t>(j)] == 0;
    if (upper_zero && lo < 0) lo = 0;
    for (Int xi = lo; xi <= hi && !stop; ++xi) {
      if (++res.nodes > max_nodes) {
        res.completed = false;
        stop = true;
        return;
      }
      x[static_cast<std::size_t>(i)] = xi;
      double t = static_cast<double>(xi) - c;
      double u = used + q[i][i] * t * t;
      if (u > limit) continue;
      if (i > 0) {
        rec(i - 1, u);
      } else if (!(upper_zero && xi == 0)) {
        if (!visit(combine(basis, x), u)) stop = true;
      }
    }
    x[static_cast<std::size_t>(i)] = 0;
  };
  rec(2, 0.0);
  return res;
}

double generator_search_bound(const MaximalOrder& O, Int n, double safety) {
  double d = std::abs(static_cast<double>(O.discriminant()));
  return safety * 3.0 * std::pow(static_cast<double>(n) * std::sqrt(d), 2.0 / 3.0);
}

std::optional<Elem> find_generator(const MaximalOrder& O, const Ideal& I, const PrincipalSearch& opts) {
  const Int n = I.norm();
  if (n == 1) return O.one();
  const ElemMat basis = lll_reduce(O, I.hnf());
  const double final_bound = generator_search_bound(O, n, opts.safety);
  double bound = 3.0 * std::pow(static_cast<double>(n), 2.0 / 3.0);
  std::uint64_t spent = 0;
  for (;;) {
    bound = std::min(bound, final_bound);
    std::optional<Elem> found;
    auto res = enumerate_short(O, basis, bound, opts.max_nodes - spent, [&](const Elem& a, double) {
      Int N = O.norm(a);
      if (N == n || N == -n) {
        found = a;
        return false;
      }
      return true;
    });
    spent += res.nodes;
    if (found) return found;
    if (!res.completed)
      throw BudgetExceeded("generator search exceeded " + std::to_string(opts.max_nodes) + " lattice nodes");
    if (bound >= final_bound) return std::nullopt;
    bound *= 4;
  }
}

}  // namespace polya
