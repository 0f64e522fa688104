#include "detail/linalg.hpp"

#include <stdexcept>
#include <utility>

#include "polya/intmath.hpp"

namespace polya::detail {

std::vector<std::vector<Int>> nullspace_mod_p(std::vector<std::vector<Int>> A, Int p) {
  const std::size_t m = A.size();
  const std::size_t n = m ? A[0].size() : 0;
  for (auto& row : A)
    for (auto& x : row) x = floor_mod(x, p);
  std::vector<int> pivot_col;
  std::size_t r = 0;
  for (std::size_t c = 0; c < n && r < m; ++c) {
    std::size_t piv = r;
    while (piv < m && A[piv][c] == 0) ++piv;
    if (piv == m) continue;
    std::swap(A[piv], A[r]);
    Int inv = inv_mod(A[r][c], p);
    for (auto& x : A[r]) x = mul_mod(x, inv, p);
    for (std::size_t i = 0; i < m; ++i) {
      if (i == r || A[i][c] == 0) continue;
      Int t = A[i][c];
      for (std::size_t j = 0; j < n; ++j) A[i][j] = floor_mod(A[i][j] - mul_mod(t, A[r][j], p), p);
    }
    pivot_col.push_back(static_cast<int>(c));
    ++r;
  }
  std::vector<bool> is_pivot(n, false);
  for (int c : pivot_col) is_pivot[static_cast<std::size_t>(c)] = true;
  std::vector<std::vector<Int>> basis;
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Int> v(n, 0);
    v[free] = 1;
    for (std::size_t i = 0; i < pivot_col.size(); ++i)
      v[static_cast<std::size_t>(pivot_col[i])] = floor_mod(-A[i][free], p);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::vector<std::vector<Int>> left_kernel_mod_p(const std::vector<std::vector<Int>>& A, Int p) {
  if (A.empty()) return {};
  std::vector<std::vector<Int>> T(A[0].size(), std::vector<Int>(A.size()));
  for (std::size_t i = 0; i < A.size(); ++i)
    for (std::size_t j = 0; j < A[i].size(); ++j) T[j][i] = A[i][j];
  return nullspace_mod_p(std::move(T), p);
}

namespace {

using I128 = __int128;
using Wide = std::array<I128, 3>;

I128 wmod(I128 a, I128 m) {
  I128 r = a % m;
  return r < 0 ? r + m : r;
}

I128 wdiv_floor(I128 a, I128 b) {
  I128 q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

// Extended gcd with g >= 0.
I128 xgcd(I128 a, I128 b, I128& x, I128& y) {
  I128 x0 = 1, y0 = 0, x1 = 0, y1 = 1;
  while (b != 0) {
    I128 q = a / b;
    I128 t = a - q * b;
    a = b;
    b = t;
    t = x0 - q * x1;
    x0 = x1;
    x1 = t;
    t = y0 - q * y1;
    y0 = y1;
    y1 = t;
  }
  if (a < 0) a = -a, x0 = -x0, y0 = -y0;
  x = x0;
  y = y0;
  return a;
}

Int narrow(I128 v) {
  if (v > INT64_MAX || v < INT64_MIN) throw std::overflow_error("HNF entry overflow");
  return static_cast<Int>(v);
}

}  // namespace

Mat3 hnf3(const std::vector<Row3>& rows, Int modulus) {
  std::vector<Wide> A;
  A.reserve(rows.size() + 3);
  for (const auto& r : rows) {
    Wide w{r[0], r[1], r[2]};
    if (modulus > 0)
      for (auto& x : w) x = wmod(x, modulus);
    if (w[0] != 0 || w[1] != 0 || w[2] != 0) A.push_back(w);
  }
  if (modulus > 0)
    for (int j = 0; j < 3; ++j) {
      Wide w{0, 0, 0};
      w[static_cast<std::size_t>(j)] = modulus;
      A.push_back(w);
    }
  auto reduce = [&](Wide& w, int from) {
    if (modulus <= 0) return;
    for (int k = from; k < 3; ++k) w[static_cast<std::size_t>(k)] = wmod(w[static_cast<std::size_t>(k)], modulus);
  };

  Mat3 H{};
  std::size_t top = 0;
  for (int j = 0; j < 3; ++j) {
    const auto c = static_cast<std::size_t>(j);
    std::size_t piv = top;
    while (piv < A.size() && A[piv][c] == 0) ++piv;
    if (piv == A.size()) throw std::domain_error("lattice is not of full rank");
    std::swap(A[piv], A[top]);
    for (std::size_t r = top + 1; r < A.size(); ++r) {
      if (A[r][c] == 0) continue;
      I128 x, y;
      I128 a = A[top][c], b = A[r][c];
      I128 g = xgcd(a, b, x, y);
      Wide nt, nr;
      for (std::size_t k = 0; k < 3; ++k) {
        nt[k] = x * A[top][k] + y * A[r][k];
        nr[k] = (b / g) * A[top][k] - (a / g) * A[r][k];
      }
      reduce(nt, j + 1);
      reduce(nr, j + 1);
      A[top] = nt;
      A[r] = nr;
    }
    if (A[top][c] < 0)
      for (auto& x : A[top]) x = -x;
    ++top;
  }
  Wide W[3] = {A[0], A[1], A[2]};
  for (int j = 1; j < 3; ++j)
    for (int i = 0; i < j; ++i) {
      I128 q = wdiv_floor(W[i][static_cast<std::size_t>(j)], W[j][static_cast<std::size_t>(j)]);
      if (q != 0)
        for (std::size_t k = 0; k < 3; ++k) W[i][k] -= q * W[j][k];
    }
  for (int i = 0; i < 3; ++i)
    for (int k = 0; k < 3; ++k) H[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] = narrow(W[i][static_cast<std::size_t>(k)]);
  return H;
}

bool solve_upper(const Mat3& h, const Row3& v, Row3* coeffs) {
  I128 rem[3] = {v[0], v[1], v[2]};
  Row3 out{};
  for (int j = 0; j < 3; ++j) {
    const auto c = static_cast<std::size_t>(j);
    if (rem[j] % h[c][c] != 0) return false;
    I128 q = rem[j] / h[c][c];
    out[c] = narrow(q);
    for (int k = j; k < 3; ++k) rem[k] -= q * h[c][static_cast<std::size_t>(k)];
  }
  if (coeffs) *coeffs = out;
  return true;
}

Int det3(const Mat3& m) {
  auto e = [&](int i, int j) { return static_cast<I128>(m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]); };
  I128 d = e(0, 0) * (e(1, 1) * e(2, 2) - e(1, 2) * e(2, 1)) - e(0, 1) * (e(1, 0) * e(2, 2) - e(1, 2) * e(2, 0)) +
           e(0, 2) * (e(1, 0) * e(2, 1) - e(1, 1) * e(2, 0));
  return narrow(d);
}

Mat3 adjugate3(const Mat3& m) {
  auto e = [&](int i, int j) { return static_cast<I128>(m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]); };
  Mat3 a{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      int r0 = (j + 1) % 3, r1 = (j + 2) % 3, c0 = (i + 1) % 3, c1 = (i + 2) % 3;
      a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = narrow(e(r0, c0) * e(r1, c1) - e(r0, c1) * e(r1, c0));
    }
  return a;
}

}  // namespace polya::detail
