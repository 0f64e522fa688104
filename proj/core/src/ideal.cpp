#include "polya/ideal.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "detail/linalg.hpp"
#include "polya/polymod.hpp"

namespace polya {

namespace {

using detail::Row3;

ElemMat identity3() { return {Elem{1, 0, 0}, Elem{0, 1, 0}, Elem{0, 0, 1}}; }

Elem unit_vector(std::size_t i) {
  Elem e{0, 0, 0};
  e[i] = 1;
  return e;
}

// Coordinates of v in O / J, where pO is contained in J: one residue per
// column whose pivot is p.
std::vector<Int> residue(const ElemMat& J, Elem v, Int p) {
  std::vector<Int> out;
  for (std::size_t j = 0; j < 3; ++j) {
    v[j] = floor_mod(v[j], p);
    if (J[j][j] == 1) {
      Int c = v[j];
      for (std::size_t k = j; k < 3; ++k) v[k] = floor_mod(v[k] - mul_mod(c, J[j][k], p), p);
    } else {
      out.push_back(v[j]);
    }
  }
  return out;
}

std::vector<std::size_t> free_columns(const ElemMat& J) {
  std::vector<std::size_t> cols;
  for (std::size_t j = 0; j < 3; ++j)
    if (J[j][j] != 1) cols.push_back(j);
  return cols;
}

Elem lift(const std::vector<Int>& v, const std::vector<std::size_t>& cols) {
  Elem e{0, 0, 0};
  for (std::size_t i = 0; i < cols.size(); ++i) e[cols[i]] = v[i];
  return e;
}

Elem sub_scalar(Elem a, Int c, Int p) {
  a[0] = floor_mod(a[0] - c, p);
  return a;
}

std::vector<Int> char_poly_roots(const std::vector<std::vector<Int>>& M, Int p) {
  const std::size_t n = M.size();
  auto m = [&](std::size_t i, std::size_t j) { return floor_mod(M[i][j], p); };
  fp::Poly cp;
  if (n == 1) {
    cp = {floor_mod(-m(0, 0), p), 1};
  } else if (n == 2) {
    Int tr = floor_mod(m(0, 0) + m(1, 1), p);
    Int det = floor_mod(mul_mod(m(0, 0), m(1, 1), p) - mul_mod(m(0, 1), m(1, 0), p), p);
    cp = {det, floor_mod(-tr, p), 1};
  } else {
    Int tr = floor_mod(m(0, 0) + m(1, 1) + m(2, 2), p);
    Int minors = 0;
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = i + 1; j < 3; ++j)
        minors = floor_mod(minors + mul_mod(m(i, i), m(j, j), p) - mul_mod(m(i, j), m(j, i), p), p);
    Row3 r0{m(0, 0), m(0, 1), m(0, 2)}, r1{m(1, 0), m(1, 1), m(1, 2)}, r2{m(2, 0), m(2, 1), m(2, 2)};
    Int det = 0;
    det = floor_mod(det + mul_mod(r0[0], floor_mod(mul_mod(r1[1], r2[2], p) - mul_mod(r1[2], r2[1], p), p), p), p);
    det = floor_mod(det - mul_mod(r0[1], floor_mod(mul_mod(r1[0], r2[2], p) - mul_mod(r1[2], r2[0], p), p), p), p);
    det = floor_mod(det + mul_mod(r0[2], floor_mod(mul_mod(r1[0], r2[1], p) - mul_mod(r1[1], r2[0], p), p), p), p);
    cp = {floor_mod(-det, p), minors, floor_mod(-tr, p), 1};
  }
  return fp::roots(cp, p);
}

Elem helper_for(const MaximalOrder& O, const Ideal& P, Int p) {
  std::vector<std::vector<Int>> phi(3, std::vector<Int>(9, 0));
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t k = 0; k < 3; ++k) {
      Elem prod = O.mul_mod(unit_vector(i), P.hnf()[k], p);
      for (std::size_t m = 0; m < 3; ++m) phi[i][3 * k + m] = prod[m];
    }
  auto ker = detail::left_kernel_mod_p(phi, p);
  if (ker.empty()) throw std::logic_error("no element of p/P found");
  return {ker[0][0], ker[0][1], ker[0][2]};
}

Elem two_element_generator(const MaximalOrder& O, const Ideal& P, Int p) {
  const Elem pe = O.from_int(p);
  auto works = [&](const Elem& g) {
    Elem gens[2] = {pe, g};
    return Ideal::generated(O, gens, p) == P;
  };
  for (const auto& row : P.hnf()) {
    Elem r{floor_mod(row[0], p), floor_mod(row[1], p), floor_mod(row[2], p)};
    if (works(r)) return r;
  }
  std::uint64_t state = 0x9e3779b97f4a7c15ULL ^ static_cast<std::uint64_t>(p);
  for (int attempt = 0; attempt < 20000; ++attempt) {
    Elem g{0, 0, 0};
    for (const auto& row : P.hnf()) {
      state = state * 6364136223846793005ULL + 1442695040888963407ULL;
      Int c = static_cast<Int>((state >> 33) % static_cast<std::uint64_t>(p));
      for (std::size_t k = 0; k < 3; ++k) g[k] = floor_mod(g[k] + mul_mod(c, row[k], p), p);
    }
    if (works(g)) return g;
  }
  throw std::logic_error("no two-element representation found");
}

void finish(const MaximalOrder& O, Int p, std::vector<PrimeIdeal>& primes) {
  std::sort(primes.begin(), primes.end(), [](const PrimeIdeal& a, const PrimeIdeal& b) {
    if (a.f != b.f) return a.f < b.f;
    if (a.e != b.e) return a.e < b.e;
    return a.ideal < b.ideal;
  });
  for (std::size_t i = 0; i < primes.size(); ++i) {
    primes[i].label = std::to_string(p) + static_cast<char>('a' + i);
    if (primes[i].generator == Elem{0, 0, 0}) primes[i].generator = two_element_generator(O, primes[i].ideal, p);
  }
  int total = 0;
  for (const auto& P : primes) total += P.e * P.f;
  if (total != 3) throw std::logic_error("prime decomposition does not have degree 3");
}

}  // namespace

Ideal::Ideal() : hnf_(identity3()) {}

Ideal Ideal::generated(const MaximalOrder& O, std::span<const Elem> gens, Int multiple) {
  if (multiple <= 0) throw std::invalid_argument("ideal multiple must be positive");
  std::vector<Row3> rows;
  for (const auto& g : gens)
    for (std::size_t i = 0; i < 3; ++i) {
      Elem r = O.mul(g, unit_vector(i));
      rows.push_back({floor_mod(r[0], multiple), floor_mod(r[1], multiple), floor_mod(r[2], multiple)});
    }
  return Ideal(detail::hnf3(rows, multiple));
}

Ideal Ideal::from_lattice(std::span<const Elem> rows, Int multiple) {
  if (multiple <= 0) throw std::invalid_argument("ideal multiple must be positive");
  std::vector<Row3> r(rows.begin(), rows.end());
  return Ideal(detail::hnf3(r, multiple));
}

Ideal Ideal::principal(const MaximalOrder& O, const Elem& alpha) {
  Int n = O.norm(alpha);
  if (n == 0) throw std::invalid_argument("principal ideal of zero");
  if (n < 0) n = -n;
  auto m = O.mult_matrix(alpha);
  return from_lattice(m, n);
}

Ideal Ideal::rational(Int n) {
  if (n <= 0) throw std::invalid_argument("rational ideal needs n > 0");
  return Ideal(ElemMat{Elem{n, 0, 0}, Elem{0, n, 0}, Elem{0, 0, n}});
}

Int Ideal::norm() const { return checked_mul(checked_mul(hnf_[0][0], hnf_[1][1]), hnf_[2][2]); }

Int Ideal::minimum() const {
  // e0 = x * hnf; the minimum is the common denominator of x.
  using Q = boost::rational<Int>;
  const auto& h = hnf_;
  Q x0(1, h[0][0]);
  Q x1 = -x0 * h[0][1] / h[1][1];
  Q x2 = -(x0 * h[0][2] + x1 * h[1][2]) / h[2][2];
  Int d = std::lcm(std::lcm(x0.denominator(), x1.denominator()), x2.denominator());
  return d;
}

bool Ideal::contains(const Elem& a) const { return detail::solve_upper(hnf_, a, nullptr); }

std::string Ideal::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < 3; ++i) {
    if (i) os << ',';
    os << '[' << hnf_[i][0] << ',' << hnf_[i][1] << ',' << hnf_[i][2] << ']';
  }
  os << ']';
  return os.str();
}

Ideal multiply(const MaximalOrder& O, const Ideal& a, const Ideal& b) {
  if (a.is_unit()) return b;
  if (b.is_unit()) return a;
  std::vector<Elem> rows;
  for (const auto& x : a.hnf())
    for (const auto& y : b.hnf()) rows.push_back(O.mul(x, y));
  return Ideal::from_lattice(rows, checked_mul(a.minimum(), b.minimum()));
}

Ideal power(const MaximalOrder& O, const Ideal& a, unsigned k) {
  Ideal r;
  for (unsigned i = 0; i < k; ++i) r = multiply(O, r, a);
  return r;
}

bool is_ideal_lattice(const MaximalOrder& O, const ElemMat& hnf) {
  for (const auto& row : hnf)
    for (std::size_t i = 0; i < 3; ++i)
      if (!detail::solve_upper(hnf, O.mul(row, unit_vector(i)), nullptr)) return false;
  return true;
}

std::vector<PrimeIdeal> factor_prime_dedekind(const MaximalOrder& O, Int p) {
  if (!is_prime(p)) throw std::invalid_argument("not a prime: " + std::to_string(p));
  if (O.index() % p == 0) throw std::domain_error("p divides the index of Z[t]");
  const auto& f = O.poly();
  std::vector<PrimeIdeal> out;
  for (const auto& [g, e] : fp::factor_small(fp::Poly{f.a0, f.a1, f.a2, 1}, p)) {
    Elem gamma{0, 0, 0};
    for (auto it = g.rbegin(); it != g.rend(); ++it) {
      gamma = O.mul(gamma, O.theta());
      gamma[0] += *it;
    }
    for (auto& c : gamma) c = floor_mod(c, p);
    PrimeIdeal P;
    P.p = p;
    P.f = fp::degree(g);
    P.e = e;
    Elem gens[2] = {O.from_int(p), gamma};
    P.ideal = Ideal::generated(O, gens, p);
    P.generator = gamma;
    P.generator_poly.assign(g.begin(), g.end());
    P.uniformizer_helper = helper_for(O, P.ideal, p);
    out.push_back(std::move(P));
  }
  finish(O, p, out);
  return out;
}

std::vector<PrimeIdeal> factor_prime_algebra(const MaximalOrder& O, Int p) {
  if (!is_prime(p)) throw std::invalid_argument("not a prime: " + std::to_string(p));
  Int q = p;
  while (q < 3) q *= p;
  std::vector<std::vector<Int>> frob;
  for (std::size_t i = 0; i < 3; ++i) {
    Elem r = O.pow_mod(unit_vector(i), static_cast<std::uint64_t>(q), p);
    frob.push_back({r[0], r[1], r[2]});
  }
  std::vector<Elem> rad;
  for (const auto& v : detail::left_kernel_mod_p(frob, p)) rad.push_back({v[0], v[1], v[2]});
  const Ideal J = Ideal::from_lattice(rad, p);
  const ElemMat& JH = J.hnf();
  const auto cols = free_columns(JH);

  // Frobenius-fixed part of O / J.
  std::vector<std::vector<Int>> L;
  for (std::size_t c : cols) {
    Elem x = unit_vector(c);
    Elem y = O.pow_mod(x, static_cast<std::uint64_t>(p), p);
    for (std::size_t k = 0; k < 3; ++k) y[k] -= x[k];
    L.push_back(residue(JH, y, p));
  }
  std::vector<Elem> fixed;
  for (const auto& v : detail::left_kernel_mod_p(L, p)) fixed.push_back(lift(v, cols));

  auto is_zero_mod_J = [&](const Elem& x) {
    for (Int r : residue(JH, x, p))
      if (r) return false;
    return true;
  };
  std::vector<Elem> idems{O.one()};
  for (const auto& b : fixed) {
    std::vector<std::vector<Int>> M;
    for (std::size_t c : cols) M.push_back(residue(JH, O.mul_mod(b, unit_vector(c), p), p));
    std::vector<Elem> next;
    for (const auto& eps : idems)
      for (Int c : char_poly_roots(M, p)) {
        Elem t = O.pow_mod(sub_scalar(b, c, p), static_cast<std::uint64_t>(p - 1), p);
        Elem e_c = sub_scalar(Elem{floor_mod(-t[0], p), floor_mod(-t[1], p), floor_mod(-t[2], p)}, -1, p);
        Elem prod = O.mul_mod(eps, e_c, p);
        if (!is_zero_mod_J(prod)) next.push_back(prod);
      }
    idems = std::move(next);
  }
  if (idems.size() != fixed.size()) throw std::logic_error("idempotent splitting failed");

  std::vector<PrimeIdeal> out;
  for (const auto& eps : idems) {
    std::vector<std::vector<Int>> A;
    for (std::size_t i = 0; i < 3; ++i) A.push_back(residue(JH, O.mul_mod(eps, unit_vector(i), p), p));
    std::vector<Elem> gens;
    for (const auto& v : detail::left_kernel_mod_p(A, p)) gens.push_back({v[0], v[1], v[2]});
    PrimeIdeal P;
    P.p = p;
    P.ideal = Ideal::from_lattice(gens, p);
    P.f = 0;
    for (std::size_t j = 0; j < 3; ++j)
      if (P.ideal.hnf()[j][j] != 1) ++P.f;
    P.uniformizer_helper = helper_for(O, P.ideal, p);
    P.e = valuation(O, P, O.from_int(p));
    out.push_back(std::move(P));
  }
  finish(O, p, out);
  return out;
}

std::vector<PrimeIdeal> factor_prime(const MaximalOrder& O, Int p) {
  if (!is_prime(p)) throw std::invalid_argument("not a prime: " + std::to_string(p));
  if (O.index() % p != 0) return factor_prime_dedekind(O, p);
  return factor_prime_algebra(O, p);
}

int valuation(const MaximalOrder& O, const PrimeIdeal& P, Elem alpha) {
  if (alpha == Elem{0, 0, 0}) throw std::invalid_argument("valuation of zero");
  Int n = O.norm(alpha);
  int bound = 0;
  while (n % P.p == 0) n /= P.p, ++bound;
  if (bound == 0) return 0;
  // Congruence mod p^(bound+1) O_K fixes the valuation, which is at most bound.
  Int mod = P.p;
  for (int i = 0; i < bound; ++i) mod = checked_mul(mod, P.p);
  for (auto& c : alpha) c = floor_mod(c, mod);
  int v = 0;
  while (P.ideal.contains(alpha)) {
    if (v == bound) throw std::logic_error("valuation exceeds the norm bound");
    alpha = O.mul_mod(alpha, P.uniformizer_helper, mod);
    mod /= P.p;
    for (auto& c : alpha) {
      if (c % P.p != 0) throw std::logic_error("valuation step left the order");
      c = floor_mod(c / P.p, mod);
    }
    ++v;
  }
  return v;
}

SplittingType splitting_type(const std::vector<PrimeIdeal>& primes) {
  SplittingType t;
  for (const auto& P : primes) t.parts.emplace_back(P.f, P.e);
  std::sort(t.parts.begin(), t.parts.end());
  return t;
}

}  // namespace polya
