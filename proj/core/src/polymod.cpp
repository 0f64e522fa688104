#include "polya/polymod.hpp"

#include <algorithm>
#include <stdexcept>

#include "polya/intmath.hpp"

namespace polya::fp {

Poly normalize(Poly a, Int p) {
  for (auto& c : a) c = floor_mod(c, p);
  while (!a.empty() && a.back() == 0) a.pop_back();
  return a;
}

int degree(const Poly& a) { return static_cast<int>(a.size()) - 1; }

Poly add(const Poly& a, const Poly& b, Int p) {
  Poly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] = floor_mod(r[i] + b[i], p);
  return normalize(std::move(r), p);
}

Poly sub(const Poly& a, const Poly& b, Int p) {
  Poly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] = floor_mod(r[i] - b[i], p);
  return normalize(std::move(r), p);
}

Poly mul(const Poly& a, const Poly& b, Int p) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = floor_mod(r[i + j] + mul_mod(a[i], b[j], p), p);
  return normalize(std::move(r), p);
}

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b, Int p) {
  Poly bb = normalize(b, p);
  if (bb.empty()) throw std::domain_error("polynomial division by zero");
  Poly r = normalize(a, p);
  if (r.size() < bb.size()) return {{}, r};
  Poly q(r.size() - bb.size() + 1, 0);
  Int inv_lead = inv_mod(bb.back(), p);
  for (int i = degree(r); i >= degree(bb); --i) {
    Int c = mul_mod(r[static_cast<std::size_t>(i)], inv_lead, p);
    if (c == 0) continue;
    std::size_t shift = static_cast<std::size_t>(i - degree(bb));
    q[shift] = c;
    for (std::size_t j = 0; j < bb.size(); ++j) r[shift + j] = floor_mod(r[shift + j] - mul_mod(c, bb[j], p), p);
  }
  return {normalize(std::move(q), p), normalize(std::move(r), p)};
}

Poly monic(const Poly& a, Int p) {
  Poly r = normalize(a, p);
  if (r.empty()) return r;
  Int inv = inv_mod(r.back(), p);
  for (auto& c : r) c = mul_mod(c, inv, p);
  return r;
}

Poly gcd(Poly a, Poly b, Int p) {
  a = normalize(std::move(a), p);
  b = normalize(std::move(b), p);
  while (!b.empty()) {
    Poly r = divmod(a, b, p).second;
    a = std::move(b);
    b = std::move(r);
  }
  return monic(a, p);
}

Poly powmod(const Poly& base, std::uint64_t e, const Poly& modulus, Int p) {
  Poly acc{1};
  acc = divmod(acc, modulus, p).second;
  Poly b = divmod(base, modulus, p).second;
  while (e) {
    if (e & 1) acc = divmod(mul(acc, b, p), modulus, p).second;
    b = divmod(mul(b, b, p), modulus, p).second;
    e >>= 1;
  }
  return acc;
}

Int eval(const Poly& a, Int x, Int p) {
  Int r = 0;
  for (auto it = a.rbegin(); it != a.rend(); ++it) r = floor_mod(mul_mod(r, x, p) + *it, p);
  return r;
}

namespace {

// g is monic, squarefree, and splits into distinct linear factors.
void split_linear(const Poly& g, Int p, std::vector<Int>& out) {
  if (degree(g) <= 0) return;
  if (degree(g) == 1) {
    out.push_back(floor_mod(-g[0], p));
    return;
  }
  for (Int delta = 0; delta < p; ++delta) {
    Poly h = powmod(Poly{delta, 1}, static_cast<std::uint64_t>((p - 1) / 2), g, p);
    h = sub(h, Poly{1}, p);
    Poly d = gcd(g, h, p);
    if (degree(d) > 0 && degree(d) < degree(g)) {
      split_linear(d, p, out);
      split_linear(divmod(g, d, p).first, p, out);
      return;
    }
  }
  throw std::logic_error("root splitting failed");
}

}  // namespace

std::vector<Int> roots(const Poly& a, Int p) {
  Poly f = monic(a, p);
  std::vector<Int> out;
  if (f.empty()) throw std::domain_error("roots of the zero polynomial");
  if (p < 64) {
    for (Int x = 0; x < p; ++x)
      if (eval(f, x, p) == 0) out.push_back(x);
    return out;
  }
  Poly xp = powmod(Poly{0, 1}, static_cast<std::uint64_t>(p), f, p);
  Poly g = gcd(f, sub(xp, Poly{0, 1}, p), p);
  split_linear(g, p, out);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::pair<Poly, int>> factor_small(const Poly& a, Int p) {
  Poly f = monic(a, p);
  if (degree(f) < 1) throw std::domain_error("factor_small needs a nonconstant polynomial");
  if (degree(f) > 3) throw std::domain_error("factor_small handles degree <= 3");
  std::vector<std::pair<Poly, int>> out;
  for (Int r : roots(f, p)) {
    Poly lin{floor_mod(-r, p), 1};
    int mult = 0;
    for (;;) {
      auto [q, rem] = divmod(f, lin, p);
      if (!rem.empty()) break;
      f = std::move(q);
      ++mult;
    }
    out.emplace_back(lin, mult);
  }
  if (degree(f) >= 1) out.emplace_back(f, 1);
  std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) {
    if (x.first.size() != y.first.size()) return x.first.size() < y.first.size();
    return x.first < y.first;
  });
  return out;
}

}  // namespace polya::fp
