#include "polya/perm.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "polya/errors.hpp"

namespace polya {

Perm::Perm(std::vector<std::uint8_t> images) : images_(std::move(images)) {
  if (images_.empty()) throw std::invalid_argument("permutation degree must be positive");
  std::vector<bool> seen(images_.size(), false);
  for (auto v : images_) {
    if (v >= images_.size() || seen[v]) throw std::invalid_argument("images do not form a bijection");
    seen[v] = true;
  }
}

Perm Perm::identity(int degree) {
  if (degree <= 0 || degree > 255) throw std::invalid_argument("degree must be in 1..255");
  std::vector<std::uint8_t> im(static_cast<std::size_t>(degree));
  std::iota(im.begin(), im.end(), std::uint8_t{0});
  return Perm(std::move(im));
}

Perm Perm::from_cycles(int degree, const std::vector<std::vector<int>>& cycles) {
  Perm p = identity(degree);
  std::vector<bool> used(static_cast<std::size_t>(degree), false);
  for (const auto& c : cycles) {
    for (int x : c) {
      if (x < 0 || x >= degree) throw std::invalid_argument("cycle point out of range");
      if (used[static_cast<std::size_t>(x)]) throw std::invalid_argument("cycles are not disjoint");
      used[static_cast<std::size_t>(x)] = true;
    }
    for (std::size_t i = 0; i < c.size(); ++i)
      p.images_[static_cast<std::size_t>(c[i])] = static_cast<std::uint8_t>(c[(i + 1) % c.size()]);
  }
  return p;
}

Perm Perm::parse(int degree, std::string_view text) {
  std::vector<std::vector<int>> cycles;
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && (text[i] == ' ' || text[i] == '\t' || text[i] == '\r')) ++i;
  };
  skip_ws();
  if (i == text.size()) throw ParseError("empty permutation");
  while (i < text.size()) {
    skip_ws();
    if (i == text.size()) break;
    if (text[i] != '(') throw ParseError("expected '(' in cycle notation: " + std::string(text));
    ++i;
    std::vector<int> cycle;
    for (;;) {
      skip_ws();
      if (i < text.size() && text[i] == ',') {
        ++i;
        continue;
      }
      if (i >= text.size()) throw ParseError("unterminated cycle: " + std::string(text));
      if (text[i] == ')') {
        ++i;
        break;
      }
      if (text[i] < '0' || text[i] > '9') throw ParseError("unexpected character in cycle: " + std::string(text));
      int v = 0;
      while (i < text.size() && text[i] >= '0' && text[i] <= '9') {
        v = v * 10 + (text[i] - '0');
        if (v > 1000) throw ParseError("point out of range");
        ++i;
      }
      if (v < 1 || v > degree) throw ParseError("point " + std::to_string(v) + " outside 1.." + std::to_string(degree));
      cycle.push_back(v - 1);
    }
    if (cycle.size() > 1) cycles.push_back(std::move(cycle));
  }
  try {
    return from_cycles(degree, cycles);
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
}

bool Perm::is_identity() const {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != i) return false;
  return true;
}

int Perm::fixed_points() const {
  int n = 0;
  for (std::size_t i = 0; i < images_.size(); ++i) n += images_[i] == i;
  return n;
}

Perm Perm::inverse() const {
  std::vector<std::uint8_t> inv(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) inv[images_[i]] = static_cast<std::uint8_t>(i);
  Perm r;
  r.images_ = std::move(inv);
  return r;
}

Perm Perm::pow(long long k) const {
  Perm base = k < 0 ? inverse() : *this;
  unsigned long long e = k < 0 ? static_cast<unsigned long long>(-k) : static_cast<unsigned long long>(k);
  Perm acc = identity(degree());
  while (e) {
    if (e & 1) acc = acc * base;
    base = base * base;
    e >>= 1;
  }
  return acc;
}

int Perm::order() const {
  long long l = 1;
  for (int c : cycle_type()) l = std::lcm(l, static_cast<long long>(c));
  return static_cast<int>(l);
}

std::vector<std::vector<int>> Perm::cycles() const {
  std::vector<std::vector<int>> out;
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t s = 0; s < images_.size(); ++s) {
    if (seen[s]) continue;
    std::vector<int> c;
    for (std::size_t x = s; !seen[x]; x = images_[x]) {
      seen[x] = true;
      c.push_back(static_cast<int>(x));
    }
    out.push_back(std::move(c));
  }
  return out;
}

std::vector<int> Perm::cycle_type() const {
  std::vector<int> t;
  for (const auto& c : cycles()) t.push_back(static_cast<int>(c.size()));
  std::sort(t.begin(), t.end());
  return t;
}

std::string Perm::to_string() const {
  std::string s;
  for (const auto& c : cycles()) {
    if (c.size() < 2) continue;
    s += '(';
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (i) s += ' ';
      s += std::to_string(c[i] + 1);
    }
    s += ')';
  }
  return s.empty() ? "()" : s;
}

Perm operator*(const Perm& a, const Perm& b) {
  if (a.degree() != b.degree()) throw std::invalid_argument("degree mismatch in product");
  Perm r;
  r.images_.resize(a.images_.size());
  for (std::size_t i = 0; i < a.images_.size(); ++i) r.images_[i] = b.images_[a.images_[i]];
  return r;
}

std::size_t PermHash::operator()(const Perm& p) const noexcept {
  std::size_t h = 1469598103934665603ULL;
  for (auto v : p.images()) {
    h ^= v;
    h *= 1099511628211ULL;
  }
  return h;
}

Perm conjugate(const Perm& s, const Perm& g) { return s * g * s.inverse(); }

}  // namespace polya
