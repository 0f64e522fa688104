#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace polya {

// A permutation of {0, ..., degree-1}. Products read left to right:
// (a * b)(x) = b(a(x)), so that cosets act on the right as in H s g.
class Perm {
 public:
  Perm() = default;
  explicit Perm(std::vector<std::uint8_t> images);

  static Perm identity(int degree);
  // 0-indexed cycles; points not mentioned are fixed.
  static Perm from_cycles(int degree, const std::vector<std::vector<int>>& cycles);
  // 1-indexed cycle notation, e.g. "(1 2)(3 4)" or "()" for the identity.
  static Perm parse(int degree, std::string_view text);

  int degree() const { return static_cast<int>(images_.size()); }
  int operator[](int point) const { return images_[static_cast<std::size_t>(point)]; }
  const std::vector<std::uint8_t>& images() const { return images_; }

  bool is_identity() const;
  int fixed_points() const;
  Perm inverse() const;
  Perm pow(long long k) const;
  int order() const;
  // Cycle lengths (including 1s), sorted ascending.
  std::vector<int> cycle_type() const;
  std::vector<std::vector<int>> cycles() const;

  // 1-indexed cycle notation, fixed points omitted; identity is "()".
  std::string to_string() const;

  friend Perm operator*(const Perm& a, const Perm& b);
  friend auto operator<=>(const Perm&, const Perm&) = default;
  friend bool operator==(const Perm&, const Perm&) = default;

 private:
  std::vector<std::uint8_t> images_;
};

struct PermHash {
  std::size_t operator()(const Perm& p) const noexcept;
};

// Conjugate s * g * s^-1.
Perm conjugate(const Perm& s, const Perm& g);

}  // namespace polya
