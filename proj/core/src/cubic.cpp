#include "polya/cubic.hpp"

#include <cctype>
#include <charconv>
#include <map>

#include "polya/errors.hpp"
#include "polya/intmath.hpp"

namespace polya {

namespace {

Int parse_int(std::string_view s, std::string_view whole) {
  Int v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) throw ParseError("bad integer in '" + std::string(whole) + "'");
  return v;
}

CubicPoly parse_triple(std::string_view text) {
  Int c[3];
  std::size_t start = 0;
  for (int i = 0; i < 3; ++i) {
    std::size_t comma = text.find(',', start);
    if ((i < 2) != (comma != std::string_view::npos)) throw ParseError("expected three comma-separated integers");
    std::string_view part = text.substr(start, i < 2 ? comma - start : std::string_view::npos);
    c[i] = parse_int(part, text);
    start = comma + 1;
  }
  return {c[0], c[1], c[2]};
}

}  // namespace

CubicPoly CubicPoly::parse(std::string_view text) {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
  if (s.empty()) throw ParseError("empty polynomial");
  if (s.find('x') == std::string::npos && s.find('X') == std::string::npos) return parse_triple(s);

  std::map<int, Int> coeffs;
  std::size_t i = 0;
  while (i < s.size()) {
    Int sign = 1;
    if (s[i] == '+' || s[i] == '-') {
      sign = s[i] == '-' ? -1 : 1;
      ++i;
    } else if (i != 0) {
      throw ParseError("expected '+' or '-' in '" + std::string(text) + "'");
    }
    std::size_t j = i;
    while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
    bool has_coeff = j > i;
    Int coeff = has_coeff ? parse_int(std::string_view(s).substr(i, j - i), text) : 1;
    i = j;
    int deg = 0;
    if (i < s.size() && s[i] == '*') {
      if (!has_coeff) throw ParseError("dangling '*' in '" + std::string(text) + "'");
      ++i;
      if (i >= s.size() || (s[i] != 'x' && s[i] != 'X')) throw ParseError("expected x after '*'");
    }
    if (i < s.size() && (s[i] == 'x' || s[i] == 'X')) {
      ++i;
      deg = 1;
      if (i < s.size() && s[i] == '^') {
        ++i;
        std::size_t k = i;
        while (k < s.size() && std::isdigit(static_cast<unsigned char>(s[k]))) ++k;
        if (k == i) throw ParseError("expected exponent after '^'");
        deg = static_cast<int>(parse_int(std::string_view(s).substr(i, k - i), text));
        i = k;
      }
    } else if (!has_coeff) {
      throw ParseError("empty term in '" + std::string(text) + "'");
    }
    coeffs[deg] = checked_add(coeffs[deg], checked_mul(sign, coeff));
  }
  std::erase_if(coeffs, [](const auto& kv) { return kv.second == 0; });
  if (coeffs.empty() || coeffs.rbegin()->first != 3) throw ParseError("not a cubic: '" + std::string(text) + "'");
  if (coeffs[3] != 1) throw ParseError("cubic must be monic: '" + std::string(text) + "'");
  return {coeffs[2], coeffs[1], coeffs[0]};
}

Int CubicPoly::eval(Int x) const {
  Int r = 1;
  r = checked_add(checked_mul(r, x), a2);
  r = checked_add(checked_mul(r, x), a1);
  r = checked_add(checked_mul(r, x), a0);
  return r;
}

std::string CubicPoly::to_string() const {
  std::string s = "x^3";
  auto term = [&](Int c, const char* mono) {
    if (c == 0) return;
    s += c < 0 ? " - " : " + ";
    Int a = c < 0 ? -c : c;
    if (a != 1 || mono[0] == '\0') s += std::to_string(a);
    if (mono[0] != '\0' && a != 1) s += '*';
    s += mono;
  };
  term(a2, "x^2");
  term(a1, "x");
  term(a0, "");
  return s;
}

Int discriminant(const CubicPoly& f) {
  const __int128 b = f.a2, c = f.a1, d = f.a0;
  __int128 disc = b * b * c * c - 4 * c * c * c - 4 * b * b * b * d - 27 * d * d + 18 * b * c * d;
  if (disc > INT64_MAX || disc < INT64_MIN) throw std::overflow_error("discriminant overflow");
  return static_cast<Int>(disc);
}

bool is_irreducible(const CubicPoly& f) {
  if (f.a0 == 0) return false;
  // A monic integer cubic is reducible iff it has an integer root, which divides a0.
  Int m = f.a0 < 0 ? -f.a0 : f.a0;
  if (m > 1'000'000'000'000LL) throw std::overflow_error("constant term too large for the rational root test");
  for (Int d = 1; d * d <= m; ++d) {
    if (m % d) continue;
    for (Int r : {d, -d, m / d, -(m / d)}) {
      const __int128 x = r;
      const __int128 v = ((x + f.a2) * x + f.a1) * x + f.a0;
      if (v == 0) return false;
    }
  }
  return true;
}

bool is_galois_cubic(const CubicPoly& f) { return is_square(discriminant(f)); }

}  // namespace polya
