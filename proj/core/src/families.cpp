#include "polya/families.hpp"

#include <cctype>
#include <charconv>
#include <sstream>

#include "polya/errors.hpp"

namespace polya {

namespace {

std::vector<int> range_cycle(int n) {
  std::vector<int> c(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) c[static_cast<std::size_t>(i)] = i;
  return c;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

GroupPresentation family_group(char family, int n) {
  if (n < 1 || n > 255) throw ParseError("family degree must be in 1..255");
  GroupPresentation g;
  g.name = std::string(1, family) + std::to_string(n);
  g.degree = n;
  switch (family) {
    case 'S':
      if (n >= 2) g.generators = {Perm::from_cycles(n, {{0, 1}}), Perm::from_cycles(n, {range_cycle(n)})};
      break;
    case 'A':
      for (int k = 2; k < n; ++k) g.generators.push_back(Perm::from_cycles(n, {{0, 1, k}}));
      break;
    case 'C':
      if (n >= 2) g.generators = {Perm::from_cycles(n, {range_cycle(n)})};
      break;
    case 'D': {
      if (n < 3) throw ParseError("dihedral family needs n >= 3");
      std::vector<std::uint8_t> refl(static_cast<std::size_t>(n));
      for (int i = 0; i < n; ++i) refl[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>((n - i) % n);
      g.generators = {Perm::from_cycles(n, {range_cycle(n)}), Perm(std::move(refl))};
      break;
    }
    default:
      throw ParseError(std::string("unknown group family '") + family + "'");
  }
  return g;
}

GroupPresentation named_group(std::string_view token) {
  token = trim(token);
  if (token == "F20") {
    // x -> x + 1 and x -> 2x on Z/5.
    return {"F20", 5, {Perm::from_cycles(5, {{0, 1, 2, 3, 4}}), Perm::from_cycles(5, {{1, 2, 4, 3}})}};
  }
  if (token.size() < 2) throw ParseError("bad group token '" + std::string(token) + "'");
  int n = 0;
  auto [ptr, ec] = std::from_chars(token.data() + 1, token.data() + token.size(), n);
  if (ec != std::errc() || ptr != token.data() + token.size())
    throw ParseError("bad group token '" + std::string(token) + "'");
  return family_group(token.front(), n);
}

GroupPresentation parse_group_text(std::string_view text, std::string name) {
  std::istringstream in{std::string(text)};
  std::string line;
  int degree = 0;
  std::vector<std::string> gen_lines;
  std::vector<std::string> content;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    auto t = trim(line);
    if (!t.empty()) content.emplace_back(t);
  }
  if (content.empty()) throw ParseError("empty group description");
  if (content.size() == 1 && content[0].rfind("degree", 0) != 0) return named_group(content[0]);
  for (const auto& l : content) {
    if (l.rfind("degree", 0) == 0) {
      if (degree != 0) throw ParseError("duplicate degree line");
      auto eq = l.find('=');
      if (eq == std::string::npos) throw ParseError("expected degree=<n>");
      auto v = trim(std::string_view(l).substr(eq + 1));
      auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), degree);
      if (ec != std::errc() || ptr != v.data() + v.size() || degree < 1 || degree > 255)
        throw ParseError("invalid degree '" + std::string(v) + "'");
    } else {
      gen_lines.push_back(l);
    }
  }
  if (degree == 0) throw ParseError("missing degree=<n> line");
  GroupPresentation g;
  g.name = std::move(name);
  g.degree = degree;
  for (const auto& l : gen_lines) g.generators.push_back(Perm::parse(degree, l));
  return g;
}

std::string format_group_text(const GroupPresentation& group) {
  std::string out = "degree=" + std::to_string(group.degree) + "\n";
  for (const auto& g : group.generators) out += g.to_string() + "\n";
  return out;
}

}  // namespace polya
