#include "polya/artin.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "polya/errors.hpp"

namespace polya {

std::string SplittingType::to_string() const {
  std::string s;
  for (const auto& [f, e] : parts) {
    if (!s.empty()) s += '+';
    s += std::to_string(f);
    if (e > 1) s += '^' + std::to_string(e);
  }
  return s;
}

SplittingType SplittingType::parse(const std::string& text) {
  auto bad = [&] { return ParseError("bad splitting type '" + text + "'"); };
  auto number = [&](const std::string& s) {
    if (s.empty() || s.size() > 3 || !std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; }))
      throw bad();
    int v = std::stoi(s);
    if (v < 1) throw bad();
    return v;
  };
  SplittingType t;
  std::size_t start = 0;
  for (;;) {
    std::size_t plus = text.find('+', start);
    std::string part = text.substr(start, plus == std::string::npos ? std::string::npos : plus - start);
    auto caret = part.find('^');
    int f = number(part.substr(0, caret));
    int e = caret == std::string::npos ? 1 : number(part.substr(caret + 1));
    t.parts.emplace_back(f, e);
    if (plus == std::string::npos) break;
    start = plus + 1;
  }
  std::sort(t.parts.begin(), t.parts.end());
  return t;
}

int SplittingType::degree() const {
  int d = 0;
  for (const auto& [f, e] : parts) d += f * e;
  return d;
}

bool SplittingType::unramified() const {
  return std::all_of(parts.begin(), parts.end(), [](const auto& p) { return p.second == 1; });
}

namespace {

CosetAction cosets_of_derived(const PermGroup& H, const PermGroup& derived) { return CosetAction(H, derived); }

}  // namespace

Abelianization::Abelianization(PermGroup H)
    : H_(std::move(H)), derived_(derived_subgroup(H_)), cosets_(cosets_of_derived(H_, derived_)) {
  const auto& gens = H_.generators();
  const std::size_t r = gens.size();
  const std::size_t n = cosets_.size();
  coset_words_.assign(n, {});
  coset_words_[0] = std::vector<Int>(r, 0);
  std::vector<std::size_t> queue{0};
  for (std::size_t qi = 0; qi < queue.size(); ++qi) {
    std::size_t c = queue[qi];
    for (std::size_t j = 0; j < r; ++j) {
      std::size_t d = cosets_.act(c, gens[j]);
      if (coset_words_[d].empty()) {
        coset_words_[d] = coset_words_[c];
        coset_words_[d][j] += 1;
        queue.push_back(d);
      }
    }
  }
  std::vector<std::vector<Int>> relations;
  for (std::size_t c = 0; c < n; ++c)
    for (std::size_t j = 0; j < r; ++j) {
      std::size_t d = cosets_.act(c, gens[j]);
      std::vector<Int> rel(r);
      for (std::size_t i = 0; i < r; ++i) rel[i] = coset_words_[c][i] - coset_words_[d][i];
      rel[j] += 1;
      if (std::any_of(rel.begin(), rel.end(), [](Int x) { return x != 0; })) relations.push_back(std::move(rel));
    }
  quotient_ = AbelianQuotient::from_relations(r, relations);
  if (quotient_.group().order() != static_cast<Int>(n))
    throw std::logic_error("abelianization order mismatch");
}

std::vector<Int> Abelianization::project(const Perm& h) const {
  if (!H_.contains(h)) throw std::invalid_argument("element not in H");
  return quotient_.image(coset_words_[cosets_.coset_of(h)]);
}

Abelianization abelianization(const PermGroup& H) { return Abelianization(H); }

SplittingType splitting_from_frobenius(const Perm& g, const CosetAction& action) {
  SplittingType t;
  for (const auto& c : cycle_structure(g, action)) t.parts.emplace_back(c.length, 1);
  std::sort(t.parts.begin(), t.parts.end());
  return t;
}

std::vector<Int> pi_class(const Perm& g, int f, const std::vector<CosetCycle>& cycles, const Abelianization& ab) {
  if (f < 1) throw std::invalid_argument("f must be positive");
  const auto& group = ab.group();
  std::vector<Int> acc = group.zero();
  Perm gf = g.pow(f);
  for (const auto& c : cycles) {
    if (c.length != f) continue;
    acc = group.add(acc, ab.project(conjugate(c.representative, gf)));
  }
  return acc;
}

std::vector<Int> pi_class(const Perm& g, int f, const CosetAction& action, const Abelianization& ab) {
  return pi_class(g, f, cycle_structure(g, action), ab);
}

std::vector<Int> total_class(const Perm& g, const CosetAction& action, const Abelianization& ab) {
  const auto cycles = cycle_structure(g, action);
  const auto& group = ab.group();
  std::vector<Int> acc = group.zero();
  for (const auto& c : cycles) acc = group.add(acc, ab.project(conjugate(c.representative, g.pow(c.length))));
  return acc;
}

std::map<SplittingType, Rational> chebotarev_densities(const PermGroup& G, const CosetAction& action) {
  std::map<SplittingType, Int> counts;
  for (const auto& g : G.elements()) ++counts[splitting_from_frobenius(g, action)];
  std::map<SplittingType, Rational> out;
  for (const auto& [t, c] : counts) out.emplace(t, Rational(c, static_cast<Int>(G.order())));
  return out;
}

std::string to_string(const Rational& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

Rational parse_rational(const std::string& text) {
  try {
    auto slash = text.find('/');
    if (slash == std::string::npos) return Rational(std::stoll(text));
    return Rational(std::stoll(text.substr(0, slash)), std::stoll(text.substr(slash + 1)));
  } catch (const std::exception&) {
    throw ParseError("bad rational '" + text + "'");
  }
}

}  // namespace polya
