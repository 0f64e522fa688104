#include <charconv>

#include "polya/errors.hpp"
#include "polya_cli/commands.hpp"

namespace polya::cli {

namespace {

Int to_int(std::string_view s, const std::string& whole) {
  Int v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || p != s.data() + s.size()) throw ParseError("bad range '" + whole + "'");
  return v;
}

}  // namespace

Range parse_range(const std::string& text) {
  auto dots = text.find("..");
  if (dots == std::string::npos) {
    Int v = to_int(text, text);
    return {v, v};
  }
  return {to_int(std::string_view(text).substr(0, dots), text), to_int(std::string_view(text).substr(dots + 2), text)};
}

Format parse_format(const std::string& s) {
  if (s == "json") return Format::json;
  if (s == "csv") return Format::csv;
  throw ParseError("format must be json or csv, got '" + s + "'");
}

}  // namespace polya::cli
