#include "minperm/caps.hpp"

#include <charconv>
#include <cstdlib>
#include <string>

#include "minperm/error.hpp"

namespace minperm {

Caps parse_caps(std::string_view text, Caps base) {
  while (!text.empty()) {
    const auto comma = text.find(',');
    const auto item = text.substr(0, comma);
    text = comma == std::string_view::npos ? std::string_view{} : text.substr(comma + 1);
    if (item.empty()) continue;
    const auto eq = item.find('=');
    if (eq == std::string_view::npos) throw Error(ErrorCode::ParseError, "cap '" + std::string(item) + "' has no '='");
    const auto key = item.substr(0, eq);
    const auto value_text = item.substr(eq + 1);
    std::size_t value = 0;
    const auto [end, ec] = std::from_chars(value_text.data(), value_text.data() + value_text.size(), value);
    if (ec != std::errc{} || end != value_text.data() + value_text.size() || value == 0)
      throw Error(ErrorCode::ParseError, "bad value for cap '" + std::string(key) + "'");
    if (key == "order") base.order = value;
    else if (key == "lattice") base.lattice = value;
    else if (key == "oracle") base.oracle_classes = value;
    else if (key == "branch") base.branch = value;
    else if (key == "collections") base.listed_collections = value;
    else throw Error(ErrorCode::ParseError, "unknown cap '" + std::string(key) + "'");
  }
  return base;
}

Caps caps_from_env(Caps base) {
  if (const char *env = std::getenv("MINPERM_CAPS")) return parse_caps(env, base);
  return base;
}

}  // namespace minperm
