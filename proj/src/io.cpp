#include "flagweak/io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <vector>

namespace flagweak {

namespace {

constexpr std::string_view kMacron = "\xCC\x84";  // U+0304 COMBINING MACRON

[[noreturn]] void fail(std::string_view text, const std::string& why) {
  throw ParseError("cannot parse element '" + std::string(text) + "': " + why);
}

int to_int(std::string_view whole, std::string_view digits) {
  int v = 0;
  const auto* last = digits.data() + digits.size();
  auto [ptr, ec] = std::from_chars(digits.data(), last, v);
  if (digits.empty() || ec != std::errc() || ptr != last) fail(whole, "bad number '" + std::string(digits) + "'");
  return v;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

ColoredPermutation build(const GroupContext& ctx, std::string_view text, const std::vector<Letter>& w) {
  if (static_cast<int>(w.size()) != ctx.n())
    fail(text, "expected " + std::to_string(ctx.n()) + " entries, got " + std::to_string(w.size()));
  try {
    return {ctx, w};
  } catch (const std::invalid_argument& e) {
    fail(text, e.what());
  }
}

std::vector<Letter> parse_compact(const GroupContext& ctx, std::string_view text) {
  std::vector<Letter> w;
  std::size_t i = 0;
  while (i < text.size()) {
    if (!std::isdigit(static_cast<unsigned char>(text[i]))) fail(text, "unexpected character");
    Letter l{text[i] - '0', 0};
    ++i;
    if (text.substr(i, kMacron.size()) == kMacron) {
      if (ctx.r() != 2) fail(text, "overlined entries are only valid for r = 2");
      l.color = 1;
      i += kMacron.size();
    }
    w.push_back(l);
  }
  return w;
}

}  // namespace

ColoredPermutation parse_element(const GroupContext& ctx, std::string_view text) {
  const std::string_view body = trim(text);
  if (body.empty()) fail(text, "empty string");

  if (body.find(',') == std::string_view::npos && body.find('^') == std::string_view::npos &&
      body.find('-') == std::string_view::npos &&
      (ctx.n() > 1 || body.find(kMacron) != std::string_view::npos)) {
    if (ctx.n() > 9) fail(text, "compact form needs n <= 9");
    return build(ctx, text, parse_compact(ctx, body));
  }

  std::vector<Letter> w;
  std::size_t start = 0;
  while (start <= body.size()) {
    const auto comma = body.find(',', start);
    const auto end = comma == std::string_view::npos ? body.size() : comma;
    std::string_view tok = trim(body.substr(start, end - start));
    if (tok.empty()) fail(text, "empty entry");

    Letter l{0, 0};
    if (const auto caret = tok.find('^'); caret != std::string_view::npos) {
      l.value = to_int(text, tok.substr(0, caret));
      l.color = to_int(text, tok.substr(caret + 1));
    } else if (tok.front() == '-') {
      if (ctx.r() != 2) fail(text, "signed entries are only valid for r = 2");
      l.value = to_int(text, tok.substr(1));
      l.color = 1;
    } else {
      l.value = to_int(text, tok);
    }
    w.push_back(l);
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return build(ctx, text, w);
}

std::string format_element(const ColoredPermutation& g, Notation notation) {
  const bool is_signed = notation == Notation::Signed && g.context().r() == 2;
  std::string out;
  for (int i = 1; i <= g.size(); ++i) {
    if (i > 1) out += ',';
    if (is_signed) {
      if (g.color(i) == 1) out += '-';
      out += std::to_string(g.value(i));
    } else {
      out += std::to_string(g.value(i)) + '^' + std::to_string(g.color(i));
    }
  }
  return out;
}

}  // namespace flagweak
