#include "morphz/expr.hpp"

#include <cctype>

namespace morphz {

namespace {

constexpr long kMaxFreeRank = 1000000;

struct Cursor {
  const std::string& text;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }
  bool at_end() {
    skip_ws();
    return pos >= text.size();
  }
  char peek() const { return text[pos]; }

  Int number() {
    skip_ws();
    std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == start) throw ParseError("expected a number", start);
    return Int(text.substr(start, pos - start));
  }
};

// term := '0' | 'Z' | 'Z' '^' nat | 'Z' '/' nat
void parse_term(Cursor& c, std::vector<Int>& orders, long& rank) {
  c.skip_ws();
  if (c.pos >= c.text.size()) throw ParseError("expected a group term", c.pos);
  if (c.peek() == '0') {
    ++c.pos;  // the trivial group contributes nothing
    return;
  }
  if (c.peek() != 'Z') throw ParseError("expected 'Z' or '0'", c.pos);
  ++c.pos;
  if (c.pos < c.text.size() && c.peek() == '^') {
    ++c.pos;
    Int r = c.number();
    if (r > kMaxFreeRank) throw std::domain_error("free rank " + r.get_str() + " is too large");
    rank += to_long(r);
  } else if (c.pos < c.text.size() && c.peek() == '/') {
    ++c.pos;
    orders.push_back(c.number());
  } else {
    rank += 1;
  }
}

}  // namespace

FgAbGroup parse_group(const std::string& text) {
  Cursor c{text};
  std::vector<Int> orders;
  long rank = 0;
  parse_term(c, orders, rank);
  while (!c.at_end()) {
    if (c.peek() != '+') throw ParseError("expected '+' between terms", c.pos);
    ++c.pos;
    parse_term(c, orders, rank);
  }
  return canonicalize(orders, rank);  // rejects Z/0 via the positivity check
}

std::string format_group(const FgAbGroup& g) {
  if (g.is_trivial()) return "0";
  std::string s;
  auto add = [&s](const std::string& part) {
    if (!s.empty()) s += " + ";
    s += part;
  };
  if (g.free_rank() == 1) add("Z");
  if (g.free_rank() >= 2) add("Z^" + std::to_string(g.free_rank()));
  for (const Int& d : g.invariant_factors()) add("Z/" + d.get_str());
  return s;
}

}  // namespace morphz
