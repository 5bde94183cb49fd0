#include "hilbound/poly.hpp"

#include <cctype>

namespace hilbound::polyring {

namespace {

struct Cursor {
  const std::string& text;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
      ++pos;
  }
  bool eof() {
    skip_ws();
    return pos >= text.size();
  }
  char peek() {
    skip_ws();
    return pos < text.size() ? text[pos] : '\0';
  }
  bool accept(char c) {
    if (peek() == c) {
      ++pos;
      return true;
    }
    return false;
  }
};

bool at_int(Cursor& c) { return std::isdigit(static_cast<unsigned char>(c.peek())); }
bool at_name(Cursor& c) {
  char ch = c.peek();
  return std::isalpha(static_cast<unsigned char>(ch)) || ch == '_';
}

Int read_int(Cursor& c) {
  c.skip_ws();
  std::size_t start = c.pos;
  while (c.pos < c.text.size() &&
         std::isdigit(static_cast<unsigned char>(c.text[c.pos])))
    ++c.pos;
  if (c.pos == start) throw parse_error("expected an integer", start);
  return Int(c.text.substr(start, c.pos - start));
}

std::string read_name(Cursor& c) {
  c.skip_ws();
  std::size_t start = c.pos;
  while (c.pos < c.text.size() &&
         (std::isalnum(static_cast<unsigned char>(c.text[c.pos])) ||
          c.text[c.pos] == '_'))
    ++c.pos;
  return c.text.substr(start, c.pos - start);
}

// factor := var ['^' posint] | int ; accumulates into (coef, expo)
void read_factor(Cursor& c, const std::vector<std::string>& variables,
                 Int& coef, Exponents& expo) {
  if (at_int(c)) {
    coef *= read_int(c);
    return;
  }
  if (!at_name(c)) throw parse_error("expected a variable or an integer", c.pos);
  c.skip_ws();
  std::size_t name_pos = c.pos;
  std::string name = read_name(c);
  std::size_t var = variables.size();
  for (std::size_t i = 0; i < variables.size(); ++i)
    if (variables[i] == name) var = i;
  if (var == variables.size())
    throw parse_error("unknown variable '" + name + "'", name_pos);
  unsigned long exponent = 1;
  if (c.accept('^')) {
    Int e = read_int(c);
    if (!e.fits_ulong_p() || e.get_ui() > 1'000'000)
      throw parse_error("exponent too large", c.pos);
    exponent = e.get_ui();
  }
  expo[var] += static_cast<unsigned>(exponent);
}

}  // namespace

RawPoly parse_poly_text(const std::string& text,
                        const std::vector<std::string>& variables) {
  Cursor c{text};
  RawPoly out;
  if (c.eof()) throw parse_error("empty polynomial", 0);

  bool negative = false;
  if (c.accept('-'))
    negative = true;
  else
    c.accept('+');

  while (true) {
    // term := [int '*']? factor ('*' factor)*
    Int coef = negative ? -1 : 1;
    Exponents expo(variables.size(), 0);
    read_factor(c, variables, coef, expo);
    while (c.accept('*')) read_factor(c, variables, coef, expo);
    out.terms.emplace_back(std::move(coef), std::move(expo));

    if (c.eof()) break;
    if (c.accept('+'))
      negative = false;
    else if (c.accept('-'))
      negative = true;
    else
      throw parse_error(std::string("unexpected character '") + c.peek() + "'",
                        c.pos);
  }
  return out;
}

}  // namespace hilbound::polyring
