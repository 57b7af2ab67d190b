// Text grammar for polynomials:
//   poly  := term (('+'|'-') term)*
//   term  := coeff | coeff '*' 'x' ['^' uint] | 'x' ['^' uint]
//   coeff := int | int '/' uint
// Whitespace is ignored. A sign may precede the first term.

#include <cctype>
#include <string>

#include "gfp/errors.hpp"
#include "gfp/polynomial.hpp"

namespace gfp {

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Polynomial parse() {
    skip_ws();
    if (at_end()) fail("empty input");
    Polynomial result;
    bool negative = false;
    if (peek() == '-' || peek() == '+') {
      negative = get() == '-';
    }
    result += term(negative);
    while (true) {
      skip_ws();
      if (at_end()) break;
      char op = get();
      if (op != '+' && op != '-') fail(std::string("expected '+' or '-', found '") + op + "'");
      result += term(op == '-');
    }
    return result;
  }

 private:
  Polynomial term(bool negative) {
    skip_ws();
    if (at_end()) fail("expected a term");
    Rational coeff(1);
    bool has_coeff = false;
    if (peek() == '-' || peek() == '+' || std::isdigit(static_cast<unsigned char>(peek()))) {
      coeff = coefficient();
      has_coeff = true;
      skip_ws();
      if (at_end() || peek() != '*') return Polynomial::constant(negative ? -coeff : coeff);
      get();
      skip_ws();
    }
    if (at_end() || peek() != 'x') fail(has_coeff ? "expected 'x' after '*'" : "expected a coefficient or 'x'");
    get();
    std::size_t power = 1;
    skip_ws();
    if (!at_end() && peek() == '^') {
      get();
      skip_ws();
      power = unsigned_int();
    }
    return Polynomial::monomial(negative ? -coeff : coeff, power);
  }

  Rational coefficient() {
    std::string num;
    if (peek() == '-' || peek() == '+') num.push_back(get());
    num += digits();
    skip_ws();
    if (!at_end() && peek() == '/') {
      get();
      skip_ws();
      std::string den = digits();
      if (den.find_first_not_of('0') == std::string::npos) throw ParseError("zero denominator in '" + std::string(text_) + "'");
      return Rational::parse(num + "/" + den);
    }
    return Rational::parse(num);
  }

  std::size_t unsigned_int() {
    std::string d = digits();
    if (d.size() > 9) fail("exponent too large");
    return static_cast<std::size_t>(std::stoul(d));
  }

  std::string digits() {
    std::string out;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) out.push_back(get());
    if (out.empty()) fail("expected digits");
    return out;
  }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }
  char get() { return text_[pos_++]; }

  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("polynomial parse error at offset " + std::to_string(pos_) + ": " + what + " in '" +
                     std::string(text_) + "'");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial Polynomial::parse(std::string_view text) { return Parser(text).parse(); }

std::string Polynomial::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  for (std::size_t k = coeffs_.size(); k-- > 0;) {
    const Rational& c = coeffs_[k];
    if (c.is_zero()) continue;
    const bool negative = c.sign() < 0;
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    const Rational mag = negative ? -c : c;
    if (k == 0) {
      out += mag.to_string();
      continue;
    }
    if (mag != Rational(1)) out += mag.to_string() + "*";
    out += "x";
    if (k > 1) out += "^" + std::to_string(k);
  }
  return out;
}

}  // namespace gfp
