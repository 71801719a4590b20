#include "courant/poly_parse.hpp"

#include <cctype>

namespace courant {

namespace {

class Parser {
 public:
  Parser(std::string_view src, int nvars) : src_(src), nvars_(nvars) {}

  Poly parse() {
    Poly result = expr();
    skip_ws();
    if (pos_ != src_.size()) fail("unexpected character '" + std::string(1, src_[pos_]) + "'");
    return result;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }

  void skip_ws() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
  }

  char peek() {
    skip_ws();
    return pos_ < src_.size() ? src_[pos_] : '\0';
  }

  bool is_digit_at(std::size_t i) const {
    return i < src_.size() && std::isdigit(static_cast<unsigned char>(src_[i]));
  }

  std::string_view uint_token() {
    skip_ws();
    std::size_t start = pos_;
    while (is_digit_at(pos_)) ++pos_;
    if (start == pos_) fail("expected unsigned integer");
    return src_.substr(start, pos_ - start);
  }

  int small_uint(const char* what) {
    std::size_t start = pos_;
    std::string_view digits = uint_token();
    long value = 0;
    for (char ch : digits) {
      value = value * 10 + (ch - '0');
      if (value > kMaxDegree) {
        pos_ = start;
        fail(std::string(what) + " too large");
      }
    }
    return static_cast<int>(value);
  }

  Poly expr() {
    Poly acc = term();
    for (;;) {
      char c = peek();
      if (c != '+' && c != '-') return acc;
      ++pos_;
      Poly rhs = term();
      if (c == '+') {
        acc += rhs;
      } else {
        acc -= rhs;
      }
    }
  }

  Poly term() {
    Poly acc = factor();
    while (peek() == '*') {
      ++pos_;
      acc = acc * factor();
    }
    return acc;
  }

  Poly factor() {
    Poly base = atom();
    if (peek() != '^') return base;
    ++pos_;
    int exponent = small_uint("exponent");
    Poly result = Poly::constant(nvars_, 1);
    for (int i = 0; i < exponent; ++i) result = result * base;
    return result;
  }

  Poly atom() {
    char c = peek();
    std::size_t start = pos_;
    if (c == '(') {
      ++pos_;
      Poly inner = expr();
      if (peek() != ')') fail("expected ')'");
      ++pos_;
      return inner;
    }
    if (c == 'x') {
      ++pos_;
      if (!is_digit_at(pos_)) fail("expected variable index after 'x'");
      std::size_t idx_pos = pos_;
      int index = small_uint("variable index");
      if (index < 1 || index > nvars_) {
        pos_ = idx_pos;
        fail("variable x" + std::to_string(index) + " outside x1..x" + std::to_string(nvars_));
      }
      return Poly::variable(nvars_, index - 1);
    }
    if (c == '-' || std::isdigit(static_cast<unsigned char>(c))) {
      bool negative = false;
      if (c == '-') {
        negative = true;
        ++pos_;
        if (!is_digit_at(pos_)) fail("expected digits after '-' in rational");
      }
      std::string text(uint_token());
      if (peek() == '/') {
        ++pos_;
        if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected denominator");
        std::size_t den_pos = pos_;
        std::string_view den = uint_token();
        if (den.find_first_not_of('0') == std::string_view::npos) {
          pos_ = den_pos;
          fail("zero denominator");
        }
        text += "/";
        text += den;
      }
      if (negative) text.insert(text.begin(), '-');
      return Poly::constant(nvars_, Rational::parse(text));
    }
    pos_ = start;
    if (c == '\0') fail("unexpected end of input");
    fail("unexpected character '" + std::string(1, c) + "'");
  }

  std::string_view src_;
  int nvars_;
  std::size_t pos_ = 0;
};

}  // namespace

Poly parse_poly(std::string_view source, int nvars) {
  Poly probe(nvars);  // validates nvars
  (void)probe;
  return Parser(source, nvars).parse();
}

}  // namespace courant
