#include <cctype>
#include <string>

#include "orbicalc/errors.hpp"
#include "orbicalc/germs.hpp"

namespace orbicalc::germs {

namespace {

// Recursive-descent reader for sums of products of rationals, zeta(m)^k and
// t^e. Whitespace is ignored.
class Reader {
 public:
  explicit Reader(std::string_view text) : text_(text) {}

  bool done() {
    skip();
    return pos_ == text_.size();
  }

  bool accept(char ch) {
    skip();
    if (pos_ < text_.size() && text_[pos_] == ch) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char ch) {
    if (!accept(ch)) fail(std::string("expected '") + ch + "'");
  }

  bool peek_is(char ch) {
    skip();
    return pos_ < text_.size() && text_[pos_] == ch;
  }

  [[noreturn]] void fail(const std::string& why) const {
    throw ValidationError("cannot parse '" + std::string(text_) + "' at offset " + std::to_string(pos_) + ": " + why);
  }

  std::string digits() {
    skip();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected a number");
    return std::string(text_.substr(start, pos_ - start));
  }

  unsigned small_number() {
    const std::string d = digits();
    if (d.size() > 6) fail("number too large");
    return static_cast<unsigned>(std::stoul(d));
  }

  bool accept_word(std::string_view word) {
    skip();
    if (text_.substr(pos_, word.size()) == word) {
      pos_ += word.size();
      return true;
    }
    return false;
  }

  // factor := number ['/' number] | zeta(m)['^'k] | t['^'e]
  void factor(CyclotomicElement& coef, unsigned& exponent) {
    skip();
    if (accept_word("zeta")) {
      expect('(');
      const unsigned m = small_number();
      if (m == 0) fail("zeta order must be positive");
      expect(')');
      long k = 1;
      if (accept('^')) {
        const bool neg = accept('-');
        k = static_cast<long>(small_number());
        if (neg) k = -k;
      }
      coef *= CyclotomicElement::zeta(m, k);
      return;
    }
    if (accept('t')) {
      exponent += accept('^') ? small_number() : 1;
      return;
    }
    std::string num = digits();
    if (accept('/')) num += "/" + digits();
    coef *= exactmath::Rational::parse(num);
  }

  // term := factor ('*' factor)*
  void term(CyclotomicElement& coef, unsigned& exponent) {
    factor(coef, exponent);
    while (accept('*')) factor(coef, exponent);
  }

  // series := ['-'] term (('+'|'-') term)*
  Series series() {
    std::vector<CyclotomicElement> c;
    bool negative = accept('-');
    if (!negative) accept('+');
    while (true) {
      CyclotomicElement coef(1);
      unsigned exponent = 0;
      term(coef, exponent);
      if (negative) coef = -coef;
      if (c.size() <= exponent) c.resize(exponent + 1);
      c[exponent] += coef;
      if (accept('+')) {
        negative = false;
      } else if (accept('-')) {
        negative = true;
      } else {
        break;
      }
    }
    return Series(std::move(c));
  }

 private:
  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

CyclotomicElement parse_coefficient(std::string_view text) {
  Reader reader(text);
  const bool negative = reader.accept('-');
  CyclotomicElement coef(1);
  unsigned exponent = 0;
  reader.term(coef, exponent);
  if (exponent != 0) reader.fail("coefficient must not contain t");
  if (!reader.done()) reader.fail("trailing characters");
  return negative ? -coef : coef;
}

BranchGerm BranchGerm::parse(std::string_view text) {
  Reader reader(text);
  reader.expect('(');
  Series x = reader.series();
  reader.expect(',');
  Series y = reader.series();
  reader.expect(')');
  if (!reader.done()) reader.fail("trailing characters");
  return BranchGerm(std::move(x), std::move(y));
}

}  // namespace orbicalc::germs
