#include <cctype>
#include <string>
#include <vector>

#include "relrep/error.hpp"
#include "relrep/fock.hpp"

namespace relrep {

namespace {

// Recursive-descent reader for the operator expression grammar
//   expr   := term ('+' term)*
//   term   := factor ('*' factor)*
//   factor := '(' re ',' im ')' | 'ad' '(' mode ')' | 'a' '(' mode ')'
//   mode   := name | t ',' x ',' y ',' z ',' sigma
// Whitespace is insignificant everywhere; errors carry the offset.
class Reader {
 public:
  Reader(const std::string& text, const SpeciesDescriptor& species)
      : text_(text), species_(species) {}

  OperatorSum parse() {
    OperatorSum e = term();
    skip();
    while (!done() && peek() == '+') {
      ++pos_;
      e = e + term();
      skip();
    }
    if (!done()) fail("unexpected character '" + std::string(1, peek()) + "'");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError("operator expression: " + msg + " at position " +
                     std::to_string(pos_));
  }
  bool done() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }
  void skip() {
    while (!done() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  void expect(char c) {
    skip();
    if (done() || peek() != c) fail("expected '" + std::string(1, c) + "'");
    ++pos_;
  }

  double number() {
    skip();
    std::size_t used = 0;
    double v = 0;
    try {
      v = std::stod(text_.substr(pos_), &used);
    } catch (const std::exception&) {
      fail("expected a number");
    }
    pos_ += used;
    return v;
  }

  std::string word() {
    skip();
    std::size_t start = pos_;
    while (!done() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_'))
      ++pos_;
    return text_.substr(start, pos_ - start);
  }

  HalfInt half_int() {
    skip();
    std::size_t start = pos_;
    if (!done() && (peek() == '-' || peek() == '+')) ++pos_;
    while (!done() && (std::isdigit(static_cast<unsigned char>(peek())) || peek() == '/'))
      ++pos_;
    try {
      return parse_half_int(text_.substr(start, pos_ - start));
    } catch (const ParseError& e) {
      fail(e.what());
    }
  }

  Mode mode() {
    skip();
    const std::size_t start = pos_;
    if (!done() && (std::isalpha(static_cast<unsigned char>(peek())) || peek() == '_')) {
      return Mode::symbolic(species_, word());
    }
    pos_ = start;
    FourVector p;
    p.t = number();
    expect(',');
    p.x = number();
    expect(',');
    p.y = number();
    expect(',');
    p.z = number();
    expect(',');
    const HalfInt sigma = half_int();
    SpeciesDescriptor sp = species_;
    if (sp.massless()) sp.spin_or_helicity = sigma;
    try {
      return Mode::numeric(sp, p, sigma);
    } catch (const NumericError& e) {
      fail(e.what());
    }
  }

  OperatorSum factor() {
    skip();
    if (done()) fail("expected a factor");
    if (peek() == '(') {
      ++pos_;
      const double re = number();
      expect(',');
      const double im = number();
      expect(')');
      OperatorSum unit;
      unit.terms.push_back({Complex(re, im), {}, {}, {}});
      return unit;
    }
    const std::size_t at = pos_;
    const std::string name = word();
    if (name != "a" && name != "ad") {
      pos_ = at;
      fail("expected 'a(...)', 'ad(...)' or '(re,im)'");
    }
    expect('(');
    const Mode m = mode();
    expect(')');
    return name == "ad" ? creator(m) : annihilator(m);
  }

  OperatorSum term() {
    OperatorSum e = factor();
    skip();
    while (!done() && peek() == '*') {
      ++pos_;
      e = e * factor();
      skip();
    }
    return e;
  }

  const std::string& text_;
  SpeciesDescriptor species_;
  std::size_t pos_ = 0;
};

}  // namespace

OperatorSum parse_operator_expression(const std::string& text,
                                      const SpeciesDescriptor& species) {
  return Reader(text, species).parse();
}

}  // namespace relrep
