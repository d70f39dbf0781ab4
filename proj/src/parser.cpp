#include "webflat/parser.hpp"

#include <cctype>

namespace webflat {

namespace {

enum class Tok { kNumber, kIdent, kPlus, kMinus, kStar, kCaret, kLParen, kRParen, kEnd };

struct Token {
  Tok kind;
  size_t offset;
  std::string text;  // ident or number literal
};

class Lexer {
 public:
  explicit Lexer(const std::string& s) : s_(s) { advance(); }
  const Token& peek() const { return tok_; }
  Token take() {
    Token t = tok_;
    advance();
    return t;
  }

 private:
  void advance() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    tok_.offset = pos_;
    if (pos_ >= s_.size()) {
      tok_.kind = Tok::kEnd;
      tok_.text.clear();
      return;
    }
    char c = s_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      // rational literal a/b
      if (pos_ < s_.size() && s_[pos_] == '/' && pos_ + 1 < s_.size() &&
          std::isdigit(static_cast<unsigned char>(s_[pos_ + 1]))) {
        ++pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      }
      tok_.kind = Tok::kNumber;
      tok_.text = s_.substr(start, pos_ - start);
      return;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      size_t start = pos_;
      while (pos_ < s_.size() &&
             (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
        ++pos_;
      tok_.kind = Tok::kIdent;
      tok_.text = s_.substr(start, pos_ - start);
      return;
    }
    ++pos_;
    switch (c) {
      case '+': tok_.kind = Tok::kPlus; return;
      case '-': tok_.kind = Tok::kMinus; return;
      case '*': tok_.kind = Tok::kStar; return;
      case '^': tok_.kind = Tok::kCaret; return;
      case '(': tok_.kind = Tok::kLParen; return;
      case ')': tok_.kind = Tok::kRParen; return;
      default:
        throw SyntaxError(tok_.offset, std::string("unexpected character '") + c + "'",
                          {"+", "-", "*", "^", "(", ")", "number", "identifier"});
    }
  }

  const std::string& s_;
  size_t pos_ = 0;
  Token tok_;
};

class Parser {
 public:
  Parser(const std::string& text, bool allow_differentials)
      : lex_(text), allow_diff_(allow_differentials) {}

  MPoly parse() {
    MPoly v = expr();
    if (lex_.peek().kind != Tok::kEnd)
      throw SyntaxError(lex_.peek().offset, "trailing input", {"end of input", "+", "-"});
    return v;
  }

 private:
  static bool is_differential(const std::string& id) {
    return id == "dx" || id == "dy" || id == "dz";
  }

  MPoly expr() {
    MPoly acc = term();
    while (true) {
      Tok k = lex_.peek().kind;
      if (k == Tok::kPlus) {
        lex_.take();
        acc += term();
      } else if (k == Tok::kMinus) {
        lex_.take();
        acc -= term();
      } else {
        return acc;
      }
    }
  }

  MPoly term() {
    MPoly acc = factor();
    while (true) {
      const Token& t = lex_.peek();
      if (t.kind == Tok::kStar) {
        lex_.take();
        acc *= factor();
      } else if (t.kind == Tok::kIdent && is_differential(t.text)) {
        // '*' may be omitted immediately before dx/dy.
        acc *= factor();
      } else {
        return acc;
      }
    }
  }

  MPoly factor() {
    const Token& t = lex_.peek();
    if (t.kind == Tok::kMinus) {
      lex_.take();
      return -factor();
    }
    MPoly base = atom();
    if (lex_.peek().kind == Tok::kCaret) {
      lex_.take();
      long e = exponent();
      if (e < 0) {
        if (!base.is_constant() || base.is_zero())
          throw SyntaxError(lex_.peek().offset,
                            "negative exponent on a non-constant base", {"nonnegative integer"});
        return MPoly(base.constant_value().pow(e));
      }
      return base.pow(e);
    }
    return base;
  }

  long exponent() {
    bool neg = false;
    if (lex_.peek().kind == Tok::kMinus) {
      lex_.take();
      neg = true;
    }
    Token t = lex_.take();
    if (t.kind != Tok::kNumber || t.text.find('/') != std::string::npos)
      throw SyntaxError(t.offset, "expected integer exponent", {"integer"});
    long v = std::stol(t.text);
    return neg ? -v : v;
  }

  MPoly atom() {
    Token t = lex_.take();
    switch (t.kind) {
      case Tok::kNumber: {
        auto slash = t.text.find('/');
        if (slash == std::string::npos)
          return MPoly(FieldElement(Rational::from_string(t.text)));
        return MPoly(FieldElement(Rational::from_string(t.text)));
      }
      case Tok::kIdent: {
        if (t.text == "i") return MPoly(FieldElement::i());
        if (t.text == "r3") return MPoly(FieldElement::sqrt3());
        if (t.text == "zeta") return MPoly(FieldElement::zeta_power(1));
        if (is_differential(t.text)) {
          if (!allow_diff_)
            throw SyntaxError(t.offset, "differential not allowed here",
                              {"number", "identifier", "("});
          return MPoly::variable(t.text);
        }
        return MPoly::variable(t.text);
      }
      case Tok::kLParen: {
        MPoly v = expr();
        Token close = lex_.take();
        if (close.kind != Tok::kRParen)
          throw SyntaxError(close.offset, "expected ')'", {")"});
        return v;
      }
      default:
        throw SyntaxError(t.offset, "expected a factor", {"number", "identifier", "(", "-"});
    }
  }

  Lexer lex_;
  bool allow_diff_;
};

}  // namespace

MPoly parse_poly(const std::string& text) { return Parser(text, false).parse(); }

OneFormParts parse_oneform_parts(const std::string& text) {
  MPoly p = Parser(text, true).parse();
  if (p.has_var("dz"))
    throw SyntaxError(0, "dz is not allowed in an affine 1-form", {"dx", "dy"});
  if (p.has_var("z"))
    throw SyntaxError(0, "variable z is not allowed in an affine 1-form", {"x", "y"});
  // Every term must be linear in the differentials.
  const auto& vars = p.vars();
  int idx = 0, ix = -1, iy = -1;
  for (const auto& v : vars) {
    if (v == "dx") ix = idx;
    if (v == "dy") iy = idx;
    ++idx;
  }
  for (const auto& [e, c] : p.terms()) {
    int s = (ix >= 0 ? e[static_cast<size_t>(ix)] : 0) +
            (iy >= 0 ? e[static_cast<size_t>(iy)] : 0);
    if (s != 1)
      throw SyntaxError(0, "every term must carry exactly one dx or dy", {"dx", "dy"});
  }
  OneFormParts parts;
  parts.A = p.coeff_of("dx", 1).coeff_of("dy", 0);
  parts.B = p.coeff_of("dy", 1).coeff_of("dx", 0);
  return parts;
}

}  // namespace webflat
