#include "holochern/parser.hpp"

#include <algorithm>
#include <cctype>

namespace holochern {

namespace {

class Parser {
 public:
  Parser(const std::string& text, const std::vector<std::string>& vars) : s_(text), vars_(vars) {}

  RationalFunction run() {
    RationalFunction f = expr();
    skip();
    if (pos_ != s_.size()) throw ParseError(std::string("unexpected '") + s_[pos_] + "'", pos_);
    return f;
  }

 private:
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) {
      if (pos_ >= s_.size()) throw ParseError(std::string("expected '") + c + "' before end of input", pos_);
      throw ParseError(std::string("expected '") + c + "'", pos_);
    }
  }

  RationalFunction expr() {
    RationalFunction f = term();
    while (true) {
      if (accept('+')) {
        f += term();
      } else if (accept('-')) {
        f -= term();
      } else {
        return f;
      }
    }
  }

  RationalFunction term() {
    RationalFunction f = unary();
    while (true) {
      if (accept('*')) {
        f *= unary();
      } else if (accept('/')) {
        skip();
        std::size_t at = pos_;
        RationalFunction d = unary();
        if (d.is_zero()) throw ParseError("division by an identically zero expression", at);
        f /= d;
      } else {
        return f;
      }
    }
  }

  RationalFunction unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return power();
  }

  long integer(bool allow_sign) {
    skip();
    bool neg = false;
    if (allow_sign && pos_ < s_.size() && s_[pos_] == '-') {
      neg = true;
      ++pos_;
      skip();
    }
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) throw ParseError("expected integer exponent", start);
    if (pos_ - start > 6) throw ParseError("exponent too large", start);
    long v = std::stol(s_.substr(start, pos_ - start));
    return neg ? -v : v;
  }

  RationalFunction power() {
    skip();
    std::size_t at = pos_;
    RationalFunction base = atom();
    if (!accept('^')) return base;
    long e;
    if (accept('(')) {
      e = integer(true);
      expect(')');
    } else {
      e = integer(true);
    }
    if (e < 0 && base.is_zero()) throw ParseError("negative power of an identically zero expression", at);
    return base.pow(static_cast<int>(e));
  }

  RationalFunction atom() {
    skip();
    if (pos_ >= s_.size()) throw ParseError("unexpected end of input", pos_);
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      RationalFunction f = expr();
      expect(')');
      return f;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      mpq_class q(mpz_class(s_.substr(start, pos_ - start)));
      return RationalFunction(GaussianRational(q, 0));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
      std::string name = s_.substr(start, pos_ - start);
      if (name == "i") return RationalFunction(GaussianRational::imaginary_unit());
      if (std::find(vars_.begin(), vars_.end(), name) == vars_.end()) {
        throw ParseError("unknown variable '" + name + "'", start);
      }
      return RationalFunction::variable(name);
    }
    throw ParseError(std::string("unexpected '") + c + "'", pos_);
  }

  const std::string& s_;
  const std::vector<std::string>& vars_;
  std::size_t pos_ = 0;
};

}  // namespace

RationalFunction parse_expr(const std::string& text, const std::vector<std::string>& vars) {
  return Parser(text, vars).run();
}

}  // namespace holochern
