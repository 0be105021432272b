#ifndef GCGEO_PARSE_HPP
#define GCGEO_PARSE_HPP

#include "gcgeo/form.hpp"

#include <cctype>
#include <stdexcept>
#include <string>
#include <vector>

namespace gcg {

struct ParseError : std::runtime_error {
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

namespace detail {

template <class K>
struct ScalarBuild;

template <>
struct ScalarBuild<GaussQ> {
  static GaussQ fromGaussQ(const GaussQ& c, const VarsPtr&) { return c; }
  static GaussQ variable(const std::string& name, const VarsPtr&) {
    throw ParseError("variable '" + name + "' not allowed here");
  }
};

template <>
struct ScalarBuild<RatFunc> {
  static RatFunc fromGaussQ(const GaussQ& c, const VarsPtr&) { return RatFunc(c); }
  static RatFunc variable(const std::string& name, const VarsPtr& vars) {
    if (vars)
      for (size_t i = 0; i < vars->size(); ++i)
        if ((*vars)[i] == name) return RatFunc::variable(vars, i);
    throw ParseError("unknown variable '" + name + "'");
  }
};

template <class K>
class FormParser {
 public:
  FormParser(const std::string& s, int n, VarsPtr vars)
      : s_(s), n_(n), vars_(std::move(vars)) {}

  FormT<K> parse() {
    FormT<K> f = parseForm();
    skipWs();
    if (pos_ != s_.size()) fail("trailing input");
    return f;
  }

 private:
  const std::string& s_;
  size_t pos_ = 0;
  int n_;
  VarsPtr vars_;

  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError("parse error at position " + std::to_string(pos_) + ": " +
                     msg + " in '" + s_ + "'");
  }
  void skipWs() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_])))
      ++pos_;
  }
  char peek() {
    skipWs();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }
  bool eat(char c) {
    if (peek() == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!eat(c)) fail(std::string("expected '") + c + "'");
  }

  static bool isDigit(char c) { return c >= '0' && c <= '9'; }
  static bool isIdentStart(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
  static bool isIdentChar(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  }

  std::string readDigits() {
    std::string d;
    while (pos_ < s_.size() && isDigit(s_[pos_])) d += s_[pos_++];
    return d;
  }
  std::string readIdent() {
    std::string d;
    while (pos_ < s_.size() && isIdentChar(s_[pos_])) d += s_[pos_++];
    return d;
  }

  FormT<K> parseForm() {
    FormT<K> acc(n_);
    bool neg = false;
    if (eat('+')) neg = false;
    else if (eat('-')) neg = true;
    while (true) {
      FormT<K> t = parseTerm();
      acc += neg ? -t : t;
      char c = peek();
      if (c == '+') { ++pos_; neg = false; }
      else if (c == '-') { ++pos_; neg = true; }
      else break;
    }
    return acc;
  }

  // A term is a juxtaposed product of factors; '*' and '/' act as explicit
  // product/quotient separators. 'exp' consumes the rest of the term as its
  // (wedge) argument.
  FormT<K> parseTerm() {
    FormT<K> acc = FormT<K>::unit(n_);
    bool any = false;
    while (true) {
      char c = peek();
      if (c == '\0' || c == '+' || c == '-' || c == ',' || c == ')') break;
      if (c == '*') { ++pos_; continue; }
      if (c == '/') {
        ++pos_;
        K d = parseScalarFactor();
        acc = acc * (K(1) / d);
        any = true;
        continue;
      }
      FormT<K> f = parseFactor();
      acc = wedge(acc, f);
      any = true;
    }
    if (!any) fail("empty term");
    return acc;
  }

  FormT<K> parseFactor() {
    char c = peek();
    if (c == '(') {
      // A parenthesized group followed by '*' or '/' is a scalar expression;
      // otherwise it is a subform.
      size_t close = matchingParen();
      size_t after = close + 1;
      while (after < s_.size() && std::isspace(static_cast<unsigned char>(s_[after])))
        ++after;
      if (after < s_.size() && (s_[after] == '*' || s_[after] == '/'))
        return scalarForm(parseScalarFactor());
      ++pos_;  // '('
      FormT<K> f = parseForm();
      expect(')');
      return f;
    }
    if (c == '[') {
      ++pos_;
      std::string d = readDigits();
      expect(']');
      return genFactor(std::stoi(d));
    }
    if (isDigit(c)) {
      size_t save = pos_;
      std::string run = readDigits();
      skipWs();
      bool scalarLike = pos_ < s_.size() && (s_[pos_] == '*' || s_[pos_] == '/');
      if (scalarLike && pos_ < s_.size() && s_[pos_] == '/') {
        // could be a rational "a/b"
        pos_ = save;
        return scalarForm(parseScalarFactor());
      }
      if (scalarLike) {
        return scalarForm(
            detail::ScalarBuild<K>::fromGaussQ(GaussQ(Rat(Int(run))), vars_));
      }
      if (run == "0") return FormT<K>::zero(n_);
      FormT<K> f = FormT<K>::unit(n_);
      for (char dc : run) f = wedge(f, genFactor(dc - '0'));
      return f;
    }
    if (c == 'i' && !isIdentStart(pos_ + 1 < s_.size() ? s_[pos_ + 1] : '\0')) {
      ++pos_;
      return scalarForm(detail::ScalarBuild<K>::fromGaussQ(GaussQ::I(), vars_));
    }
    if (isIdentStart(c)) {
      std::string id = readIdent();
      if (id == "one") return FormT<K>::unit(n_);
      if (id == "exp") {
        FormT<K> arg = parseTerm();
        if (!arg.isZero() && arg.minDegree() < 1)
          fail("exp argument must have positive degree");
        return expWedge(arg, FormT<K>::unit(n_));
      }
      return scalarForm(varPower(id));
    }
    fail("unexpected character");
  }

  FormT<K> genFactor(int idx) {
    if (idx < 1 || idx > n_)
      fail("generator index " + std::to_string(idx) + " out of range 1.." +
           std::to_string(n_));
    return FormT<K>::gen(n_, idx);
  }
  FormT<K> scalarForm(const K& c) { return FormT<K>::unit(n_) * c; }

  size_t matchingParen() {
    size_t p = pos_;
    while (p < s_.size() && std::isspace(static_cast<unsigned char>(s_[p]))) ++p;
    int depth = 0;
    for (; p < s_.size(); ++p) {
      if (s_[p] == '(') ++depth;
      else if (s_[p] == ')') {
        if (--depth == 0) return p;
      }
    }
    fail("unbalanced parenthesis");
  }

  K varPower(const std::string& id) {
    K v = detail::ScalarBuild<K>::variable(id, vars_);
    if (peek() == '^') {
      ++pos_;
      std::string d = readDigits();
      if (d.empty()) fail("expected exponent");
      K p(1);
      for (int k = std::stoi(d); k > 0; --k) p *= v;
      return p;
    }
    return v;
  }

  // ---- scalar sub-grammar -------------------------------------------------
  K parseScalarFactor() {
    char c = peek();
    if (c == '(') {
      ++pos_;
      K v = parseScalarExpr();
      expect(')');
      return v;
    }
    if (isDigit(c)) return parseRationalAtom();
    if (c == 'i') {
      ++pos_;
      return detail::ScalarBuild<K>::fromGaussQ(GaussQ::I(), vars_);
    }
    if (isIdentStart(c)) return varPower(readIdent());
    fail("expected scalar");
  }

  K parseRationalAtom() {
    std::string num = readDigits();
    Rat r{Int(num)};
    if (pos_ < s_.size() && s_[pos_] == '/') {
      size_t save = pos_;
      ++pos_;
      if (pos_ < s_.size() && isDigit(s_[pos_])) {
        std::string den = readDigits();
        r /= Rat(Int(den));
      } else {
        pos_ = save;  // '/': quotient of non-numeric factors, handled by caller
      }
    }
    GaussQ g(r);
    if (pos_ < s_.size() && s_[pos_] == 'i' &&
        !(pos_ + 1 < s_.size() && isIdentChar(s_[pos_ + 1]))) {
      ++pos_;
      g = GaussQ(Rat(0), r);
    }
    return detail::ScalarBuild<K>::fromGaussQ(g, vars_);
  }

  K parseScalarExpr() {
    K acc(0);
    bool neg = eat('-');
    if (!neg) eat('+');
    while (true) {
      K t = parseScalarProduct();
      acc += neg ? -t : t;
      char c = peek();
      if (c == '+') { ++pos_; neg = false; }
      else if (c == '-') { ++pos_; neg = true; }
      else break;
    }
    return acc;
  }

  K parseScalarProduct() {
    K acc = parseScalarFactor();
    while (true) {
      char c = peek();
      if (c == '*') {
        ++pos_;
        acc *= parseScalarFactor();
      } else if (c == '/') {
        ++pos_;
        acc /= parseScalarFactor();
      } else if (c == 'i' || c == '(' || isDigit(c) || isIdentStart(c)) {
        acc *= parseScalarFactor();  // juxtaposition like "2i"
      } else {
        break;
      }
    }
    return acc;
  }
};

}  // namespace detail

/// Parses the shared form grammar over Gaussian rationals.
inline Form parseForm(const std::string& s, int n) {
  return detail::FormParser<GaussQ>(s, n, nullptr).parse();
}

/// Extended mode: coefficients may mention the declared variables.
inline FormX parseFormX(const std::string& s, int n, const VarsPtr& vars) {
  return detail::FormParser<RatFunc>(s, n, vars).parse();
}

/// Splits a "(a,b,c,...)" tuple at top level.
inline std::vector<std::string> splitTuple(const std::string& s) {
  size_t b = s.find('(');
  size_t e = s.rfind(')');
  if (b == std::string::npos || e == std::string::npos || e < b)
    throw ParseError("expected parenthesized tuple: " + s);
  std::vector<std::string> parts;
  int depth = 0;
  std::string cur;
  for (size_t i = b + 1; i < e; ++i) {
    char c = s[i];
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (c == ',' && depth == 0) {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  parts.push_back(cur);
  return parts;
}

}  // namespace gcg

#endif  // GCGEO_PARSE_HPP
