#include "foliation/parse.hpp"

#include <cctype>

#include "foliation/qpoly.hpp"

namespace fol {

ParseError::ParseError(const std::string& what, size_t position)
    : std::invalid_argument(what + " at position " + std::to_string(position)), position_(position) {}

std::string to_string(ExprKind k) {
  switch (k) {
    case ExprKind::Polynomial: return "polynomial";
    case ExprKind::Form: return "form";
    case ExprKind::Derivation: return "derivation";
    case ExprKind::Map: return "map";
    case ExprKind::Line: return "line";
  }
  return "?";
}

namespace {

// p0 + p[0] dx + p[1] dy
struct Value {
  Poly scalar;
  std::array<Poly, 2> d;
  bool has_differential() const { return !d[0].is_zero() || !d[1].is_zero(); }
};

Value operator+(Value a, const Value& b) {
  a.scalar += b.scalar;
  a.d[0] += b.d[0];
  a.d[1] += b.d[1];
  return a;
}

Value negate(Value a) {
  a.scalar = -a.scalar;
  a.d[0] = -a.d[0];
  a.d[1] = -a.d[1];
  return a;
}

class Parser {
 public:
  Parser(const std::string& s, ExtensionPtr field) : s_(s), field_(std::move(field)) {}

  Value expression() {
    Value v = term();
    while (true) {
      skip();
      if (peek('+')) {
        ++i_;
        v = v + term();
      } else if (peek('-')) {
        ++i_;
        v = v + negate(term());
      } else {
        return v;
      }
    }
  }

  Poly polynomial() {
    size_t at = pos();
    Value v = expression();
    if (v.has_differential()) throw ParseError("differential in a polynomial", at);
    return v.scalar;
  }

  void expect(char c) {
    skip();
    if (!peek(c)) throw ParseError(std::string("expected '") + c + "'", i_);
    ++i_;
  }

  bool accept(char c) {
    skip();
    if (!peek(c)) return false;
    ++i_;
    return true;
  }

  void expect_word(const std::string& w) {
    skip();
    if (s_.compare(i_, w.size(), w) != 0) throw ParseError("expected '" + w + "'", i_);
    i_ += w.size();
  }

  void end() {
    skip();
    if (i_ != s_.size()) throw ParseError(std::string("unexpected '") + s_[i_] + "'", i_);
  }

  size_t pos() {
    skip();
    return i_;
  }

 private:
  Value term() {
    Value v = unary();
    while (true) {
      skip();
      if (peek('*')) {
        ++i_;
        size_t at = pos();
        Value w = unary();
        if (v.has_differential() && w.has_differential()) throw ParseError("product of two differentials", at);
        Value r;
        r.scalar = v.scalar * w.scalar;
        for (int k = 0; k < 2; ++k) r.d[k] = v.d[k] * w.scalar + w.d[k] * v.scalar;
        v = r;
      } else if (peek('/')) {
        ++i_;
        size_t at = pos();
        Value w = unary();
        if (w.has_differential() || !w.scalar.is_constant() || w.scalar.is_zero())
          throw ParseError("division by a non-constant or zero", at);
        FElem inv = w.scalar.constant_term().inv();
        v.scalar *= inv;
        v.d[0] *= inv;
        v.d[1] *= inv;
      } else {
        return v;
      }
    }
  }

  Value unary() {
    skip();
    if (peek('-')) {
      ++i_;
      return negate(unary());
    }
    if (peek('+')) {
      ++i_;
      return unary();
    }
    return power();
  }

  Value power() {
    Value base = atom();
    skip();
    if (!peek('^')) return base;
    ++i_;
    skip();
    size_t at = i_;
    if (peek('-')) throw ParseError("negative exponent", at);
    if (i_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[i_]))) throw ParseError("expected an exponent", at);
    long e = 0;
    while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) {
      e = e * 10 + (s_[i_++] - '0');
      if (e > 10000) throw ParseError("exponent too large", at);
    }
    if (base.has_differential()) throw ParseError("power of a differential", at);
    Value r;
    r.scalar = base.scalar.pow(static_cast<int>(e));
    return r;
  }

  Value atom() {
    skip();
    if (i_ >= s_.size()) throw ParseError("unexpected end of input", i_);
    char c = s_[i_];
    Value v;
    if (c == '(') {
      ++i_;
      v = expression();
      expect(')');
      return v;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      size_t start = i_;
      while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
      v.scalar = Poly(Rational(mpz_class(s_.substr(start, i_ - start))));
      return v;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      size_t start = i_;
      while (i_ < s_.size() && std::isalnum(static_cast<unsigned char>(s_[i_]))) ++i_;
      std::string w = s_.substr(start, i_ - start);
      if (w == "x") v.scalar = Poly::var(0);
      else if (w == "y") v.scalar = Poly::var(1);
      else if (w == "dx") v.d[0] = Poly(1);
      else if (w == "dy") v.d[1] = Poly(1);
      else if (w == "t" && field_) v.scalar = Poly(FElem::generator(field_));
      else if (w == "t") throw ParseError("generator t used without a field declaration", start);
      else throw ParseError("unknown variable '" + w + "'", start);
      return v;
    }
    throw ParseError(std::string("unexpected '") + c + "'", i_);
  }

  void skip() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
  }
  bool peek(char c) const { return i_ < s_.size() && s_[i_] == c; }

  const std::string& s_;
  ExtensionPtr field_;
  size_t i_ = 0;
};

std::string paren(const Poly& p) { return "(" + p.to_string() + ")"; }

}  // namespace

InputExpression parse(const std::string& text, ExprKind kind, ExtensionPtr field) {
  InputExpression e;
  e.source = text;
  e.kind = kind;
  e.field = field;
  Parser p(text, field);
  switch (kind) {
    case ExprKind::Polynomial:
      e.poly = p.polynomial();
      break;
    case ExprKind::Form: {
      size_t at = p.pos();
      Value v = p.expression();
      if (!v.scalar.is_zero()) throw ParseError("form has a term without dx or dy", at);
      if (!v.has_differential()) throw ParseError("the zero form", at);
      e.form.a = v.d[0];
      e.form.b = v.d[1];
      break;
    }
    case ExprKind::Derivation: {
      p.expect_word("dx");
      p.expect(':');
      e.f = p.polynomial();
      p.expect(',');
      p.expect_word("dy");
      p.expect(':');
      e.g = p.polynomial();
      if (e.f.is_zero() && e.g.is_zero()) throw ParseError("the zero derivation", 0);
      e.form.a = e.g;
      e.form.b = -e.f;
      break;
    }
    case ExprKind::Map:
      p.expect('(');
      e.map.X = p.polynomial();
      p.expect(',');
      e.map.Y = p.polynomial();
      p.expect(')');
      break;
    case ExprKind::Line: {
      size_t at = p.pos();
      Poly lhs = p.polynomial();
      p.expect('=');
      Poly h = lhs - p.polynomial();
      if (h.degree() != 1 || !h.is_rational()) throw ParseError("not a line with rational coefficients", at);
      e.line = {h.coeff({1, 0, 0}).rational(), h.coeff({0, 1, 0}).rational(), h.constant_term().rational()};
      e.poly = h;
      break;
    }
  }
  p.end();
  return e;
}

std::string print(const InputExpression& e) {
  switch (e.kind) {
    case ExprKind::Polynomial: return e.poly.to_string();
    case ExprKind::Form: {
      std::string s;
      if (!e.form.a.is_zero()) s = paren(e.form.a) + "*dx";
      if (!e.form.b.is_zero()) s += (s.empty() ? "" : " + ") + paren(e.form.b) + "*dy";
      return s;
    }
    case ExprKind::Derivation: return "dx: " + e.f.to_string() + ", dy: " + e.g.to_string();
    case ExprKind::Map: return "(" + e.map.X.to_string() + ", " + e.map.Y.to_string() + ")";
    case ExprKind::Line: {
      Poly h = Poly::var(0) * Poly(e.line.a) + Poly::var(1) * Poly(e.line.b) + Poly(e.line.c);
      return h.to_string() + " = 0";
    }
  }
  return "";
}

QPoly parse_modulus(const std::string& text) {
  // t is read as x
  std::string s = text;
  for (size_t i = 0; i < s.size(); ++i)
    if (s[i] == 't' && (i == 0 || !std::isalnum(static_cast<unsigned char>(s[i - 1]))) &&
        (i + 1 == s.size() || !std::isalnum(static_cast<unsigned char>(s[i + 1]))))
      s[i] = 'x';
  Poly p = parse(s, ExprKind::Polynomial).poly;
  for (int v : p.variables())
    if (v != 0) throw ParseError("modulus must be a polynomial in t", 0);
  QPoly q = p.to_qpoly(0);
  if (qpoly::degree(q) < 2) throw ParseError("modulus must have degree at least 2", 0);
  return q;
}

}  // namespace fol
