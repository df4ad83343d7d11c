#include "toricrep/param_poly.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace toricrep {

ParamPoly::ParamPoly(TermMap terms) : terms_(std::move(terms)) {
  for (auto it = terms_.begin(); it != terms_.end();) {
    if (is_zero(it->second))
      it = terms_.erase(it);
    else
      ++it;
  }
}

ParamPoly ParamPoly::constant(const Rational& c) { return monomial({0, 0}, c); }

ParamPoly ParamPoly::monomial(Point2 exp, const Rational& c) {
  ParamPoly p;
  if (!is_zero(c)) p.terms_[exp] = c;
  return p;
}

Rational ParamPoly::coeff(Point2 exp) const {
  auto it = terms_.find(exp);
  return it == terms_.end() ? Rational(0) : it->second;
}

std::vector<Point2> ParamPoly::support() const {
  std::vector<Point2> pts;
  pts.reserve(terms_.size());
  for (const auto& [e, c] : terms_) pts.push_back(e);
  return pts;
}

Point2 ParamPoly::min_exponents() const {
  if (terms_.empty()) return {0, 0};
  Point2 m = terms_.begin()->first;
  for (const auto& [e, c] : terms_) {
    m[0] = std::min(m[0], e[0]);
    m[1] = std::min(m[1], e[1]);
  }
  return m;
}

ParamPoly ParamPoly::shifted(Point2 shift) const {
  TermMap out;
  for (const auto& [e, c] : terms_) out[e + shift] = c;
  return ParamPoly(std::move(out));
}

ParamPoly ParamPoly::operator-() const {
  TermMap out;
  for (const auto& [e, c] : terms_) out[e] = -c;
  return ParamPoly(std::move(out));
}

ParamPoly ParamPoly::operator+(const ParamPoly& o) const {
  TermMap out = terms_;
  for (const auto& [e, c] : o.terms_) {
    auto [it, fresh] = out.emplace(e, c);
    if (!fresh) {
      it->second += c;
      if (is_zero(it->second)) out.erase(it);
    }
  }
  ParamPoly p;
  p.terms_ = std::move(out);
  return p;
}

ParamPoly ParamPoly::operator-(const ParamPoly& o) const { return *this + (-o); }

ParamPoly ParamPoly::operator*(const ParamPoly& o) const {
  TermMap out;
  for (const auto& [ea, ca] : terms_)
    for (const auto& [eb, cb] : o.terms_) {
      const Point2 e = ea + eb;
      auto [it, fresh] = out.emplace(e, ca * cb);
      if (!fresh) it->second += ca * cb;
    }
  return ParamPoly(std::move(out));
}

ParamPoly ParamPoly::operator*(const Rational& c) const {
  if (is_zero(c)) return ParamPoly();
  TermMap out;
  for (const auto& [e, k] : terms_) out[e] = k * c;
  ParamPoly p;
  p.terms_ = std::move(out);
  return p;
}

ParamPoly ParamPoly::pow(std::int64_t e) const {
  if (e < 0) throw InputError("negative polynomial power");
  ParamPoly acc = ParamPoly::constant(Rational(1));
  for (std::int64_t i = 0; i < e; ++i) acc = acc * *this;
  return acc;
}

std::string ParamPoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    const bool neg = sgn(c) < 0;
    const Rational mag = neg ? Rational(-c) : c;
    if (first)
      out << (neg ? "-" : "");
    else
      out << (neg ? " - " : " + ");
    first = false;

    std::string vars;
    if (e[0] != 0) {
      vars += "s";
      if (e[0] != 1) vars += "^" + std::to_string(e[0]);
    }
    if (e[1] != 0) {
      if (!vars.empty()) vars += "*";
      vars += "t";
      if (e[1] != 1) vars += "^" + std::to_string(e[1]);
    }
    if (vars.empty()) {
      out << mag.get_str();
    } else if (mag == 1) {
      out << vars;
    } else {
      out << mag.get_str() << "*" << vars;
    }
  }
  return out.str();
}

namespace {

class Cursor {
 public:
  explicit Cursor(std::string_view text) : text_(text) {}

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool done() {
    skip_ws();
    return pos_ >= text_.size();
  }
  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }
  bool accept(char c) {
    if (peek() == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  std::size_t pos() const { return pos_; }

  [[noreturn]] void fail(const std::string& what) { throw ParseError(what, pos_); }

  Int integer() {
    skip_ws();
    const std::size_t start = pos_;
    std::string digits;
    if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) {
      digits += text_[pos_];
      ++pos_;
    }
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      digits += text_[pos_];
      ++pos_;
    }
    if (digits.empty() || digits == "-" || digits == "+")
      throw ParseError("expected integer", start);
    return Int(digits);
  }

  std::int64_t exponent() {
    skip_ws();
    const std::size_t start = pos_;
    const Int e = integer();
    if (!e.fits_slong_p()) throw ParseError("exponent out of range", start);
    return e.get_si();
  }

  bool digit_ahead() {
    skip_ws();
    return pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]));
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

ParamPoly parse_param_poly(std::string_view text) {
  Cursor cur(text);
  ParamPoly::TermMap terms;
  if (cur.done()) cur.fail("empty polynomial");

  bool first = true;
  while (!cur.done()) {
    int sign = 1;
    if (cur.accept('-'))
      sign = -1;
    else if (cur.accept('+')) {
      if (first) cur.fail("unexpected leading '+'");
    } else if (!first) {
      cur.fail("expected '+' or '-' between terms");
    }
    first = false;

    Rational coeff(1);
    bool have_coeff = false;
    if (cur.digit_ahead()) {
      const Int num = cur.integer();
      if (cur.accept('/')) {
        const Int den = cur.integer();
        if (den == 0) cur.fail("zero denominator");
        coeff = Rational(num, den);
        coeff.canonicalize();
      } else {
        coeff = Rational(num);
      }
      have_coeff = true;
    }

    bool have_vars = false;
    Point2 exp = {0, 0};
    bool star_after_coeff = false;
    if (have_coeff && cur.accept('*')) star_after_coeff = true;

    if (cur.peek() == 's') {
      cur.accept('s');
      have_vars = true;
      exp[0] = cur.accept('^') ? cur.exponent() : 1;
      cur.accept('*');
    }
    if (cur.peek() == 't') {
      cur.accept('t');
      have_vars = true;
      exp[1] = cur.accept('^') ? cur.exponent() : 1;
    }

    if (star_after_coeff && !have_vars) cur.fail("expected variable after '*'");
    if (!have_coeff && !have_vars) cur.fail("expected term");

    const Rational c = sign < 0 ? Rational(-coeff) : coeff;
    auto [it, fresh] = terms.emplace(exp, c);
    if (!fresh) it->second += c;
  }

  return ParamPoly(std::move(terms));
}

namespace {

Rational pow_rational(const Rational& base, std::int64_t e) {
  if (e == 0) return Rational(1);
  if (e < 0) {
    if (is_zero(base)) throw MathError("0 raised to a negative exponent");
    return Rational(1) / pow_rational(base, -e);
  }
  Rational out;
  mpz_pow_ui(out.get_num_mpz_t(), base.get_num_mpz_t(), static_cast<unsigned long>(e));
  mpz_pow_ui(out.get_den_mpz_t(), base.get_den_mpz_t(), static_cast<unsigned long>(e));
  return out;  // canonical since base was
}

}  // namespace

Rational eval_param_poly(const ParamPoly& f, const Rational& s, const Rational& t) {
  Rational acc(0);
  for (const auto& [e, c] : f.terms())
    acc += c * pow_rational(s, e[0]) * pow_rational(t, e[1]);
  return acc;
}

}  // namespace toricrep
