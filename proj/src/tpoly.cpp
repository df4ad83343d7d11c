#include "toricrep/tpoly.hpp"

#include <algorithm>
#include <sstream>
#include <vector>

namespace toricrep {

TPoly::TPoly(TermMap terms) : terms_(std::move(terms)) {
  for (auto it = terms_.begin(); it != terms_.end();) {
    if (is_zero(it->second))
      it = terms_.erase(it);
    else
      ++it;
  }
}

TPoly TPoly::monomial(Exp4 exp, const Rational& c) {
  TPoly p;
  if (!is_zero(c)) p.terms_[exp] = c;
  return p;
}

TPoly TPoly::variable(int i) {
  Exp4 e = {0, 0, 0, 0};
  e[i] = 1;
  return monomial(e, Rational(1));
}

bool TPoly::is_constant() const {
  return terms_.empty() ||
         (terms_.size() == 1 && terms_.begin()->first == Exp4{0, 0, 0, 0});
}

Rational TPoly::coeff(Exp4 exp) const {
  auto it = terms_.find(exp);
  return it == terms_.end() ? Rational(0) : it->second;
}

namespace {
std::int64_t exp_degree(const Exp4& e) { return e[0] + e[1] + e[2] + e[3]; }
}  // namespace

std::int64_t TPoly::total_degree() const {
  std::int64_t d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, exp_degree(e));
  return d;
}

std::optional<std::int64_t> TPoly::homogeneous_degree() const {
  std::optional<std::int64_t> d;
  for (const auto& [e, c] : terms_) {
    const std::int64_t de = exp_degree(e);
    if (!d)
      d = de;
    else if (*d != de)
      return std::nullopt;
  }
  return d;
}

TPoly TPoly::operator-() const {
  TermMap out;
  for (const auto& [e, c] : terms_) out[e] = -c;
  TPoly p;
  p.terms_ = std::move(out);
  return p;
}

TPoly TPoly::operator+(const TPoly& o) const {
  TermMap out = terms_;
  for (const auto& [e, c] : o.terms_) {
    auto [it, fresh] = out.emplace(e, c);
    if (!fresh) {
      it->second += c;
      if (is_zero(it->second)) out.erase(it);
    }
  }
  TPoly p;
  p.terms_ = std::move(out);
  return p;
}

TPoly TPoly::operator-(const TPoly& o) const { return *this + (-o); }

TPoly TPoly::operator*(const TPoly& o) const {
  TermMap out;
  for (const auto& [ea, ca] : terms_)
    for (const auto& [eb, cb] : o.terms_) {
      Exp4 e;
      for (int i = 0; i < 4; ++i) e[i] = ea[i] + eb[i];
      auto [it, fresh] = out.emplace(e, ca * cb);
      if (!fresh) it->second += ca * cb;
    }
  return TPoly(std::move(out));
}

TPoly TPoly::operator*(const Rational& c) const {
  if (is_zero(c)) return TPoly();
  TermMap out;
  for (const auto& [e, k] : terms_) out[e] = k * c;
  TPoly p;
  p.terms_ = std::move(out);
  return p;
}

Rational TPoly::eval(const std::array<Rational, 4>& p) const {
  Rational acc(0);
  for (const auto& [e, c] : terms_) {
    Rational term = c;
    for (int i = 0; i < 4; ++i)
      for (std::int64_t k = 0; k < e[i]; ++k) term *= p[i];
    acc += term;
  }
  return acc;
}

std::optional<TPoly> TPoly::divided_by(const TPoly& divisor) const {
  if (divisor.is_zero()) return std::nullopt;
  // Long division by a single divisor under lex order; exact divisibility
  // holds iff the remainder stays reducible until it vanishes.
  const auto lead = std::prev(divisor.terms_.end());
  const Exp4& le = lead->first;
  const Rational& lc = lead->second;

  TPoly rem = *this;
  TPoly::TermMap quot;
  while (!rem.terms_.empty()) {
    const auto rl = std::prev(rem.terms_.end());
    Exp4 q;
    for (int i = 0; i < 4; ++i) {
      q[i] = rl->first[i] - le[i];
      if (q[i] < 0) return std::nullopt;
    }
    const Rational qc = rl->second / lc;
    quot[q] = qc;
    rem = rem - divisor * TPoly::monomial(q, qc);
  }
  return TPoly(std::move(quot));
}

TPoly TPoly::normalized_primitive() const {
  if (terms_.empty()) return *this;
  // lcm of denominators, gcd of numerators, sign from lex-largest monomial
  Int den_lcm(1), num_gcd(0);
  for (const auto& [e, c] : terms_) {
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den().get_mpz_t());
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num().get_mpz_t());
  }
  Rational scale(den_lcm, num_gcd);
  scale.canonicalize();
  if (sgn(std::prev(terms_.end())->second) < 0) scale = -scale;
  return *this * scale;
}

std::string TPoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  // print lex-descending so leading terms come first
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    const bool neg = sgn(c) < 0;
    const Rational mag = neg ? Rational(-c) : c;
    if (first)
      out << (neg ? "-" : "");
    else
      out << (neg ? " - " : " + ");
    first = false;

    std::string vars;
    for (int i = 0; i < 4; ++i) {
      if (e[i] == 0) continue;
      if (!vars.empty()) vars += "*";
      vars += "T" + std::to_string(i + 1);
      if (e[i] != 1) vars += "^" + std::to_string(e[i]);
    }
    if (vars.empty())
      out << mag.get_str();
    else if (mag == 1)
      out << vars;
    else
      out << mag.get_str() << "*" << vars;
  }
  return out.str();
}

ParamPoly substitute_params(const TPoly& F, const std::array<ParamPoly, 4>& f) {
  if (!F.is_zero() && !F.homogeneous_degree())
    throw InputError("substitution requires a homogeneous polynomial");

  // memoized powers of each f_i
  std::array<std::vector<ParamPoly>, 4> powers;
  for (int i = 0; i < 4; ++i) powers[i].push_back(ParamPoly::constant(Rational(1)));
  auto power = [&](int i, std::int64_t e) -> const ParamPoly& {
    auto& ps = powers[i];
    while (static_cast<std::int64_t>(ps.size()) <= e) ps.push_back(ps.back() * f[i]);
    return ps[e];
  };

  ParamPoly acc;
  for (const auto& [e, c] : F.terms()) {
    ParamPoly term = ParamPoly::constant(c);
    for (int i = 0; i < 4; ++i)
      if (e[i] > 0) term = term * power(i, e[i]);
    acc = acc + term;
  }
  return acc;
}

}  // namespace toricrep
