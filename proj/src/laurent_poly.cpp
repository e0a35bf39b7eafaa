#include "rho_forge/laurent_poly.hpp"

#include <sstream>
#include <stdexcept>

namespace rho_forge {

LaurentPoly::LaurentPoly(long c) : LaurentPoly(GaussianRational(c)) {}

LaurentPoly::LaurentPoly(const GaussianRational& c) {
  if (!c.is_zero()) terms_.emplace(0, c);
}

LaurentPoly::LaurentPoly(std::initializer_list<std::pair<const int, GaussianRational>> terms) {
  for (const auto& [e, c] : terms) add_term(e, c);
}

LaurentPoly::LaurentPoly(Terms terms) {
  for (auto& [e, c] : terms) add_term(e, c);
}

LaurentPoly LaurentPoly::monomial(int exponent, GaussianRational c) {
  LaurentPoly p;
  p.add_term(exponent, c);
  return p;
}

bool LaurentPoly::has_real_coefficients() const {
  for (const auto& [e, c] : terms_)
    if (!c.is_real()) return false;
  return true;
}

GaussianRational LaurentPoly::coeff(int exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? GaussianRational{} : it->second;
}

LaurentPoly LaurentPoly::shifted(int k) const {
  LaurentPoly out;
  for (const auto& [e, c] : terms_) out.terms_.emplace_hint(out.terms_.end(), e + k, c);
  return out;
}

std::complex<double> LaurentPoly::operator()(std::complex<double> w) const {
  std::complex<double> sum = 0;
  for (const auto& [e, c] : terms_) sum += c.to_complex() * std::pow(w, e);
  return sum;
}

std::complex<double> LaurentPoly::on_circle(double theta) const {
  std::complex<double> sum = 0;
  for (const auto& [e, c] : terms_) sum += c.to_complex() * std::polar(1.0, e * theta);
  return sum;
}

void LaurentPoly::add_term(int exponent, const GaussianRational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(exponent, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) { return *this = *this * o; }

LaurentPoly& LaurentPoly::operator*=(const GaussianRational& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly out;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) out.add_term(ea + eb, ca * cb);
  return out;
}

LaurentPoly operator-(const LaurentPoly& a) {
  LaurentPoly out = a;
  for (auto& [e, c] : out.terms_) c = -c;
  return out;
}

std::string LaurentPoly::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    std::string coeff = c.to_string();
    bool negative = c.is_real() && coeff.front() == '-';
    if (negative) coeff.erase(0, 1);
    if (first) {
      if (negative) os << '-';
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    if (e == 0) {
      os << coeff;
      continue;
    }
    if (coeff != "1") os << coeff;
    os << 'z';
    if (e != 1) os << '^' << e;
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const LaurentPoly& p) { return os << p.to_string(); }

LaurentPoly involute(const LaurentPoly& p) {
  LaurentPoly::Terms t;
  for (const auto& [e, c] : p.terms()) t.emplace(-e, c.conj());
  return LaurentPoly(std::move(t));
}

LaurentPoly derivative(const LaurentPoly& p) {
  LaurentPoly::Terms t;
  for (const auto& [e, c] : p.terms())
    if (e != 0) t.emplace(e - 1, c * GaussianRational(e));
  return LaurentPoly(std::move(t));
}

LaurentPoly normalize_unit(const LaurentPoly& p) {
  if (p.is_zero()) return p;
  return p.shifted(-p.low_exponent()) * p.leading_coeff().inverse();
}

namespace {

// Ordinary long division; both arguments have lowest exponent >= 0.
DivMod poly_divmod(LaurentPoly a, const LaurentPoly& b) {
  LaurentPoly q;
  const int db = b.high_exponent();
  const GaussianRational lead_inv = b.leading_coeff().inverse();
  while (!a.is_zero() && a.high_exponent() >= db) {
    LaurentPoly t = LaurentPoly::monomial(a.high_exponent() - db, a.leading_coeff() * lead_inv);
    a -= t * b;
    q += t;
  }
  return {std::move(q), std::move(a)};
}

}  // namespace

DivMod divmod(const LaurentPoly& a, const LaurentPoly& b) {
  if (b.is_zero()) throw std::domain_error("Laurent division by zero");
  if (a.is_zero()) return {};
  const int la = a.low_exponent();
  const int lb = b.low_exponent();
  auto [q, r] = poly_divmod(a.shifted(-la), b.shifted(-lb));
  // a z^-la = q b z^-lb + r  =>  a = (q z^(la-lb)) b + r z^la
  return {q.shifted(la - lb), r.shifted(la)};
}

LaurentPoly exact_divide(const LaurentPoly& a, const LaurentPoly& b) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero()) throw std::domain_error("inexact Laurent division");
  return q;
}

bool divides(const LaurentPoly& b, const LaurentPoly& a) {
  if (b.is_zero()) return a.is_zero();
  return divmod(a, b).remainder.is_zero();
}

LaurentPoly gcd(LaurentPoly a, LaurentPoly b) {
  a = normalize_unit(a);
  b = normalize_unit(b);
  while (!b.is_zero()) {
    LaurentPoly r = normalize_unit(divmod(a, b).remainder);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

LaurentPoly squarefree_part(const LaurentPoly& p) {
  if (p.is_zero()) return p;
  LaurentPoly q = normalize_unit(p);
  // Characteristic zero: q / gcd(q, q') drops repeated factors.
  return normalize_unit(exact_divide(q, gcd(q, derivative(q))));
}

}  // namespace rho_forge
