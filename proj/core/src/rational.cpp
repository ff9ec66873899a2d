#include "domset/rational.hpp"

#include <cstdio>
#include <ostream>
#include <stdexcept>

namespace domset {

namespace {

mpq_class canonical(mpq_class q) {
  q.canonicalize();
  return q;
}

}  // namespace

Rational::Rational(long num, long den) {
  if (den == 0) throw std::invalid_argument("Rational: zero denominator");
  value_ = canonical(mpq_class(num, den));
}

Rational::Rational(mpq_class q) : value_(canonical(std::move(q))) {}

Rational::Rational(const mpz_class& num, const mpz_class& den) {
  if (den == 0) throw std::invalid_argument("Rational: zero denominator");
  mpq_class q;
  q.get_num() = num;
  q.get_den() = den;
  value_ = canonical(std::move(q));
}

Rational Rational::parse(std::string_view text) {
  const auto slash = text.find('/');
  try {
    if (slash == std::string_view::npos) {
      return Rational(mpz_class(std::string(text)), mpz_class(1));
    }
    mpz_class num{std::string(text.substr(0, slash))};
    mpz_class den{std::string(text.substr(slash + 1))};
    return Rational(num, den);
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("Rational: cannot parse '" + std::string(text) + "'");
  }
}

Rational operator/(const Rational& x, const Rational& y) {
  if (y.is_zero()) throw std::invalid_argument("Rational: division by zero");
  return Rational(mpq_class(x.value_ / y.value_));
}

mpz_class Rational::floor() const {
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), numerator().get_mpz_t(), denominator().get_mpz_t());
  return q;
}

std::string Rational::str() const {
  return numerator().get_str() + "/" + denominator().get_str();
}

std::string Rational::decimal(int digits, Rounding mode) const {
  if (digits < 0) throw std::invalid_argument("Rational::decimal: negative digit count");
  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits));

  const bool negative = sign() < 0;
  mpz_class num = abs(numerator()) * scale;
  const mpz_class& den = denominator();
  mpz_class q, r;
  mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());

  bool bump = false;  // round magnitude up by one ulp
  switch (mode) {
    case Rounding::HalfAwayFromZero:
      bump = 2 * r >= den && r != 0;
      break;
    case Rounding::Ceiling:
      bump = r != 0 && !negative;
      break;
    case Rounding::Floor:
      bump = r != 0 && negative;
      break;
  }
  if (bump) q += 1;

  mpz_class ip = q / scale;
  mpz_class fp = q % scale;
  std::string frac = fp.get_str();
  if (static_cast<int>(frac.size()) < digits) {
    frac.insert(0, static_cast<size_t>(digits) - frac.size(), '0');
  }
  std::string out;
  if (negative && q != 0) out += '-';
  out += ip.get_str();
  if (digits > 0) {
    out += '.';
    out += frac;
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

std::string format_real(double x, int digits) {
  // Render with guard digits, then round the decimal string half away from
  // zero. Keeps the carry logic exact instead of relying on the FPU mode.
  char buf[512];
  std::snprintf(buf, sizeof buf, "%.*f", digits + 4, x);
  std::string s(buf);
  const auto dot = s.find('.');
  const size_t cut = dot + 1 + static_cast<size_t>(digits);
  std::string kept = s.substr(0, cut);
  const char next = s[cut];
  if (next >= '5') {
    // propagate carry over digits and the decimal point
    int i = static_cast<int>(kept.size()) - 1;
    for (; i >= 0; --i) {
      if (kept[i] == '.') continue;
      if (kept[i] == '-') break;
      if (kept[i] != '9') {
        ++kept[i];
        break;
      }
      kept[i] = '0';
    }
    if (i < 0 || kept[i] == '-') {
      kept.insert(static_cast<size_t>(i + 1), 1, '1');
    }
  }
  if (digits == 0) {
    kept.pop_back();  // trailing '.'
  }
  return kept;
}

}  // namespace domset
