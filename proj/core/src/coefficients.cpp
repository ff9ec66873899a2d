#include "domset/coefficients.hpp"

#include <cassert>
#include <stdexcept>

namespace domset {

namespace {

void check_well_formed(const CoefficientSet& c) {
  if (c.d < 3) throw std::invalid_argument("CoefficientSet: d must be >= 3");
  if (static_cast<int>(c.b.size()) != c.d) {
    throw std::invalid_argument("CoefficientSet: expected d entries in b");
  }
  if (!c.a.is_positive() || !c.s.is_positive()) {
    throw std::invalid_argument("CoefficientSet: a and s must be positive");
  }
  for (const Rational& value : c.b) {
    if (!value.is_positive()) {
      throw std::invalid_argument("CoefficientSet: b values must be positive");
    }
  }
}

}  // namespace

CoefficientSet CoefficientSet::scaled_to(const Rational& new_s) const {
  if (!new_s.is_positive()) {
    throw std::invalid_argument("scaled_to: target s must be positive");
  }
  const Rational factor = new_s / s;
  CoefficientSet out;
  out.d = d;
  out.a = a * factor;
  out.s = new_s;
  out.b.reserve(b.size());
  for (const Rational& value : b) out.b.push_back(value * factor);
  return out;
}

CoefficientSet CoefficientSet::integer_scaled() const {
  mpz_class l = s.denominator();
  auto fold = [&l](const Rational& r) {
    mpz_class g;
    mpz_lcm(g.get_mpz_t(), l.get_mpz_t(), r.denominator().get_mpz_t());
    l = g;
  };
  fold(a);
  for (const Rational& value : b) fold(value);
  const Rational factor(l, mpz_class(1));
  CoefficientSet out;
  out.d = d;
  out.a = a * factor;
  out.s = s * factor;
  out.b.reserve(b.size());
  for (const Rational& value : b) out.b.push_back(value * factor);
  return out;
}

CoefficientSet solve_coefficients(int d) {
  if (d < 3) throw std::invalid_argument("solve_coefficients: d must be >= 3");

  // Each b_j is linear in a while s = 1: b_j = alpha[j] + beta[j] * a.
  std::vector<Rational> alpha(static_cast<size_t>(d) + 1);
  std::vector<Rational> beta(static_cast<size_t>(d) + 1);

  // (vi) with equality: a + d b_1 = 1.
  alpha[1] = Rational(1, d);
  beta[1] = Rational(-1, d);
  // (v) with equality: 2a + 2(d-1)(b_2 - b_1) = 1.
  alpha[2] = alpha[1] + Rational(1, 2 * (d - 1));
  beta[2] = beta[1] - Rational(1, d - 1);
  // (iv) with equality, substituting j = d-i+2 for i = d-1 down to 2:
  // j a + j(d-j+1)(b_j - b_{j-1}) - (j-1) b_{j-2} = 1.
  for (int j = 3; j <= d; ++j) {
    const long denom = static_cast<long>(j) * (d - j + 1);
    assert(denom >= d);
    alpha[j] = alpha[j - 1] + (Rational(1) + Rational(j - 1) * alpha[j - 2]) / Rational(denom);
    beta[j] = beta[j - 1] + (Rational(-j) + Rational(j - 1) * beta[j - 2]) / Rational(denom);
  }

  // (iii) with equality: (d+1)a - d b_{d-1} = 1.
  const Rational divisor = Rational(d + 1) - Rational(d) * beta[d - 1];
  assert(divisor.is_positive());
  const Rational a0 = (Rational(1) + Rational(d) * alpha[d - 1]) / divisor;

  // Normalize so (a, s) is the reduced integer pair of the bound ratio.
  const Rational scale(a0.denominator(), mpz_class(1));
  CoefficientSet out;
  out.d = d;
  out.a = a0 * scale;
  out.s = scale;
  out.b.reserve(static_cast<size_t>(d));
  for (int j = 1; j <= d; ++j) {
    out.b.push_back((alpha[j] + beta[j] * a0) * scale);
  }
  check_well_formed(out);
  return out;
}

ConditionReport verify_conditions(const CoefficientSet& c) {
  check_well_formed(c);
  const int d = c.d;
  const Rational& a = c.a;
  const Rational& s = c.s;

  ConditionReport report;
  report.d = d;

  // (i): difference chain plus b_d <= a.
  bool chain = c.b_at(d) - c.b_at(d - 1) >= Rational(0) && c.b_at(1) - (c.b_at(2) - c.b_at(1)) >= Rational(0);
  for (int k = 2; k <= d - 1 && chain; ++k) {
    // b_{k+1}-b_k <= b_k-b_{k-1}
    chain = (c.b_at(k + 1) - c.b_at(k)) <= (c.b_at(k) - c.b_at(k - 1));
  }
  report.passed[0] = chain && c.b_at(d) <= a;

  // (ii)
  report.slack_ii = Rational(d + 2) * a - Rational(d + 1) * c.b_at(d) - s;
  report.passed[1] = report.slack_ii.sign() >= 0;

  // (iii)
  report.passed[2] = Rational(d + 1) * a - Rational(d) * c.b_at(d - 1) >= s;

  // (iv), every i in 2..d-1
  bool iv = true;
  for (int i = 2; i <= d - 1 && iv; ++i) {
    const int m = d - i + 2;
    const Rational lhs = Rational(m) * a
        + Rational(m) * Rational(i - 1) * (c.b_at(m) - c.b_at(m - 1))
        - Rational(m - 1) * c.b_at(d - i);
    iv = lhs >= s;
  }
  report.passed[3] = iv;

  // (v)
  report.passed[4] = Rational(2) * a + Rational(2) * Rational(d - 1) * (c.b_at(2) - c.b_at(1)) >= s;

  // (vi)
  report.passed[5] = a + Rational(d) * c.b_at(1) >= s;

  return report;
}

bool ConditionReport::all_passed() const {
  for (bool ok : passed) {
    if (!ok) return false;
  }
  return true;
}

const char* condition_name(int index) {
  static const char* names[] = {"i", "ii", "iii", "iv", "v", "vi"};
  if (index < 1 || index > 6) throw std::out_of_range("condition_name: index must be 1..6");
  return names[index - 1];
}

Rational bound_ratio(const CoefficientSet& c) {
  check_well_formed(c);
  return c.bound();
}

}  // namespace domset
