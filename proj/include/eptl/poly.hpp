#pragma once

#include <gmpxx.h>

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace eptl {

using Rat = mpq_class;

// Variable order for the coefficient field Q(s,x,y,z).  q is never a
// standalone variable: q = s^2, so braid-tile weights q^{1/2} stay polynomial.
enum Var : int { VAR_S = 0, VAR_X = 1, VAR_Y = 2, VAR_Z = 3 };
constexpr int kNumVars = 4;

using Expo = std::array<int16_t, kNumVars>;

// Lex order on exponent vectors, s > x > y > z.
bool expo_less(const Expo& a, const Expo& b);

// Sparse multivariate polynomial over Q, terms sorted lex-descending.
class Poly {
 public:
  struct Term {
    Expo e;
    Rat c;
  };

  Poly() = default;
  static Poly zero() { return Poly(); }
  static Poly constant(const Rat& r);
  static Poly constant(long n) { return constant(Rat(n)); }
  static Poly variable(Var v, int power = 1);
  static Poly monomial(const Rat& c, const Expo& e);

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  bool is_one() const;
  bool is_monomial() const { return terms_.size() == 1; }
  const std::vector<Term>& terms() const { return terms_; }

  // Leading term in the fixed lex order.
  const Term& lead() const { return terms_.front(); }

  int degree(Var v) const;       // max exponent of v, -1 for zero poly
  int min_degree(Var v) const;   // min exponent of v over all terms
  bool depends_on(Var v) const { return degree(v) > 0; }

  Poly operator-() const;
  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator*(const Poly& o) const;
  bool operator==(const Poly& o) const;
  bool operator!=(const Poly& o) const { return !(*this == o); }

  Poly mul_rat(const Rat& r) const;
  Poly mul_monomial(const Rat& c, const Expo& e) const;
  Poly pow(int n) const;

  // Coefficient of v^d, as a polynomial in the remaining variables.
  Poly coeff_of(Var v, int d) const;

  // Exact division; aborts if not divisible.
  Poly div_exact(const Poly& d) const;

  // Substitute rational values for all variables.
  Rat eval(const std::array<Rat, kNumVars>& vals) const;

  // Rational content (gcd of coefficients, sign of leading term).
  Rat content_rat() const;

  std::string str() const;

  // Internal: assumes sorted, nonzero coefficients.
  static Poly from_terms(std::vector<Term> t);

 private:
  std::vector<Term> terms_;
};

Poly gcd(const Poly& a, const Poly& b);

}  // namespace eptl
