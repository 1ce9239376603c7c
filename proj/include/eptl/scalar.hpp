#pragma once

#include <complex>
#include <optional>
#include <string>

#include "eptl/poly.hpp"

namespace eptl {

// Element of the field Q(s,x,y,z), kept in canonical form: numerator and
// denominator coprime, denominator monic in the fixed lex order.
class Scalar {
 public:
  Scalar() : num_(Poly::zero()), den_(Poly::constant(1)) {}
  Scalar(long n) : num_(Poly::constant(n)), den_(Poly::constant(1)) {}
  Scalar(const Rat& r) : num_(Poly::constant(r)), den_(Poly::constant(1)) {}
  Scalar(Poly num, Poly den);
  explicit Scalar(const Poly& p) : num_(p), den_(Poly::constant(1)) {}

  static Scalar variable(Var v, int power = 1);  // power may be negative
  static Scalar s_pow(int n) { return variable(VAR_S, n); }
  static Scalar q_pow(int n) { return variable(VAR_S, 2 * n); }

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }

  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator/(const Scalar& o) const;
  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
  Scalar& operator/=(const Scalar& o) { return *this = *this / o; }
  bool operator==(const Scalar& o) const { return num_ == o.num_ && den_ == o.den_; }
  bool operator!=(const Scalar& o) const { return !(*this == o); }

  Scalar inverse() const;
  Scalar pow(int n) const;  // n may be negative

  // Exact substitution at a rational point; throws on a pole.
  Rat eval(const std::array<Rat, kNumVars>& vals) const;
  std::complex<double> eval_cx(const std::array<std::complex<double>, kNumVars>& vals) const;

  std::string str() const;
  static Scalar parse(const std::string& text);

 private:
  struct canonical_tag {};
  Scalar(Poly num, Poly den, canonical_tag) : num_(std::move(num)), den_(std::move(den)) {}
  void canonicalize();
  void make_monic();
  Poly num_, den_;
};

// q-analog [k] = (q^k - q^-k)/(q - q^-1), as a canonical element of Q(s).
Scalar quantum_integer(int k);

// beta = -q - q^-1
Scalar beta_scalar();

// alpha-style weight u + u^-1 for u one of the twist variables.
Scalar fugacity(Var v);

// Symbolic or numeric assignment for (s, x, y, z), with a tolerance for
// approximate comparisons of specialized values.
struct Specialization {
  std::array<Rat, kNumVars> rational{Rat(0), Rat(0), Rat(0), Rat(0)};
  bool is_rational = true;
  std::array<std::complex<double>, kNumVars> numeric{};
  double tol = 1e-9;

  static Specialization at(const Rat& s, const Rat& x, const Rat& y, const Rat& z);
  static Specialization at_cx(std::complex<double> s, std::complex<double> x,
                              std::complex<double> y, std::complex<double> z);

  std::complex<double> cx(Var v) const {
    if (is_rational) return std::complex<double>(rational[v].get_d(), 0.0);
    return numeric[v];
  }
};

// Result of testing whether z equals eps * q^(sign*l) for some l in
// {k+1, ..., N/2}.  A symbolic indeterminate z is always generic.
struct ZClassification {
  bool generic = true;
  int eps = 0;   // +1 or -1
  int ell = 0;   // the exponent l
  int sign = 0;  // +1 or -1 for q^l vs q^-l
};

// Symbolic version: zval in Q(s) (no x,y dependence expected).
ZClassification classify_z(const Scalar& zval, int N, double k_half);
// Numeric version at a specialization; throws if two witnesses match within tol.
ZClassification classify_z(const Specialization& sp, int N, double k_half);

// Seeded random rational specializations with small numerators/denominators,
// rejection-sampled away from the non-generic loci for the given N.
Specialization random_generic_specialization(uint64_t seed, int N);

}  // namespace eptl
