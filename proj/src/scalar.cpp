#include "eptl/scalar.hpp"

#include <cctype>
#include <cmath>
#include <random>
#include <sstream>
#include <stdexcept>

namespace eptl {

Scalar::Scalar(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw std::invalid_argument("Scalar: zero denominator");
  canonicalize();
}

void Scalar::canonicalize() {
  if (num_.is_zero()) {
    den_ = Poly::constant(1);
    return;
  }
  Poly g = gcd(num_, den_);
  if (!g.is_one()) {
    num_ = num_.div_exact(g);
    den_ = den_.div_exact(g);
  }
  make_monic();
}

void Scalar::make_monic() {
  // Denominator monic in the fixed monomial order.
  Rat lc = den_.lead().c;
  if (lc != 1) {
    num_ = num_.mul_rat(1 / lc);
    den_ = den_.mul_rat(1 / lc);
  }
}

Scalar Scalar::variable(Var v, int power) {
  if (power >= 0) return Scalar(Poly::variable(v, power));
  return Scalar(Poly::constant(1), Poly::variable(v, -power));
}

Scalar Scalar::operator+(const Scalar& o) const {
  if (is_zero()) return o;
  if (o.is_zero()) return *this;
  if (den_ == o.den_) {
    Poly n = num_ + o.num_;
    if (n.is_zero()) return Scalar();
    // Common denominator: only a gcd with the sum is needed.
    Poly g = gcd(n, den_);
    Scalar r(g.is_one() ? n : n.div_exact(g),
             g.is_one() ? den_ : den_.div_exact(g), canonical_tag{});
    r.make_monic();
    return r;
  }
  // a/b + c/d with g = gcd(b,d), b = g b', d = g d':
  // sum = (a d' + c b') / (g b' d'); the only cancellation divides g.
  Poly g = gcd(den_, o.den_);
  Poly dp = g.is_one() ? o.den_ : o.den_.div_exact(g);
  Poly bp = g.is_one() ? den_ : den_.div_exact(g);
  Poly n = num_ * dp + o.num_ * bp;
  if (n.is_zero()) return Scalar();
  Poly g3 = g.is_one() ? g : gcd(n, g);
  if (!g3.is_one()) {
    n = n.div_exact(g3);
    g = g.div_exact(g3);
  }
  Scalar r(std::move(n), g * bp * dp, canonical_tag{});
  r.make_monic();
  return r;
}

Scalar Scalar::operator-(const Scalar& o) const { return *this + (-o); }

Scalar Scalar::operator*(const Scalar& o) const {
  if (is_zero() || o.is_zero()) return Scalar();
  // Cross-cancel; with both inputs canonical the result is then canonical.
  Poly g1 = gcd(num_, o.den_);
  Poly g2 = gcd(o.num_, den_);
  const Poly& n1 = g1.is_one() ? num_ : num_.div_exact(g1);
  const Poly& d2 = g1.is_one() ? o.den_ : o.den_.div_exact(g1);
  const Poly& n2 = g2.is_one() ? o.num_ : o.num_.div_exact(g2);
  const Poly& d1 = g2.is_one() ? den_ : den_.div_exact(g2);
  Scalar r(n1 * n2, d1 * d2, canonical_tag{});
  r.make_monic();
  return r;
}

Scalar Scalar::operator/(const Scalar& o) const { return *this * o.inverse(); }

Scalar Scalar::operator-() const {
  Scalar r = *this;
  r.num_ = -r.num_;
  return r;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw std::invalid_argument("Scalar::inverse of zero");
  return Scalar(den_, num_);
}

Scalar Scalar::pow(int n) const {
  if (n < 0) return inverse().pow(-n);
  Scalar r(1);
  Scalar b = *this;
  while (n > 0) {
    if (n & 1) r = r * b;
    b = b * b;
    n >>= 1;
  }
  return r;
}

Rat Scalar::eval(const std::array<Rat, kNumVars>& vals) const {
  Rat d = den_.eval(vals);
  if (d == 0) {
    throw std::domain_error("Scalar::eval: pole, denominator factor vanishes: " + den_.str());
  }
  return num_.eval(vals) / d;
}

std::complex<double> Scalar::eval_cx(
    const std::array<std::complex<double>, kNumVars>& vals) const {
  auto eval_poly = [&](const Poly& p) {
    std::complex<double> acc = 0.0;
    for (const auto& t : p.terms()) {
      std::complex<double> m(t.c.get_d(), 0.0);
      for (int v = 0; v < kNumVars; ++v) {
        for (int i = 0; i < t.e[v]; ++i) m *= vals[v];
      }
      acc += m;
    }
    return acc;
  };
  auto d = eval_poly(den_);
  if (std::abs(d) < 1e-300) throw std::domain_error("Scalar::eval_cx: pole");
  return eval_poly(num_) / d;
}

std::string Scalar::str() const {
  if (den_.is_one()) return num_.str();
  std::ostringstream os;
  os << "(" << num_.str() << ")/(" << den_.str() << ")";
  return os.str();
}

// ---------------------------------------------------------------------------
// Parser: +, -, *, /, ^, parentheses, integers, variables s,x,y,z, and q as
// shorthand for s^2.
// ---------------------------------------------------------------------------

namespace {

struct Parser {
  const std::string& text;
  size_t pos = 0;

  explicit Parser(const std::string& t) : text(t) {}

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }
  bool eat(char c) {
    skip_ws();
    if (pos < text.size() && text[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }
  char peek() {
    skip_ws();
    return pos < text.size() ? text[pos] : '\0';
  }

  Scalar parse_expr() {
    Scalar r = parse_term();
    while (true) {
      if (eat('+')) {
        r = r + parse_term();
      } else if (eat('-')) {
        r = r - parse_term();
      } else {
        return r;
      }
    }
  }

  Scalar parse_term() {
    Scalar r = parse_factor();
    while (true) {
      if (eat('*')) {
        r = r * parse_factor();
      } else if (eat('/')) {
        r = r / parse_factor();
      } else {
        return r;
      }
    }
  }

  Scalar parse_factor() {
    if (eat('-')) return -parse_factor();
    if (eat('+')) return parse_factor();
    Scalar base = parse_atom();
    if (eat('^')) {
      bool neg = eat('-');
      int e = parse_int();
      return base.pow(neg ? -e : e);
    }
    return base;
  }

  int parse_int() {
    skip_ws();
    size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (start == pos) throw std::invalid_argument("Scalar::parse: integer expected");
    return std::stoi(text.substr(start, pos - start));
  }

  Scalar parse_atom() {
    skip_ws();
    if (eat('(')) {
      Scalar r = parse_expr();
      if (!eat(')')) throw std::invalid_argument("Scalar::parse: missing )");
      return r;
    }
    char c = peek();
    if (std::isdigit(static_cast<unsigned char>(c))) {
      size_t start = pos;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
      return Scalar(Rat(text.substr(start, pos - start)));
    }
    ++pos;
    switch (c) {
      case 's': return Scalar::variable(VAR_S);
      case 'x': return Scalar::variable(VAR_X);
      case 'y': return Scalar::variable(VAR_Y);
      case 'z': return Scalar::variable(VAR_Z);
      case 'q': return Scalar::variable(VAR_S, 2);
      default: throw std::invalid_argument(std::string("Scalar::parse: unexpected '") + c + "'");
    }
  }
};

}  // namespace

Scalar Scalar::parse(const std::string& text) {
  Parser p(text);
  Scalar r = p.parse_expr();
  p.skip_ws();
  if (p.pos != text.size()) throw std::invalid_argument("Scalar::parse: trailing input");
  return r;
}

Scalar quantum_integer(int k) {
  // [k] = (q^k - q^-k)/(q - q^-1) = (s^{2k} - s^{-2k})/(s^2 - s^-2).
  // Clear the negative powers: [k] = (s^{4k} - 1) / (s^{2k-2} (s^4 - 1)), k > 0.
  if (k == 0) return Scalar(0);
  if (k < 0) return -quantum_integer(-k);
  Poly num = Poly::variable(VAR_S, 4 * k) - Poly::constant(1);
  Poly den = (Poly::variable(VAR_S, 4) - Poly::constant(1)) * Poly::variable(VAR_S, 2 * k - 2);
  return Scalar(num, den);
}

Scalar beta_scalar() { return -Scalar::q_pow(1) - Scalar::q_pow(-1); }

Scalar fugacity(Var v) { return Scalar::variable(v, 1) + Scalar::variable(v, -1); }

Specialization Specialization::at(const Rat& s, const Rat& x, const Rat& y, const Rat& z) {
  Specialization sp;
  sp.rational = {s, x, y, z};
  sp.is_rational = true;
  for (int v = 0; v < kNumVars; ++v) sp.numeric[v] = sp.rational[v].get_d();
  return sp;
}

Specialization Specialization::at_cx(std::complex<double> s, std::complex<double> x,
                                     std::complex<double> y, std::complex<double> z) {
  Specialization sp;
  sp.is_rational = false;
  sp.numeric = {s, x, y, z};
  return sp;
}

ZClassification classify_z(const Scalar& zval, int N, double k_half) {
  ZClassification res;
  int lmin = int(std::floor(k_half)) + 1;
  for (int eps : {+1, -1}) {
    for (int sign : {+1, -1}) {
      for (int l = lmin; 2 * l <= N; ++l) {
        Scalar target = Scalar(eps) * Scalar::q_pow(sign * l);
        if (zval == target) {
          if (!res.generic) {
            throw std::runtime_error("classify_z: ambiguous symbolic match");
          }
          res.generic = false;
          res.eps = eps;
          res.ell = l;
          res.sign = sign;
        }
      }
    }
  }
  return res;
}

ZClassification classify_z(const Specialization& sp, int N, double k_half) {
  ZClassification res;
  int lmin = int(std::floor(k_half)) + 1;
  std::complex<double> q = sp.cx(VAR_S) * sp.cx(VAR_S);
  std::complex<double> z = sp.cx(VAR_Z);
  std::string first_witness;
  for (int eps : {+1, -1}) {
    for (int sign : {+1, -1}) {
      for (int l = lmin; 2 * l <= N; ++l) {
        std::complex<double> target = double(eps) * std::pow(q, double(sign * l));
        double scale = std::max(1.0, std::abs(target));
        if (std::abs(z - target) <= sp.tol * scale) {
          std::ostringstream w;
          w << "eps=" << eps << " l=" << l << " sign=" << sign;
          if (!res.generic && !(res.eps == eps && res.ell == l && res.sign == sign)) {
            throw std::runtime_error("classify_z: ambiguous numeric match: " + first_witness +
                                     " vs " + w.str());
          }
          if (res.generic) first_witness = w.str();
          res.generic = false;
          res.eps = eps;
          res.ell = l;
          res.sign = sign;
        }
      }
    }
  }
  return res;
}

Specialization random_generic_specialization(uint64_t seed, int N) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> numer(-50, 50);
  std::uniform_int_distribution<int> denom(1, 50);
  auto draw = [&]() {
    while (true) {
      int n = numer(rng), d = denom(rng);
      if (n == 0 || std::abs(n) == d) continue;  // avoid 0 and +-1
      Rat r(n, d);
      r.canonicalize();
      return r;
    }
  };
  while (true) {
    Rat s = draw(), x = draw(), y = draw(), z = draw();
    Specialization sp = Specialization::at(s, x, y, z);
    // q not a root of unity of small order is automatic for |q| != 1; the
    // draw already rejects |s| = 1.  Keep z away from +-q^j for |j| <= N/2.
    Rat q = s * s;
    bool bad = false;
    for (int j = -N; j <= N && !bad; ++j) {
      Rat qj(1);
      for (int i = 0; i < std::abs(j); ++i) qj *= q;
      if (j < 0) qj = 1 / qj;
      if (z == qj || z == -qj) bad = true;
    }
    if (!bad) return sp;
  }
}

}  // namespace eptl
