#include "eptl/poly.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <sstream>
#include <stdexcept>

namespace eptl {

bool expo_less(const Expo& a, const Expo& b) {
  for (int i = 0; i < kNumVars; ++i) {
    if (a[i] != b[i]) return a[i] < b[i];
  }
  return false;
}

static bool expo_greater(const Expo& a, const Expo& b) { return expo_less(b, a); }

static Expo expo_add(const Expo& a, const Expo& b) {
  Expo r;
  for (int i = 0; i < kNumVars; ++i) r[i] = int16_t(a[i] + b[i]);
  return r;
}

static Expo expo_sub(const Expo& a, const Expo& b) {
  Expo r;
  for (int i = 0; i < kNumVars; ++i) r[i] = int16_t(a[i] - b[i]);
  return r;
}

Poly Poly::from_terms(std::vector<Term> t) {
  Poly p;
  p.terms_ = std::move(t);
  return p;
}

Poly Poly::constant(const Rat& r) {
  Poly p;
  if (r != 0) p.terms_.push_back({Expo{0, 0, 0, 0}, r});
  return p;
}

Poly Poly::variable(Var v, int power) {
  if (power < 0) throw std::invalid_argument("Poly::variable negative power");
  if (power == 0) return constant(1);
  Expo e{0, 0, 0, 0};
  e[v] = int16_t(power);
  Poly p;
  p.terms_.push_back({e, Rat(1)});
  return p;
}

Poly Poly::monomial(const Rat& c, const Expo& e) {
  Poly p;
  if (c != 0) p.terms_.push_back({e, c});
  return p;
}

bool Poly::is_constant() const {
  if (terms_.empty()) return true;
  return terms_.size() == 1 && terms_[0].e == Expo{0, 0, 0, 0};
}

bool Poly::is_one() const {
  return terms_.size() == 1 && terms_[0].e == Expo{0, 0, 0, 0} && terms_[0].c == 1;
}

int Poly::degree(Var v) const {
  int d = terms_.empty() ? -1 : 0;
  for (const auto& t : terms_) d = std::max(d, int(t.e[v]));
  return d;
}

int Poly::min_degree(Var v) const {
  if (terms_.empty()) return 0;
  int d = terms_[0].e[v];
  for (const auto& t : terms_) d = std::min(d, int(t.e[v]));
  return d;
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& t : r.terms_) t.c = -t.c;
  return r;
}

Poly Poly::operator+(const Poly& o) const {
  std::vector<Term> out;
  out.reserve(terms_.size() + o.terms_.size());
  size_t i = 0, j = 0;
  while (i < terms_.size() && j < o.terms_.size()) {
    if (terms_[i].e == o.terms_[j].e) {
      Rat c = terms_[i].c + o.terms_[j].c;
      if (c != 0) out.push_back({terms_[i].e, c});
      ++i, ++j;
    } else if (expo_greater(terms_[i].e, o.terms_[j].e)) {
      out.push_back(terms_[i]);
      ++i;
    } else {
      out.push_back(o.terms_[j]);
      ++j;
    }
  }
  for (; i < terms_.size(); ++i) out.push_back(terms_[i]);
  for (; j < o.terms_.size(); ++j) out.push_back(o.terms_[j]);
  return from_terms(std::move(out));
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::mul_rat(const Rat& r) const {
  if (r == 0) return Poly();
  Poly out = *this;
  for (auto& t : out.terms_) t.c *= r;
  return out;
}

Poly Poly::mul_monomial(const Rat& c, const Expo& e) const {
  if (c == 0) return Poly();
  Poly out = *this;
  for (auto& t : out.terms_) {
    t.c *= c;
    t.e = expo_add(t.e, e);
  }
  return out;
}

Poly Poly::operator*(const Poly& o) const {
  if (is_zero() || o.is_zero()) return Poly();
  if (o.is_monomial()) return mul_monomial(o.terms_[0].c, o.terms_[0].e);
  if (is_monomial()) return o.mul_monomial(terms_[0].c, terms_[0].e);
  std::map<Expo, Rat, bool (*)(const Expo&, const Expo&)> acc(expo_less);
  for (const auto& a : terms_) {
    for (const auto& b : o.terms_) {
      acc[expo_add(a.e, b.e)] += a.c * b.c;
    }
  }
  std::vector<Term> out;
  out.reserve(acc.size());
  for (auto it = acc.rbegin(); it != acc.rend(); ++it) {
    if (it->second != 0) out.push_back({it->first, it->second});
  }
  return from_terms(std::move(out));
}

bool Poly::operator==(const Poly& o) const {
  if (terms_.size() != o.terms_.size()) return false;
  for (size_t i = 0; i < terms_.size(); ++i) {
    if (!(terms_[i].e == o.terms_[i].e) || terms_[i].c != o.terms_[i].c) return false;
  }
  return true;
}

Poly Poly::pow(int n) const {
  if (n < 0) throw std::invalid_argument("Poly::pow negative");
  Poly r = constant(1);
  Poly base = *this;
  while (n > 0) {
    if (n & 1) r = r * base;
    base = base * base;
    n >>= 1;
  }
  return r;
}

Poly Poly::coeff_of(Var v, int d) const {
  std::vector<Term> out;
  for (const auto& t : terms_) {
    if (t.e[v] == d) {
      Term u = t;
      u.e[v] = 0;
      out.push_back(u);
    }
  }
  std::sort(out.begin(), out.end(),
            [](const Term& a, const Term& b) { return expo_greater(a.e, b.e); });
  return from_terms(std::move(out));
}

Rat Poly::eval(const std::array<Rat, kNumVars>& vals) const {
  Rat acc(0);
  for (const auto& t : terms_) {
    Rat m = t.c;
    for (int v = 0; v < kNumVars; ++v) {
      for (int i = 0; i < t.e[v]; ++i) m *= vals[v];
    }
    acc += m;
  }
  return acc;
}

Rat Poly::content_rat() const {
  if (terms_.empty()) return Rat(0);
  mpz_class num_gcd = 0, den_lcm = 1;
  for (const auto& t : terms_) {
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), t.c.get_num().get_mpz_t());
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), t.c.get_den().get_mpz_t());
  }
  Rat c(num_gcd, den_lcm);
  c.canonicalize();
  if (terms_[0].c < 0) c = -c;
  return c;
}

// ---------------------------------------------------------------------------
// Multivariate gcd via primitive PRS, recursing on the main variable.
// ---------------------------------------------------------------------------

namespace {

// View p as a univariate polynomial in v with Poly coefficients.
std::vector<Poly> univariate_coeffs(const Poly& p, Var v) {
  int d = p.degree(v);
  std::vector<Poly> cs(size_t(d + 1));
  for (int i = 0; i <= d; ++i) cs[size_t(i)] = p.coeff_of(v, i);
  return cs;
}

Poly from_univariate(const std::vector<Poly>& cs, Var v) {
  Poly r;
  for (size_t i = 0; i < cs.size(); ++i) {
    r = r + cs[i] * Poly::variable(v, int(i));
  }
  return r;
}

int uni_deg(const std::vector<Poly>& cs) {
  for (int i = int(cs.size()) - 1; i >= 0; --i) {
    if (!cs[size_t(i)].is_zero()) return i;
  }
  return -1;
}

// Pseudo-remainder of a by b in variable v (coefficients are Polys).
std::vector<Poly> pseudo_rem(std::vector<Poly> a, const std::vector<Poly>& b) {
  int db = uni_deg(b);
  const Poly& lb = b[size_t(db)];
  int da = uni_deg(a);
  while (da >= db) {
    Poly la = a[size_t(da)];
    // a = lb*a - la * x^(da-db) * b
    for (auto& c : a) c = c * lb;
    for (int i = 0; i <= db; ++i) {
      a[size_t(da - db + i)] = a[size_t(da - db + i)] - la * b[size_t(i)];
    }
    int nd = -1;
    for (int i = da; i >= 0; --i) {
      if (!a[size_t(i)].is_zero()) {
        nd = i;
        break;
      }
    }
    a.resize(size_t(std::max(nd, -1) + 1));
    da = nd;
  }
  return a;
}

Poly content_in(const std::vector<Poly>& cs) {
  Poly g;
  for (const auto& c : cs) {
    if (!c.is_zero()) g = gcd(g, c);
    if (g.is_one()) break;
  }
  return g;
}

// Divide out both the polynomial content and the rational content; keeps the
// pseudo-remainder sequence coefficients from blowing up.
void make_primitive(std::vector<Poly>& cs) {
  Poly g = content_in(cs);
  if (!g.is_one() && !g.is_zero()) {
    for (auto& c : cs) {
      if (!c.is_zero()) c = c.div_exact(g);
    }
  }
  mpz_class num_gcd = 0, den_lcm = 1;
  bool any = false;
  Rat lead_sign(1);
  for (auto it = cs.rbegin(); it != cs.rend(); ++it) {
    for (const auto& t : it->terms()) {
      mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), t.c.get_num().get_mpz_t());
      mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), t.c.get_den().get_mpz_t());
      any = true;
    }
    if (any && it == cs.rbegin()) lead_sign = it->lead().c < 0 ? Rat(-1) : Rat(1);
  }
  if (!any) return;
  Rat content(num_gcd, den_lcm);
  content.canonicalize();
  content *= lead_sign;
  if (content == 1) return;
  for (auto& c : cs) c = c.mul_rat(1 / content);
}

// Dense univariate gcd over Z (primitive PRS with integer coefficients).
// Both inputs depend on the single variable v only.
Poly gcd_univariate(const Poly& a, const Poly& b, Var v) {
  auto to_dense = [&](const Poly& p) {
    int d = p.degree(v);
    std::vector<mpz_class> cs(size_t(d + 1), mpz_class(0));
    mpz_class lcm_den = 1;
    for (const auto& t : p.terms()) {
      mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), t.c.get_den().get_mpz_t());
    }
    for (const auto& t : p.terms()) {
      Rat c = t.c * Rat(lcm_den);
      cs[size_t(t.e[v])] = c.get_num();
    }
    return cs;
  };
  auto normalize = [](std::vector<mpz_class>& cs) {
    while (!cs.empty() && cs.back() == 0) cs.pop_back();
    if (cs.empty()) return;
    mpz_class g = 0;
    for (const auto& c : cs) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g != 0 && g != 1) {
      for (auto& c : cs) c /= g;
    }
    if (cs.back() < 0) {
      for (auto& c : cs) c = -c;
    }
  };
  std::vector<mpz_class> u = to_dense(a), w = to_dense(b);
  normalize(u);
  normalize(w);
  if (u.size() < w.size()) std::swap(u, w);
  while (!w.empty()) {
    // Pseudo-remainder u := prem(u, w).
    const mpz_class lw = w.back();
    while (u.size() >= w.size()) {
      mpz_class lu = u.back();
      size_t shift = u.size() - w.size();
      for (auto& c : u) c *= lw;
      for (size_t i = 0; i < w.size(); ++i) u[shift + i] -= lu * w[i];
      while (!u.empty() && u.back() == 0) u.pop_back();
    }
    normalize(u);
    std::swap(u, w);
  }
  if (u.empty()) return Poly();
  std::vector<Poly::Term> terms;
  for (size_t i = u.size(); i-- > 0;) {
    if (u[i] != 0) {
      Expo e{0, 0, 0, 0};
      e[v] = int16_t(i);
      terms.push_back({e, Rat(u[i])});
    }
  }
  return Poly::from_terms(std::move(terms));
}

}  // namespace

Poly gcd(const Poly& a, const Poly& b) {
  if (a.is_zero()) {
    if (b.is_zero()) return Poly();
    return b.div_exact(Poly::constant(b.content_rat()));
  }
  if (b.is_zero()) return a.div_exact(Poly::constant(a.content_rat()));

  // Monomial fast path: common monomial factor.
  if (a.is_monomial() || b.is_monomial()) {
    Expo e;
    for (int v = 0; v < kNumVars; ++v) {
      e[v] = int16_t(std::min(a.min_degree(Var(v)), b.min_degree(Var(v))));
    }
    return Poly::monomial(Rat(1), e);
  }

  // Pull out the common monomial content first.
  Expo shift;
  bool nontrivial = false;
  for (int v = 0; v < kNumVars; ++v) {
    shift[v] = int16_t(std::min(a.min_degree(Var(v)), b.min_degree(Var(v))));
    if (shift[v] != 0) nontrivial = true;
  }
  if (nontrivial) {
    Expo neg;
    for (int v = 0; v < kNumVars; ++v) neg[v] = int16_t(-shift[v]);
    Poly a2 = a.mul_monomial(Rat(1), neg);
    Poly b2 = b.mul_monomial(Rat(1), neg);
    return gcd(a2, b2).mul_monomial(Rat(1), shift);
  }

  if (a.is_constant() || b.is_constant()) return Poly::constant(1);

  // Single shared variable: dense integer PRS is much faster.
  {
    int nvars = 0;
    Var only = VAR_S;
    for (int i = 0; i < kNumVars; ++i) {
      if (a.degree(Var(i)) > 0 || b.degree(Var(i)) > 0) {
        ++nvars;
        only = Var(i);
      }
    }
    if (nvars == 1) return gcd_univariate(a, b, only);
  }

  // Main variable: first variable either polynomial depends on.
  Var v = VAR_S;
  for (int i = 0; i < kNumVars; ++i) {
    if (a.degree(Var(i)) > 0 || b.degree(Var(i)) > 0) {
      v = Var(i);
      break;
    }
  }

  auto ua = univariate_coeffs(a, v);
  auto ub = univariate_coeffs(b, v);
  Poly ca = content_in(ua);
  Poly cb = content_in(ub);
  Poly cg = gcd(ca, cb);

  for (auto& c : ua) c = c.is_zero() ? c : c.div_exact(ca);
  for (auto& c : ub) c = c.is_zero() ? c : c.div_exact(cb);

  make_primitive(ua);
  make_primitive(ub);
  if (uni_deg(ua) < uni_deg(ub)) std::swap(ua, ub);
  while (true) {
    auto r = pseudo_rem(ua, ub);
    if (uni_deg(r) < 0) break;
    make_primitive(r);
    ua = std::move(ub);
    ub = std::move(r);
  }
  if (uni_deg(ub) == 0) return cg;  // primitive parts are coprime
  Poly g = cg * from_univariate(ub, v);
  Rat c = g.content_rat();
  return g.div_exact(Poly::constant(c));
}

Poly Poly::div_exact(const Poly& d) const {
  if (d.is_zero()) throw std::invalid_argument("Poly::div_exact by zero");
  if (d.is_monomial()) {
    Expo neg;
    for (int v = 0; v < kNumVars; ++v) neg[v] = int16_t(-d.terms_[0].e[v]);
    return mul_monomial(1 / d.terms_[0].c, neg);
  }
  // Long division in lex order; remainder must vanish.
  Poly rem = *this;
  std::vector<Term> qt;
  const Term& dl = d.lead();
  while (!rem.is_zero()) {
    const Term& rl = rem.lead();
    Expo e = expo_sub(rl.e, dl.e);
    for (int v = 0; v < kNumVars; ++v) {
      if (e[v] < 0) throw std::runtime_error("Poly::div_exact: not divisible");
    }
    Rat c = rl.c / dl.c;
    qt.push_back({e, c});
    rem = rem - d.mul_monomial(c, e);
  }
  std::sort(qt.begin(), qt.end(),
            [](const Term& x, const Term& y) { return expo_greater(x.e, y.e); });
  return from_terms(std::move(qt));
}

std::string Poly::str() const {
  if (terms_.empty()) return "0";
  static const char* names[kNumVars] = {"s", "x", "y", "z"};
  std::ostringstream os;
  bool first = true;
  for (const auto& t : terms_) {
    Rat c = t.c;
    if (first) {
      if (c < 0) {
        os << "-";
        c = -c;
      }
    } else {
      os << (c < 0 ? " - " : " + ");
      if (c < 0) c = -c;
    }
    first = false;
    bool has_var = t.e != Expo{0, 0, 0, 0};
    bool coeff_shown = false;
    if (!has_var || c != 1) {
      os << c.get_str();
      coeff_shown = true;
    }
    bool started = coeff_shown;
    for (int v = 0; v < kNumVars; ++v) {
      if (t.e[v] == 0) continue;
      if (started) os << "*";
      os << names[v];
      if (t.e[v] != 1) os << "^" << t.e[v];
      started = true;
    }
  }
  return os.str();
}

}  // namespace eptl
