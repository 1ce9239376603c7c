#include "eptl/tl.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace eptl {

PlanarDiagram::PlanarDiagram(int n, std::vector<int> partner)
    : n_(n), partner_(std::move(partner)) {
  if (int(partner_.size()) != 2 * n_) throw std::invalid_argument("PlanarDiagram: size");
  // Validate involution and the balanced-parenthesis criterion.
  std::vector<int> stack;
  for (int i = 0; i < 2 * n_; ++i) {
    int p = partner_[size_t(i)];
    if (p == i || partner_[size_t(p)] != i) throw std::invalid_argument("PlanarDiagram: pairing");
    if (p > i) {
      stack.push_back(i);
    } else {
      if (stack.empty() || stack.back() != p) {
        throw std::invalid_argument("PlanarDiagram: crossing detected");
      }
      stack.pop_back();
    }
  }
}

PlanarDiagram PlanarDiagram::identity(int n) {
  std::vector<int> p(size_t(2 * n));
  for (int s = 1; s <= n; ++s) {
    p[size_t(s - 1)] = 2 * n - s;
    p[size_t(2 * n - s)] = s - 1;
  }
  return PlanarDiagram(n, std::move(p));
}

PlanarDiagram PlanarDiagram::e(int n, int j) {
  if (j < 1 || j >= n) throw std::invalid_argument("PlanarDiagram::e index");
  PlanarDiagram d = identity(n);
  auto& p = d.partner_;
  int b1 = d.bottom_index(j), b2 = d.bottom_index(j + 1);
  int t1 = d.top_index(j), t2 = d.top_index(j + 1);
  p[size_t(b1)] = b2;
  p[size_t(b2)] = b1;
  p[size_t(t1)] = t2;
  p[size_t(t2)] = t1;
  return d;
}

bool PlanarDiagram::operator<(const PlanarDiagram& o) const {
  if (n_ != o.n_) return n_ < o.n_;
  return partner_ < o.partner_;
}

std::string PlanarDiagram::str() const {
  // Pairs (i, j) with bottom strands printed as numbers, top as primed.
  auto name = [&](int idx) {
    if (idx < n_) return std::to_string(idx + 1);
    return std::to_string(2 * n_ - idx) + "'";
  };
  std::ostringstream os;
  os << "[";
  bool first = true;
  for (int i = 0; i < 2 * n_; ++i) {
    if (partner_[size_t(i)] > i) {
      if (!first) os << ",";
      os << "(" << name(i) << "," << name(partner_[size_t(i)]) << ")";
      first = false;
    }
  }
  os << "]";
  return os.str();
}

std::pair<PlanarDiagram, int> PlanarDiagram::stack(const PlanarDiagram& o) const {
  if (n_ != o.n_) throw std::invalid_argument("PlanarDiagram::stack strand mismatch");
  const int n = n_;
  // Node ids: 0..2n-1 our points, 2n..4n-1 o's points.  Our top strand s is
  // glued to o's bottom strand s.  Externals: our bottom, o's top.
  auto diag_next = [&](int u) {
    return u < 2 * n ? partner_[size_t(u)] : 2 * n + o.partner_[size_t(u - 2 * n)];
  };
  auto glue_next = [&](int u) -> int {
    if (u >= n && u < 2 * n) return 4 * n - u - 1;  // our top strand s -> o's bottom strand s
    if (u >= 2 * n && u < 3 * n) return 4 * n - u - 1;  // and back
    return -1;
  };
  auto is_external = [&](int u) { return u < n || u >= 3 * n; };

  std::vector<char> visited(size_t(4 * n), 0);
  std::vector<int> result(size_t(2 * n), -1);
  auto result_index = [&](int u) { return u < n ? u : u - 2 * n; };

  for (int start = 0; start < 4 * n; ++start) {
    if (!is_external(start) || visited[size_t(start)]) continue;
    int u = start;
    visited[size_t(u)] = 1;
    while (true) {
      int v = diag_next(u);
      visited[size_t(v)] = 1;
      if (is_external(v)) {
        int a = result_index(start), b = result_index(v);
        result[size_t(a)] = b;
        result[size_t(b)] = a;
        break;
      }
      u = glue_next(v);
      visited[size_t(u)] = 1;
    }
  }
  int loops = 0;
  for (int start = 0; start < 4 * n; ++start) {
    if (visited[size_t(start)]) continue;
    ++loops;
    int u = start;
    while (!visited[size_t(u)]) {
      visited[size_t(u)] = 1;
      int v = diag_next(u);
      visited[size_t(v)] = 1;
      u = glue_next(v);
    }
  }
  return {PlanarDiagram(n, std::move(result)), loops};
}

PlanarDiagram PlanarDiagram::tensor(const PlanarDiagram& o) const {
  int n = n_, m = o.n_, nm = n + m;
  std::vector<int> p(size_t(2 * nm), -1);
  auto map_self = [&](int idx) { return idx < n ? idx : idx + 2 * m; };
  auto map_other = [&](int idx) { return idx < m ? idx + n : idx + n; };
  for (int i = 0; i < 2 * n; ++i) p[size_t(map_self(i))] = map_self(partner_[size_t(i)]);
  for (int i = 0; i < 2 * m; ++i) p[size_t(map_other(i))] = map_other(o.partner_[size_t(i)]);
  return PlanarDiagram(nm, std::move(p));
}

TLElement TLElement::identity(int n) { return single(PlanarDiagram::identity(n)); }
TLElement TLElement::generator(int n, int j) { return single(PlanarDiagram::e(n, j)); }

TLElement TLElement::single(const PlanarDiagram& d, const Scalar& c) {
  TLElement el(d.strands());
  el.add_term(d, c);
  return el;
}

Scalar TLElement::coeff(const PlanarDiagram& d) const {
  auto it = coeffs_.find(d);
  return it == coeffs_.end() ? Scalar(0) : it->second;
}

void TLElement::add_term(const PlanarDiagram& d, const Scalar& c) {
  if (n_ == 0) n_ = d.strands();
  auto it = coeffs_.find(d);
  if (it == coeffs_.end()) {
    if (!c.is_zero()) coeffs_.emplace(d, c);
  } else {
    it->second += c;
    if (it->second.is_zero()) coeffs_.erase(it);
  }
}

TLElement TLElement::operator+(const TLElement& o) const {
  TLElement r = *this;
  if (r.n_ == 0) r.n_ = o.n_;
  for (const auto& [d, c] : o.coeffs_) r.add_term(d, c);
  return r;
}

TLElement TLElement::operator-(const TLElement& o) const {
  TLElement r = *this;
  if (r.n_ == 0) r.n_ = o.n_;
  for (const auto& [d, c] : o.coeffs_) r.add_term(d, -c);
  return r;
}

TLElement TLElement::scale(const Scalar& c) const {
  TLElement r(n_);
  if (c.is_zero()) return r;
  for (const auto& [d, coef] : coeffs_) r.coeffs_.emplace(d, coef * c);
  return r;
}

bool TLElement::operator==(const TLElement& o) const {
  if (coeffs_.size() != o.coeffs_.size()) return false;
  for (const auto& [d, c] : coeffs_) {
    if (o.coeff(d) != c) return false;
  }
  return true;
}

TLElement TLElement::compose(const TLElement& o) const {
  if (!coeffs_.empty() && !o.coeffs_.empty() && n_ != o.n_) {
    throw std::invalid_argument("TLElement::compose strand mismatch");
  }
  TLElement r(n_);
  Scalar beta = beta_scalar();
  for (const auto& [d1, c1] : coeffs_) {
    for (const auto& [d2, c2] : o.coeffs_) {
      auto [d, loops] = d1.stack(d2);
      r.add_term(d, c1 * c2 * beta.pow(loops));
    }
  }
  return r;
}

TLElement TLElement::tensor(const TLElement& o) const {
  TLElement r(n_ + o.n_);
  for (const auto& [d1, c1] : coeffs_) {
    for (const auto& [d2, c2] : o.coeffs_) {
      r.add_term(d1.tensor(d2), c1 * c2);
    }
  }
  return r;
}

std::string TLElement::str() const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [d, c] : coeffs_) {
    if (!first) os << " + ";
    os << "(" << c.str() << ")*" << d.str();
    first = false;
  }
  return os.str();
}

namespace {

void enumerate_matchings(int lo, int hi, std::vector<int>& partner,
                         std::vector<std::vector<int>>& out) {
  if (lo > hi) {
    out.push_back(partner);
    return;
  }
  for (int j = lo + 1; j <= hi; j += 2) {
    partner[size_t(lo)] = j;
    partner[size_t(j)] = lo;
    // Left block [lo+1, j-1], right block [j+1, hi]; recurse on left first.
    std::vector<int> saved = partner;
    std::vector<std::vector<int>> lefts;
    enumerate_matchings(lo + 1, j - 1, partner, lefts);
    for (auto& lp : lefts) {
      partner = lp;
      enumerate_matchings(j + 1, hi, partner, out);
    }
    partner = saved;
  }
}

}  // namespace

std::vector<PlanarDiagram> tl_basis(int n) {
  std::vector<int> partner(size_t(2 * n), -1);
  std::vector<std::vector<int>> raw;
  enumerate_matchings(0, 2 * n - 1, partner, raw);
  std::vector<PlanarDiagram> out;
  out.reserve(raw.size());
  for (auto& p : raw) out.emplace_back(n, std::move(p));
  std::sort(out.begin(), out.end());
  return out;
}

TLElement jones_wenzl_rec1(int n) {
  if (n == 1) return TLElement::identity(1);
  TLElement left = TLElement::identity(1).tensor(jones_wenzl_rec1(n - 1));
  TLElement bracket = TLElement::identity(n);
  Scalar qn = quantum_integer(n);
  for (int j = 1; j <= n - 1; ++j) {
    TLElement word = TLElement::generator(n, 1);
    for (int i = 2; i <= j; ++i) word = word.compose(TLElement::generator(n, i));
    bracket = bracket + word.scale(quantum_integer(n - j) / qn);
  }
  return left.compose(bracket);
}

TLElement jones_wenzl_rec2(int n) {
  if (n == 1) return TLElement::identity(1);
  TLElement left = jones_wenzl_rec2(n - 1).tensor(TLElement::identity(1));
  TLElement bracket = TLElement::identity(n);
  Scalar qn = quantum_integer(n);
  for (int j = 1; j <= n - 1; ++j) {
    TLElement word = TLElement::generator(n, n - 1);
    for (int i = n - 2; i >= j; --i) word = word.compose(TLElement::generator(n, i));
    bracket = bracket + word.scale(quantum_integer(j) / qn);
  }
  return left.compose(bracket);
}

const TLElement& jones_wenzl(int n) {
  static std::map<int, TLElement> cache;
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  TLElement result;
  if (n == 1) {
    result = TLElement::identity(1);
  } else if (n <= 7) {
    TLElement prev = jones_wenzl(n - 1).tensor(TLElement::identity(1));
    TLElement en = TLElement::generator(n, n - 1);
    Scalar c = quantum_integer(n - 1) / quantum_integer(n);
    result = prev + prev.compose(en).compose(prev).scale(c);
  } else {
    // The quadratic recursion is impractical here; the factorized recursion
    // gives the same projector.
    TLElement left = jones_wenzl(n - 1).tensor(TLElement::identity(1));
    TLElement bracket = TLElement::identity(n);
    Scalar qn = quantum_integer(n);
    for (int j = 1; j <= n - 1; ++j) {
      TLElement word = TLElement::generator(n, n - 1);
      for (int i = n - 2; i >= j; --i) word = word.compose(TLElement::generator(n, i));
      bracket = bracket + word.scale(quantum_integer(j) / qn);
    }
    result = left.compose(bracket);
  }
  return cache.emplace(n, std::move(result)).first->second;
}

}  // namespace eptl
