#include "eptl/modules.hpp"

#include <sstream>
#include <stdexcept>

namespace eptl {

std::string ModuleTag::str() const {
  std::ostringstream os;
  auto half = [](int t) {
    if (t % 2 == 0) return std::to_string(t / 2);
    return std::to_string(t) + "/2";
  };
  switch (kind) {
    case ModuleKind::V: os << "V(" << N << ")"; break;
    case ModuleKind::W: os << "W_{" << half(k2) << "}(" << N << ")"; break;
    case ModuleKind::X: os << "X_{" << half(k2) << "," << half(l2) << "}(" << N << ")"; break;
  }
  return os.str();
}

namespace {

std::vector<int> x_key(const XState& s) {
  std::vector<int> key(s.pattern.partner.begin(), s.pattern.partner.end());
  key.push_back(s.pattern.face);
  key.push_back(s.offset);
  return key;
}

std::vector<int> w_key(const WPattern& w) {
  std::vector<int> key(w.partner.begin(), w.partner.end());
  key.push_back(w.face);
  key.push_back(0);
  return key;
}

}  // namespace

Module::Module(ModuleTag tag) : tag_(tag) {
  switch (tag_.kind) {
    case ModuleKind::X:
      x_states_ = enumerate_x_basis(tag_.N, tag_.k2, tag_.l2);
      for (size_t i = 0; i < x_states_.size(); ++i) index_[x_key(x_states_[i])] = int(i);
      break;
    case ModuleKind::W:
      w_states_ = enumerate_w_basis(tag_.N, tag_.k2);
      for (size_t i = 0; i < w_states_.size(); ++i) index_[w_key(w_states_[i])] = int(i);
      break;
    case ModuleKind::V:
      w_states_ = enumerate_vacuum(tag_.N);
      for (size_t i = 0; i < w_states_.size(); ++i) index_[w_key(w_states_[i])] = int(i);
      break;
  }
}

int Module::index_of(const XState& s) const {
  auto it = index_.find(x_key(s));
  if (it == index_.end()) throw std::out_of_range("Module::index_of: unknown state");
  return it->second;
}

int Module::index_of_w(const WPattern& w) const {
  auto it = index_.find(w_key(w));
  if (it == index_.end()) throw std::out_of_range("Module::index_of_w: unknown state");
  return it->second;
}

std::string Module::state_str(int i) const {
  if (tag_.kind == ModuleKind::X) return x_states_[size_t(i)].str();
  return w_states_[size_t(i)].str();
}

int Module::depth_of(int i) const {
  if (tag_.kind == ModuleKind::X) return x_states_[size_t(i)].depth();
  return 0;
}

int Module::spokes_of(int i) const {
  if (tag_.kind == ModuleKind::X) return x_states_[size_t(i)].spoke_count();
  return w_states_[size_t(i)].defect_count();
}

Config Module::config_of(int i) const {
  switch (tag_.kind) {
    case ModuleKind::X: return config_from_x(x_states_[size_t(i)]);
    case ModuleKind::W: return config_from_w(w_states_[size_t(i)]);
    case ModuleKind::V: return config_from_v(w_states_[size_t(i)]);
  }
  throw std::logic_error("unreachable");
}

Module::Term Module::finish(Config cfg, DiagWeight w) const {
  ReducedCurves rc = reduce_config(cfg, w);
  Term t;
  if (w.zero) {
    t.w.zero = true;
    return t;
  }
  switch (tag_.kind) {
    case ModuleKind::X: {
      XState s = identify_x(rc, tag_.N, tag_.k2, tag_.l2, cfg.slit_order, w);
      t.index = index_of(s);
      break;
    }
    case ModuleKind::W: {
      WPattern p = identify_w(rc, tag_.N, w);
      t.index = index_of_w(p);
      break;
    }
    case ModuleKind::V: {
      WPattern p = identify_v(rc, tag_.N);
      t.index = index_of_w(p);
      break;
    }
  }
  t.w = w;
  return t;
}

Module::Term Module::act_row(const RowGluing& row, int i) const {
  Config cfg = config_of(i);
  DiagWeight w;
  apply_row(cfg, row, w);
  return finish(std::move(cfg), w);
}

Module::Term Module::act_rows(const std::vector<RowGluing>& rows, int i) const {
  Config cfg = config_of(i);
  DiagWeight w;
  for (const auto& row : rows) apply_row(cfg, row, w);
  return finish(std::move(cfg), w);
}

RowGluing Module::row_of(int sym) const {
  if (sym == kOmega) return row_omega(tag_.N, +1);
  if (sym == kOmegaInv) return row_omega(tag_.N, -1);
  if (sym >= 1 && sym <= tag_.N) return row_e(tag_.N, sym);
  throw std::invalid_argument("Module::row_of: bad symbol");
}

ExactWeights ExactWeights::for_module(const ModuleTag& tag) {
  ExactWeights w;
  switch (tag.kind) {
    case ModuleKind::V:
      w.alpha_a = w.alpha_b = w.alpha_ab = Scalar(0);  // must not occur
      break;
    case ModuleKind::W:
      w.alpha_a = fugacity(VAR_Z);
      w.alpha_b = w.alpha_ab = Scalar(0);
      break;
    case ModuleKind::X:
      w.alpha_a = fugacity(VAR_X);
      w.alpha_b = fugacity(VAR_Y);
      w.alpha_ab = fugacity(VAR_Z);
      break;
  }
  return w;
}

Scalar ExactWeights::eval(const DiagWeight& w) const {
  if (w.zero) return Scalar(0);
  Scalar r(1);
  if (w.pow_s) r = r * Scalar::s_pow(w.pow_s);
  if (w.pow_x) r = r * Scalar::variable(VAR_X, 1).pow(w.pow_x);
  if (w.pow_y) r = r * Scalar::variable(VAR_Y, 1).pow(w.pow_y);
  if (w.pow_z) r = r * Scalar::variable(VAR_Z, 1).pow(w.pow_z);
  for (int i = 0; i < w.n_beta; ++i) r = r * beta;
  for (int i = 0; i < w.n_alpha_a; ++i) r = r * alpha_a;
  for (int i = 0; i < w.n_alpha_b; ++i) r = r * alpha_b;
  for (int i = 0; i < w.n_alpha_ab; ++i) r = r * alpha_ab;
  return r;
}

NumericWeights NumericWeights::at(const ModuleTag& tag, const Specialization& sp) {
  NumericWeights w;
  w.s = sp.cx(VAR_S);
  w.x = sp.cx(VAR_X);
  w.y = sp.cx(VAR_Y);
  w.z = sp.cx(VAR_Z);
  auto q = w.s * w.s;
  w.beta = -q - 1.0 / q;
  switch (tag.kind) {
    case ModuleKind::V:
      w.alpha_a = w.alpha_b = w.alpha_ab = 0.0;
      break;
    case ModuleKind::W:
      w.alpha_a = w.z + 1.0 / w.z;
      w.alpha_b = w.alpha_ab = 0.0;
      break;
    case ModuleKind::X:
      w.alpha_a = w.x + 1.0 / w.x;
      w.alpha_b = w.y + 1.0 / w.y;
      w.alpha_ab = w.z + 1.0 / w.z;
      break;
  }
  return w;
}

std::complex<double> NumericWeights::eval(const DiagWeight& w) const {
  if (w.zero) return 0.0;
  std::complex<double> r = 1.0;
  auto ipow = [](std::complex<double> b, int e) {
    std::complex<double> acc = 1.0;
    bool inv = e < 0;
    for (int i = 0; i < std::abs(e); ++i) acc *= b;
    return inv ? 1.0 / acc : acc;
  };
  r *= ipow(s, w.pow_s);
  r *= ipow(x, w.pow_x);
  r *= ipow(y, w.pow_y);
  r *= ipow(z, w.pow_z);
  r *= ipow(beta, w.n_beta);
  r *= ipow(alpha_a, w.n_alpha_a);
  r *= ipow(alpha_b, w.n_alpha_b);
  r *= ipow(alpha_ab, w.n_alpha_ab);
  return r;
}

namespace {

template <typename Vec, typename Wt>
Vec act_word_impl(const Module& m, const Wt& wt, const GenWord& word, const Vec& v) {
  Vec cur = v;
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    RowGluing row = m.row_of(*it);
    Vec next;
    for (const auto& [idx, coef] : cur) {
      auto term = m.act_row(row, idx);
      if (term.w.zero) continue;
      auto c = coef * wt.eval(term.w);
      auto [slot, inserted] = next.emplace(term.index, c);
      if (!inserted) slot->second += c;
      if (slot->second == typename Vec::mapped_type(0)) next.erase(slot);
    }
    cur = std::move(next);
  }
  return cur;
}

}  // namespace

MVec act_word(const Module& m, const ExactWeights& wt, const GenWord& word, const MVec& v) {
  return act_word_impl(m, wt, word, v);
}

CVec act_word(const Module& m, const NumericWeights& wt, const GenWord& word, const CVec& v) {
  return act_word_impl(m, wt, word, v);
}

MVec act_tl(const Module& m, const ExactWeights& wt, const TLElement& el, const MVec& v) {
  MVec out;
  for (const auto& [diag, coef] : el.support()) {
    RowGluing row = row_tl(diag);
    for (const auto& [idx, c] : v) {
      auto term = m.act_row(row, idx);
      if (term.w.zero) continue;
      Scalar val = coef * c * wt.eval(term.w);
      auto [slot, inserted] = out.emplace(term.index, val);
      if (!inserted) slot->second += val;
      if (slot->second.is_zero()) out.erase(slot);
    }
  }
  return out;
}

std::vector<MVec> matrix_of_word(const Module& m, const ExactWeights& wt, const GenWord& word) {
  std::vector<MVec> cols(size_t(m.dim()));
  for (int j = 0; j < m.dim(); ++j) {
    cols[size_t(j)] = act_word(m, wt, word, MVec{{j, Scalar(1)}});
  }
  return cols;
}

std::string mvec_str(const Module& m, const MVec& v) {
  if (v.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [i, c] : v) {
    if (!first) os << " + ";
    os << "(" << c.str() << ")*" << m.state_str(i);
    first = false;
  }
  return os.str();
}

}  // namespace eptl
