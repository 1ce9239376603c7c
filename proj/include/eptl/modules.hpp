#pragma once

#include <complex>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "eptl/engine.hpp"
#include "eptl/scalar.hpp"

namespace eptl {

enum class ModuleKind { V, W, X };

struct ModuleTag {
  ModuleKind kind = ModuleKind::V;
  int N = 0;
  int k2 = 0;  // 2k
  int l2 = 0;  // 2l (X only)

  static ModuleTag vacuum(int N) { return {ModuleKind::V, N, 0, 0}; }
  static ModuleTag standard(int N, int k2) { return {ModuleKind::W, N, k2, 0}; }
  static ModuleTag fusion(int N, int k2, int l2) { return {ModuleKind::X, N, k2, l2}; }
  std::string str() const;
};

// Generator words in the enlarged periodic algebra: j in 1..N is e_j,
// kOmega / kOmegaInv are the rotations.
constexpr int kOmega = -1;
constexpr int kOmegaInv = -2;
using GenWord = std::vector<int>;

// A basis-indexed module with the diagrammatic action.
class Module {
 public:
  explicit Module(ModuleTag tag);

  const ModuleTag& tag() const { return tag_; }
  int dim() const { return int(x_states_.size() + w_states_.size()); }

  const std::vector<XState>& x_basis() const { return x_states_; }
  const std::vector<WPattern>& w_basis() const { return w_states_; }

  int index_of(const XState& s) const;
  int index_of_w(const WPattern& w) const;
  std::string state_str(int i) const;

  // Depth (X) of a basis state; 0 for V/W.  Used by filtration masking.
  int depth_of(int i) const;
  // Defect count (spokes) of a basis state.
  int spokes_of(int i) const;

  struct Term {
    int index = -1;
    DiagWeight w;
  };
  // Apply one annulus row to basis state i.
  Term act_row(const RowGluing& row, int i) const;
  // Apply a chain of rows (innermost applied first).
  Term act_rows(const std::vector<RowGluing>& rows, int i) const;

  // Build the row for one generator symbol.
  RowGluing row_of(int sym) const;

 private:
  ModuleTag tag_;
  std::vector<XState> x_states_;
  std::vector<WPattern> w_states_;
  std::map<std::vector<int>, int> index_;

  Config config_of(int i) const;
  Term finish(Config cfg, DiagWeight w) const;
};

// Scalar evaluation of diagrammatic weights.
struct ExactWeights {
  Scalar beta = beta_scalar();
  Scalar alpha_a, alpha_b, alpha_ab;
  // Defaults wired per module kind by `for_module`.
  static ExactWeights for_module(const ModuleTag& tag);
  Scalar eval(const DiagWeight& w) const;
};

struct NumericWeights {
  std::complex<double> s, x, y, z;
  std::complex<double> beta, alpha_a, alpha_b, alpha_ab;
  static NumericWeights at(const ModuleTag& tag, const Specialization& sp);
  std::complex<double> eval(const DiagWeight& w) const;
};

// Sparse vectors / dense-by-column matrices over exact scalars.
using MVec = std::map<int, Scalar>;
using CVec = std::map<int, std::complex<double>>;

MVec act_word(const Module& m, const ExactWeights& wt, const GenWord& word, const MVec& v);
CVec act_word(const Module& m, const NumericWeights& wt, const GenWord& word, const CVec& v);

// Apply a TL element (e.g. a Jones-Wenzl projector) diagram-by-diagram.
MVec act_tl(const Module& m, const ExactWeights& wt, const TLElement& el, const MVec& v);

// Full matrix of a word: column j = word applied to basis state j.
std::vector<MVec> matrix_of_word(const Module& m, const ExactWeights& wt, const GenWord& word);

std::string mvec_str(const Module& m, const MVec& v);

}  // namespace eptl
