#pragma once

// Combinatorial R-matrices, local coenergy and coenergy on tensor products
// of single-row crystals, computed through the highest weight vertices of
// B_l (x) B_k, which is multiplicity-free.

#include <map>

#include "onedim/crystal.hpp"

namespace onedim {

/// Labels the highest weight vertex of B_l (x) B_k:
///   A: 1^l (x) 2^b 1^{k-b}
///   C: 1^l (x) 1~^a 2^b 1^{k-a-b}
///   D: n~^l (x) n^a (n-1)~^b n~^{k-a-b}
/// with a = 0 for type A.
struct HwClass {
  int l = 0, k = 0, a = 0, b = 0;
  friend bool operator==(const HwClass&, const HwClass&) = default;
};

/// The highest weight vertex with the given label.
TensorVertex hw_vertex(CrystalKind kind, int n, const HwClass& c);

/// H-bar on single letters, type A or C, from the letter order.
int h_bar_letters(CrystalKind kind, int n, Letter x, Letter y);
/// H-tilde on single letters of type D: 0 if x >= y, 2 on (n~, n), else 1.
int h_tilde(Letter x, Letter y, int n);

enum class SplitOrder {
  Chop,    // split a leading factor into all of its letters at once
  Single,  // split off one letter at a time
};

/// R-matrices, coenergy and splitting for one crystal.  Keeps memo tables,
/// so an instance must not be shared between threads.
class Energy {
 public:
  explicit Energy(Crystal crystal);

  const Crystal& crystal() const { return cr_; }

  /// Classifies a highest weight vertex of a two-factor tensor product.
  /// Throws std::logic_error if it matches no label.
  HwClass classify(const TensorVertex& hw) const;

  /// B_l (x) B_k -> B_k (x) B_l.
  TensorVertex rmatrix(const TensorVertex& b) const;

  /// Local coenergy on B_l (x) B_k: 2a + b (C), b (A).  Not defined for D.
  int local_coenergy(const TensorVertex& b) const;

  /// D-bar: sum over i < j of H-bar(b_i (x) b_j^{(i+1)}) where b_j^{(i+1)} is
  /// b_j carried to position i+1 by R-matrices.  Types A and C.
  int coenergy(const TensorVertex& b) const;

  /// S_delta: B_delta -> B_{1^|delta|}.
  TensorVertex split(const TensorVertex& b, SplitOrder order = SplitOrder::Chop) const;

  /// D-tilde: sum (N - i) H-tilde(x_i (x) x_{i+1}) over the split word.  Type D.
  int coenergy_tilde(const TensorVertex& b) const;

 private:
  Crystal cr_;
  mutable std::map<TensorVertex, TensorVertex> r_memo_;
  mutable std::map<TensorVertex, HwClass> class_memo_;  // keyed by the highest weight vertex
};

}  // namespace onedim
