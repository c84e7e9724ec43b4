#pragma once

// Classical crystals of the vector representation (types A_{n-1}, C_n and
// the relabeled D_n), single-row crystals B_s as decreasing words, tensor
// products B_mu, highest weight vertices and the A_{n-1}-isomorphism theta.

#include <compare>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "onedim/weights.hpp"

namespace onedim {

/// +i is the letter i, -i is i-bar.
using Letter = int;
/// A weakly decreasing word x_1 >= ... >= x_s.
using Row = std::vector<Letter>;

struct TensorVertex {
  std::vector<Row> factors;

  std::vector<int> shape() const;
  int size() const;  // total number of letters
  auto operator<=>(const TensorVertex&) const = default;
};

enum class CrystalKind { A, C, DDagger };

std::string kind_name(CrystalKind k);

/// Position of a letter in the reachability order; 1 and 1-bar share a
/// position in type D, where they are incomparable.
int letter_rank(CrystalKind k, int n, Letter x);

struct Raised {
  TensorVertex hw;
  std::vector<int> path;  // colors in the order the e-operators were applied
};

class Crystal {
 public:
  /// Type A_{n-1}, C_n, or D_n with colors relabeled i -> n - i and letters
  /// j -> bar(n+1-j), bar(j) -> n+1-j.  Throws on n out of range.
  Crystal(CrystalKind kind, int n);

  CrystalKind kind() const { return kind_; }
  int n() const { return n_; }

  /// Classical colors: 1..n-1 (A), 1..n (C), 0..n-1 (D).
  const std::vector<int>& colors() const { return colors_; }
  /// The A_{n-1} colors 1..n-1.
  const std::vector<int>& a_colors() const { return a_colors_; }
  /// All letters, in increasing order (1 before 1-bar for D, where they
  /// are incomparable).
  const std::vector<Letter>& letters() const { return letters_; }
  /// 1 for A and C, n-bar for D.
  Letter top_letter() const;

  std::optional<Letter> f(int color, Letter x) const;
  std::optional<Letter> e(int color, Letter x) const;

  /// x >= y in the reachability order on letters.
  bool geq(Letter x, Letter y) const;
  bool is_row(const Row& r) const;

  Weight simple_root(int color) const;
  Weight weight(Letter x) const;
  Weight weight(const TensorVertex& b) const;

  std::optional<TensorVertex> f(const TensorVertex& b, int color) const;
  std::optional<TensorVertex> e(const TensorVertex& b, int color) const;
  int epsilon(const TensorVertex& b, int color) const;
  int phi(const TensorVertex& b, int color) const;

  bool is_highest_weight(const TensorVertex& b, std::span<const int> colors) const;
  bool is_highest_weight(const TensorVertex& b) const { return is_highest_weight(b, colors_); }

  /// Raises to the highest weight vertex, smallest applicable color first.
  Raised raise(const TensorVertex& b, std::span<const int> colors) const;
  Raised raise(const TensorVertex& b) const { return raise(b, colors_); }
  /// Inverse of raise: applies f along the reversed path.
  TensorVertex lower(TensorVertex hw, std::span<const int> path) const;

  /// All decreasing words of length s over `alphabet` (all letters if empty).
  std::vector<Row> rows(int s, std::span<const Letter> alphabet = {}) const;

  /// Component of b under `colors` (all classical colors if empty).
  std::vector<TensorVertex> component(const TensorVertex& b,
                                      std::span<const int> colors = {}) const;

 private:
  int index(Letter x) const { return x > 0 ? x - 1 : n_ - x - 1; }
  int color_slot(int color) const;
  int rank(Letter x) const { return letter_rank(kind_, n_, x); }
  // Reduced signature after cancelling "+ -" pairs: unmatched minus and
  // plus positions in the flattened word.
  void signature(const TensorVertex& b, int color, std::vector<int>& minus,
                 std::vector<int>& plus) const;

  CrystalKind kind_;
  int n_;
  std::vector<int> colors_;
  std::vector<int> a_colors_;
  std::vector<Letter> letters_;
  std::vector<std::vector<int>> f_;  // [color slot][letter index] -> index or -1
  std::vector<std::vector<int>> e_;
};

std::string format_letter(Letter x);
Letter parse_letter(std::string_view text);
/// "1 1 2|3~ 1": factors separated by '|', letters by spaces.
std::string format_vertex(const TensorVertex& b);
TensorVertex parse_vertex(std::string_view text);

/// Every vertex of B_shape (letters restricted to `alphabet` if nonempty).
std::vector<TensorVertex> all_vertices(const Crystal& cr, std::span<const int> shape,
                                       std::span<const Letter> alphabet = {});

struct HwQuery {
  std::vector<int> colors;          // empty: all classical colors
  std::vector<Letter> alphabet;     // empty: all letters
  std::optional<Weight> weight;     // filter on the weight (length n)
};

/// Highest weight vertices of B_shape, built factor by factor: b (x) r is
/// highest weight iff b is and phi_i(b) >= eps_i(r) for every color.
std::vector<TensorVertex> highest_weight_vertices(const Crystal& cr,
                                                  std::span<const int> shape,
                                                  const HwQuery& query = {});

/// Letters 1..m and bar(m-1)..bar(1): enough for every highest weight
/// vertex of a C_n tensor product with m factors.
std::vector<Letter> type_c_hw_alphabet(int m, int n);

/// F_{lambda,mu}: highest weight vertices of weight lambda.  Type C uses the
/// restricted alphabet above.
std::vector<TensorVertex> f_set(const Crystal& cr, const Partition& lambda,
                                const Partition& mu);

struct ESet {
  /// E_{lambda,mu,b} for every all-unbarred A-highest weight vertex b in B_mu.
  std::map<TensorVertex, std::vector<TensorVertex>> by_source;
  std::vector<TensorVertex> all;  // the union, sorted
};

/// A_{n-1}-highest weight vertices of weight lambda in B_mu^{D_n} whose
/// D_n-component contains an all-unbarred A_{n-1}-highest weight vertex.
/// Requires length(mu) < n.
ESet e_set(const Partition& mu, const Partition& lambda, int n);

/// theta on one factor: the A_{n-1}-isomorphism sending n-bar^a 1^b (type C)
/// to 1^b n-bar^a (type D).  Throws std::invalid_argument if the row has
/// both n and n-bar.
Row theta_row(const Row& r, int n);
TensorVertex theta(const TensorVertex& b, int n);

/// DOT graph of the given vertices with arrows of the given colors between them.
std::string to_dot(const Crystal& cr, std::span<const TensorVertex> vertices,
                   std::span<const int> colors);

}  // namespace onedim
