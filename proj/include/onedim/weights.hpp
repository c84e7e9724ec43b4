#pragma once

// Partitions, dominant weights, classical root systems with root-length
// weights L, and signed-permutation Weyl groups.

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace onedim {

using Weight = std::vector<int>;
/// Weakly decreasing nonnegative parts, no trailing zeros.
using Partition = std::vector<int>;

/// Validates and strips trailing zeros; throws std::invalid_argument.
Partition make_partition(std::vector<int> parts);
/// "3,1,1"; "" and "0" both give the empty partition.
Partition parse_partition(std::string_view text);
std::string format_partition(std::span<const int> parts);

/// All partitions of `size` with at most `max_parts` parts, in
/// reverse-lexicographic order.
std::vector<Partition> partitions_of(int size, int max_parts);
/// All partitions with at most `max_parts` parts and size <= max_size.
std::vector<Partition> partitions_up_to(int max_size, int max_parts);

/// `p` extended with zeros to length n (n must be >= p.size()).
Weight padded(std::span<const int> p, int n);

/// |mu| = sum of entries.
int weight_size(std::span<const int> mu);
/// ||mu|| = sum of (i-1) mu_i.
int weight_norm(std::span<const int> mu);

/// beta* = reversal and negation.
Weight star(std::span<const int> beta);

enum class Family { A, B, C, D };

struct ClassicalType {
  Family family;
  int n;  // rank parameter: A_{n-1}, B_n, C_n, D_n all act on Z^n

  std::string name() const;
  friend bool operator==(const ClassicalType&, const ClassicalType&) = default;
};

ClassicalType parse_type(std::string_view text);

/// lambda is dominant for t (A: weakly decreasing; B, C: also lambda_n >= 0;
/// D: also lambda_{n-1} >= |lambda_n|).
bool is_dominant(std::span<const int> lambda, ClassicalType t);

/// The four kinds of stable sums, labeled by the partitions of size <= 2.
enum class Diamond { Empty, One, Two, OneOne };

Diamond parse_diamond(std::string_view text);  // "empty" | "1" | "2" | "11"
std::string diamond_name(Diamond d);
/// A_{n-1}, B_n, C_n, D_n for empty, (1), (2), (1,1).
Family family_of(Diamond d);
/// gamma can be tiled by the diamond: empty -> only (), (1) -> all,
/// (2) -> even rows, (1,1) -> even columns.
bool tiles(Diamond d, std::span<const int> gamma);

/// rho in half-units (entry 2*rho_i).
Weight rho_half(ClassicalType t);

/// Coordinates of beta in the simple roots of t, or nullopt when beta is
/// not in the root lattice.
std::optional<std::vector<int>> simple_root_coordinates(std::span<const int> beta,
                                                        ClassicalType t);

/// lambda >= mu in the dominance order of t: lambda - mu in Q+.
bool dominance_geq(std::span<const int> lambda, std::span<const int> mu,
                   ClassicalType t);

struct HatPair {
  Weight lambda_hat;
  Weight mu_hat;
  int M;
};

/// The twist lambda -> (M - lambda_m, ..., M - lambda_1) with the smallest
/// admissible M (plus `extra`), returned at length n >= m as
/// lambda* + (M^n) with lambda padded to n parts.
HatPair hat_pair(const Partition& lambda, const Partition& mu, int m, int n,
                 int extra = 0);

struct WeylElement {
  std::vector<int> perm;   // (w.v)_i = signs[i] * v[perm[i]]
  std::vector<int> signs;  // +1 / -1
  int parity;              // (-1)^{length}

  Weight apply(std::span<const int> v) const;
};

/// All elements of W(t), each once.
std::vector<WeylElement> weyl_group(ClassicalType t);
/// The parabolic S_n inside W(t).
std::vector<WeylElement> symmetric_group(int n);

/// Root-length dependent L-values, in half-units.
struct LFunction {
  int long_half = 2;
  int short_half = 2;

  /// L = 1 on every root.
  static LFunction unit() { return {2, 2}; }
  /// L = 0: the plain Kostant count.
  static LFunction zero() { return {0, 0}; }
  /// L = 1 except L = 1/2 on the short roots of B_n.
  static LFunction for_family(Family f) {
    return f == Family::B ? LFunction{2, 1} : LFunction{2, 2};
  }
  friend bool operator==(const LFunction&, const LFunction&) = default;
};

struct Root {
  Weight vec;
  bool is_short;
  bool in_type_a;  // of the form e_i - e_j, i < j
};

struct RootSystem {
  ClassicalType type;
  std::vector<Root> positive;

  static RootSystem make(ClassicalType t);
  int l_half(const Root& r, const LFunction& L) const {
    return r.is_short ? L.short_half : L.long_half;
  }
};

}  // namespace onedim
