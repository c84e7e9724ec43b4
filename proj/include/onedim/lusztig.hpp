#pragma once

// L-weighted q-Kostant partition function, Lusztig q-analogues of weight
// multiplicity, their stable S_n-truncation, and the generating-function
// identities behind K = KL.

#include <map>
#include <span>
#include <vector>

#include "onedim/algebra.hpp"
#include "onedim/report.hpp"
#include "onedim/weights.hpp"

namespace onedim {

/// P_q^L(beta) = sum over multisets of positive roots summing to beta of
/// q^{sum L}.  Memoized; one instance per worker (not thread-safe).
class PartitionFunction {
 public:
  PartitionFunction(ClassicalType t, LFunction L);

  ClassicalType type() const { return type_; }
  const LFunction& weights() const { return L_; }

  QPoly operator()(std::span<const int> beta);

 private:
  const QPoly& count(std::size_t root, const std::vector<int>& residual);

  ClassicalType type_;
  LFunction L_;
  std::vector<std::vector<int>> coords_;  // roots in simple-root coordinates
  std::vector<int> l_half_;
  std::vector<std::map<std::vector<int>, QPoly>> memo_;
};

/// sum_{w in W} sign(w) P(w(lambda+rho) - (mu+rho)).  Both weights must be
/// dominant for the type.
QPoly kl_poly(std::span<const int> lambda, std::span<const int> mu,
              PartitionFunction& pf);
/// The same sum over S_n only, for lambda, mu weakly decreasing.
QPoly stable_kl(std::span<const int> lambda, std::span<const int> mu,
                PartitionFunction& pf);

/// KL_{lambda+(k^n), mu+(k^n)} = stable KL for every k from
/// ceil((|lambda|-|mu|)/2) to kmax; smaller k are computed and recorded but
/// not required to agree.
Cell verify_prop5(const Partition& lambda, const Partition& mu,
                  ClassicalType t, const LFunction& L, int kmax);

/// Product over the roots of g_n outside A_{n-1} of 1/(1 - q^L e^alpha),
/// truncated at total x-degree `degree_cap`.
CharPoly littlewood_product(Diamond d, int n, int degree_cap);
/// sum over gamma in P_n^diamond, |gamma| <= degree_cap, of q^{|gamma|/2} s_gamma.
CharPoly littlewood_schur_sum(Diamond d, int n, int degree_cap);
/// Compares the two sides above.
Cell verify_littlewood(Diamond d, int n, int degree_cap);

/// E(e^mu prod 1/(1 - q^L e^alpha)) truncated at q-degree `q_cap` (integer
/// degree), as coefficients in the s_lambda basis.
std::map<Exponents, QPoly> genfun_coefficients(std::span<const int> mu,
                                               ClassicalType t,
                                               const LFunction& L, int q_cap,
                                               bool type_a_roots_only = false);

/// Generating-function checks at weight mu: the series form against
/// stable_kl on the window, the factorized series form, and the exact
/// convolution form with tensor product coefficients.  One cell per form.
Report genfun_check(std::span<const int> mu, ClassicalType t,
                    const LFunction& L, int q_cap, int window = 2);

}  // namespace onedim
