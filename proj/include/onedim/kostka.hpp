#pragma once

// Kostka-Foulkes polynomials by three independent routes, their cocharge
// form, Littlewood-Richardson coefficients and the K-polynomials of the
// four stable kinds.

#include <vector>

#include "onedim/algebra.hpp"
#include "onedim/lusztig.hpp"
#include "onedim/report.hpp"
#include "onedim/weights.hpp"

namespace onedim {

enum class KostkaRoute {
  Lusztig,  // stable q-analogue of weight multiplicity in type A
  Charge,   // Lascoux-Schutzenberger charge on tableau reading words
  OneDim,   // bar-and-shift of the type A one-dimensional sum
};

using Tableau = std::vector<std::vector<int>>;

/// Semistandard tableaux of the given shape and content.
std::vector<Tableau> semistandard_tableaux(const Partition& shape,
                                           const std::vector<int>& content);

/// Rows from bottom to top, each left to right.
std::vector<int> reading_word(const Tableau& t);

/// Charge of a word whose content is a partition.  Standard subwords are
/// extracted by scanning right to left cyclically for 1, 2, ...; the index
/// of r+1 exceeds that of r exactly when the scan wraps around.
int charge(const std::vector<int>& word);

/// K_{lambda,mu}(q); zero unless |lambda| = |mu| and lambda >= mu.
QPoly kostka_foulkes(const Partition& lambda, const Partition& mu,
                     KostkaRoute route = KostkaRoute::Lusztig);

/// q^{||mu||} K_{lambda,mu}(q^{-1}).
QPoly cocharge_kf(const Partition& lambda, const Partition& mu,
                  KostkaRoute route = KostkaRoute::Charge);

/// c^nu_{lambda,gamma}, from the product of two Schur polynomials.
/// Thread-safe; results are cached.
long lr_coefficient(const Partition& lambda, const Partition& gamma,
                    const Partition& nu);

/// q^{(|mu|-|lambda|)/2} sum_nu Kbar_{nu,mu}(q) sum_gamma c^nu_{lambda,gamma}
/// over nu >= mu with |nu| = |mu| and gamma tiled by the diamond.
QPoly k_polynomial(const Partition& lambda, const Partition& mu, Diamond d);

/// sum over gamma with even columns of c^nu_{lambda,gamma}: the multiplicity
/// of V^{A_{n-1}}(lambda) in V^{D_n}(nu) for n >= length(nu).
long branching_check(const Partition& nu, const Partition& lambda, int n);

/// Three routes agree on (lambda, mu).
Cell verify_kostka_routes(const Partition& lambda, const Partition& mu);

/// K_{lambda,mu} = K_{lambda-hat,mu-hat} at n = m.
Cell verify_duality(const Partition& lambda, const Partition& mu);

/// Kbar^diamond_{lambda,mu}(q) against
/// q^{||mu||+|mu|-|lambda|} stableKL_{lambda-hat,mu-hat}(q^{-1}) in the family
/// of the diamond at rank n, with the twist M and with M+1.
Cell verify_theorem6(const Partition& lambda, const Partition& mu, Diamond d,
                     int n, const LFunction& L);

/// stableKL_{lambda-hat,mu-hat} = stableKL_{lambda*,mu*}
///   = q^{(|mu|-|lambda|)/2} sum_nu stableKL^A_{nu,mu} sum_gamma c^nu_{lambda,gamma}.
Cell verify_kl_expansion(const Partition& lambda, const Partition& mu, Diamond d,
                         int n, const LFunction& L);

/// stableKL^A_{lambda*,mu*} = stableKL^A_{lambda,mu} for weakly decreasing
/// integer vectors.
Cell verify_star_duality(const Weight& lambda, const Weight& mu);

}  // namespace onedim
