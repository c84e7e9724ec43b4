#pragma once

// One-dimensional sums of kinds empty and (1,1), and the verification
// pipeline relating them to the K-polynomials.

#include <vector>

#include "onedim/algebra.hpp"
#include "onedim/crystal.hpp"
#include "onedim/energy.hpp"
#include "onedim/report.hpp"
#include "onedim/weights.hpp"

namespace onedim {

struct OneDimSum {
  Partition lambda;
  Partition mu;
  Diamond kind = Diamond::Empty;
  int rank = 0;
  QPoly value;
  long vertices = 0;  // |F_{lambda,mu}|
};

/// Xbar_{lambda,mu}(q) = sum over F_{lambda,mu} of q^{Dbar}.  Kind empty uses
/// type A_{n-1}, kind (1,1) type C_n.  Throws std::invalid_argument for the
/// other kinds or when n is smaller than the partition lengths.
OneDimSum x_sum(const Partition& lambda, const Partition& mu, Diamond kind, int n);

/// n = m + 1 with m the longer of the two lengths (at least 1).
int default_rank(const Partition& lambda, const Partition& mu);

/// Crystal matching a kind.
Crystal crystal_for(Diamond kind, int n);

/// Xbar^empty_{lambda,mu} = q^{||mu||} K_{lambda,mu}(q^{-1}).
Cell verify_nakayashiki_yamada(const Partition& lambda, const Partition& mu, int n);

/// Kind (1,1) at rank n > m: theta is a bijection F -> E, the coenergy
/// conditions hold vertex by vertex, the grouped sum matches, and
/// Xbar^{(1,1)} = Kbar^{(1,1)}.
Cell verify_theorem4(const Partition& lambda, const Partition& mu, int n);

/// Xbar^diamond = q^{||mu||+|mu|-|lambda|} KL_{lambda-hat,mu-hat}(q^{-1}) in the
/// family of the diamond at rank n.
Cell verify_corollary7(const Partition& lambda, const Partition& mu, Diamond kind, int n);

/// Xbar is the same polynomial at every listed rank.
Cell verify_stability(const Partition& lambda, const Partition& mu, Diamond kind,
                      const std::vector<int>& ranks);

/// F_{lambda,1^m} = E_{lambda,1^m} at rank n > m.
Cell verify_prop33(const Partition& lambda, int m, int n);

/// |F_{lambda,mu}| = |E_{lambda,mu}| (and both equal Kbar^{(1,1)}(1)).
Cell verify_lemma29(const Partition& lambda, const Partition& mu, int n);

/// theta commutes with the C and D splittings on F_{lambda,mu}.
Cell verify_prop35(const Partition& lambda, const Partition& mu, int n);

/// On F_{lambda,1^m}: the weighted count of adjacent letters of opposite
/// bar type is (m - |lambda|)/2, and Dbar = D-tilde + (m - |lambda|)/2.
Cell verify_prop39(const Partition& lambda, int m, int n);

/// The three coenergy conditions on F_{lambda,mu} and F^A_mu.
Cell verify_prop40(const Partition& lambda, const Partition& mu, int n);

/// Partitions with at most m parts and size <= max_mu for mu, paired with
/// every lambda with at most m parts and |lambda| <= |mu|.
std::vector<std::pair<Partition, Partition>> grid(int m, int max_mu);

}  // namespace onedim
