#pragma once

// Exact polynomial arithmetic: Laurent polynomials in q with half-integer
// exponents, and the rational gl_n character ring with QPoly coefficients.

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

namespace onedim {

/// Laurent polynomial in q with exponents in (1/2)Z and integer coefficients.
///
/// Exponents are stored in half-units: the term q^{3/2} has key 3.  Terms
/// are kept in ascending exponent order and zero coefficients are never
/// stored, so structural equality is polynomial equality.
class QPoly {
 public:
  using Exponent = int;  // half-units
  using Coeff = std::int64_t;

  QPoly() = default;
  QPoly(Coeff c);  // NOLINT(google-explicit-constructor): constants promote

  static QPoly monomial(Exponent half_units, Coeff c = 1);
  /// q^e for an integer exponent e.
  static QPoly q_power(int e, Coeff c = 1) { return monomial(2 * e, c); }

  const std::map<Exponent, Coeff>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Coeff coefficient(Exponent half_units) const;
  /// Value at q = 1.
  Coeff at_one() const;
  /// Smallest/largest exponent in half-units; the polynomial must be nonzero.
  Exponent min_exponent() const;
  Exponent max_exponent() const;
  bool has_nonnegative_coefficients() const;

  void add_term(Exponent half_units, Coeff c);

  QPoly& operator+=(const QPoly& r);
  QPoly& operator-=(const QPoly& r);
  QPoly& operator*=(const QPoly& r);
  friend QPoly operator+(QPoly p, const QPoly& r) { return p += r; }
  friend QPoly operator-(QPoly p, const QPoly& r) { return p -= r; }
  friend QPoly operator*(const QPoly& p, const QPoly& r);
  QPoly operator-() const;
  friend bool operator==(const QPoly&, const QPoly&) = default;

  /// q^{half_units/2} * p.
  QPoly shifted(Exponent half_units) const;
  /// The involution q -> q^{-1}.
  QPoly bar() const;
  /// Drops every term with exponent above `max_half_units`.
  QPoly truncated(Exponent max_half_units) const;

  /// Canonical rendering, ascending exponents: "1", "q + q^2", "2q^{3/2}",
  /// "q^{-1} - q", "0".
  std::string str() const;
  std::string latex() const;

 private:
  std::map<Exponent, Coeff> terms_;
};

using Exponents = std::vector<int>;

/// Multivariate Laurent polynomial in x_1..x_n with QPoly coefficients; an
/// element of Z[q^{1/2}, q^{-1/2}] tensor Z[x_1^{+-1}, ..., x_n^{+-1}].
class CharPoly {
 public:
  explicit CharPoly(int nvars) : nvars_(nvars) {}

  static CharPoly monomial(Exponents e, const QPoly& c = QPoly(1));
  static CharPoly one(int nvars) { return monomial(Exponents(nvars, 0)); }

  int nvars() const { return nvars_; }
  const std::map<Exponents, QPoly>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  QPoly coefficient(const Exponents& e) const;

  void add_term(const Exponents& e, const QPoly& c);

  CharPoly& operator+=(const CharPoly& r);
  CharPoly& operator-=(const CharPoly& r);
  friend CharPoly operator+(CharPoly p, const CharPoly& r) { return p += r; }
  friend CharPoly operator-(CharPoly p, const CharPoly& r) { return p -= r; }
  friend CharPoly operator*(const CharPoly& p, const CharPoly& r);
  friend CharPoly operator*(const QPoly& c, const CharPoly& p);
  friend bool operator==(const CharPoly&, const CharPoly&) = default;

  /// x^shift * f.
  CharPoly shifted(const Exponents& shift) const;
  /// w.f where x_i -> x_{perm[i]}, i.e. exponent e maps to e' with
  /// e'[perm[i]] = e[i].
  CharPoly permuted(std::span<const int> perm) const;
  /// Keeps terms whose q-coefficient has exponent <= max_half_units.
  CharPoly truncated_q(QPoly::Exponent max_half_units) const;
  /// Keeps terms whose total x-degree is <= max_degree.
  CharPoly truncated_degree(int max_degree) const;

  std::string str() const;

 private:
  int nvars_;
  std::map<Exponents, QPoly> terms_;
};

/// J(f) = sum over w in S_n of sign(w) w.f.
CharPoly antisymmetrize(const CharPoly& f);

/// Exact quotient num / den in the Laurent ring by leading-term elimination
/// in lex order.  The leading coefficient of `den` must be +-q^k.  Throws
/// std::logic_error when the division leaves a remainder.
CharPoly divide_exact(const CharPoly& num, const CharPoly& den);

/// The Demazure operator for the longest element of S_n, given by the
/// bialternant J(x^rho)^{-1} J(x^rho f).
CharPoly demazure_E(const CharPoly& f);

/// Rational gl_n character s_lambda[X] for weakly decreasing lambda
/// (entries may be negative); nvars = lambda.size().  Throws
/// std::invalid_argument on a non-dominant input.
CharPoly schur(std::span<const int> lambda);

/// Coefficients of a symmetric CharPoly in the basis s_lambda[X]: the
/// coefficient of s_lambda is the coefficient of x^{lambda+rho} in
/// x^rho-alternant times f.
std::map<Exponents, QPoly> schur_expand(const CharPoly& symmetric);

/// Coefficients of E(f) in the basis s_lambda[X], obtained by straightening
/// each monomial: x^beta contributes sign(w) s_{w(beta+rho)-rho} when
/// beta+rho has distinct entries.  Agrees with schur_expand(demazure_E(f)).
std::map<Exponents, QPoly> demazure_schur_coefficients(const CharPoly& f);

/// rho = (n-1, ..., 1, 0).
Exponents staircase(int n);

/// Sign of a permutation of {0..n-1}.
int permutation_sign(std::span<const int> perm);

}  // namespace onedim
