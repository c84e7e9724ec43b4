#include "onedim/algebra.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace onedim {

// ---------------------------------------------------------------- QPoly

QPoly::QPoly(Coeff c) {
  if (c != 0) terms_.emplace(0, c);
}

QPoly QPoly::monomial(Exponent half_units, Coeff c) {
  QPoly p;
  p.add_term(half_units, c);
  return p;
}

QPoly::Coeff QPoly::coefficient(Exponent half_units) const {
  auto it = terms_.find(half_units);
  return it == terms_.end() ? 0 : it->second;
}

QPoly::Coeff QPoly::at_one() const {
  Coeff s = 0;
  for (const auto& [e, c] : terms_) s += c;
  return s;
}

QPoly::Exponent QPoly::min_exponent() const {
  if (terms_.empty()) throw std::logic_error("min_exponent of zero QPoly");
  return terms_.begin()->first;
}

QPoly::Exponent QPoly::max_exponent() const {
  if (terms_.empty()) throw std::logic_error("max_exponent of zero QPoly");
  return terms_.rbegin()->first;
}

bool QPoly::has_nonnegative_coefficients() const {
  return std::all_of(terms_.begin(), terms_.end(),
                     [](const auto& t) { return t.second > 0; });
}

void QPoly::add_term(Exponent half_units, Coeff c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(half_units, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

QPoly& QPoly::operator+=(const QPoly& r) {
  for (const auto& [e, c] : r.terms_) add_term(e, c);
  return *this;
}

QPoly& QPoly::operator-=(const QPoly& r) {
  for (const auto& [e, c] : r.terms_) add_term(e, -c);
  return *this;
}

QPoly operator*(const QPoly& p, const QPoly& r) {
  QPoly out;
  for (const auto& [e1, c1] : p.terms_)
    for (const auto& [e2, c2] : r.terms_) out.add_term(e1 + e2, c1 * c2);
  return out;
}

QPoly& QPoly::operator*=(const QPoly& r) { return *this = *this * r; }

QPoly QPoly::operator-() const {
  QPoly out;
  for (const auto& [e, c] : terms_) out.terms_.emplace(e, -c);
  return out;
}

QPoly QPoly::shifted(Exponent half_units) const {
  QPoly out;
  for (const auto& [e, c] : terms_) out.terms_.emplace(e + half_units, c);
  return out;
}

QPoly QPoly::bar() const {
  QPoly out;
  for (const auto& [e, c] : terms_) out.terms_.emplace(-e, c);
  return out;
}

QPoly QPoly::truncated(Exponent max_half_units) const {
  QPoly out;
  for (const auto& [e, c] : terms_)
    if (e <= max_half_units) out.terms_.emplace(e, c);
  return out;
}

namespace {

std::string exponent_text(QPoly::Exponent e) {
  if (e % 2 == 0) return std::to_string(e / 2);
  return std::to_string(e) + "/2";
}

std::string render(const std::map<QPoly::Exponent, QPoly::Coeff>& terms,
                   bool latex) {
  if (terms.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms) {
    const auto mag = c < 0 ? -c : c;
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (e == 0) {
      os << mag;
      continue;
    }
    if (mag != 1) os << mag;
    os << 'q';
    if (e == 2) continue;
    if (!latex && e > 0 && e % 2 == 0)
      os << '^' << e / 2;
    else
      os << "^{" << exponent_text(e) << '}';
  }
  return os.str();
}

}  // namespace

std::string QPoly::str() const { return render(terms_, false); }
std::string QPoly::latex() const { return render(terms_, true); }

// ---------------------------------------------------------------- CharPoly

CharPoly CharPoly::monomial(Exponents e, const QPoly& c) {
  CharPoly p(static_cast<int>(e.size()));
  p.add_term(e, c);
  return p;
}

QPoly CharPoly::coefficient(const Exponents& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? QPoly() : it->second;
}

void CharPoly::add_term(const Exponents& e, const QPoly& c) {
  if (static_cast<int>(e.size()) != nvars_)
    throw std::invalid_argument("CharPoly: exponent length != nvars");
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

CharPoly& CharPoly::operator+=(const CharPoly& r) {
  for (const auto& [e, c] : r.terms_) add_term(e, c);
  return *this;
}

CharPoly& CharPoly::operator-=(const CharPoly& r) {
  for (const auto& [e, c] : r.terms_) add_term(e, -c);
  return *this;
}

CharPoly operator*(const CharPoly& p, const CharPoly& r) {
  if (p.nvars_ != r.nvars_)
    throw std::invalid_argument("CharPoly: nvars mismatch in product");
  CharPoly out(p.nvars_);
  Exponents e(p.nvars_);
  for (const auto& [e1, c1] : p.terms_) {
    for (const auto& [e2, c2] : r.terms_) {
      for (int i = 0; i < p.nvars_; ++i) e[i] = e1[i] + e2[i];
      out.add_term(e, c1 * c2);
    }
  }
  return out;
}

CharPoly operator*(const QPoly& c, const CharPoly& p) {
  CharPoly out(p.nvars_);
  if (c.is_zero()) return out;
  for (const auto& [e, pc] : p.terms_) out.terms_.emplace(e, c * pc);
  return out;
}

CharPoly CharPoly::shifted(const Exponents& shift) const {
  CharPoly out(nvars_);
  Exponents e2(nvars_);
  for (const auto& [e, c] : terms_) {
    for (int i = 0; i < nvars_; ++i) e2[i] = e[i] + shift[i];
    out.terms_.emplace(e2, c);
  }
  return out;
}

CharPoly CharPoly::permuted(std::span<const int> perm) const {
  CharPoly out(nvars_);
  Exponents e2(nvars_);
  for (const auto& [e, c] : terms_) {
    for (int i = 0; i < nvars_; ++i) e2[perm[i]] = e[i];
    out.terms_.emplace(e2, c);
  }
  return out;
}

CharPoly CharPoly::truncated_q(QPoly::Exponent max_half_units) const {
  CharPoly out(nvars_);
  for (const auto& [e, c] : terms_) out.add_term(e, c.truncated(max_half_units));
  return out;
}

CharPoly CharPoly::truncated_degree(int max_degree) const {
  CharPoly out(nvars_);
  for (const auto& [e, c] : terms_)
    if (std::accumulate(e.begin(), e.end(), 0) <= max_degree)
      out.terms_.emplace(e, c);
  return out;
}

std::string CharPoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << '(' << c.str() << ")x^(";
    for (int i = 0; i < nvars_; ++i) os << (i ? "," : "") << e[i];
    os << ')';
  }
  return os.str();
}

// ---------------------------------------------------------------- operators

Exponents staircase(int n) {
  Exponents rho(n);
  for (int i = 0; i < n; ++i) rho[i] = n - 1 - i;
  return rho;
}

int permutation_sign(std::span<const int> perm) {
  int inversions = 0;
  for (std::size_t i = 0; i < perm.size(); ++i)
    for (std::size_t j = i + 1; j < perm.size(); ++j)
      if (perm[i] > perm[j]) ++inversions;
  return inversions % 2 ? -1 : 1;
}

CharPoly antisymmetrize(const CharPoly& f) {
  const int n = f.nvars();
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  CharPoly out(n);
  do {
    const QPoly sign(permutation_sign(perm));
    out += sign * f.permuted(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

CharPoly divide_exact(const CharPoly& num, const CharPoly& den) {
  if (den.is_zero()) throw std::invalid_argument("divide_exact: zero divisor");
  const int n = num.nvars();
  CharPoly quotient(n);
  if (num.is_zero()) return quotient;

  const auto& [lead_e, lead_c] = *den.terms().rbegin();
  if (lead_c.terms().size() != 1 ||
      std::abs(lead_c.terms().begin()->second) != 1)
    throw std::invalid_argument("divide_exact: leading coefficient not a unit");
  const auto [unit_e, unit_c] = *lead_c.terms().begin();
  const QPoly inverse = QPoly::monomial(-unit_e, unit_c);

  // Every quotient exponent lies in this box; leaving it means the
  // division is not exact.
  Exponents lo(n, 0), hi(n, 0);
  for (int i = 0; i < n; ++i) {
    int num_min = INT32_MAX, num_max = INT32_MIN, den_min = INT32_MAX,
        den_max = INT32_MIN;
    for (const auto& [e, c] : num.terms()) {
      num_min = std::min(num_min, e[i]);
      num_max = std::max(num_max, e[i]);
    }
    for (const auto& [e, c] : den.terms()) {
      den_min = std::min(den_min, e[i]);
      den_max = std::max(den_max, e[i]);
    }
    lo[i] = num_min - den_max;
    hi[i] = num_max - den_min;
  }

  CharPoly rem = num;
  Exponents qe(n);
  while (!rem.is_zero()) {
    const auto& [e, c] = *rem.terms().rbegin();
    for (int i = 0; i < n; ++i) {
      qe[i] = e[i] - lead_e[i];
      if (qe[i] < lo[i] || qe[i] > hi[i])
        throw std::logic_error("divide_exact: nonzero remainder");
    }
    const QPoly qc = c * inverse;
    quotient.add_term(qe, qc);
    rem -= qc * den.shifted(qe);
  }
  return quotient;
}

CharPoly demazure_E(const CharPoly& f) {
  const int n = f.nvars();
  const Exponents rho = staircase(n);
  const CharPoly vandermonde = antisymmetrize(CharPoly::monomial(rho));
  return divide_exact(antisymmetrize(f.shifted(rho)), vandermonde);
}

CharPoly schur(std::span<const int> lambda) {
  for (std::size_t i = 1; i < lambda.size(); ++i)
    if (lambda[i - 1] < lambda[i])
      throw std::invalid_argument("schur: weight is not dominant");
  return demazure_E(CharPoly::monomial(Exponents(lambda.begin(), lambda.end())));
}

std::map<Exponents, QPoly> schur_expand(const CharPoly& symmetric) {
  const int n = symmetric.nvars();
  const Exponents rho = staircase(n);
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::map<Exponents, QPoly> out;
  Exponents gamma(n);
  do {
    const int sign = permutation_sign(perm);
    for (const auto& [beta, c] : symmetric.terms()) {
      for (int i = 0; i < n; ++i) gamma[perm[i]] = rho[i];
      bool strict = true;
      for (int i = 0; i < n; ++i) gamma[i] += beta[i];
      for (int i = 1; i < n && strict; ++i) strict = gamma[i - 1] > gamma[i];
      if (!strict) continue;
      for (int i = 0; i < n; ++i) gamma[i] -= rho[i];
      auto& slot = out[gamma];
      slot += sign == 1 ? c : -c;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  std::erase_if(out, [](const auto& kv) { return kv.second.is_zero(); });
  return out;
}

std::map<Exponents, QPoly> demazure_schur_coefficients(const CharPoly& f) {
  const int n = f.nvars();
  const Exponents rho = staircase(n);
  std::map<Exponents, QPoly> out;
  Exponents shifted(n);
  for (const auto& [beta, c] : f.terms()) {
    for (int i = 0; i < n; ++i) shifted[i] = beta[i] + rho[i];
    // sort descending, tracking the sign of the sorting permutation
    int sign = 1;
    bool regular = true;
    for (int i = 1; i < n && regular; ++i) {
      for (int j = i; j > 0 && shifted[j - 1] <= shifted[j]; --j) {
        if (shifted[j - 1] == shifted[j]) {
          regular = false;
          break;
        }
        std::swap(shifted[j - 1], shifted[j]);
        sign = -sign;
      }
    }
    if (!regular) continue;
    for (int i = 0; i < n; ++i) shifted[i] -= rho[i];
    out[shifted] += sign == 1 ? c : -c;
  }
  std::erase_if(out, [](const auto& kv) { return kv.second.is_zero(); });
  return out;
}

}  // namespace onedim
