#include "onedim/onedim.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

#include "onedim/kostka.hpp"
#include "onedim/lusztig.hpp"

namespace onedim {

namespace {

int length(const Partition& p) { return static_cast<int>(p.size()); }

void fail(Cell& cell, const std::string& what) {
  cell.pass = false;
  if (!cell.detail.empty()) cell.detail += "; ";
  cell.detail += what;
}

void require_rank(const Partition& lambda, const Partition& mu, int n, bool strict) {
  const int m = std::max(length(lambda), length(mu));
  if (n < 1 || n < m || (strict && n <= m))
    throw std::invalid_argument("rank " + std::to_string(n) + " too small for " +
                                format_partition(lambda) + " / " + format_partition(mu));
}

}  // namespace

int default_rank(const Partition& lambda, const Partition& mu) {
  return std::max({length(lambda), length(mu), 1}) + 1;
}

Crystal crystal_for(Diamond kind, int n) {
  switch (kind) {
    case Diamond::Empty: return Crystal(CrystalKind::A, n);
    case Diamond::OneOne: return Crystal(CrystalKind::C, n);
    default: break;
  }
  throw std::invalid_argument("one-dimensional sums of kind " + diamond_name(kind) +
                              " are not implemented");
}

OneDimSum x_sum(const Partition& lambda, const Partition& mu, Diamond kind, int n) {
  require_rank(lambda, mu, n, false);
  const Crystal cr = crystal_for(kind, n);
  const Energy en(cr);
  OneDimSum out{lambda, mu, kind, n, QPoly(), 0};
  for (const auto& b : f_set(cr, lambda, mu)) {
    out.value.add_term(2 * en.coenergy(b), 1);
    ++out.vertices;
  }
  return out;
}

Cell verify_nakayashiki_yamada(const Partition& lambda, const Partition& mu, int n) {
  Cell cell = make_cell(lambda, mu, "empty", n);
  const OneDimSum x = x_sum(lambda, mu, Diamond::Empty, n);
  const QPoly k = cocharge_kf(lambda, mu, KostkaRoute::Lusztig);
  cell.x = x.value.str();
  cell.k = k.str();
  cell.vertices = x.vertices;
  if (x.value != k) fail(cell, "one-dimensional sum differs from the cocharge polynomial");
  return cell;
}

Cell verify_theorem4(const Partition& lambda, const Partition& mu, int n) {
  require_rank(lambda, mu, n, true);
  Cell cell = make_cell(lambda, mu, "11", n);
  const Crystal c(CrystalKind::C, n);
  const Crystal d(CrystalKind::DDagger, n);
  const Energy ec(c), ed(d), ea(Crystal(CrystalKind::A, n));
  const int excess = weight_size(mu) - weight_size(lambda);

  const auto f = f_set(c, lambda, mu);
  const ESet e = e_set(mu, lambda, n);
  cell.vertices = static_cast<long>(f.size());

  std::map<TensorVertex, TensorVertex> source_of;
  for (const auto& [b, cs] : e.by_source)
    for (const auto& v : cs) source_of.emplace(v, b);

  std::set<TensorVertex> image;
  QPoly x, grouped;
  for (const auto& v : f) {
    const int dbar = ec.coenergy(v);
    x.add_term(2 * dbar, 1);
    TensorVertex w;
    try {
      w = theta(v, n);
    } catch (const std::invalid_argument&) {
      fail(cell, "theta undefined on " + format_vertex(v));
      continue;
    }
    if (!image.insert(w).second) fail(cell, "theta not injective at " + format_vertex(v));
    const auto it = source_of.find(w);
    if (it == source_of.end()) {
      fail(cell, "theta(" + format_vertex(v) + ") = " + format_vertex(w) + " is not in E");
      continue;
    }
    const int dtilde = ed.coenergy_tilde(w);
    if (dtilde != ed.coenergy_tilde(d.raise(w).hw))
      fail(cell, "D-tilde not constant on the component of " + format_vertex(w));
    if (2 * dbar != 2 * dtilde + excess)
      fail(cell, format_vertex(v) + ": Dbar " + std::to_string(dbar) + ", D-tilde(theta) " +
                     std::to_string(dtilde));
    const int da = ea.coenergy(it->second);
    if (2 * dbar != 2 * da + excess)
      fail(cell, format_vertex(v) + ": Dbar " + std::to_string(dbar) + ", type A coenergy " +
                     std::to_string(da) + " at " + format_vertex(it->second));
  }
  if (image.size() != e.all.size())
    fail(cell, "|F| = " + std::to_string(f.size()) + ", |E| = " + std::to_string(e.all.size()));

  for (const auto& [b, cs] : e.by_source) {
    const int da = ea.coenergy(b);
    if (ed.coenergy_tilde(b) != da)
      fail(cell, "D-tilde differs from type A coenergy at " + format_vertex(b));
    grouped.add_term(2 * da, static_cast<QPoly::Coeff>(cs.size()));
  }
  grouped = grouped.shifted(excess);
  if (grouped != x) fail(cell, "grouped sum " + grouped.str());

  const QPoly k = k_polynomial(lambda, mu, Diamond::OneOne);
  cell.x = x.str();
  cell.k = k.str();
  if (x != k) fail(cell, "one-dimensional sum differs from the K-polynomial");
  return cell;
}

Cell verify_corollary7(const Partition& lambda, const Partition& mu, Diamond kind, int n) {
  Cell cell = make_cell(lambda, mu, diamond_name(kind), n);
  const OneDimSum x = x_sum(lambda, mu, kind, n);
  const Family fam = family_of(kind);
  PartitionFunction pf(ClassicalType{fam, n}, LFunction::for_family(fam));
  const HatPair h = hat_pair(lambda, mu, std::max(length(lambda), length(mu)), n);
  const int shift = 2 * (weight_norm(mu) + weight_size(mu) - weight_size(lambda));
  const QPoly kl = kl_poly(h.lambda_hat, h.mu_hat, pf).bar().shifted(shift);
  cell.x = x.value.str();
  cell.k = kl.str();
  cell.vertices = x.vertices;
  if (x.value != kl) fail(cell, "one-dimensional sum differs from the twisted KL polynomial");
  return cell;
}

Cell verify_stability(const Partition& lambda, const Partition& mu, Diamond kind,
                      const std::vector<int>& ranks) {
  if (ranks.empty()) throw std::invalid_argument("verify_stability: no ranks");
  Cell cell = make_cell(lambda, mu, diamond_name(kind), ranks.front());
  std::ostringstream trail;
  for (std::size_t i = 0; i < ranks.size(); ++i) {
    const OneDimSum x = x_sum(lambda, mu, kind, ranks[i]);
    trail << (i ? "; " : "") << "n=" << ranks[i] << ": " << x.value.str();
    if (i == 0) {
      cell.x = x.value.str();
      cell.vertices = x.vertices;
    } else if (x.value.str() != cell.x) {
      cell.k = x.value.str();
      cell.pass = false;
    }
  }
  if (cell.pass) cell.k = cell.x;
  else cell.detail = trail.str();
  return cell;
}

Cell verify_prop33(const Partition& lambda, int m, int n) {
  const Partition mu(m, 1);
  require_rank(lambda, mu, n, true);
  Cell cell = make_cell(lambda, mu, "11", n);
  const auto f = f_set(Crystal(CrystalKind::C, n), lambda, mu);
  const auto e = e_set(mu, lambda, n).all;
  cell.x = std::to_string(f.size());
  cell.k = std::to_string(e.size());
  cell.vertices = static_cast<long>(f.size());
  if (f != e) fail(cell, "F and E differ as sets");
  return cell;
}

Cell verify_lemma29(const Partition& lambda, const Partition& mu, int n) {
  require_rank(lambda, mu, n, true);
  Cell cell = make_cell(lambda, mu, "11", n);
  const auto f = f_set(Crystal(CrystalKind::C, n), lambda, mu);
  const auto e = e_set(mu, lambda, n).all;
  const auto k1 = k_polynomial(lambda, mu, Diamond::OneOne).at_one();
  cell.x = std::to_string(f.size());
  cell.k = std::to_string(e.size());
  cell.vertices = static_cast<long>(f.size());
  if (f.size() != e.size() || static_cast<long>(f.size()) != k1)
    fail(cell, "K-polynomial at 1 is " + std::to_string(k1));
  return cell;
}

Cell verify_prop35(const Partition& lambda, const Partition& mu, int n) {
  require_rank(lambda, mu, n, true);
  Cell cell = make_cell(lambda, mu, "11", n);
  const Crystal c(CrystalKind::C, n);
  const Energy ec(c), ed(Crystal(CrystalKind::DDagger, n));
  long checked = 0;
  for (const auto& b : f_set(c, lambda, mu)) {
    const TensorVertex left = theta(ec.split(b), n);
    const TensorVertex right = ed.split(theta(b, n));
    if (left != right)
      fail(cell, format_vertex(b) + ": " + format_vertex(left) + " vs " + format_vertex(right));
    ++checked;
  }
  cell.vertices = checked;
  cell.x = cell.k = std::to_string(checked);
  return cell;
}

Cell verify_prop39(const Partition& lambda, int m, int n) {
  const Partition mu(m, 1);
  require_rank(lambda, mu, n, true);
  Cell cell = make_cell(lambda, mu, "11", n);
  const Crystal c(CrystalKind::C, n);
  const Energy ec(c), ed(Crystal(CrystalKind::DDagger, n));
  const int excess = m - weight_size(lambda);
  for (const auto& b : f_set(c, lambda, mu)) {
    int s = 0;
    for (int i = 0; i + 1 < m; ++i) {
      const Letter x = b.factors[i][0], y = b.factors[i + 1][0];
      if ((x > 0) == (y > 0)) continue;
      s += (m - 1 - i) * (c.geq(x, y) ? -1 : 1);
    }
    if (2 * s != excess) fail(cell, format_vertex(b) + ": weighted count " + std::to_string(s));
    const int dbar = ec.coenergy(b), dtilde = ed.coenergy_tilde(b);
    if (2 * dbar != 2 * dtilde + excess)
      fail(cell, format_vertex(b) + ": Dbar " + std::to_string(dbar) + ", D-tilde " +
                     std::to_string(dtilde));
    ++cell.vertices;
  }
  cell.x = cell.k = std::to_string(cell.vertices);
  return cell;
}

Cell verify_prop40(const Partition& lambda, const Partition& mu, int n) {
  require_rank(lambda, mu, n, true);
  Cell cell = make_cell(lambda, mu, "11", n);
  const Crystal c(CrystalKind::C, n), d(CrystalKind::DDagger, n);
  const Energy ec(c), ed(d), ea(Crystal(CrystalKind::A, n));
  const int excess = weight_size(mu) - weight_size(lambda);
  for (const auto& b : f_set(c, lambda, mu)) {
    const TensorVertex w = theta(b, n);
    const int dtilde = ed.coenergy_tilde(w);
    for (const auto& v : d.component(w))
      if (ed.coenergy_tilde(v) != dtilde) {
        fail(cell, "D-tilde not constant on the component of " + format_vertex(w));
        break;
      }
    if (2 * ec.coenergy(b) != excess + 2 * dtilde)
      fail(cell, format_vertex(b) + ": Dbar " + std::to_string(ec.coenergy(b)) +
                     ", D-tilde(theta) " + std::to_string(dtilde));
    ++cell.vertices;
  }
  for (const auto& b : highest_weight_vertices(ea.crystal(), mu))
    if (ed.coenergy_tilde(b) != ea.coenergy(b))
      fail(cell, "D-tilde differs from type A coenergy at " + format_vertex(b));
  cell.x = cell.k = std::to_string(cell.vertices);
  return cell;
}

std::vector<std::pair<Partition, Partition>> grid(int m, int max_mu) {
  std::vector<std::pair<Partition, Partition>> out;
  for (const auto& mu : partitions_up_to(max_mu, m))
    for (const auto& lambda : partitions_up_to(weight_size(mu), m))
      out.emplace_back(lambda, mu);
  return out;
}

}  // namespace onedim
