#include "onedim/lusztig.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>
#include <stdexcept>

namespace onedim {

PartitionFunction::PartitionFunction(ClassicalType t, LFunction L)
    : type_(t), L_(L) {
  const RootSystem rs = RootSystem::make(t);
  // Simple roots last: every nonnegative residual is then reachable by the
  // tail, so the recursion never explores dead branches for long.
  std::vector<std::pair<int, std::size_t>> order;
  for (std::size_t i = 0; i < rs.positive.size(); ++i) {
    const auto c = *simple_root_coordinates(rs.positive[i].vec, t);
    int height = 0;
    for (int x : c) height += x;
    order.emplace_back(-height, i);
  }
  std::sort(order.begin(), order.end());
  for (const auto& [h, i] : order) {
    coords_.push_back(*simple_root_coordinates(rs.positive[i].vec, t));
    l_half_.push_back(rs.l_half(rs.positive[i], L));
  }
  memo_.resize(coords_.size());
}

QPoly PartitionFunction::operator()(std::span<const int> beta) {
  const auto c = simple_root_coordinates(beta, type_);
  if (!c) return {};
  for (int x : *c)
    if (x < 0) return {};
  if (coords_.empty())
    return std::all_of(c->begin(), c->end(), [](int x) { return x == 0; })
               ? QPoly(1)
               : QPoly();
  return count(0, *c);
}

const QPoly& PartitionFunction::count(std::size_t root,
                                      const std::vector<int>& residual) {
  static const QPoly kOne(1), kZero;
  if (std::all_of(residual.begin(), residual.end(), [](int x) { return x == 0; }))
    return kOne;
  if (root == coords_.size()) return kZero;
  auto& memo = memo_[root];
  if (auto it = memo.find(residual); it != memo.end()) return it->second;

  QPoly total;
  std::vector<int> r = residual;
  const auto& a = coords_[root];
  for (int k = 0;; ++k) {
    total += count(root + 1, r).shifted(k * l_half_[root]);
    bool fits = true;
    for (std::size_t i = 0; i < r.size(); ++i) {
      r[i] -= a[i];
      if (r[i] < 0) fits = false;
    }
    if (!fits) break;
  }
  return memo.emplace(residual, std::move(total)).first->second;
}

namespace {

QPoly alternating_sum(std::span<const int> lambda, std::span<const int> mu,
                      PartitionFunction& pf, const std::vector<WeylElement>& group) {
  const ClassicalType t = pf.type();
  const Weight rho = rho_half(t);
  Weight top(t.n), bottom(t.n);
  for (int i = 0; i < t.n; ++i) {
    top[i] = 2 * lambda[i] + rho[i];
    bottom[i] = 2 * mu[i] + rho[i];
  }
  QPoly out;
  Weight beta(t.n);
  for (const auto& w : group) {
    const Weight moved = w.apply(top);
    for (int i = 0; i < t.n; ++i) {
      const int d = moved[i] - bottom[i];
      if (d % 2) throw std::logic_error("w(lambda+rho)-(mu+rho) is not integral");
      beta[i] = d / 2;
    }
    const QPoly p = pf(beta);
    if (p.is_zero()) continue;
    if (w.parity == 1)
      out += p;
    else
      out -= p;
  }
  return out;
}

}  // namespace

QPoly kl_poly(std::span<const int> lambda, std::span<const int> mu,
              PartitionFunction& pf) {
  const ClassicalType t = pf.type();
  if (!is_dominant(lambda, t) || !is_dominant(mu, t))
    throw std::invalid_argument("kl_poly: weights must be dominant for " + t.name());
  return alternating_sum(lambda, mu, pf, weyl_group(t));
}

QPoly stable_kl(std::span<const int> lambda, std::span<const int> mu,
                PartitionFunction& pf) {
  const ClassicalType a{Family::A, pf.type().n};
  if (!is_dominant(lambda, a) || !is_dominant(mu, a))
    throw std::invalid_argument("stable_kl: weights must be weakly decreasing");
  return alternating_sum(lambda, mu, pf, symmetric_group(pf.type().n));
}

Cell verify_prop5(const Partition& lambda, const Partition& mu, ClassicalType t,
                  const LFunction& L, int kmax) {
  PartitionFunction pf(t, L);
  const Weight lam = padded(lambda, t.n), m = padded(mu, t.n);
  Cell cell = make_cell(lambda, mu, t.name(), t.n);
  const QPoly stable = stable_kl(lam, m, pf);
  cell.x = stable.str();
  const int diff = weight_size(lambda) - weight_size(mu);
  const int threshold = std::max(0, diff > 0 ? (diff + 1) / 2 : -((-diff) / 2));
  std::ostringstream trail;
  for (int k = 0; k <= kmax; ++k) {
    Weight lk = lam, mk = m;
    for (auto& x : lk) x += k;
    for (auto& x : mk) x += k;
    const QPoly v = kl_poly(lk, mk, pf);
    trail << (k ? "; " : "") << "k=" << k << ": " << v.str();
    if (k >= threshold && v != stable) {
      cell.pass = false;
      cell.k = v.str();
      cell.detail = "k=" + std::to_string(k) + " differs from the stable value";
    }
    ++cell.vertices;
  }
  if (cell.pass) cell.k = cell.x;
  if (!cell.pass) cell.detail += " (" + trail.str() + ")";
  return cell;
}

namespace {

Diamond diamond_for(Family f) {
  switch (f) {
    case Family::A: return Diamond::Empty;
    case Family::B: return Diamond::One;
    case Family::C: return Diamond::Two;
    case Family::D: return Diamond::OneOne;
  }
  return Diamond::Empty;
}

/// f * 1/(1 - c x^alpha), dropping terms beyond the caps.
CharPoly times_geometric(const CharPoly& f, const Exponents& alpha, const QPoly& c,
                         int degree_cap, int q_cap_half) {
  CharPoly out = f, power = f;
  while (true) {
    power = (c * power.shifted(alpha));
    if (degree_cap >= 0) power = power.truncated_degree(degree_cap);
    if (q_cap_half >= 0) power = power.truncated_q(q_cap_half);
    if (power.is_zero()) break;
    out += power;
  }
  return out;
}

}  // namespace

CharPoly littlewood_product(Diamond d, int n, int degree_cap) {
  const ClassicalType t{family_of(d), n};
  const RootSystem rs = RootSystem::make(t);
  const LFunction L = LFunction::for_family(t.family);
  CharPoly out = CharPoly::one(n);
  for (const auto& r : rs.positive) {
    if (r.in_type_a) continue;
    out = times_geometric(out, r.vec, QPoly::monomial(rs.l_half(r, L)), degree_cap, -1);
  }
  return out;
}

CharPoly littlewood_schur_sum(Diamond d, int n, int degree_cap) {
  CharPoly out(n);
  for (const auto& g : partitions_up_to(degree_cap, n)) {
    if (!tiles(d, g)) continue;
    out += QPoly::monomial(weight_size(g)) * schur(padded(g, n));
  }
  return out;
}

Cell verify_littlewood(Diamond d, int n, int degree_cap) {
  Cell cell = make_cell({}, {}, diamond_name(d), n);
  const CharPoly product = littlewood_product(d, n, degree_cap);
  const CharPoly sum = littlewood_schur_sum(d, n, degree_cap);
  cell.vertices = static_cast<long>(product.terms().size());
  cell.x = std::to_string(product.terms().size()) + " monomials";
  cell.k = std::to_string(sum.terms().size()) + " monomials";
  if (product != sum) {
    cell.pass = false;
    const CharPoly diff = product - sum;
    const auto& [e, c] = *diff.terms().begin();
    std::ostringstream os;
    os << "first difference at x^(";
    for (std::size_t i = 0; i < e.size(); ++i) os << (i ? "," : "") << e[i];
    os << "): " << c.str();
    cell.detail = os.str();
  }
  return cell;
}

std::map<Exponents, QPoly> genfun_coefficients(std::span<const int> mu,
                                               ClassicalType t,
                                               const LFunction& L, int q_cap,
                                               bool type_a_roots_only) {
  const RootSystem rs = RootSystem::make(t);
  CharPoly f = CharPoly::monomial(Exponents(mu.begin(), mu.end()));
  for (const auto& r : rs.positive) {
    if (type_a_roots_only && !r.in_type_a) continue;
    const int l = rs.l_half(r, L);
    if (l <= 0) throw std::invalid_argument("genfun needs positive L-values");
    f = times_geometric(f, r.vec, QPoly::monomial(l), -1, 2 * q_cap);
  }
  return demazure_schur_coefficients(f);
}

namespace {

std::string weight_text(std::span<const int> w) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < w.size(); ++i) os << (i ? "," : "") << w[i];
  os << ')';
  return os.str();
}

/// Weakly decreasing integer vectors with entries in [lo, hi].
std::vector<Weight> decreasing_vectors(int n, int lo, int hi) {
  std::vector<Weight> out;
  Weight cur;
  std::function<void(int)> rec = [&](int top) {
    if (static_cast<int>(cur.size()) == n) {
      out.push_back(cur);
      return;
    }
    for (int v = top; v >= lo; --v) {
      cur.push_back(v);
      rec(v);
      cur.pop_back();
    }
  };
  rec(hi);
  return out;
}

std::set<Weight> window_around(std::span<const int> mu, int window) {
  const int n = static_cast<int>(mu.size());
  const int lo = *std::min_element(mu.begin(), mu.end()) - window;
  const int hi = *std::max_element(mu.begin(), mu.end()) + window;
  std::set<Weight> out;
  for (auto& w : decreasing_vectors(n, lo, hi)) {
    bool near = true;
    for (int i = 0; i < n; ++i) near = near && std::abs(w[i] - mu[i]) <= window;
    if (near) out.insert(std::move(w));
  }
  return out;
}

}  // namespace

Report genfun_check(std::span<const int> mu, ClassicalType t, const LFunction& L,
                    int q_cap, int window) {
  const int n = t.n;
  const int cap_half = 2 * q_cap;
  Report report{"genfun", {}};
  PartitionFunction pf(t, L);
  PartitionFunction pf_a({Family::A, n}, LFunction{L.long_half, L.long_half});

  const auto direct = genfun_coefficients(mu, t, L, q_cap);
  const Partition no_partition;

  // series form against the alternating sums
  {
    Cell cell = make_cell(no_partition, no_partition, t.name() + " series", n);
    std::set<Weight> lambdas = window_around(mu, window);
    for (const auto& [lam, c] : direct) lambdas.insert(lam);
    long agree = 0;
    for (const auto& lam : lambdas) {
      auto it = direct.find(lam);
      const QPoly lhs = it == direct.end() ? QPoly() : it->second;
      const QPoly rhs = stable_kl(lam, mu, pf).truncated(cap_half);
      if (lhs == rhs) {
        ++agree;
      } else if (cell.pass) {
        cell.pass = false;
        cell.detail = "lambda=" + weight_text(lam) + ": series " + lhs.str() +
                      " vs alternating sum " + rhs.str();
      }
    }
    cell.vertices = static_cast<long>(lambdas.size());
    cell.x = std::to_string(agree);
    cell.k = std::to_string(lambdas.size());
    report.cells.push_back(std::move(cell));
  }

  // the non-A factor pulled out of E
  {
    Cell cell = make_cell(no_partition, no_partition, t.name() + " factorized", n);
    CharPoly a_part = CharPoly::monomial(Exponents(mu.begin(), mu.end()));
    const RootSystem rs = RootSystem::make(t);
    for (const auto& r : rs.positive)
      if (r.in_type_a)
        a_part = times_geometric(a_part, r.vec, QPoly::monomial(rs.l_half(r, L)), -1,
                                 cap_half);
    const CharPoly outer =
        t.family == Family::A
            ? CharPoly::one(n)
            : littlewood_product(diamond_for(t.family), n, cap_half);
    CharPoly combined = (outer * demazure_E(a_part)).truncated_q(cap_half);
    auto factored = schur_expand(combined);
    cell.x = std::to_string(factored.size()) + " weights";
    cell.k = std::to_string(direct.size()) + " weights";
    cell.vertices = static_cast<long>(direct.size());
    if (factored != direct) {
      cell.pass = false;
      for (const auto& [lam, c] : direct) {
        auto it = factored.find(lam);
        if (it == factored.end() || it->second != c) {
          cell.detail = "lambda=" + weight_text(lam) + ": direct " + c.str() +
                        " vs factorized " +
                        (it == factored.end() ? std::string("0") : it->second.str());
          break;
        }
      }
      if (cell.detail.empty()) cell.detail = "factorized side has extra weights";
    }
    report.cells.push_back(std::move(cell));
  }

  // exact convolution with tensor product coefficients
  {
    Cell cell = make_cell(no_partition, no_partition, t.name() + " convolution", n);
    const Diamond d = diamond_for(t.family);
    const int mu_size = weight_size(mu);
    std::map<std::pair<Weight, Weight>, std::map<Exponents, QPoly>> products;
    long agree = 0, total = 0;
    for (const auto& lam : window_around(mu, window)) {
      const int gamma_size = weight_size(lam) - mu_size;
      QPoly conv;
      if (gamma_size >= 0) {
        int lam_tail = 0;
        for (int i = 0; i + 1 < n; ++i) lam_tail += lam[i];
        for (const auto& nu : decreasing_vectors(n, mu_size - lam_tail, lam[0])) {
          if (weight_size(nu) != mu_size) continue;
          const QPoly a = stable_kl(nu, mu, pf_a);
          if (a.is_zero()) continue;
          for (const auto& g : partitions_of(gamma_size, n)) {
            if (!tiles(d, g)) continue;
            const Weight gp = padded(g, n);
            auto key = std::make_pair(gp, nu);
            auto it = products.find(key);
            if (it == products.end())
              it = products.emplace(key, schur_expand(schur(gp) * schur(nu))).first;
            auto c = it->second.find(lam);
            if (c == it->second.end()) continue;
            conv += c->second * a.shifted(gamma_size);
          }
        }
      }
      const QPoly rhs = stable_kl(lam, mu, pf);
      ++total;
      if (conv == rhs) {
        ++agree;
      } else if (cell.pass) {
        cell.pass = false;
        cell.detail = "lambda=" + weight_text(lam) + ": convolution " + conv.str() +
                      " vs alternating sum " + rhs.str();
      }
    }
    cell.vertices = total;
    cell.x = std::to_string(agree);
    cell.k = std::to_string(total);
    report.cells.push_back(std::move(cell));
  }
  return report;
}

}  // namespace onedim
