#include "onedim/kostka.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>

#include "onedim/onedim.hpp"

namespace onedim {

namespace {

int length(const Partition& p) { return static_cast<int>(p.size()); }

PartitionFunction& type_a_partition_function(int n) {
  thread_local std::map<int, std::unique_ptr<PartitionFunction>> cache;
  auto& slot = cache[n];
  if (!slot)
    slot = std::make_unique<PartitionFunction>(ClassicalType{Family::A, n}, LFunction::unit());
  return *slot;
}

QPoly bar_shift(const QPoly& p, int half_units) { return p.bar().shifted(half_units); }

bool dominates(const Partition& nu, const Partition& mu, int n) {
  return dominance_geq(padded(nu, n), padded(mu, n), ClassicalType{Family::A, n});
}

}  // namespace

std::vector<Tableau> semistandard_tableaux(const Partition& shape,
                                           const std::vector<int>& content) {
  std::vector<Tableau> out;
  if (weight_size(shape) != weight_size(content)) return out;
  const int rows = length(shape);
  Tableau t(rows);

  // Adds `left` copies of `letter` as a horizontal strip, row `i` onwards.
  std::function<void(std::size_t)> next_letter;
  std::function<void(std::size_t, int, int, const std::vector<int>&)> place =
      [&](std::size_t v, int i, int left, const std::vector<int>& old) {
        if (left == 0) {
          next_letter(v + 1);
          return;
        }
        if (i == rows) return;
        const int cap = std::min(shape[i], i == 0 ? shape[0] : old[i - 1]);
        const int room = cap - static_cast<int>(t[i].size());
        for (int a = std::min(room, left); a >= 0; --a) {
          t[i].insert(t[i].end(), a, static_cast<int>(v) + 1);
          place(v, i + 1, left - a, old);
          t[i].resize(t[i].size() - a);
        }
      };
  next_letter = [&](std::size_t v) {
    if (v == content.size()) {
      out.push_back(t);
      return;
    }
    std::vector<int> old(rows);
    for (int i = 0; i < rows; ++i) old[i] = static_cast<int>(t[i].size());
    place(v, 0, content[v], old);
  };
  next_letter(0);
  return out;
}

std::vector<int> reading_word(const Tableau& t) {
  std::vector<int> w;
  for (auto it = t.rbegin(); it != t.rend(); ++it) w.insert(w.end(), it->begin(), it->end());
  return w;
}

int charge(const std::vector<int>& word) {
  std::vector<int> w = word;
  int total = 0;
  while (!w.empty()) {
    const int top = *std::max_element(w.begin(), w.end());
    const int len = static_cast<int>(w.size());
    std::vector<int> taken;
    int pos = len, index = 0;
    for (int letter = 1; letter <= top; ++letter) {
      int found = -1;
      for (int p = pos - 1; p >= 0; --p)
        if (w[p] == letter) {
          found = p;
          break;
        }
      if (found < 0) {
        for (int p = len - 1; p > pos; --p)
          if (w[p] == letter) {
            found = p;
            break;
          }
        if (found < 0) throw std::invalid_argument("charge: content is not a partition");
        if (letter > 1) ++index;
      }
      total += index;
      taken.push_back(found);
      pos = found;
    }
    std::sort(taken.begin(), taken.end());
    for (auto it = taken.rbegin(); it != taken.rend(); ++it) w.erase(w.begin() + *it);
  }
  return total;
}

QPoly kostka_foulkes(const Partition& lambda, const Partition& mu, KostkaRoute route) {
  if (weight_size(lambda) != weight_size(mu)) return QPoly();
  const int n = std::max({length(lambda), length(mu), 1});
  switch (route) {
    case KostkaRoute::Lusztig:
      return stable_kl(padded(lambda, n), padded(mu, n), type_a_partition_function(n));
    case KostkaRoute::Charge: {
      QPoly out;
      for (const auto& t : semistandard_tableaux(lambda, mu))
        out.add_term(2 * charge(reading_word(t)), 1);
      return out;
    }
    case KostkaRoute::OneDim: {
      if (!dominates(lambda, mu, n)) return QPoly();
      const QPoly x = x_sum(lambda, mu, Diamond::Empty, n).value;
      return bar_shift(x, 2 * weight_norm(mu));
    }
  }
  return QPoly();
}

QPoly cocharge_kf(const Partition& lambda, const Partition& mu, KostkaRoute route) {
  return bar_shift(kostka_foulkes(lambda, mu, route), 2 * weight_norm(mu));
}

long lr_coefficient(const Partition& lambda, const Partition& gamma, const Partition& nu) {
  if (weight_size(nu) != weight_size(lambda) + weight_size(gamma)) return 0;
  const int n = std::max(1, length(lambda) + length(gamma));
  if (length(nu) > n) return 0;

  static std::mutex mu;
  static std::map<std::pair<Partition, Partition>, std::map<Exponents, QPoly>> cache;
  const auto key = std::make_pair(lambda, gamma);
  {
    std::lock_guard<std::mutex> lock(mu);
    if (const auto it = cache.find(key); it != cache.end()) {
      const auto c = it->second.find(padded(nu, n));
      return c == it->second.end() ? 0 : c->second.coefficient(0);
    }
  }
  auto expansion = schur_expand(schur(padded(lambda, n)) * schur(padded(gamma, n)));
  const auto c = expansion.find(padded(nu, n));
  const long value = c == expansion.end() ? 0 : c->second.coefficient(0);
  std::lock_guard<std::mutex> lock(mu);
  cache.emplace(key, std::move(expansion));
  return value;
}

QPoly k_polynomial(const Partition& lambda, const Partition& mu, Diamond d) {
  const int excess = weight_size(mu) - weight_size(lambda);
  if (excess < 0) return QPoly();
  const int m = std::max({length(lambda), length(mu), 1});
  QPoly out;
  for (const auto& nu : partitions_of(weight_size(mu), m)) {
    if (!dominates(nu, mu, m)) continue;
    long mult = 0;
    for (const auto& gamma : partitions_of(excess, m))
      if (tiles(d, gamma)) mult += lr_coefficient(lambda, gamma, nu);
    if (mult) out += QPoly(mult) * cocharge_kf(nu, mu, KostkaRoute::Charge);
  }
  return out.shifted(excess);
}

long branching_check(const Partition& nu, const Partition& lambda, int n) {
  const int m = std::max(length(nu), length(lambda));
  if (n < m) throw std::invalid_argument("branching_check: rank smaller than the partitions");
  const int excess = weight_size(nu) - weight_size(lambda);
  if (excess < 0) return 0;
  long total = 0;
  for (const auto& gamma : partitions_of(excess, std::max(m, 1)))
    if (tiles(Diamond::OneOne, gamma)) total += lr_coefficient(lambda, gamma, nu);
  return total;
}

Cell verify_kostka_routes(const Partition& lambda, const Partition& mu) {
  Cell cell = make_cell(lambda, mu, "empty", std::max({length(lambda), length(mu), 1}));
  const QPoly a = kostka_foulkes(lambda, mu, KostkaRoute::Lusztig);
  const QPoly b = kostka_foulkes(lambda, mu, KostkaRoute::Charge);
  const QPoly c = kostka_foulkes(lambda, mu, KostkaRoute::OneDim);
  cell.x = a.str();
  cell.k = b.str();
  cell.vertices = b.at_one();
  if (a != b || a != c) {
    cell.pass = false;
    cell.detail = "lusztig " + a.str() + ", charge " + b.str() + ", one-dim " + c.str();
  }
  return cell;
}

Cell verify_duality(const Partition& lambda, const Partition& mu) {
  const int m = std::max({length(lambda), length(mu), 1});
  Cell cell = make_cell(lambda, mu, "empty", m);
  const HatPair h = hat_pair(lambda, mu, m, m);
  const QPoly a = kostka_foulkes(lambda, mu, KostkaRoute::Lusztig);
  const QPoly b = kostka_foulkes(make_partition(h.lambda_hat), make_partition(h.mu_hat),
                                 KostkaRoute::Charge);
  cell.x = a.str();
  cell.k = b.str();
  if (a != b) {
    cell.pass = false;
    cell.detail = "twisted pair " + format_partition(h.lambda_hat) + " / " +
                  format_partition(h.mu_hat) + " differs";
  }
  return cell;
}

Cell verify_theorem6(const Partition& lambda, const Partition& mu, Diamond d, int n,
                     const LFunction& L) {
  const ClassicalType t{family_of(d), n};
  const int m = std::max(length(lambda), length(mu));
  Cell cell = make_cell(lambda, mu, diamond_name(d), n);
  PartitionFunction pf(t, L);
  const QPoly left = k_polynomial(lambda, mu, d);
  const int shift = 2 * (weight_norm(mu) + weight_size(mu) - weight_size(lambda));
  cell.x = left.str();
  for (int extra = 0; extra <= 1; ++extra) {
    const HatPair h = hat_pair(lambda, mu, m, n, extra);
    const QPoly right = bar_shift(stable_kl(h.lambda_hat, h.mu_hat, pf), shift);
    if (extra == 0) cell.k = right.str();
    if (right != left) {
      cell.pass = false;
      cell.detail += (cell.detail.empty() ? "" : "; ") + std::string("M=") +
                     std::to_string(h.M) + " gives " + right.str();
    }
  }
  cell.vertices = 2;
  return cell;
}

Cell verify_kl_expansion(const Partition& lambda, const Partition& mu, Diamond d, int n,
                         const LFunction& L) {
  const ClassicalType t{family_of(d), n};
  const int m = std::max(length(lambda), length(mu));
  Cell cell = make_cell(lambda, mu, diamond_name(d), n);
  PartitionFunction pf(t, L);
  PartitionFunction& pfa = type_a_partition_function(n);
  const HatPair h = hat_pair(lambda, mu, m, n);
  const QPoly first = stable_kl(h.lambda_hat, h.mu_hat, pf);
  const QPoly starred = stable_kl(star(padded(lambda, n)), star(padded(mu, n)), pf);

  const int excess = weight_size(mu) - weight_size(lambda);
  QPoly expanded;
  if (excess >= 0) {
    for (const auto& nu : partitions_of(weight_size(mu), n)) {
      long mult = 0;
      for (const auto& gamma : partitions_of(excess, n))
        if (tiles(d, gamma)) mult += lr_coefficient(lambda, gamma, nu);
      if (mult) expanded += QPoly(mult) * stable_kl(padded(nu, n), padded(mu, n), pfa);
    }
    expanded = expanded.shifted(excess);
  }
  cell.x = first.str();
  cell.k = expanded.str();
  if (first != starred || first != expanded) {
    cell.pass = false;
    cell.detail = "twisted " + first.str() + ", starred " + starred.str() + ", expanded " +
                  expanded.str();
  }
  return cell;
}

Cell verify_star_duality(const Weight& lambda, const Weight& mu) {
  const int n = static_cast<int>(lambda.size());
  Cell cell = make_cell({}, {}, "empty", n);
  PartitionFunction& pf = type_a_partition_function(n);
  const QPoly a = stable_kl(lambda, mu, pf);
  const QPoly b = stable_kl(star(lambda), star(mu), pf);
  cell.x = a.str();
  cell.k = b.str();
  if (a != b) {
    cell.pass = false;
    cell.detail = "weights " + format_partition(lambda) + " / " + format_partition(mu);
  }
  return cell;
}

}  // namespace onedim
