#include "onedim/weights.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "onedim/algebra.hpp"

namespace onedim {

Partition make_partition(std::vector<int> parts) {
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i] < 0) throw std::invalid_argument("partition has a negative part");
    if (i > 0 && parts[i - 1] < parts[i])
      throw std::invalid_argument("partition parts must be weakly decreasing");
  }
  while (!parts.empty() && parts.back() == 0) parts.pop_back();
  return parts;
}

Partition parse_partition(std::string_view text) {
  std::vector<int> parts;
  std::size_t pos = 0;
  while (pos < text.size() && text[pos] == ' ') ++pos;
  if (pos == text.size()) return parts;
  while (pos <= text.size()) {
    const std::size_t comma = std::min(text.find(',', pos), text.size());
    std::string_view tok = text.substr(pos, comma - pos);
    while (!tok.empty() && tok.front() == ' ') tok.remove_prefix(1);
    while (!tok.empty() && tok.back() == ' ') tok.remove_suffix(1);
    int v = 0;
    auto [end, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (tok.empty() || ec != std::errc() || end != tok.data() + tok.size())
      throw std::invalid_argument("bad partition: '" + std::string(text) + "'");
    parts.push_back(v);
    pos = comma + 1;
  }
  return make_partition(std::move(parts));
}

std::string format_partition(std::span<const int> parts) {
  std::ostringstream os;
  for (std::size_t i = 0; i < parts.size(); ++i) os << (i ? "," : "") << parts[i];
  return os.str();
}

std::vector<Partition> partitions_of(int size, int max_parts) {
  std::vector<Partition> out;
  Partition cur;
  std::function<void(int, int)> rec = [&](int remaining, int max_part) {
    if (remaining == 0) {
      out.push_back(cur);
      return;
    }
    if (static_cast<int>(cur.size()) == max_parts) return;
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
      cur.push_back(p);
      rec(remaining - p, p);
      cur.pop_back();
    }
  };
  rec(size, size);
  return out;
}

std::vector<Partition> partitions_up_to(int max_size, int max_parts) {
  std::vector<Partition> out;
  for (int s = 0; s <= max_size; ++s) {
    auto ps = partitions_of(s, max_parts);
    out.insert(out.end(), ps.begin(), ps.end());
  }
  return out;
}

Weight padded(std::span<const int> p, int n) {
  if (static_cast<int>(p.size()) > n)
    throw std::invalid_argument("weight has more parts than the rank");
  Weight w(p.begin(), p.end());
  w.resize(n, 0);
  return w;
}

int weight_size(std::span<const int> mu) {
  return std::accumulate(mu.begin(), mu.end(), 0);
}

int weight_norm(std::span<const int> mu) {
  int s = 0;
  for (std::size_t i = 0; i < mu.size(); ++i) s += static_cast<int>(i) * mu[i];
  return s;
}

Weight star(std::span<const int> beta) {
  Weight out(beta.rbegin(), beta.rend());
  for (auto& x : out) x = -x;
  return out;
}

std::string ClassicalType::name() const {
  static const char letters[] = {'A', 'B', 'C', 'D'};
  const int rank = family == Family::A ? n - 1 : n;
  return std::string(1, letters[static_cast<int>(family)]) + std::to_string(rank);
}

ClassicalType parse_type(std::string_view text) {
  if (text.size() < 2) throw std::invalid_argument("bad type: " + std::string(text));
  Family f;
  switch (text[0]) {
    case 'A': f = Family::A; break;
    case 'B': f = Family::B; break;
    case 'C': f = Family::C; break;
    case 'D': f = Family::D; break;
    default: throw std::invalid_argument("bad type: " + std::string(text));
  }
  int rank = 0;
  auto [end, ec] = std::from_chars(text.data() + 1, text.data() + text.size(), rank);
  if (ec != std::errc() || end != text.data() + text.size() || rank < 1)
    throw std::invalid_argument("bad type: " + std::string(text));
  return {f, f == Family::A ? rank + 1 : rank};
}

bool is_dominant(std::span<const int> lambda, ClassicalType t) {
  const int n = t.n;
  if (static_cast<int>(lambda.size()) != n) return false;
  for (int i = 1; i < n; ++i)
    if (lambda[i - 1] < lambda[i]) return false;
  switch (t.family) {
    case Family::A: return true;
    case Family::B:
    case Family::C: return lambda[n - 1] >= 0;
    case Family::D: return n < 2 || lambda[n - 2] >= std::abs(lambda[n - 1]);
  }
  return false;
}

Diamond parse_diamond(std::string_view text) {
  if (text == "empty" || text == "" || text == "0") return Diamond::Empty;
  if (text == "1") return Diamond::One;
  if (text == "2") return Diamond::Two;
  if (text == "11" || text == "1,1") return Diamond::OneOne;
  throw std::invalid_argument("bad diamond: " + std::string(text));
}

std::string diamond_name(Diamond d) {
  switch (d) {
    case Diamond::Empty: return "empty";
    case Diamond::One: return "1";
    case Diamond::Two: return "2";
    case Diamond::OneOne: return "11";
  }
  return "?";
}

Family family_of(Diamond d) {
  switch (d) {
    case Diamond::Empty: return Family::A;
    case Diamond::One: return Family::B;
    case Diamond::Two: return Family::C;
    case Diamond::OneOne: return Family::D;
  }
  return Family::A;
}

bool tiles(Diamond d, std::span<const int> gamma) {
  std::vector<int> g(gamma.begin(), gamma.end());
  while (!g.empty() && g.back() == 0) g.pop_back();
  switch (d) {
    case Diamond::Empty: return g.empty();
    case Diamond::One: return true;
    case Diamond::Two:
      return std::all_of(g.begin(), g.end(), [](int x) { return x % 2 == 0; });
    case Diamond::OneOne:
      if (g.size() % 2) return false;
      for (std::size_t i = 0; i < g.size(); i += 2)
        if (g[i] != g[i + 1]) return false;
      return true;
  }
  return false;
}

Weight rho_half(ClassicalType t) {
  const int n = t.n;
  Weight r(n);
  for (int i = 0; i < n; ++i) {
    switch (t.family) {
      case Family::A:
      case Family::D: r[i] = 2 * (n - 1 - i); break;
      case Family::B: r[i] = 2 * (n - i) - 1; break;
      case Family::C: r[i] = 2 * (n - i); break;
    }
  }
  return r;
}

std::optional<std::vector<int>> simple_root_coordinates(std::span<const int> beta,
                                                        ClassicalType t) {
  const int n = t.n;
  if (static_cast<int>(beta.size()) != n)
    throw std::invalid_argument("weight length does not match the rank");
  std::vector<int> partial(n);
  std::partial_sum(beta.begin(), beta.end(), partial.begin());
  switch (t.family) {
    case Family::A:
      if (partial[n - 1] != 0) return std::nullopt;
      partial.pop_back();
      return partial;
    case Family::B:
      return partial;
    case Family::C:
      if (partial[n - 1] % 2) return std::nullopt;
      partial[n - 1] /= 2;
      return partial;
    case Family::D: {
      if (n == 1) return std::nullopt;
      const int s_last = partial[n - 1];
      const int s_prev = partial[n - 2] - beta[n - 1];
      if (s_last % 2 || s_prev % 2) return std::nullopt;
      partial[n - 1] = s_last / 2;
      partial[n - 2] = s_prev / 2;
      return partial;
    }
  }
  return std::nullopt;
}

bool dominance_geq(std::span<const int> lambda, std::span<const int> mu,
                   ClassicalType t) {
  if (lambda.size() != mu.size())
    throw std::invalid_argument("dominance_geq: length mismatch");
  Weight diff(lambda.size());
  for (std::size_t i = 0; i < diff.size(); ++i) diff[i] = lambda[i] - mu[i];
  const auto c = simple_root_coordinates(diff, t);
  return c && std::all_of(c->begin(), c->end(), [](int x) { return x >= 0; });
}

HatPair hat_pair(const Partition& lambda, const Partition& mu, int m, int n,
                 int extra) {
  if (static_cast<int>(lambda.size()) > m || static_cast<int>(mu.size()) > m)
    throw std::invalid_argument("hat_pair: partition longer than m");
  if (n < m) throw std::invalid_argument("hat_pair: rank smaller than m");
  const int l1 = lambda.empty() ? 0 : lambda[0];
  const int m1 = mu.empty() ? 0 : mu[0];
  const int diff = weight_size(mu) - weight_size(lambda);
  const int half_up = diff >= 0 ? (diff + 1) / 2 : -((-diff) / 2);
  const int M = std::max(std::max(l1, m1) + half_up, std::max(l1, m1)) + extra;
  HatPair h{star(padded(lambda, n)), star(padded(mu, n)), M};
  for (auto& x : h.lambda_hat) x += M;
  for (auto& x : h.mu_hat) x += M;
  return h;
}

Weight WeylElement::apply(std::span<const int> v) const {
  Weight out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = signs[i] * v[perm[i]];
  return out;
}

std::vector<WeylElement> symmetric_group(int n) {
  std::vector<WeylElement> out;
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    out.push_back({perm, std::vector<int>(n, 1), permutation_sign(perm)});
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

std::vector<WeylElement> weyl_group(ClassicalType t) {
  const int n = t.n;
  const auto perms = symmetric_group(n);
  if (t.family == Family::A) return perms;
  std::vector<WeylElement> out;
  for (const auto& p : perms) {
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
      const int flips = std::popcount(mask);
      if (t.family == Family::D && flips % 2) continue;
      WeylElement w = p;
      for (int i = 0; i < n; ++i)
        if (mask >> i & 1u) w.signs[i] = -1;
      // (-1)^length is the determinant of the signed permutation matrix.
      w.parity = p.parity * (flips % 2 ? -1 : 1);
      out.push_back(std::move(w));
    }
  }
  return out;
}

RootSystem RootSystem::make(ClassicalType t) {
  const int n = t.n;
  RootSystem rs{t, {}};
  auto unit = [n](int i, int si, int j = -1, int sj = 0) {
    Weight v(n, 0);
    v[i] += si;
    if (j >= 0) v[j] += sj;
    return v;
  };
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      rs.positive.push_back({unit(i, 1, j, -1), t.family == Family::C, true});
  if (t.family == Family::A) return rs;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      rs.positive.push_back({unit(i, 1, j, 1), t.family == Family::C, false});
  if (t.family == Family::B)
    for (int i = 0; i < n; ++i) rs.positive.push_back({unit(i, 1), true, false});
  if (t.family == Family::C)
    for (int i = 0; i < n; ++i) rs.positive.push_back({unit(i, 2), false, false});
  return rs;
}

}  // namespace onedim
