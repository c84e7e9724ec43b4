#include "onedim/crystal.hpp"

#include <algorithm>
#include <charconv>
#include <deque>
#include <functional>
#include <set>
#include <sstream>
#include <stdexcept>

namespace onedim {

std::vector<int> TensorVertex::shape() const {
  std::vector<int> s;
  for (const auto& r : factors) s.push_back(static_cast<int>(r.size()));
  return s;
}

int TensorVertex::size() const {
  int s = 0;
  for (const auto& r : factors) s += static_cast<int>(r.size());
  return s;
}

std::string kind_name(CrystalKind k) {
  switch (k) {
    case CrystalKind::A: return "A";
    case CrystalKind::C: return "C";
    case CrystalKind::DDagger: return "D";
  }
  return "?";
}

Crystal::Crystal(CrystalKind kind, int n) : kind_(kind), n_(n) {
  if (n < 1 || (kind == CrystalKind::DDagger && n < 2))
    throw std::invalid_argument("crystal rank out of range");
  for (int i = 1; i < n; ++i) a_colors_.push_back(i);
  switch (kind) {
    case CrystalKind::A:
      colors_ = a_colors_;
      for (int i = 1; i <= n; ++i) letters_.push_back(i);
      break;
    case CrystalKind::C:
      colors_ = a_colors_;
      colors_.push_back(n);
      for (int i = 1; i <= n; ++i) letters_.push_back(i);
      for (int i = n; i >= 1; --i) letters_.push_back(-i);
      break;
    case CrystalKind::DDagger:
      colors_.push_back(0);
      colors_.insert(colors_.end(), a_colors_.begin(), a_colors_.end());
      for (int i = n; i >= 2; --i) letters_.push_back(-i);
      letters_.push_back(1);
      letters_.push_back(-1);
      for (int i = 2; i <= n; ++i) letters_.push_back(i);
      break;
  }

  const int nletters = kind == CrystalKind::A ? n : 2 * n;
  f_.assign(colors_.size(), std::vector<int>(nletters, -1));
  e_.assign(colors_.size(), std::vector<int>(nletters, -1));
  auto arrow = [&](int color, Letter from, Letter to) {
    const int slot = color_slot(color);
    f_[slot][index(from)] = index(to);
    e_[slot][index(to)] = index(from);
  };

  if (kind == CrystalKind::DDagger) {
    // Standard D_n arrows, then colors i -> n-i and letters
    // j -> bar(n+1-j), bar(j) -> n+1-j.
    auto relabel = [n](Letter x) { return x > 0 ? -(n + 1 - x) : n + 1 + x; };
    for (int i = 1; i < n; ++i) {
      arrow(n - i, relabel(i), relabel(i + 1));
      arrow(n - i, relabel(-(i + 1)), relabel(-i));
    }
    arrow(0, relabel(n - 1), relabel(-n));
    arrow(0, relabel(n), relabel(-(n - 1)));
  } else {
    for (int i = 1; i < n; ++i) {
      arrow(i, i, i + 1);
      if (kind == CrystalKind::C) arrow(i, -(i + 1), -i);
    }
    if (kind == CrystalKind::C) arrow(n, n, -n);
  }

  for (int color : colors_) {
    const Weight alpha = simple_root(color);
    for (Letter x : letters_) {
      const auto y = f(color, x);
      if (!y) continue;
      const Weight wx = weight(x), wy = weight(*y);
      for (int k = 0; k < n; ++k)
        if (wy[k] - wx[k] != -alpha[k])
          throw std::logic_error("letter crystal arrow has the wrong weight");
    }
  }
}

int Crystal::color_slot(int color) const {
  const int slot = kind_ == CrystalKind::DDagger ? color : color - 1;
  if (slot < 0 || slot >= static_cast<int>(colors_.size()))
    throw std::invalid_argument("color " + std::to_string(color) + " not valid for type " +
                                kind_name(kind_));
  return slot;
}

int letter_rank(CrystalKind k, int n, Letter x) {
  switch (k) {
    case CrystalKind::A: return x;
    case CrystalKind::C: return x > 0 ? x : 2 * n + 1 + x;
    case CrystalKind::DDagger:
      if (x < 0) return n + 1 + x;
      return x == 1 ? n : n - 1 + x;
  }
  return 0;
}

Letter Crystal::top_letter() const { return kind_ == CrystalKind::DDagger ? -n_ : 1; }

std::optional<Letter> Crystal::f(int color, Letter x) const {
  const int j = f_[color_slot(color)][index(x)];
  if (j < 0) return std::nullopt;
  return j < n_ ? j + 1 : -(j - n_ + 1);
}

std::optional<Letter> Crystal::e(int color, Letter x) const {
  const int j = e_[color_slot(color)][index(x)];
  if (j < 0) return std::nullopt;
  return j < n_ ? j + 1 : -(j - n_ + 1);
}

bool Crystal::geq(Letter x, Letter y) const {
  if (x != y && rank(x) == rank(y)) return false;
  return rank(x) >= rank(y);
}

bool Crystal::is_row(const Row& r) const {
  for (Letter x : r) {
    const int a = std::abs(x);
    if (a < 1 || a > n_ || (x < 0 && kind_ == CrystalKind::A)) return false;
  }
  for (std::size_t i = 1; i < r.size(); ++i)
    if (!geq(r[i - 1], r[i])) return false;
  return true;
}

Weight Crystal::simple_root(int color) const {
  color_slot(color);
  Weight a(n_, 0);
  if (kind_ == CrystalKind::DDagger && color == 0) {
    a[0] = -1;
    a[1] = -1;
  } else if (kind_ == CrystalKind::C && color == n_) {
    a[n_ - 1] = 2;
  } else {
    a[color - 1] = 1;
    a[color] = -1;
  }
  return a;
}

Weight Crystal::weight(Letter x) const {
  Weight w(n_, 0);
  w[std::abs(x) - 1] = x > 0 ? 1 : -1;
  return w;
}

Weight Crystal::weight(const TensorVertex& b) const {
  Weight w(n_, 0);
  for (const auto& r : b.factors)
    for (Letter x : r) w[std::abs(x) - 1] += x > 0 ? 1 : -1;
  return w;
}

void Crystal::signature(const TensorVertex& b, int color, std::vector<int>& minus,
                        std::vector<int>& plus) const {
  const int slot = color_slot(color);
  minus.clear();
  plus.clear();
  int pos = 0;
  for (const auto& r : b.factors) {
    for (Letter x : r) {
      const int i = index(x);
      if (e_[slot][i] >= 0) {
        if (!plus.empty())
          plus.pop_back();
        else
          minus.push_back(pos);
      }
      if (f_[slot][i] >= 0) plus.push_back(pos);
      ++pos;
    }
  }
}

namespace {

Letter& letter_at(TensorVertex& b, int pos) {
  for (auto& r : b.factors) {
    if (pos < static_cast<int>(r.size())) return r[pos];
    pos -= static_cast<int>(r.size());
  }
  throw std::logic_error("letter position out of range");
}

}  // namespace

std::optional<TensorVertex> Crystal::f(const TensorVertex& b, int color) const {
  std::vector<int> minus, plus;
  signature(b, color, minus, plus);
  if (plus.empty()) return std::nullopt;
  TensorVertex out = b;
  Letter& x = letter_at(out, plus.front());
  x = *f(color, x);
  return out;
}

std::optional<TensorVertex> Crystal::e(const TensorVertex& b, int color) const {
  std::vector<int> minus, plus;
  signature(b, color, minus, plus);
  if (minus.empty()) return std::nullopt;
  TensorVertex out = b;
  Letter& x = letter_at(out, minus.back());
  x = *e(color, x);
  return out;
}

int Crystal::epsilon(const TensorVertex& b, int color) const {
  std::vector<int> minus, plus;
  signature(b, color, minus, plus);
  return static_cast<int>(minus.size());
}

int Crystal::phi(const TensorVertex& b, int color) const {
  std::vector<int> minus, plus;
  signature(b, color, minus, plus);
  return static_cast<int>(plus.size());
}

bool Crystal::is_highest_weight(const TensorVertex& b, std::span<const int> colors) const {
  return std::all_of(colors.begin(), colors.end(),
                     [&](int c) { return epsilon(b, c) == 0; });
}

Raised Crystal::raise(const TensorVertex& b, std::span<const int> colors) const {
  std::vector<int> order(colors.begin(), colors.end());
  std::sort(order.begin(), order.end());
  Raised out{b, {}};
  for (bool moved = true; moved;) {
    moved = false;
    for (int c : order) {
      if (auto up = e(out.hw, c)) {
        out.hw = std::move(*up);
        out.path.push_back(c);
        moved = true;
        break;
      }
    }
  }
  return out;
}

TensorVertex Crystal::lower(TensorVertex hw, std::span<const int> path) const {
  for (auto it = path.rbegin(); it != path.rend(); ++it) {
    auto down = f(hw, *it);
    if (!down) throw std::logic_error("lowering path does not apply");
    hw = std::move(*down);
  }
  return hw;
}

std::vector<Row> Crystal::rows(int s, std::span<const Letter> alphabet) const {
  std::vector<Letter> alpha(alphabet.begin(), alphabet.end());
  if (alpha.empty()) alpha = letters_;
  std::stable_sort(alpha.begin(), alpha.end(),
                   [&](Letter x, Letter y) { return rank(x) > rank(y); });
  std::vector<Row> out;
  Row cur;
  std::function<void(std::size_t)> rec = [&](std::size_t from) {
    if (static_cast<int>(cur.size()) == s) {
      out.push_back(cur);
      return;
    }
    for (std::size_t i = from; i < alpha.size(); ++i) {
      if (!cur.empty() && !geq(cur.back(), alpha[i])) continue;
      cur.push_back(alpha[i]);
      rec(i);
      cur.pop_back();
    }
  };
  rec(0);
  return out;
}

std::vector<TensorVertex> Crystal::component(const TensorVertex& b,
                                             std::span<const int> colors) const {
  if (colors.empty()) colors = colors_;
  std::set<TensorVertex> seen{b};
  std::deque<TensorVertex> queue{b};
  while (!queue.empty()) {
    const TensorVertex v = std::move(queue.front());
    queue.pop_front();
    for (int c : colors) {
      for (auto next : {f(v, c), e(v, c)}) {
        if (next && seen.insert(*next).second) queue.push_back(std::move(*next));
      }
    }
  }
  return {seen.begin(), seen.end()};
}

std::string format_letter(Letter x) {
  return x > 0 ? std::to_string(x) : std::to_string(-x) + "~";
}

Letter parse_letter(std::string_view text) {
  bool barred = false;
  if (!text.empty() && text.back() == '~') {
    barred = true;
    text.remove_suffix(1);
  }
  int v = 0;
  auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (text.empty() || ec != std::errc() || end != text.data() + text.size() || v < 1)
    throw std::invalid_argument("bad letter: '" + std::string(text) + "'");
  return barred ? -v : v;
}

std::string format_vertex(const TensorVertex& b) {
  std::string out;
  for (std::size_t i = 0; i < b.factors.size(); ++i) {
    if (i) out += '|';
    for (std::size_t j = 0; j < b.factors[i].size(); ++j) {
      if (j) out += ' ';
      out += format_letter(b.factors[i][j]);
    }
  }
  return out;
}

TensorVertex parse_vertex(std::string_view text) {
  TensorVertex b;
  if (text.find_first_not_of(' ') == std::string_view::npos) return b;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t bar = std::min(text.find('|', pos), text.size());
    std::istringstream is{std::string(text.substr(pos, bar - pos))};
    Row r;
    for (std::string tok; is >> tok;) r.push_back(parse_letter(tok));
    if (r.empty()) throw std::invalid_argument("empty tensor factor in '" + std::string(text) + "'");
    b.factors.push_back(std::move(r));
    pos = bar + 1;
  }
  return b;
}

std::vector<TensorVertex> all_vertices(const Crystal& cr, std::span<const int> shape,
                                       std::span<const Letter> alphabet) {
  std::vector<TensorVertex> out{TensorVertex{}};
  for (int s : shape) {
    const auto rows = cr.rows(s, alphabet);
    std::vector<TensorVertex> next;
    next.reserve(out.size() * rows.size());
    for (const auto& b : out)
      for (const auto& r : rows) {
        TensorVertex v = b;
        v.factors.push_back(r);
        next.push_back(std::move(v));
      }
    out = std::move(next);
  }
  return out;
}

std::vector<TensorVertex> highest_weight_vertices(const Crystal& cr,
                                                  std::span<const int> shape,
                                                  const HwQuery& query) {
  const std::vector<int> colors = query.colors.empty() ? cr.colors() : query.colors;
  const std::size_t nc = colors.size();

  struct Candidate {
    Row row;
    std::vector<int> eps, phi;
  };
  std::map<int, std::vector<Candidate>> by_length;
  for (int s : shape) {
    if (s < 1) throw std::invalid_argument("shape entries must be positive");
    if (by_length.count(s)) continue;
    auto& list = by_length[s];
    for (auto& r : cr.rows(s, query.alphabet)) {
      Candidate c{std::move(r), std::vector<int>(nc), std::vector<int>(nc)};
      const TensorVertex single{{c.row}};
      for (std::size_t k = 0; k < nc; ++k) {
        c.eps[k] = cr.epsilon(single, colors[k]);
        c.phi[k] = cr.phi(single, colors[k]);
      }
      list.push_back(std::move(c));
    }
  }

  std::vector<TensorVertex> out;
  TensorVertex cur;
  std::function<void(std::size_t, const std::vector<int>&)> rec =
      [&](std::size_t depth, const std::vector<int>& phi) {
        if (depth == shape.size()) {
          if (!query.weight || cr.weight(cur) == *query.weight) out.push_back(cur);
          return;
        }
        for (const auto& c : by_length[shape[depth]]) {
          bool ok = true;
          for (std::size_t k = 0; k < nc && ok; ++k) ok = phi[k] >= c.eps[k];
          if (!ok) continue;
          std::vector<int> next(nc);
          for (std::size_t k = 0; k < nc; ++k) next[k] = c.phi[k] + phi[k] - c.eps[k];
          cur.factors.push_back(c.row);
          rec(depth + 1, next);
          cur.factors.pop_back();
        }
      };
  rec(0, std::vector<int>(nc, 0));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Letter> type_c_hw_alphabet(int m, int n) {
  std::vector<Letter> out;
  for (int i = 1; i <= std::min(m, n); ++i) out.push_back(i);
  for (int i = std::min(m - 1, n); i >= 1; --i) out.push_back(-i);
  return out;
}

std::vector<TensorVertex> f_set(const Crystal& cr, const Partition& lambda,
                                const Partition& mu) {
  HwQuery q;
  q.weight = padded(lambda, cr.n());
  const int m = static_cast<int>(mu.size());
  if (cr.kind() == CrystalKind::C && m <= cr.n()) q.alphabet = type_c_hw_alphabet(m, cr.n());
  return highest_weight_vertices(cr, mu, q);
}

ESet e_set(const Partition& mu, const Partition& lambda, int n) {
  if (static_cast<int>(mu.size()) >= n)
    throw std::invalid_argument("e_set needs length(mu) < n");
  const Crystal a(CrystalKind::A, n);
  const Crystal d(CrystalKind::DDagger, n);

  ESet out;
  std::map<TensorVertex, TensorVertex> source_of;  // D-highest weight -> source
  for (const auto& b : highest_weight_vertices(a, mu)) {
    out.by_source[b];
    if (!source_of.emplace(d.raise(b).hw, b).second)
      throw std::logic_error("two unbarred A-highest weight vertices in one D-component");
  }

  HwQuery q;
  q.colors = d.a_colors();
  q.weight = padded(lambda, n);
  for (const auto& v : highest_weight_vertices(d, mu, q)) {
    const auto it = source_of.find(d.raise(v).hw);
    if (it == source_of.end()) continue;
    out.by_source[it->second].push_back(v);
    out.all.push_back(v);
  }
  std::sort(out.all.begin(), out.all.end());
  return out;
}

Row theta_row(const Row& r, int n) {
  const bool has_n = std::find(r.begin(), r.end(), n) != r.end();
  const bool has_nbar = std::find(r.begin(), r.end(), -n) != r.end();
  if (has_n && has_nbar) throw std::invalid_argument("row contains both n and n-bar");
  const Crystal c(CrystalKind::C, n);
  const Crystal d(CrystalKind::DDagger, n);
  if (!c.is_row(r)) throw std::invalid_argument("not a type C row");

  const Raised up = c.raise(TensorVertex{{r}}, c.a_colors());
  const Row& hw = up.hw.factors[0];
  const auto alpha = std::count(hw.begin(), hw.end(), -n);
  const auto beta = std::count(hw.begin(), hw.end(), 1);
  if (alpha + beta != static_cast<long>(hw.size()))
    throw std::invalid_argument("row lies outside the n-bar/n free subcrystal");
  Row target(beta, 1);
  target.insert(target.end(), alpha, -n);
  return d.lower(TensorVertex{{target}}, up.path).factors[0];
}

TensorVertex theta(const TensorVertex& b, int n) {
  TensorVertex out;
  for (const auto& r : b.factors) out.factors.push_back(theta_row(r, n));
  return out;
}

std::string to_dot(const Crystal& cr, std::span<const TensorVertex> vertices,
                   std::span<const int> colors) {
  const std::set<TensorVertex> sorted(vertices.begin(), vertices.end());
  std::map<TensorVertex, std::size_t> id;
  for (const auto& v : sorted) id.emplace(v, id.size());
  std::ostringstream os;
  os << "digraph crystal {\n";
  for (const auto& [v, i] : id) os << "  v" << i << " [label=\"" << format_vertex(v) << "\"];\n";
  for (const auto& [v, i] : id) {
    for (int c : colors) {
      const auto w = cr.f(v, c);
      if (!w) continue;
      const auto it = id.find(*w);
      if (it != id.end())
        os << "  v" << i << " -> v" << it->second << " [label=\"" << c << "\"];\n";
    }
  }
  os << "}\n";
  return os.str();
}

}  // namespace onedim
