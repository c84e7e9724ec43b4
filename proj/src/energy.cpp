#include "onedim/energy.hpp"

#include <algorithm>
#include <stdexcept>

namespace onedim {

namespace {

// The three letters building the second factor of a labeled highest
// weight vertex, and the top letter.
struct Pattern {
  Letter top, first, second;  // second factor is first^a second^b top^{k-a-b}
};

Pattern pattern(CrystalKind kind, int n) {
  switch (kind) {
    case CrystalKind::A: return {1, 1, 2};  // a is always 0
    case CrystalKind::C: return {1, -1, 2};
    case CrystalKind::DDagger: return {-n, n, -(n - 1)};
  }
  return {};
}

}  // namespace

TensorVertex hw_vertex(CrystalKind kind, int n, const HwClass& c) {
  const Pattern p = pattern(kind, n);
  Row second;
  second.insert(second.end(), c.a, p.first);
  second.insert(second.end(), c.b, p.second);
  second.insert(second.end(), c.k - c.a - c.b, p.top);
  return TensorVertex{{Row(c.l, p.top), second}};
}

int h_bar_letters(CrystalKind kind, int n, Letter x, Letter y) {
  if (kind == CrystalKind::DDagger) throw std::invalid_argument("h_bar_letters: type D");
  if (letter_rank(kind, n, x) >= letter_rank(kind, n, y)) return 0;
  return kind == CrystalKind::C && x == 1 && y == -1 ? 2 : 1;
}

int h_tilde(Letter x, Letter y, int n) {
  const int rx = letter_rank(CrystalKind::DDagger, n, x);
  const int ry = letter_rank(CrystalKind::DDagger, n, y);
  if (rx >= ry && (x == y || rx != ry)) return 0;
  return x == -n && y == n ? 2 : 1;
}

Energy::Energy(Crystal crystal) : cr_(std::move(crystal)) {}

HwClass Energy::classify(const TensorVertex& hw) const {
  if (const auto it = class_memo_.find(hw); it != class_memo_.end()) return it->second;
  if (hw.factors.size() != 2) throw std::invalid_argument("classify: need two tensor factors");
  const Pattern p = pattern(cr_.kind(), cr_.n());
  const Row& first = hw.factors[0];
  const Row& second = hw.factors[1];
  HwClass c;
  c.l = static_cast<int>(first.size());
  c.k = static_cast<int>(second.size());
  if (cr_.kind() != CrystalKind::A)
    c.a = static_cast<int>(std::count(second.begin(), second.end(), p.first));
  c.b = static_cast<int>(std::count(second.begin(), second.end(), p.second));
  const bool matches = hw_vertex(cr_.kind(), cr_.n(), c) == hw &&
                       c.a + c.b <= std::min(c.l, c.k);
  if (!matches)
    throw std::logic_error("highest weight vertex " + format_vertex(hw) +
                           " has no label in B_l (x) B_k");
  class_memo_.emplace(hw, c);
  return c;
}

TensorVertex Energy::rmatrix(const TensorVertex& b) const {
  if (const auto it = r_memo_.find(b); it != r_memo_.end()) return it->second;
  const Raised up = cr_.raise(b);
  HwClass c = classify(up.hw);
  std::swap(c.l, c.k);
  TensorVertex out = cr_.lower(hw_vertex(cr_.kind(), cr_.n(), c), up.path);
  r_memo_.emplace(b, out);
  return out;
}

int Energy::local_coenergy(const TensorVertex& b) const {
  const HwClass c = classify(cr_.raise(b).hw);
  switch (cr_.kind()) {
    case CrystalKind::A: return c.b;
    case CrystalKind::C: return 2 * c.a + c.b;
    case CrystalKind::DDagger: break;
  }
  throw std::logic_error("local coenergy is not defined for type D; use coenergy_tilde");
}

int Energy::coenergy(const TensorVertex& b) const {
  const auto& f = b.factors;
  int total = 0;
  for (std::size_t j = 1; j < f.size(); ++j) {
    Row carried = f[j];
    for (std::size_t i = j; i-- > 0;) {
      const TensorVertex pair{{f[i], carried}};
      total += local_coenergy(pair);
      if (i > 0) carried = rmatrix(pair).factors[0];
    }
  }
  return total;
}

TensorVertex Energy::split(const TensorVertex& b, SplitOrder order) const {
  TensorVertex cur = b;
  auto& f = cur.factors;
  for (;;) {
    std::size_t k = 0;
    while (k < f.size() && f[k].size() == 1) ++k;
    if (k == f.size()) return cur;
    if (k == 0) {
      Row head = std::move(f[0]);
      f.erase(f.begin());
      if (order == SplitOrder::Chop) {
        for (std::size_t i = head.size(); i-- > 0;) f.insert(f.begin(), Row{head[i]});
      } else {
        f.insert(f.begin(), Row(head.begin() + 1, head.end()));
        f.insert(f.begin(), Row{head[0]});
      }
    } else {
      TensorVertex swapped = rmatrix(TensorVertex{{f[k - 1], f[k]}});
      f[k - 1] = std::move(swapped.factors[0]);
      f[k] = std::move(swapped.factors[1]);
    }
  }
}

int Energy::coenergy_tilde(const TensorVertex& b) const {
  if (cr_.kind() != CrystalKind::DDagger)
    throw std::logic_error("coenergy_tilde is defined for type D only");
  const TensorVertex s = split(b);
  const int m = static_cast<int>(s.factors.size());
  int total = 0;
  for (int i = 0; i + 1 < m; ++i)
    total += (m - 1 - i) * h_tilde(s.factors[i][0], s.factors[i + 1][0], cr_.n());
  return total;
}

}  // namespace onedim
