#include "onedim/suites.hpp"

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "onedim/energy.hpp"
#include "onedim/kostka.hpp"
#include "onedim/lusztig.hpp"
#include "onedim/onedim.hpp"

namespace onedim {

namespace {

// Each task yields one or more cells.
struct Tasks {
  std::vector<std::function<std::vector<Cell>()>> list;

  void push_back(std::function<Cell()> f) {
    list.push_back([f = std::move(f)] { return std::vector<Cell>{f()}; });
  }
  void push_many(std::function<std::vector<Cell>()> f) { list.push_back(std::move(f)); }
};

int pick(int value, int fallback) { return value < 0 ? fallback : value; }

std::vector<Diamond> pick(const std::vector<Diamond>& ds, std::vector<Diamond> fallback) {
  return ds.empty() ? fallback : ds;
}

const std::vector<Diamond> kAllDiamonds = {Diamond::Empty, Diamond::One, Diamond::Two,
                                           Diamond::OneOne};

int theorem6_rank(Diamond d) {
  switch (family_of(d)) {
    case Family::A: return 3;
    case Family::B: return 2;
    case Family::C: return 2;
    case Family::D: return 4;
  }
  return 0;
}

int rank_for(const SuiteOptions& o, const Partition& lambda, const Partition& mu) {
  return o.rank > 0 ? o.rank : default_rank(lambda, mu);
}

// Compositions with `parts` entries in [1, max_part] and total <= max_total.
std::vector<std::vector<int>> compositions(int parts, int max_part, int max_total) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  std::function<void(int)> rec = [&](int left) {
    if (static_cast<int>(cur.size()) == parts) {
      out.push_back(cur);
      return;
    }
    for (int x = 1; x <= std::min(max_part, left); ++x) {
      cur.push_back(x);
      rec(left - x);
      cur.pop_back();
    }
  };
  rec(max_total);
  return out;
}

TensorVertex swap_at(const Energy& en, TensorVertex b, std::size_t i) {
  const auto r = en.rmatrix(TensorVertex{{b.factors[i], b.factors[i + 1]}});
  b.factors[i] = r.factors[0];
  b.factors[i + 1] = r.factors[1];
  return b;
}

void fail(Cell& c, const std::string& what) {
  if (c.pass) c.detail = what;
  c.pass = false;
}

Cell yang_baxter_cell(CrystalKind kind, int n, std::vector<int> shape) {
  Cell c = make_cell({}, shape, kind_name(kind), n);
  const Energy en(Crystal(kind, n));
  for (const auto& b : all_vertices(en.crystal(), shape)) {
    if (shape.size() == 2) {
      if (en.rmatrix(en.rmatrix(b)) != b) fail(c, "R is not an involution at " + format_vertex(b));
      if (en.crystal().weight(en.rmatrix(b)) != en.crystal().weight(b))
        fail(c, "R changes the weight at " + format_vertex(b));
    } else {
      const auto left = swap_at(en, swap_at(en, swap_at(en, b, 0), 1), 0);
      const auto right = swap_at(en, swap_at(en, swap_at(en, b, 1), 0), 1);
      if (left != right) fail(c, "Yang-Baxter fails at " + format_vertex(b));
    }
    ++c.vertices;
  }
  c.x = c.k = std::to_string(c.vertices);
  return c;
}

// Splitting preserves the coenergy: D-bar for A and C.  For D, D-tilde is
// computed through the splitting, so check its invariance under R instead.
Cell splitting_cell(CrystalKind kind, int n, std::vector<int> shape) {
  Cell c = make_cell({}, shape, kind_name(kind), n);
  const Energy en(Crystal(kind, n));
  for (const auto& b : all_vertices(en.crystal(), shape)) {
    if (kind == CrystalKind::DDagger) {
      const int d = en.coenergy_tilde(b);
      for (std::size_t i = 0; i + 1 < shape.size(); ++i)
        if (en.coenergy_tilde(swap_at(en, b, i)) != d)
          fail(c, "D-tilde changes under R at " + format_vertex(b));
    } else if (en.coenergy(en.split(b)) != en.coenergy(b)) {
      fail(c, "splitting changes D-bar at " + format_vertex(b));
    }
    ++c.vertices;
  }
  c.x = c.k = std::to_string(c.vertices);
  return c;
}

Cell split_example_cell(int l, int k, int a, int b) {
  const int n = 3;
  Cell c = make_cell({l, k}, {a, b}, "C", n);
  const Energy en(Crystal(CrystalKind::C, n));
  const TensorVertex v = hw_vertex(CrystalKind::C, n, {l, k, a, b});
  TensorVertex expected;
  for (int i = 0; i < k + l - a - b; ++i) expected.factors.push_back({1});
  for (int i = 0; i < b; ++i) expected.factors.push_back({2});
  for (int i = 0; i < a; ++i) expected.factors.push_back({-1});
  const TensorVertex s = en.split(v);
  c.x = format_vertex(s);
  c.k = format_vertex(expected);
  c.vertices = 1;
  if (s != expected) fail(c, "split form differs");
  if (en.local_coenergy(v) != 2 * a + b) fail(c, "H-bar is " + std::to_string(en.local_coenergy(v)));
  if (en.coenergy(s) != 2 * a + b) fail(c, "D-bar of the split form is " + std::to_string(en.coenergy(s)));
  return c;
}

Cell example42_cell(int r) {
  Cell c = make_cell({2 * r}, {r, r}, "empty", 2);
  PartitionFunction pf(ClassicalType{Family::A, 2}, LFunction::unit());
  const QPoly kl = stable_kl(Weight{r, -r}, Weight{0, 0}, pf);
  const QPoly k = kostka_foulkes({2 * r}, {r, r});
  const QPoly expected = QPoly::q_power(r);
  c.x = kl.str();
  c.k = k.str();
  if (kl != expected || k != expected) fail(c, "expected " + expected.str());
  return c;
}

std::vector<std::pair<Partition, Partition>> same_size_pairs(int max_size, int max_parts) {
  std::vector<std::pair<Partition, Partition>> out;
  for (int s = 0; s <= max_size; ++s)
    for (const auto& mu : partitions_of(s, max_parts))
      for (const auto& lambda : partitions_of(s, max_parts)) out.emplace_back(lambda, mu);
  return out;
}

std::vector<Weight> dominant_box(int n, int lo, int hi) {
  std::vector<Weight> out;
  Weight cur(n);
  std::function<void(int, int)> rec = [&](int i, int top) {
    if (i == n) {
      out.push_back(cur);
      return;
    }
    for (int v = lo; v <= top; ++v) {
      cur[i] = v;
      rec(i + 1, v);
    }
  };
  rec(0, hi);
  return out;
}

Tasks build(const std::string& name, const SuiteOptions& o) {
  Tasks t;
  if (name == "theorem4") {
    for (const auto& [l, m] : grid(pick(o.m, 3), pick(o.max_mu, 6))) {
      const int n = rank_for(o, l, m);
      t.push_back([=] { return verify_theorem4(l, m, n); });
    }
  } else if (name == "corollary7") {
    for (Diamond d : pick(o.diamonds, {Diamond::Empty, Diamond::OneOne}))
      for (const auto& [l, m] : grid(pick(o.m, 3), pick(o.max_mu, 6))) {
        const int n = rank_for(o, l, m);
        t.push_back([=] { return verify_corollary7(l, m, d, n); });
      }
  } else if (name == "theorem6" || name == "expansion") {
    const int mm = pick(o.m, 2), cap = pick(o.max_mu, 5);
    for (Diamond d : pick(o.diamonds, kAllDiamonds)) {
      const int n = o.rank > 0 ? o.rank : theorem6_rank(d);
      const LFunction L = LFunction::for_family(family_of(d));
      for (const auto& m : partitions_up_to(cap, mm))
        for (const auto& l : partitions_up_to(cap, mm)) {
          if (name == "theorem6")
            t.push_back([=] { return verify_theorem6(l, m, d, n, L); });
          else
            t.push_back([=] { return verify_kl_expansion(l, m, d, n, L); });
        }
    }
  } else if (name == "theorem6-unit") {
    // Kind (1) with L = 1 on every root of B_n, where the identity fails.
    const int mm = pick(o.m, 2), cap = pick(o.max_mu, 5);
    const int n = o.rank > 0 ? o.rank : 2;
    for (const auto& m : partitions_up_to(cap, mm))
      for (const auto& l : partitions_up_to(cap, mm))
        t.push_back([=] { return verify_theorem6(l, m, Diamond::One, n, LFunction::unit()); });
  } else if (name == "stability") {
    for (Diamond d : pick(o.diamonds, {Diamond::Empty, Diamond::OneOne}))
      for (const auto& [l, m] : grid(pick(o.m, 3), pick(o.max_mu, 6))) {
        const int n = rank_for(o, l, m);
        t.push_back([=] { return verify_stability(l, m, d, {n, n + 1}); });
      }
  } else if (name == "ny") {
    for (const auto& [l, m] : same_size_pairs(pick(o.max_mu, 6), pick(o.m, 6))) {
      const int n = o.rank > 0 ? o.rank : std::max<int>({1, static_cast<int>(l.size()),
                                                         static_cast<int>(m.size())});
      t.push_back([=] { return verify_nakayashiki_yamada(l, m, n); });
    }
  } else if (name == "kostka") {
    for (const auto& [l, m] : same_size_pairs(pick(o.max_mu, 6), pick(o.m, 6)))
      t.push_back([=] { return verify_kostka_routes(l, m); });
  } else if (name == "duality") {
    for (const auto& [l, m] : same_size_pairs(pick(o.max_mu, 6), pick(o.m, 6)))
      t.push_back([=] { return verify_duality(l, m); });
    for (int n = 1; n <= 3; ++n) {
      const auto box = dominant_box(n, -3, 3);
      for (const auto& l : box)
        for (const auto& m : box)
          if (weight_size(l) == weight_size(m))
            t.push_back([=] { return verify_star_duality(l, m); });
    }
  } else if (name == "prop5") {
    const int mm = pick(o.m, 2), cap = pick(o.max_mu, 3);
    for (ClassicalType ty : {ClassicalType{Family::B, 2}, ClassicalType{Family::C, 2},
                             ClassicalType{Family::D, 4}}) {
      if (o.rank > 0) ty.n = o.rank;
      const LFunction L = LFunction::for_family(ty.family);
      for (const auto& m : partitions_up_to(cap, mm))
        for (const auto& l : partitions_up_to(cap, mm)) {
          const int kmax = o.kmax;
          t.push_back([=] { return verify_prop5(l, m, ty, L, kmax); });
        }
    }
  } else if (name == "prop33" || name == "prop39") {
    const bool p33 = name == "prop33";
    for (int m = 1; m <= pick(o.m, p33 ? 4 : 6); ++m) {
      const int n = o.rank > 0 ? o.rank : m + 1;
      for (const auto& l : partitions_up_to(m, m))
        t.push_back([=] { return p33 ? verify_prop33(l, m, n) : verify_prop39(l, m, n); });
    }
  } else if (name == "lemma29" || name == "prop35" || name == "prop40") {
    for (const auto& [l, m] : grid(pick(o.m, 3), pick(o.max_mu, 6))) {
      const int n = rank_for(o, l, m);
      if (name == "lemma29") t.push_back([=] { return verify_lemma29(l, m, n); });
      else if (name == "prop35") t.push_back([=] { return verify_prop35(l, m, n); });
      else t.push_back([=] { return verify_prop40(l, m, n); });
    }
  } else if (name == "littlewood") {
    std::vector<int> ns;
    if (o.nvars > 0) ns = {o.nvars};
    else ns = {1, 2, 3, 4};
    for (Diamond d : pick(o.diamonds, kAllDiamonds))
      for (int n : ns) {
        const int cap = o.cap;
        t.push_back([=] { return verify_littlewood(d, n, cap); });
      }
  } else if (name == "genfun") {
    struct Case {
      Weight mu;
      ClassicalType type;
    };
    const std::vector<Case> cases = {
        {{0, 0}, {Family::A, 2}}, {{0, 0}, {Family::B, 2}}, {{0, 0}, {Family::C, 2}},
        {{1, 0}, {Family::C, 2}}, {{1, 1, 0}, {Family::A, 3}}, {{1, 1, 0, 0}, {Family::D, 4}}};
    const int cap = std::min(o.cap, 4);
    for (const auto& c : cases)
      t.push_many([=] {
        return genfun_check(c.mu, c.type, LFunction::for_family(c.type.family),
                            c.type.n == 4 ? std::min(cap, 2) : cap)
            .cells;
      });
  } else if (name == "yangbaxter") {
    for (auto kind : {CrystalKind::A, CrystalKind::C, CrystalKind::DDagger})
      for (int n = kind == CrystalKind::DDagger ? 3 : 2; n <= 3; ++n) {
        for (const auto& shape : compositions(2, 4, 8))
          t.push_back([=] { return yang_baxter_cell(kind, n, shape); });
        for (const auto& shape : compositions(3, 2, 6))
          t.push_back([=] { return yang_baxter_cell(kind, n, shape); });
      }
  } else if (name == "splitting") {
    for (auto kind : {CrystalKind::A, CrystalKind::C, CrystalKind::DDagger}) {
      const int n = kind == CrystalKind::C ? 2 : 3;
      for (int parts = 1; parts <= 3; ++parts)
        for (const auto& shape : compositions(parts, 5, 5))
          t.push_back([=] { return splitting_cell(kind, n, shape); });
    }
  } else if (name == "examples") {
    for (int l = 1; l <= 4; ++l)
      for (int k = 1; k <= 4; ++k)
        for (int a = 0; a <= std::min(l, k); ++a)
          for (int b = 0; a + b <= std::min(l, k); ++b)
            t.push_back([=] { return split_example_cell(l, k, a, b); });
  } else if (name == "example42") {
    for (int r = 0; r <= 5; ++r) t.push_back([=] { return example42_cell(r); });
  } else {
    throw std::invalid_argument("unknown suite '" + name + "'");
  }
  return t;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {
      "theorem4", "theorem6", "theorem6-unit", "corollary7", "expansion", "stability",
      "ny",       "kostka",   "duality",       "prop5",      "prop33",    "prop35",
      "prop39",   "prop40",   "lemma29",       "littlewood", "genfun",    "yangbaxter",
      "splitting", "examples", "example42"};
  return names;
}

Report run_suite(const std::string& name, const SuiteOptions& options) {
  if (options.workers < 1) throw std::invalid_argument("workers must be positive");
  Report r;
  r.suite = name;
  r.cells = run_cells(build(name, options).list, options.workers);
  return r;
}

std::vector<Cell> run_cells(const std::vector<std::function<std::vector<Cell>()>>& tasks,
                            int workers) {
  std::vector<std::vector<Cell>> out(tasks.size());
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i; (i = next++) < tasks.size();) {
      try {
        out[i] = tasks[i]();
      } catch (const std::exception& e) {
        Cell c;
        c.pass = false;
        c.detail = std::string("exception: ") + e.what();
        out[i] = {c};
      }
    }
  };
  const int n = std::max(1, std::min<int>(workers, static_cast<int>(tasks.size())));
  std::vector<std::thread> pool;
  for (int i = 1; i < n; ++i) pool.emplace_back(work);
  work();
  for (auto& th : pool) th.join();
  std::vector<Cell> flat;
  for (auto& cells : out) flat.insert(flat.end(), cells.begin(), cells.end());
  return flat;
}

nlohmann::json to_json(const Cell& c) {
  nlohmann::json j = {{"lambda", c.lambda}, {"mu", c.mu},     {"kind", c.kind},
                      {"rank", c.rank},     {"x", c.x},       {"k", c.k},
                      {"pass", c.pass},     {"vertices", c.vertices}};
  if (!c.detail.empty()) j["detail"] = c.detail;
  return j;
}

nlohmann::json to_json(const Report& r) {
  nlohmann::json cells = nlohmann::json::array();
  for (const auto& c : r.cells) cells.push_back(to_json(c));
  return {{"suite", r.suite}, {"pass", r.pass()}, {"cells", cells}};
}

Report report_from_json(const nlohmann::json& j) {
  Report r;
  r.suite = j.at("suite").get<std::string>();
  for (const auto& jc : j.at("cells")) {
    Cell c;
    c.lambda = jc.at("lambda").get<Partition>();
    c.mu = jc.at("mu").get<Partition>();
    c.kind = jc.at("kind").get<std::string>();
    c.rank = jc.at("rank").get<int>();
    c.x = jc.at("x").get<std::string>();
    c.k = jc.at("k").get<std::string>();
    c.pass = jc.at("pass").get<bool>();
    c.vertices = jc.at("vertices").get<long>();
    c.detail = jc.value("detail", std::string());
    r.cells.push_back(std::move(c));
  }
  return r;
}

std::string cache_key(const std::string& name, const SuiteOptions& o) {
  std::ostringstream s;
  s << name << '|' << o.m << '|' << o.max_mu << '|' << o.rank << '|' << o.nvars << '|' << o.cap
    << '|' << o.kmax;
  for (Diamond d : o.diamonds) s << '|' << diamond_name(d);
  // FNV-1a, so the key does not depend on the standard library.
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char ch : s.str()) {
    h ^= ch;
    h *= 1099511628211ull;
  }
  std::ostringstream hex;
  hex << name << '-' << std::hex << h;
  return hex.str();
}

}  // namespace onedim
