// Command-line driver: one-dimensional sums, verification grids, crystal graphs.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "onedim/crystal.hpp"
#include "onedim/onedim.hpp"
#include "onedim/suites.hpp"

namespace fs = std::filesystem;
using namespace onedim;

namespace {

constexpr int kPass = 0;
constexpr int kFail = 1;
constexpr int kUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void write_output(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw UsageError("cannot write " + path);
  out << text;
}

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  std::stringstream s(text);
  for (std::string item; std::getline(s, item, ',');) {
    if (item.empty()) continue;
    try {
      out.push_back(std::stoi(item));
    } catch (const std::exception&) {
      throw UsageError("not an integer list: '" + text + "'");
    }
  }
  return out;
}

CrystalKind parse_kind(const std::string& t) {
  if (t == "A") return CrystalKind::A;
  if (t == "C") return CrystalKind::C;
  if (t == "D") return CrystalKind::DDagger;
  throw UsageError("unknown crystal type '" + t + "' (A, C or D)");
}

std::string table(const Report& r) {
  std::ostringstream s;
  long failed = 0;
  for (const auto& c : r.cells) failed += !c.pass;
  s << r.suite << ": " << r.cells.size() << " cells, " << failed << " failed\n";
  for (const auto& c : r.cells) {
    if (c.pass) continue;
    s << "FAIL " << c.kind << " n=" << c.rank << " lambda=(" << format_partition(c.lambda)
      << ") mu=(" << format_partition(c.mu) << ") x=" << c.x << " k=" << c.k;
    if (!c.detail.empty()) s << " : " << c.detail;
    s << '\n';
  }
  return s.str();
}

std::string latex(const Report& r) {
  std::ostringstream s;
  s << "\\begin{tabular}{lllll}\n$\\lambda$ & $\\mu$ & kind & $X$ & $K$ \\\\\n\\hline\n";
  for (const auto& c : r.cells)
    s << "(" << format_partition(c.lambda) << ") & (" << format_partition(c.mu) << ") & "
      << c.kind << " & $" << c.x << "$ & $" << c.k << "$ \\\\\n";
  s << "\\end{tabular}\n";
  return s.str();
}

std::string cache_dir(const std::string& flag) {
  if (const char* env = std::getenv("ONEDIM_CACHE_DIR"); env && *env) return env;
  return flag;
}

Report run_cached(const std::string& which, const SuiteOptions& opt, const std::string& dir) {
  if (dir.empty()) return run_suite(which, opt);
  const fs::path path = fs::path(dir) / (cache_key(which, opt) + ".json");
  if (fs::exists(path)) {
    std::ifstream in(path);
    return report_from_json(nlohmann::json::parse(in));
  }
  Report r = run_suite(which, opt);
  fs::create_directories(dir);
  std::ofstream(path) << to_json(r).dump(2) << '\n';
  return r;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"One-dimensional sums, K-polynomials and stable KL polynomials"};
  app.require_subcommand(1);
  std::string format = "table";
  std::string out_path;

  // x
  auto* x = app.add_subcommand("x", "print a one-dimensional sum");
  std::string x_kind = "11", x_lambda, x_mu;
  int x_rank = 0;
  x->add_option("--kind", x_kind, "empty or 11")->capture_default_str();
  x->add_option("--lambda", x_lambda, "partition, e.g. 2,1 (\"\" is empty)")->required();
  x->add_option("--mu", x_mu, "partition")->required();
  x->add_option("--rank", x_rank, "rank n (default m+1)");
  x->add_option("--format", format, "table, json or latex")
      ->check(CLI::IsMember({"table", "json", "latex"}));
  x->add_option("--out", out_path, "output file");

  // verify
  auto* verify = app.add_subcommand("verify", "run a verification grid");
  std::string which;
  SuiteOptions opt;
  std::string diamond_flag, cache_flag;
  verify->add_option("which", which, "suite name")
      ->required()
      ->check(CLI::IsMember(suite_names()));
  verify->add_option("--m", opt.m, "maximal number of parts");
  verify->add_option("--max-mu", opt.max_mu, "maximal |mu|");
  verify->add_option("--rank", opt.rank, "rank n (default per suite)");
  verify->add_option("--diamond", diamond_flag, "empty, 1, 2 or 11 (default: all applicable)");
  verify->add_option("--nvars", opt.nvars, "number of variables (littlewood)");
  verify->add_option("--cap", opt.cap, "degree cap")->capture_default_str();
  verify->add_option("--kmax", opt.kmax, "largest shift (prop5)")->capture_default_str();
  verify->add_option("--workers,-j", opt.workers, "worker threads")->capture_default_str();
  verify->add_option("--cache-dir", cache_flag, "reuse reports stored here");
  verify->add_option("--format", format, "table, json or latex")
      ->check(CLI::IsMember({"table", "json", "latex"}));
  verify->add_option("--out", out_path, "write the JSON report here");

  // graph
  auto* graph = app.add_subcommand("graph", "write a crystal graph in DOT format");
  std::string g_type, g_mu, g_colors;
  int g_rank = 0;
  graph->add_option("--type", g_type, "A, C or D")->required();
  graph->add_option("--rank", g_rank, "rank n")->required();
  graph->add_option("--mu", g_mu, "shape, e.g. 2,1")->required();
  graph->add_option("--colors", g_colors, "colors to draw (default all)");
  graph->add_option("--out", out_path, "output file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (x->parsed()) {
      const Partition lambda = parse_partition(x_lambda), mu = parse_partition(x_mu);
      const Diamond kind = parse_diamond(x_kind);
      const int n = x_rank > 0 ? x_rank : default_rank(lambda, mu);
      const OneDimSum s = x_sum(lambda, mu, kind, n);
      std::string text;
      if (format == "json") {
        nlohmann::json j = {{"lambda", lambda}, {"mu", mu},
                            {"kind", diamond_name(kind)}, {"rank", n},
                            {"x", s.value.str()}, {"vertices", s.vertices}};
        text = j.dump(2) + "\n";
      } else if (format == "latex") {
        text = s.value.latex() + "\n";
      } else {
        text = s.value.str() + "\n";
      }
      write_output(text, out_path);
      return kPass;
    }

    if (verify->parsed()) {
      if (!diamond_flag.empty()) opt.diamonds = {parse_diamond(diamond_flag)};
      const Report r = run_cached(which, opt, cache_dir(cache_flag));
      const std::string json = to_json(r).dump(2) + "\n";
      if (!out_path.empty()) write_output(json, out_path);
      if (format == "json") {
        if (out_path.empty()) std::cout << json;
        else std::cout << table(r);
      } else if (format == "latex") {
        std::cout << latex(r);
      } else {
        std::cout << table(r);
      }
      return r.pass() ? kPass : kFail;
    }

    if (graph->parsed()) {
      const Crystal cr(parse_kind(g_type), g_rank);
      const std::vector<int> shape = parse_int_list(g_mu);
      if (shape.empty()) throw UsageError("--mu needs at least one factor");
      for (int s : shape)
        if (s < 1) throw UsageError("factor sizes must be positive");
      std::vector<int> colors = g_colors.empty() ? cr.colors() : parse_int_list(g_colors);
      for (int c : colors)
        if (std::find(cr.colors().begin(), cr.colors().end(), c) == cr.colors().end())
          throw UsageError("color " + std::to_string(c) + " is not a color of this crystal");
      const auto vertices = all_vertices(cr, shape);
      write_output(to_dot(cr, vertices, colors), out_path);
      std::cerr << vertices.size() << " vertices\n";
      return kPass;
    }
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}
