#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "griess/axial/algebra.hpp"
#include "griess/fock/constructions.hpp"
#include "griess/lattice/glue.hpp"
#include "griess/lattice/roots.hpp"
#include "griess/scenarios/scenarios.hpp"
#include "griess/version.hpp"

namespace {

using namespace griess;

constexpr int kPass = 0;
constexpr int kFail = 1;
constexpr int kUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Config {
  std::string cache_dir;
  std::uint64_t seed = scenarios::kDefaultSeed;
  std::size_t closure_bound = 10000;
  unsigned jobs = 1;
  std::string suite = "all";
  std::string format = "text";
};

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

template <class T>
T parse_number(const std::string& key, const std::string& value) {
  std::istringstream in(value);
  T out{};
  if (!(in >> out) || !in.eof()) throw UsageError("config: invalid value for " + key + ": '" + value + "'");
  return out;
}

// Lines `key = value`; blank lines and lines starting with '#' are ignored.
void load_config(const std::string& path, Config& cfg) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read config file " + path);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    line = trim(line);
    if (line.empty() || line[0] == '#') continue;
    auto eq = line.find('=');
    if (eq == std::string::npos) throw UsageError(path + ":" + std::to_string(lineno) + ": expected key = value");
    std::string key = trim(line.substr(0, eq)), value = trim(line.substr(eq + 1));
    if (key == "cache_dir") cfg.cache_dir = value;
    else if (key == "seed") cfg.seed = parse_number<std::uint64_t>(key, value);
    else if (key == "closure_bound") cfg.closure_bound = parse_number<std::size_t>(key, value);
    else if (key == "jobs") cfg.jobs = parse_number<unsigned>(key, value);
    else if (key == "suite") cfg.suite = value;
    else if (key == "format") cfg.format = value;
    else throw UsageError(path + ":" + std::to_string(lineno) + ": unknown key '" + key + "'");
  }
}

lat::ShellCache cache_of(const Config& cfg) { return cfg.cache_dir.empty() ? lat::ShellCache() : lat::ShellCache(cfg.cache_dir); }
const lat::ShellCache* ptr(const lat::ShellCache& c) { return c.enabled() ? &c : nullptr; }

lat::Lattice named_lattice(const std::string& name, const lat::ShellCache* cache) {
  static const std::map<std::string, lat::Lattice lat::E8Cube::*> cube_members{
      {"L", &lat::E8Cube::L}, {"M", &lat::E8Cube::M},   {"N", &lat::E8Cube::N},
      {"Nt", &lat::E8Cube::Nt}, {"MN", &lat::E8Cube::MN}, {"E", &lat::E8Cube::E}, {"K", &lat::E8Cube::K}};
  if (auto it = cube_members.find(name); it != cube_members.end()) return lat::build_e8_cube(cache).*(it->second);
  if (name == "A26") return lat::coset_decomposition_A26().super;
  if (name == "A2xE8") return lat::tensor_product(lat::make_A(2), lat::make_E8(), "A2xE8");
  try {
    return lat::build_standard(name);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

// axis:i:j, omega-L, omega-M, omega-MN, sugawara, x0, x1, x2, parafermion.
std::string dump_state(const std::string& expr, const lat::ShellCache* cache) {
  if (expr == "parafermion") {
    auto ps = fock::make_parafermion_space();
    return fock::parafermion_omega(*ps, {num::Rational(1), num::Rational(-1), num::Rational(0)}, -1).dump();
  }
  auto ctx = fock::make_cube_context(cache);
  const auto& sp = *ctx->space;
  if (expr == "omega-L") {
    std::vector<lat::AmbientVec> frame;
    for (int k = 0; k < 24; ++k) {
      lat::AmbientVec v(24);
      v[k] = num::Rational(1);
      frame.push_back(v);
    }
    return fock::virasoro_of_subspace(sp, frame).dump();
  }
  if (expr == "omega-M") return fock::virasoro_of_subspace(sp, ctx->cube.M).dump();
  if (expr == "omega-MN") return fock::virasoro_of_subspace(sp, ctx->cube.MN).dump();
  if (expr == "sugawara") return fock::sugawara_omega(*ctx).dump();
  int i = 0, j = 0;
  char c1 = 0, c2 = 0;
  std::istringstream in(expr.size() > 5 && expr.compare(0, 5, "axis:") == 0 ? expr.substr(5) : std::string());
  if (in >> i >> c1 >> j && c1 == ':' && !(in >> c2) && i >= 0 && i < 3 && j >= 0 && j < 3)
    return fock::build_axis_family(ctx).at(i, j).dump();
  if (expr == "x0" || expr == "x1" || expr == "x2") {
    auto rf = fock::real_form_components(fock::build_axis_family(ctx));
    return (expr == "x0" ? rf.x0 : expr == "x1" ? rf.x1 : rf.x2).dump();
  }
  throw UsageError("unknown state expression '" + expr +
                   "' (expected axis:i:j, omega-L, omega-M, omega-MN, sugawara, x0, x1, x2 or parafermion)");
}

int cmd_verify(const Config& cfg, const std::vector<std::string>& dumps, bool timings) {
  if (!scenarios::is_suite(cfg.suite)) {
    std::string names;
    for (const auto& n : scenarios::suite_names()) names += " " + n;
    throw UsageError("unknown suite '" + cfg.suite + "'; available:" + names);
  }
  scenarios::Format format;
  if (cfg.format == "json") format = scenarios::Format::json;
  else if (cfg.format == "text") format = scenarios::Format::text;
  else throw UsageError("unknown format '" + cfg.format + "' (json or text)");
  scenarios::RunOptions opts;
  opts.seed = cfg.seed;
  opts.jobs = cfg.jobs;
  opts.closure_bound = cfg.closure_bound;
  opts.cache_dir = cfg.cache_dir;
  opts.timings = timings;
  auto cache = cache_of(cfg);
  std::vector<std::string> dumped;
  for (const auto& d : dumps) dumped.push_back(dump_state(d, ptr(cache)));
  auto report = scenarios::run_suite(cfg.suite, opts);
  std::cout << scenarios::emit_report(report, format);
  for (const auto& d : dumped) std::cerr << d;
  if (report.all_pass()) return kPass;
  for (const auto& id : report.failing_ids()) std::cerr << "FAILED " << id << "\n";
  return kFail;
}

int cmd_inspect(const Config& cfg, const std::vector<std::string>& args) {
  if (args.empty()) throw UsageError("inspect: expected lattice, shell, axis or state-dump");
  auto cache = cache_of(cfg);
  const std::string& what = args[0];
  auto need = [&](std::size_t n) {
    if (args.size() != n + 1) throw UsageError("inspect " + what + ": expected " + std::to_string(n) + " argument(s)");
  };
  if (what == "lattice") {
    need(1);
    auto l = named_lattice(args[1], ptr(cache));
    std::cout << "lattice " << l.label() << "\nrank " << l.rank() << "\nambient " << l.ambient_dim() << "\ndet "
              << l.det() << "\neven " << (l.is_even() ? "true" : "false") << "\n";
    if (l.is_even()) std::cout << "roots " << lat::root_system_type(l, ptr(cache)).label() << "\n";
    return kPass;
  }
  if (what == "shell") {
    need(2);
    auto l = named_lattice(args[1], ptr(cache));
    long long norm = 0;
    try {
      norm = std::stoll(args[2]);
    } catch (const std::exception&) {
      throw UsageError("inspect shell: norm must be an integer");
    }
    if (norm < 0) throw UsageError("inspect shell: norm must be nonnegative");
    std::cout << lat::shell(l, norm, ptr(cache)).size() << "\n";
    return kPass;
  }
  if (what == "axis") {
    need(2);
    std::cout << dump_state("axis:" + args[1] + ":" + args[2], ptr(cache));
    return kPass;
  }
  if (what == "state-dump") {
    need(1);
    std::cout << dump_state(args[1], ptr(cache));
    return kPass;
  }
  throw UsageError("inspect: unknown object '" + what + "'");
}

void store_cosets(const lat::ShellCache& cache) {
  auto cs = lat::coset_decomposition_A26();
  auto path = cache.dir() / "cosets_A26.txt";
  std::ofstream out(path, std::ios::trunc);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << "griess-lab-cosets v1 A26 " << cs.index << " " << cs.representatives.size() << "\n";
  for (const auto& v : cs.representatives) {
    for (std::size_t i = 0; i < v.size(); ++i) out << (i ? " " : "") << v[i];
    out << "\n";
  }
}

int cmd_cache(const Config& cfg, const std::string& action) {
  if (cfg.cache_dir.empty()) throw UsageError("cache: no cache directory (use --cache-dir, cache_dir or GRIESS_LAB_CACHE)");
  lat::ShellCache cache(cfg.cache_dir);
  if (action == "build") {
    auto cube = lat::build_e8_cube(&cache);
    lat::shell(cube.e8, 4, &cache);
    lat::shell(cube.MN, 4, &cache);
    lat::shell(cube.M, 4, &cache);
    lat::shell(cube.N, 4, &cache);
    lat::shell(cube.Nt, 4, &cache);
    lat::shell(cube.K, 2, &cache);
    store_cosets(cache);
    std::cout << "cache built in " << cache.dir().string() << "\n";
    return kPass;
  }
  if (action == "clear") {
    std::size_t n = cache.clear();
    std::cout << "removed " << n << " file(s)\n";
    return kPass;
  }
  if (action == "status") {
    auto entries = cache.list();
    std::cout << cache.dir().string() << ": " << entries.size() << " entr" << (entries.size() == 1 ? "y" : "ies") << "\n";
    for (const auto& e : entries) std::cout << e.label << ":" << e.norm << " " << e.count << "\n";
    return kPass;
  }
  throw UsageError("cache: unknown action '" + action + "'");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact weight-two workbench for Griess algebras and lattice VOAs"};
  app.set_version_flag("--version", std::string(kVersion));
  app.require_subcommand(1);
  app.fallthrough();

  std::string cache_dir, config_path;
  app.add_option("--cache-dir", cache_dir, "Shell cache directory (default: $GRIESS_LAB_CACHE)");
  app.add_option("--config", config_path, "Config file of key = value lines");

  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  std::string suite, format;
  std::uint64_t seed = 0;
  unsigned jobs = 1;
  std::vector<std::string> dumps;
  bool timings = false;
  auto* o_suite = verify->add_option("--suite", suite, "Suite name (default all)");
  auto* o_format = verify->add_option("--format", format, "json or text (default text)");
  auto* o_seed = verify->add_option("--seed", seed, "Seed for randomized samples");
  auto* o_jobs = verify->add_option("--jobs", jobs, "Worker threads (default 1)")->check(CLI::PositiveNumber);
  verify->add_option("--dump-state", dumps, "Also dump a state expression to stderr");
  verify->add_flag("--timings", timings, "Record elapsed_ms per check");

  auto* inspect = app.add_subcommand("inspect", "Inspect lattices, shells and states");
  std::vector<std::string> inspect_args;
  inspect->add_option("object", inspect_args, "lattice <name> | shell <name> <norm> | axis <i> <j> | state-dump <expr>")
      ->required();

  auto* cache_cmd = app.add_subcommand("cache", "Manage the shell cache");
  std::string action;
  cache_cmd->add_option("action", action, "build, clear or status")->required()->check(CLI::IsMember({"build", "clear", "status"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    Config cfg;
    if (!config_path.empty()) load_config(config_path, cfg);
    if (!cache_dir.empty()) cfg.cache_dir = cache_dir;
    if (cfg.cache_dir.empty())
      if (const char* env = std::getenv("GRIESS_LAB_CACHE")) cfg.cache_dir = env;
    if (o_suite->count()) cfg.suite = suite;
    if (o_format->count()) cfg.format = format;
    if (o_seed->count()) cfg.seed = seed;
    if (o_jobs->count()) cfg.jobs = jobs;
    if (*verify) return cmd_verify(cfg, dumps, timings);
    if (*inspect) return cmd_inspect(cfg, inspect_args);
    return cmd_cache(cfg, action);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFail;
  }
}
