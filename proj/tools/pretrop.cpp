// Command-line frontend: generate benchmark systems, run the pretropism
// search in any mode, verify against the brute-force oracle, and emit the
// vertical-vs-horizontal comparison table.

#include <algorithm>
#include <atomic>
#include <chrono>
#include <condition_variable>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <mutex>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "pretrop/cyclic.hpp"
#include "pretrop/engine.hpp"
#include "pretrop/error.hpp"
#include "pretrop/oracle.hpp"
#include "pretrop/support_io.hpp"

using json = nlohmann::ordered_json;
using namespace pretrop;

namespace {

int exit_code_for(const Error& e) {
  if (e.code() == "DimensionMismatch") return 3;
  if (e.code() == "OracleTooLarge") return 4;
  if (e.code() == "BadArgument" || e.code() == "BadInput") return 2;
  return 1;
}

json ray_to_json(const IntVec& r) {
  json row = json::array();
  for (const auto& x : r) {
    if (x.fits_slong_p())
      row.push_back(static_cast<long long>(x.get_si()));
    else
      row.push_back(x.get_str());
  }
  return row;
}

json stats_to_json(const PruneStats& st) {
  json levels = json::array();
  for (const auto& lvl : st.per_level)
    levels.push_back(json{{"intersections", lvl.intersections},
                          {"containments", lvl.containments},
                          {"sum", lvl.sum()}});
  return json{{"intersections", st.intersections},
              {"containments", st.containments},
              {"sum", st.sum()},
              {"per_level", std::move(levels)}};
}

struct InputOptions {
  std::string family;
  int n = 0;
  std::vector<std::string> files;
  std::vector<int> order;
};

std::vector<Support> load_supports(const InputOptions& in) {
  std::vector<Support> supports;
  if (!in.family.empty()) {
    if (in.n < 3) throw Error("BadArgument", "family input needs --n >= 3");
    if (in.family == "cyclic")
      supports = cyclic_supports(in.n).supports;
    else if (in.family == "reduced-cyclic")
      supports = reduced_cyclic_supports(in.n).supports;
    else
      throw Error("BadArgument", "unknown family '" + in.family + "'");
  } else if (!in.files.empty()) {
    for (const auto& f : in.files) {
      auto batch = supports_from_file(f);
      supports.insert(supports.end(), batch.begin(), batch.end());
    }
  } else {
    throw Error("BadArgument", "provide --family or input files");
  }
  if (!in.order.empty()) {
    if (in.order.size() != supports.size())
      throw Error("BadArgument", "--order must permute all " +
                                     std::to_string(supports.size()) +
                                     " polytopes");
    std::vector<bool> seen(supports.size(), false);
    std::vector<Support> reordered;
    for (int idx : in.order) {
      if (idx < 0 || static_cast<std::size_t>(idx) >= supports.size() ||
          seen[static_cast<std::size_t>(idx)])
        throw Error("BadArgument", "--order is not a permutation");
      seen[static_cast<std::size_t>(idx)] = true;
      reordered.push_back(supports[static_cast<std::size_t>(idx)]);
    }
    supports = std::move(reordered);
  }
  return supports;
}

std::vector<Polytope> build_all(const std::vector<Support>& supports) {
  std::vector<Polytope> out;
  out.reserve(supports.size());
  for (const auto& s : supports) out.push_back(build_polytope(s));
  return out;
}

void add_input_flags(CLI::App* cmd, InputOptions& in) {
  cmd->add_option("--family", in.family,
                  "builtin family: cyclic | reduced-cyclic");
  cmd->add_option("--n", in.n, "size of the builtin family");
  cmd->add_option("files", in.files, "support JSON files");
  cmd->add_option("--order", in.order,
                  "permutation of polytope indices, e.g. 2,0,1")
      ->delimiter(',');
}

// Runs fn with a watchdog that flips the cancel flag at the deadline.
// Returns nullopt on timeout.
template <typename Fn>
auto with_timeout(double seconds, Fn&& fn)
    -> std::optional<decltype(fn(static_cast<const std::atomic<bool>*>(nullptr)))> {
  std::atomic<bool> cancel{false};
  std::mutex mu;
  std::condition_variable cv;
  bool done = false;
  std::thread watchdog([&]() {
    std::unique_lock<std::mutex> lock(mu);
    if (!cv.wait_for(lock, std::chrono::duration<double>(seconds),
                     [&] { return done; }))
      cancel.store(true, std::memory_order_relaxed);
  });
  auto stop_watchdog = [&]() {
    {
      std::lock_guard<std::mutex> lock(mu);
      done = true;
    }
    cv.notify_all();
    watchdog.join();
  };
  std::optional<decltype(fn(static_cast<const std::atomic<bool>*>(nullptr)))>
      out;
  try {
    out = fn(&cancel);
  } catch (const Error& e) {
    stop_watchdog();
    if (e.code() == "Timeout") return std::nullopt;
    throw;
  } catch (...) {
    stop_watchdog();
    throw;
  }
  stop_watchdog();
  if (cancel.load()) return std::nullopt;
  return out;
}

int cmd_generate(const std::string& family, int n, const std::string& outdir) {
  CyclicSystem sys =
      family == "cyclic" ? cyclic_supports(n) : reduced_cyclic_supports(n);
  for (std::size_t k = 0; k < sys.supports.size(); ++k) {
    const std::string path = outdir + "/" + family + "-" + std::to_string(n) +
                             "-eq" + std::to_string(k + 1) + ".json";
    write_support_file(sys.supports[k], path);
    std::cout << path << "\n";
  }
  return 0;
}

int cmd_pretropisms(const InputOptions& in, const std::string& mode,
                    bool lower_hull, std::uint64_t seed, unsigned workers,
                    std::uint64_t oracle_cap, const std::string& format) {
  const auto polytopes = build_all(load_supports(in));
  const auto start = std::chrono::steady_clock::now();

  std::vector<IntVec> rays;
  std::vector<bool> validated;
  PruneStats stats;
  if (mode == "oracle") {
    OracleResult res = brute_force_pretropisms(polytopes, oracle_cap);
    rays = res.rays;
    validated.assign(rays.size(), true);
    stats.per_level.assign(polytopes.size(), StatsTriple{});
  } else {
    EngineConfig cfg;
    cfg.mode = prune_mode_from_string(mode);
    cfg.lower_hull = lower_hull;
    cfg.seed = seed;
    cfg.workers = workers;
    PretropismReport report = find_pretropisms(polytopes, cfg);
    rays = std::move(report.rays);
    validated = std::move(report.validated);
    stats = std::move(report.stats);
  }
  const auto elapsed = std::chrono::steady_clock::now() - start;
  const auto ms =
      std::chrono::duration_cast<std::chrono::milliseconds>(elapsed).count();

  if (format == "table") {
    std::cout << "mode: " << mode << "\n";
    for (std::size_t i = 0; i < rays.size(); ++i)
      std::cout << to_string(rays[i]) << (validated[i] ? "" : "  [boundary]")
                << "\n";
    std::cout << "intersections: " << stats.intersections
              << "  containments: " << stats.containments
              << "  sum: " << stats.sum() << "\n";
    std::cout << "wallclock_ms: " << ms << "\n";
    return 0;
  }

  json out;
  out["mode"] = mode;
  json jr = json::array(), jv = json::array();
  for (std::size_t i = 0; i < rays.size(); ++i) {
    jr.push_back(ray_to_json(rays[i]));
    jv.push_back(static_cast<bool>(validated[i]));
  }
  out["rays"] = std::move(jr);
  out["validated"] = std::move(jv);
  out["stats"] = stats_to_json(stats);
  out["wallclock_ms"] = ms;
  std::cout << out.dump(2) << "\n";
  return 0;
}

int cmd_bench(const std::string& family, int n_min, int n_max,
              const std::vector<std::string>& modes, double timeout_secs,
              std::uint64_t seed, unsigned workers, const std::string& format) {
  const bool run_vertical =
      std::find(modes.begin(), modes.end(), "vertical") != modes.end();
  const bool run_horizontal =
      std::find(modes.begin(), modes.end(), "horizontal") != modes.end();
  if (format == "csv")
    std::cout << "n,v_int,v_con,v_sum,h_int,h_con,h_sum,ratio\n";

  bool ratio_violation = false;
  for (int n = n_min; n <= n_max; ++n) {
    const auto polytopes =
        build_all(family == "cyclic" ? cyclic_supports(n).supports
                                     : reduced_cyclic_supports(n).supports);
    auto run_mode = [&](PruneMode m) -> std::optional<PruneStats> {
      auto res = with_timeout(timeout_secs, [&](const std::atomic<bool>* cancel) {
        EngineConfig cfg;
        cfg.mode = m;
        cfg.seed = seed;
        cfg.workers = workers;
        cfg.cancel = cancel;
        return find_pretropisms(polytopes, cfg).stats;
      });
      return res;
    };
    std::optional<PruneStats> v, h;
    if (run_vertical) v = run_mode(PruneMode::Vertical);
    if (run_horizontal) h = run_mode(PruneMode::Horizontal);

    auto cell = [&](bool requested, const std::optional<PruneStats>& st,
                    auto proj) -> std::string {
      if (!requested) return "";
      if (!st) return "timeout";
      return std::to_string(proj(*st));
    };
    std::string ratio;
    if (v && h && h->sum() > 0) {
      const double r =
          static_cast<double>(v->sum()) / static_cast<double>(h->sum());
      std::ostringstream os;
      os.precision(5);
      os << std::fixed << r;
      ratio = os.str();
      if (r < 1.0) ratio_violation = true;
    }
    auto ints = [](const PruneStats& s) { return s.intersections; };
    auto cons = [](const PruneStats& s) { return s.containments; };
    auto sums = [](const PruneStats& s) { return s.sum(); };
    const bool rv = run_vertical, rh = run_horizontal;
    if (format == "csv") {
      std::cout << n << "," << cell(rv, v, ints) << "," << cell(rv, v, cons)
                << "," << cell(rv, v, sums) << "," << cell(rh, h, ints) << ","
                << cell(rh, h, cons) << "," << cell(rh, h, sums) << "," << ratio
                << "\n";
    } else {
      std::cout << "n=" << n << "  vertical " << cell(rv, v, ints) << "/"
                << cell(rv, v, cons) << "/" << cell(rv, v, sums)
                << "  horizontal " << cell(rh, h, ints) << "/"
                << cell(rh, h, cons) << "/" << cell(rh, h, sums) << "  ratio "
                << (ratio.empty() ? "-" : ratio) << "\n";
    }
    std::cout.flush();
  }
  if (ratio_violation) {
    std::cerr << "error: vertical/horizontal ratio below 1\n";
    return 1;
  }
  return 0;
}

void print_ray_diff(const std::vector<IntVec>& expect,
                    const std::vector<IntVec>& got) {
  for (const auto& r : expect)
    if (std::find(got.begin(), got.end(), r) == got.end())
      std::cout << "  missing " << to_string(r) << "\n";
  for (const auto& r : got)
    if (std::find(expect.begin(), expect.end(), r) == expect.end())
      std::cout << "  extra   " << to_string(r) << "\n";
}

int cmd_verify(const InputOptions& in, std::uint64_t seed, unsigned workers,
               std::uint64_t oracle_cap, const std::string& expect_file) {
  const auto polytopes = build_all(load_supports(in));
  const OracleResult oracle = brute_force_pretropisms(polytopes, oracle_cap);

  auto validated_rays = [&](PruneMode m) {
    EngineConfig cfg;
    cfg.mode = m;
    cfg.seed = seed;
    cfg.workers = workers;
    PretropismReport rep = find_pretropisms(polytopes, cfg);
    std::vector<IntVec> rays;
    for (std::size_t i = 0; i < rep.rays.size(); ++i)
      if (rep.validated[i]) rays.push_back(rep.rays[i]);
    return rays;
  };

  bool ok = true;
  for (PruneMode m :
       {PruneMode::Naive, PruneMode::Vertical, PruneMode::Horizontal}) {
    const auto rays = validated_rays(m);
    if (rays == oracle.rays) {
      std::cout << to_string(m) << ": " << rays.size() << " rays, matches oracle\n";
      continue;
    }
    ok = false;
    std::cout << to_string(m) << ": MISMATCH\n";
    print_ray_diff(oracle.rays, rays);
  }
  if (!expect_file.empty()) {
    // Regression fixture: a JSON array of rays the oracle must reproduce.
    std::ifstream f(expect_file);
    if (!f) throw Error("BadInput", "cannot open " + expect_file);
    nlohmann::json j;
    f >> j;
    std::vector<IntVec> expect;
    for (const auto& row : j) {
      IntVec r;
      for (const auto& x : row)
        r.push_back(x.is_string() ? Int(x.get<std::string>())
                                  : Int(static_cast<long>(x.get<long long>())));
      expect.push_back(std::move(r));
    }
    std::sort(expect.begin(), expect.end(), lex_less);
    if (expect != oracle.rays) {
      ok = false;
      std::cout << "fixture: MISMATCH\n";
      print_ray_diff(expect, oracle.rays);
    } else {
      std::cout << "fixture: " << expect.size() << " rays, matches oracle\n";
    }
  }
  std::cout << (ok ? "PASS" : "FAIL") << "\n";
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"pretropism enumeration for tuples of Newton polytopes"};
  app.require_subcommand(1);

  // generate
  auto* gen = app.add_subcommand("generate", "write benchmark support files");
  std::string gen_family;
  int gen_n = 0;
  std::string gen_out = ".";
  gen->add_option("family", gen_family, "cyclic | reduced-cyclic")
      ->required()
      ->check(CLI::IsMember({"cyclic", "reduced-cyclic"}));
  gen->add_option("n", gen_n, "system size (>= 3)")->required();
  gen->add_option("--out", gen_out, "output directory");

  // pretropisms
  auto* pre = app.add_subcommand("pretropisms", "run the search");
  InputOptions pre_in;
  add_input_flags(pre, pre_in);
  std::string pre_mode = "horizontal";
  bool pre_lower = false;
  std::uint64_t pre_seed = 0;
  unsigned pre_workers = 1;
  std::uint64_t pre_cap = 10'000'000;
  std::string pre_format = "json";
  pre->add_option("--mode", pre_mode,
                  "naive | vertical | horizontal | oracle")
      ->check(CLI::IsMember({"naive", "vertical", "horizontal", "oracle"}));
  pre->add_flag("--lower-hull", pre_lower,
                "restrict to rays with positive first coordinate");
  pre->add_option("--seed", pre_seed, "interior-ray seed");
  pre->add_option("--workers", pre_workers, "worker threads")
      ->check(CLI::PositiveNumber);
  pre->add_option("--oracle-cap", pre_cap, "edge tuple cap for oracle mode");
  pre->add_option("--format", pre_format, "json | table")
      ->check(CLI::IsMember({"json", "table"}));

  // bench
  auto* bench = app.add_subcommand("bench", "vertical vs horizontal counters");
  std::string bench_family = "reduced-cyclic";
  int bench_min = 4, bench_max = 6;
  std::vector<std::string> bench_modes{"vertical", "horizontal"};
  double bench_timeout = 600.0;
  std::uint64_t bench_seed = 0;
  unsigned bench_workers = 1;
  std::string bench_format = "csv";
  bench->add_option("--family", bench_family, "cyclic | reduced-cyclic")
      ->check(CLI::IsMember({"cyclic", "reduced-cyclic"}));
  bench->add_option("--n-min", bench_min, "first n");
  bench->add_option("--n-max", bench_max, "last n");
  bench->add_option("--modes", bench_modes, "modes to run")->delimiter(',');
  bench->add_option("--timeout-secs", bench_timeout, "per-run timeout");
  bench->add_option("--seed", bench_seed, "interior-ray seed");
  bench->add_option("--workers", bench_workers, "worker threads")
      ->check(CLI::PositiveNumber);
  bench->add_option("--format", bench_format, "csv | table")
      ->check(CLI::IsMember({"csv", "table"}));

  // verify
  auto* verify =
      app.add_subcommand("verify", "all engine modes against the oracle");
  InputOptions ver_in;
  add_input_flags(verify, ver_in);
  std::uint64_t ver_seed = 0;
  unsigned ver_workers = 1;
  std::uint64_t ver_cap = 10'000'000;
  std::string ver_expect;
  verify->add_option("--seed", ver_seed, "interior-ray seed");
  verify->add_option("--workers", ver_workers, "worker threads")
      ->check(CLI::PositiveNumber);
  verify->add_option("--oracle-cap", ver_cap, "edge tuple cap");
  verify->add_option("--expect", ver_expect,
                     "JSON ray fixture the oracle must reproduce");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (gen->parsed()) {
      if (gen_n < 3) throw Error("BadArgument", "n must be at least 3");
      return cmd_generate(gen_family, gen_n, gen_out);
    }
    if (pre->parsed())
      return cmd_pretropisms(pre_in, pre_mode, pre_lower, pre_seed,
                             pre_workers, pre_cap, pre_format);
    if (bench->parsed())
      return cmd_bench(bench_family, bench_min, bench_max, bench_modes,
                       bench_timeout, bench_seed, bench_workers, bench_format);
    if (verify->parsed())
      return cmd_verify(ver_in, ver_seed, ver_workers, ver_cap, ver_expect);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code_for(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
