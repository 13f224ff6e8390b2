// qvir: exact computations around Macdonald symmetric functions, the deformed
// Virasoro Fock representation and its Whittaker vector, plus a verification
// driver for the identities the library implements.

#include <atomic>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <thread>

#include <CLI11.hpp>

#include "qvir/appendix.hpp"
#include "qvir/cache.hpp"
#include "qvir/fock.hpp"
#include "qvir/geometry.hpp"
#include "qvir/linalg.hpp"
#include "qvir/macdonald.hpp"
#include "qvir/report.hpp"
#include "qvir/symfunc.hpp"
#include "qvir/whittaker.hpp"

namespace {

constexpr const char* kVersion = "0.1.0";

qvir::Partition parse_partition(const std::string& s) {
  std::vector<int> parts;
  if (!s.empty()) {
    std::size_t pos = 0;
    while (pos < s.size()) {
      std::size_t comma = s.find(',', pos);
      if (comma == std::string::npos) comma = s.size();
      parts.push_back(std::stoi(s.substr(pos, comma - pos)));
      pos = comma + 1;
    }
  }
  return qvir::Partition(parts);
}

struct RunConfig {
  int nmax = 4;
  int rmax = 3;
  int trunc = 4;
  std::string suite = "all";
  std::string cache_dir;
  std::string format = "json";
  unsigned jobs = std::max(1u, std::thread::hardware_concurrency());
};

// Runs independent report-producing tasks on a small worker pool, preserving
// task order in the merged result.
qvir::Report run_parallel(std::vector<std::function<qvir::Report()>> tasks,
                          unsigned jobs) {
  std::vector<qvir::Report> results(tasks.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&]() {
    for (;;) {
      std::size_t i = next.fetch_add(1);
      if (i >= tasks.size()) return;
      results[i] = tasks[i]();
    }
  };
  unsigned n = std::min<unsigned>(jobs, tasks.size() ? tasks.size() : 1);
  std::vector<std::thread> pool;
  for (unsigned i = 1; i < n; ++i) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();
  qvir::Report merged;
  for (auto& r : results) merged.merge(std::move(r));
  return merged;
}

void prime_from_disk(qvir::DiskCache& cache, int nmax) {
  for (int d = 0; d <= nmax; ++d) {
    for (const qvir::Partition& la : qvir::partitions_of(d)) {
      for (const char* kind : {"P", "J", "Q"}) {
        auto v = cache.get(kind, la);
        if (v) qvir::macdonald().adopt(kind, la, *v);
      }
    }
  }
}

void persist_to_disk(qvir::DiskCache& cache, int nmax) {
  for (int d = 0; d <= nmax; ++d) {
    for (const qvir::Partition& la : qvir::partitions_of(d)) {
      cache.put("P", la, qvir::macdonald().P(la));
      cache.put("J", la, qvir::macdonald().J(la));
      cache.put("Q", la, qvir::macdonald().Q(la));
    }
  }
}

int run_verify(const RunConfig& cfg) {
  using qvir::Report;
  std::unique_ptr<qvir::DiskCache> cache;
  if (!cfg.cache_dir.empty()) {
    cache = std::make_unique<qvir::DiskCache>(cfg.cache_dir);
    prime_from_disk(*cache, cfg.nmax + 1);
  }
  // Basis construction is sequential; the checks then fan out read-only.
  qvir::macdonald().warm_up(cfg.nmax + 1);

  std::vector<std::function<Report()>> tasks;
  auto want = [&](const std::string& s) {
    return cfg.suite == "all" || cfg.suite == s;
  };
  int nmax = cfg.nmax, rmax = cfg.rmax, trunc = cfg.trunc;
  if (want("macdonald"))
    tasks.push_back([=] { return qvir::verify_macdonald_core(nmax, rmax); });
  if (want("whittaker"))
    tasks.push_back([=] { return qvir::verify_whittaker(nmax, rmax); });
  if (want("fock")) {
    tasks.push_back([=] { return qvir::verify_commutations(std::min(nmax, 3), trunc); });
    tasks.push_back([=] { return qvir::verify_psi_T_relation(std::min(nmax, 4)); });
    tasks.push_back([=] { return qvir::verify_lambda_T_split(std::min(nmax, 4)); });
    tasks.push_back([=] { return qvir::verify_heisenberg(std::min(nmax, 4)); });
    tasks.push_back([=] {
      return qvir::verify_Ehat_ct_agreement(std::min(rmax, 2), std::min(nmax, 4));
    });
  }
  if (want("geometry")) {
    tasks.push_back([=] { return qvir::verify_characters(nmax); });
    tasks.push_back([=] {
      Report r;
      for (int n = 0; n <= std::min(nmax, 4); ++n)
        r.merge(qvir::verify_v0_geometry(n));
      return r;
    });
    tasks.push_back([=] {
      Report r;
      for (int n = 0; n <= nmax; ++n)
        for (const qvir::Partition& la : qvir::partitions_of(n))
          r.merge(qvir::verify_nabla_linebundle(la));
      return r;
    });
    tasks.push_back([=] {
      Report r;
      for (int n = 1; n <= std::min(nmax, 4); ++n)
        for (const qvir::Partition& mu : qvir::partitions_of(n)) {
          r.merge(qvir::verify_delta_schur(
              mu, qvir::Partition(std::vector<int>(n, 1))));
          if (n >= 2) r.merge(qvir::verify_delta_schur(mu, qvir::Partition({2})));
        }
      return r;
    });
    tasks.push_back([=] { return qvir::verify_modified_H_integrality(std::min(nmax, 4)); });
  }
  if (want("appendix")) {
    tasks.push_back([=] { return qvir::verify_v_down(nmax); });
    tasks.push_back([=] {
      return qvir::verify_Lambda_conjugation(std::min(nmax, 3), std::min(nmax, 3));
    });
    tasks.push_back([=] { return qvir::verify_tau(nmax); });
    tasks.push_back([=] { return qvir::verify_top_modes(std::min(nmax, 4)); });
    tasks.push_back([=] {
      Report r;
      for (int n = 1; n <= std::min(nmax, 4); ++n)
        r.merge(qvir::verify_final_cauchy(n));
      return r;
    });
  }

  Report rep = run_parallel(std::move(tasks), cfg.jobs);
  rep.tool_version = kVersion;
  rep.config = {{"suite", cfg.suite},
                {"nmax", std::to_string(cfg.nmax)},
                {"rmax", std::to_string(cfg.rmax)},
                {"trunc", std::to_string(cfg.trunc)}};
  rep.sort_entries();

  if (cache) persist_to_disk(*cache, cfg.nmax + 1);

  if (cfg.format == "markdown")
    std::cout << rep.to_markdown();
  else
    std::cout << rep.to_json_string() << "\n";
  return rep.all_pass() ? 0 : 1;
}

int run_compute(const std::string& what, const std::string& partition_arg,
                int n_arg, const RunConfig& cfg) {
  using qvir::Partition;
  using qvir::SymFunc;
  std::unique_ptr<qvir::DiskCache> cache;
  if (!cfg.cache_dir.empty()) cache = std::make_unique<qvir::DiskCache>(cfg.cache_dir);

  auto need_partition = [&]() {
    if (partition_arg == "unset")
      throw CLI::ValidationError("--partition is required for " + what);
    return parse_partition(partition_arg == "empty" ? "" : partition_arg);
  };
  auto need_n = [&]() {
    if (n_arg < 0) throw CLI::ValidationError("--n is required for " + what);
    return n_arg;
  };

  if (what == "P" || what == "Q" || what == "J" || what == "H") {
    Partition la = need_partition();
    if (cache) {
      prime_from_disk(*cache, la.size());
    }
    SymFunc v = what == "P"   ? qvir::macdonald().P(la)
                : what == "Q" ? qvir::macdonald().Q(la)
                : what == "J" ? qvir::macdonald().J(la)
                              : qvir::macdonald().modified_H(la);
    if (cache) persist_to_disk(*cache, la.size());
    std::cout << v.to_json_string() << "\n";
    return 0;
  }
  if (what == "gamma") {
    std::cout << qvir::gamma_coeff(need_partition()).to_json_string() << "\n";
    return 0;
  }
  if (what == "tau") {
    std::cout << qvir::tau_closed(need_partition()).to_json_string() << "\n";
    return 0;
  }
  if (what == "theta") {
    std::cout << qvir::theta(need_n()).to_json_string() << "\n";
    return 0;
  }
  if (what == "vG") {
    std::cout << qvir::whittaker_vector(need_n()).to_json_string() << "\n";
    return 0;
  }
  if (what == "v0") {
    std::cout << qvir::whittaker_v0(need_n()).to_json_string() << "\n";
    return 0;
  }
  if (what == "vinf") {
    std::cout << qvir::whittaker_vinf(need_n()).to_json_string() << "\n";
    return 0;
  }
  throw CLI::ValidationError("unknown object: " + what);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact Macdonald / deformed-Virasoro Whittaker toolkit"};
  app.require_subcommand(1);

  RunConfig cfg;
  if (const char* env = std::getenv("QVIR_CACHE_DIR")) cfg.cache_dir = env;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--nmax", cfg.nmax, "maximum degree");
    sub->add_option("--rmax", cfg.rmax, "maximum box-sum power");
    sub->add_option("--trunc", cfg.trunc, "series truncation window");
    sub->add_option("--cache-dir", cfg.cache_dir, "persistent cache directory");
    sub->add_option("--format", cfg.format, "json or markdown")
        ->check(CLI::IsMember({"json", "markdown"}));
    sub->add_option("--jobs", cfg.jobs, "worker threads");
  };

  CLI::App* verify = app.add_subcommand("verify", "run identity suites");
  verify->add_option("--suite", cfg.suite, "all|whittaker|macdonald|fock|geometry|appendix")
      ->check(CLI::IsMember({"all", "whittaker", "macdonald", "fock", "geometry", "appendix"}));
  add_common(verify);

  CLI::App* compute = app.add_subcommand("compute", "print one object as JSON");
  std::string what, partition_arg = "unset";
  int n_arg = -1;
  compute->add_option("what", what, "P|Q|J|H|gamma|vG|v0|vinf|theta|tau")->required();
  compute->add_option("--partition", partition_arg,
                      "comma-separated parts; use 'empty' for the empty partition");
  compute->add_option("--n", n_arg, "degree");
  add_common(compute);

  CLI::App* cachecmd = app.add_subcommand("cache", "manage the persistent cache");
  std::string cache_op, cache_kind = "P", cache_partition = "empty";
  cachecmd->add_option("op", cache_op, "get|put|clear")->required();
  cachecmd->add_option("--kind", cache_kind, "P|Q|J");
  cachecmd->add_option("--partition", cache_partition, "comma-separated parts");
  add_common(cachecmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (verify->parsed()) return run_verify(cfg);
    if (compute->parsed()) return run_compute(what, partition_arg, n_arg, cfg);
    if (cachecmd->parsed()) {
      if (cfg.cache_dir.empty()) {
        std::cerr << "cache: no --cache-dir or QVIR_CACHE_DIR configured\n";
        return 2;
      }
      qvir::DiskCache cache(cfg.cache_dir);
      qvir::Partition la =
          parse_partition(cache_partition == "empty" ? "" : cache_partition);
      if (cache_op == "clear") {
        cache.clear();
        return 0;
      }
      if (cache_op == "get") {
        auto v = cache.get(cache_kind, la);
        if (!v) return 1;
        std::cout << v->to_json_string() << "\n";
        return 0;
      }
      if (cache_op == "put") {
        qvir::SymFunc v = cache_kind == "P"   ? qvir::macdonald().P(la)
                          : cache_kind == "Q" ? qvir::macdonald().Q(la)
                                              : qvir::macdonald().J(la);
        return cache.put(cache_kind, la, v) ? 0 : 1;
      }
      std::cerr << "cache: unknown op " << cache_op << "\n";
      return 2;
    }
  } catch (const CLI::ValidationError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const qvir::MathError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
