#include "branchcalc/suite.hpp"

#include <chrono>
#include <cstdlib>
#include <limits>
#include <map>
#include <random>
#include <thread>

#include "branchcalc/derivative.hpp"
#include "branchcalc/errors.hpp"
#include "branchcalc/recombination.hpp"

namespace branchcalc {

int default_jobs() {
  if (const char* env = std::getenv("BRANCHCALC_JOBS")) {
    const int n = std::atoi(env);
    if (n > 0) return n;
  }
  return 1;
}

Json RunReport::to_json(bool timing) const {
  Json out = {{"schema", kSchemaVersion},
              {"command", "suite"},
              {"mode", mode},
              {"config", config},
              {"counts", {{"cases", cases}, {"passed", passed}, {"failed", failed}}},
              {"verdict", failed ? "COUNTEREXAMPLE" : "PASS"},
              {"first_counterexample", first_counterexample},
              {"stats", stats}};
  if (timing) out["wall_seconds"] = seconds;
  return out;
}

namespace {

struct Partial {
  std::uint64_t cases = 0;
  std::uint64_t passed = 0;
  std::uint64_t failed = 0;
  std::uint64_t first_index = std::numeric_limits<std::uint64_t>::max();
  Json first;
  std::map<std::string, std::uint64_t> counters;
  std::map<std::string, std::uint64_t> maxima;

  void pass() {
    ++cases;
    ++passed;
  }
  void fail(std::uint64_t index, Json detail) {
    ++cases;
    ++failed;
    if (index < first_index) {
      first_index = index;
      first = std::move(detail);
    }
  }
  void maximum(const std::string& key, std::uint64_t value) {
    auto& slot = maxima[key];
    slot = std::max(slot, value);
  }
};

// Runs body(worker, jobs, partial) on `jobs` threads; workers own the case
// indices congruent to their id, so the merged report is independent of scheduling.
template <class Body>
Partial sharded(int jobs, Body body) {
  jobs = std::max(jobs, 1);
  std::vector<Partial> parts(jobs);
  if (jobs == 1) {
    body(0, 1, parts[0]);
  } else {
    std::vector<std::thread> threads;
    std::vector<std::exception_ptr> errors(jobs);
    for (int w = 0; w < jobs; ++w)
      threads.emplace_back([&, w] {
        try {
          body(w, jobs, parts[w]);
        } catch (...) {
          errors[w] = std::current_exception();
        }
      });
    for (auto& t : threads) t.join();
    for (auto& e : errors)
      if (e) std::rethrow_exception(e);
  }
  Partial total;
  for (auto& p : parts) {
    total.cases += p.cases;
    total.passed += p.passed;
    total.failed += p.failed;
    if (p.first_index < total.first_index) {
      total.first_index = p.first_index;
      total.first = std::move(p.first);
    }
    for (const auto& [k, v] : p.counters) total.counters[k] += v;
    for (const auto& [k, v] : p.maxima) total.maximum(k, v);
  }
  return total;
}

Json universe_json(const UniverseSpec& u) {
  return {{"lines", u.line_ids},
          {"window", {to_json(u.lo), to_json(u.hi)}},
          {"step", to_json(u.step)},
          {"min_degree", u.min_degree},
          {"max_degree", u.max_degree},
          {"max_segments", u.max_segments ? Json(*u.max_segments) : Json(nullptr)}};
}

std::map<int, std::vector<Multisegment>> by_degree(const std::vector<Multisegment>& all) {
  std::map<int, std::vector<Multisegment>> out;
  for (const auto& m : all) out[m.degree()].push_back(m);
  return out;
}

// ---------------------------------------------------------------------------

void run_truncation_lemma(const SuiteConfig& cfg, RunReport& report, Partial& total) {
  UniverseSpec u = cfg.universe;
  u.generic_only = true;
  const auto all = enumerate_multisegments(u);
  total = sharded(cfg.jobs, [&](int worker, int jobs, Partial& p) {
    for (std::size_t idx = worker; idx < all.size(); idx += jobs) {
      const Multisegment& m = all[idx];
      for (int i = 0; i <= m.degree(); ++i) {
        const auto r = verify_truncation_lemma(m, i);
        p.counters["truncations_checked"] += r.checked;
        if (r.holds) {
          p.pass();
        } else {
          p.fail(idx * 64 + i, {{"m", to_json(m)}, {"result", to_json(r)}});
        }
      }
    }
  });
  report.stats["multisegments"] = all.size();
}

void run_duality(const SuiteConfig& cfg, RunReport& report, Partial& total) {
  const auto all = enumerate_multisegments(cfg.universe);
  total = sharded(cfg.jobs, [&](int worker, int jobs, Partial& p) {
    for (std::size_t idx = worker; idx < all.size(); idx += jobs) {
      std::uint64_t sub = 0;
      for (Flavor f : {Flavor::Zel, Flavor::St})
        for (const auto& t : cfg.twists) {
          const InducedRep rep(f, all[idx], t);
          for (int i = 0; i <= rep.degree(); ++i, ++sub) {
            if (check_derivative_duality(rep, i, cfg.universe.lines)) {
              p.pass();
            } else {
              p.fail(idx * 1024 + sub, {{"rep", to_json(rep)}, {"i", i}});
            }
          }
        }
    }
  });
  report.stats["multisegments"] = all.size();
}

void run_quotient(const SuiteConfig& cfg, RunReport& report, Partial& total) {
  const auto deltas = universe_segments(cfg.universe);
  UniverseSpec u = cfg.universe;
  u.max_degree = std::max(0, u.max_degree - 1);
  std::map<int, std::vector<Multisegment>> degenerate;
  for (const auto& m : enumerate_multisegments(u))
    if (whittaker_dim(InducedRep(Flavor::Zel, m)) == 0) degenerate[m.degree()].push_back(m);

  std::vector<std::uint64_t> base(deltas.size() + 1, 0);
  for (std::size_t k = 0; k < deltas.size(); ++k) {
    auto it = degenerate.find(deltas[k].abs_length() - 1);
    base[k + 1] = base[k] + (it == degenerate.end() ? 0 : it->second.size());
  }
  total = sharded(cfg.jobs, [&](int worker, int jobs, Partial& p) {
    for (std::size_t k = worker; k < deltas.size(); k += jobs) {
      const Segment& delta = deltas[k];
      auto it = degenerate.find(delta.abs_length() - 1);
      if (it == degenerate.end()) continue;
      for (std::size_t j = 0; j < it->second.size(); ++j) {
        const auto cert = quotient_obstruction(delta, it->second[j], QuotientMode::Theorem);
        if (!cert.right.empty()) ++p.counters["right_candidates_present"];
        if (!cert.left.empty()) ++p.counters["left_candidates_present"];
        if (cert.obstructed) {
          p.pass();
        } else {
          p.fail(base[k] + j, to_json(cert));
        }
      }
    }
  });
  report.stats["segments"] = deltas.size();
}

void run_ext(const SuiteConfig& cfg, RunReport& report, Partial& total) {
  const auto all = by_degree(enumerate_multisegments(cfg.universe));
  std::map<int, std::vector<Multisegment>> generic, nongeneric;
  for (const auto& [d, list] : all)
    for (const auto& m : list) (is_generic(m) ? generic : nongeneric)[d].push_back(m);

  // Work items: every m2 of degree n with n + 1 <= max_degree, generic first.
  struct Item {
    const Multisegment* m2;
    const std::vector<Multisegment>* m1s;
    bool injected;
    std::uint64_t base;
  };
  std::vector<Item> items;
  std::uint64_t offset = 0;
  for (bool injected : {false, true}) {
    if (injected && !cfg.inject_nongeneric) break;
    const auto& pool = injected ? nongeneric : generic;
    for (const auto& [n, list] : pool) {
      auto m1s = generic.find(n + 1);
      if (m1s == generic.end()) continue;
      for (const auto& m2 : list) {
        items.push_back({&m2, &m1s->second, injected, offset});
        offset += m1s->second.size();
      }
    }
  }

  total = sharded(cfg.jobs, [&](int worker, int jobs, Partial& p) {
    for (std::size_t k = worker; k < items.size(); k += jobs) {
      const Item& item = items[k];
      const PackedSpectra table(*item.m2);
      for (std::size_t j = 0; j < item.m1s->size(); ++j) {
        const Multisegment& m1 = (*item.m1s)[j];
        const ExtVerdict v = ext_vanishing_verdict(m1, table);
        if (!item.injected) {
          ++p.counters["generic_pairs"];
          p.counters["steps_right"] += v.steps_right;
          p.counters["steps_left"] += v.steps_left;
          if (v.depth == 0) ++p.counters["base_at_root"];
          p.maximum("max_depth", v.depth);
          if (v.fail) {
            const auto cert = ext_vanishing_certificate(m1, *item.m2, cfg.universe.lines);
            p.fail(item.base + j, {{"m1", to_json(m1)}, {"certificate", to_json(cert)}});
          } else {
            p.pass();
          }
          if (cfg.compare_longest && ext_vanishing_verdict(m1, table, DeltaChoice::Longest).fail)
            ++p.counters["longest_choice_fail_runs"];
          continue;
        }
        ++p.counters["injected_pairs"];
        if (!v.fail) {
          p.pass();
          continue;
        }
        ++p.counters["injected_fail_runs"];
        std::string route;
        const auto pair = extract_linked_pair(*v.fail_delta, *item.m2, &route);
        if (pair && linked(pair->first, pair->second)) {
          ++p.counters[route == "truncation-argument" ? "extracted_by_truncation_argument"
                                                       : "extracted_by_recombination_scan"];
          p.pass();
        } else {
          CertifyOptions options;
          options.require_generic_m2 = false;
          const auto cert = ext_vanishing_certificate(m1, *item.m2, cfg.universe.lines, options);
          p.fail(item.base + j, {{"m1", to_json(m1)}, {"injected", true}, {"certificate", to_json(cert)}});
        }
      }
    }
  });
  std::uint64_t g = 0, ng = 0;
  for (const auto& [d, list] : generic) g += list.size();
  for (const auto& [d, list] : nongeneric) ng += list.size();
  report.stats["generic_multisegments"] = g;
  report.stats["nongeneric_multisegments"] = ng;
}

Rational random_nonzero(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> num(-9, 9), den(1, 5);
  long n = 0;
  while (n == 0) n = num(rng);
  return make_rational(n, den(rng));
}

std::vector<Rational> random_regular(std::mt19937_64& rng, int m) {
  for (;;) {
    std::vector<Rational> v;
    for (int i = 0; i < m; ++i) v.push_back(random_nonzero(rng));
    bool regular = true;
    for (int i = 0; i < m; ++i)
      for (int j = i + 1; j < m; ++j) regular = regular && v[i] != v[j];
    if (regular) return v;
  }
}

Json tuple_json(const std::vector<Rational>& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(to_json(x));
  return out;
}

void run_hecke(const SuiteConfig& cfg, RunReport& report, Partial& total) {
  // Single shard: the checks are small and their order is the report order.
  Partial p;
  std::uint64_t index = 0;
  for (int m = 1; m <= 3; ++m) {
    const HeckeAlgebra<Symbolic> H(m, Symbolic::q());
    const auto r = verify_relations(H, cfg.hecke_trials, cfg.seed + m);
    r.all_passed() ? p.pass() : p.fail(index, to_json(r));
    ++index;
  }
  std::mt19937_64 rng(cfg.seed);
  for (int m = 2; m <= 3; ++m) {
    for (int t = 0; t < cfg.hecke_characters; ++t, ++index) {
      const auto chi = random_regular(rng, m);
      const auto M = principal_series(m, chi, cfg.hecke_q);
      const int sign = sign_isotypic_dim(M);
      if (sign == 1 && module_relations_hold(M)) {
        p.pass();
      } else {
        p.fail(index, {{"principal_series_chi", tuple_json(chi)}, {"sign_isotypic_dim", sign}});
      }
    }
    for (int t = 0; t < cfg.hecke_characters; ++t, ++index) {
      const auto orbit = random_regular(rng, m);
      const auto Q = central_quotient(m, orbit, cfg.hecke_q);
      const auto a = analyze_sign_quotients(Q.module);
      int factorial = 1;
      for (int k = 2; k <= m; ++k) factorial *= k;
      if (a.unique_sign_quotient) ++p.counters["unique_sign_quotient"];
      if (a.quotient_dim == Q.module.dim()) ++p.counters["sign_quotient_is_whole_module"];
      if (Q.module.dim() == factorial && a.sign_isotypic_dim == 1 && a.unique_sign_quotient &&
          module_relations_hold(Q.module)) {
        p.pass();
      } else {
        p.fail(index, {{"central_quotient_orbit", tuple_json(orbit)}, {"analysis", to_json(a)}});
      }
    }
  }
  total = std::move(p);
  report.stats["q"] = to_json(cfg.hecke_q);
}

}  // namespace

RunReport run_suite(const SuiteConfig& cfg) {
  const auto start = std::chrono::steady_clock::now();
  RunReport report;
  report.mode = cfg.mode;
  report.config = {{"universe", universe_json(cfg.universe)}, {"seed", cfg.seed}};
  Partial total;
  if (cfg.mode == "truncation-lemma") {
    run_truncation_lemma(cfg, report, total);
  } else if (cfg.mode == "duality") {
    Json twists = Json::array();
    for (const auto& t : cfg.twists) twists.push_back(to_json(t));
    report.config["twists"] = twists;
    run_duality(cfg, report, total);
  } else if (cfg.mode == "quotient") {
    run_quotient(cfg, report, total);
  } else if (cfg.mode == "ext") {
    report.config["inject_nongeneric"] = cfg.inject_nongeneric;
    report.config["compare_longest"] = cfg.compare_longest;
    run_ext(cfg, report, total);
  } else if (cfg.mode == "hecke") {
    report.config["trials"] = cfg.hecke_trials;
    report.config["characters"] = cfg.hecke_characters;
    run_hecke(cfg, report, total);
  } else {
    throw SchemaError("unknown suite mode '" + cfg.mode +
                      "'; expected truncation-lemma, duality, quotient, ext or hecke");
  }
  report.cases = total.cases;
  report.passed = total.passed;
  report.failed = total.failed;
  report.first_counterexample = total.failed ? total.first : Json(nullptr);
  for (const auto& [k, v] : total.counters) report.stats[k] = v;
  for (const auto& [k, v] : total.maxima) report.stats[k] = v;
  report.seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

}  // namespace branchcalc
