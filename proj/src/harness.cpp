#include "caydis/harness.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <mutex>
#include <numeric>
#include <optional>
#include <sstream>
#include <thread>

#include "caydis/bounds.hpp"
#include "caydis/distinguishing.hpp"
#include "caydis/errors.hpp"
#include "caydis/events.hpp"
#include "caydis/graph.hpp"
#include "caydis/sampler.hpp"
#include "caydis/stats.hpp"
#include "caydis/symmetry.hpp"

namespace caydis {

using nlohmann::json;
using nlohmann::ordered_json;

const char* estimator_name(Estimator e) {
  switch (e) {
    case Estimator::AutSmall:
      return "aut_small";
    case Estimator::Triples:
      return "triples";
    case Estimator::ChiD:
      return "chi_d";
    case Estimator::StructureEvents:
      return "structure_events";
    default:
      return "size_concentration";
  }
}

namespace {

std::optional<Estimator> estimator_from_name(const std::string& name) {
  for (Estimator e : {Estimator::AutSmall, Estimator::Triples, Estimator::ChiD,
                      Estimator::StructureEvents, Estimator::SizeConcentration})
    if (name == estimator_name(e)) return e;
  return std::nullopt;
}

bool has(const std::vector<Estimator>& es, Estimator e) {
  return std::find(es.begin(), es.end(), e) != es.end();
}

/** Per-run shared context, computed once and read by every trial. */
struct RunSetup {
  const Group* group = nullptr;
  const ExperimentConfig* cfg = nullptr;
  double p = 0.0;
  std::uint64_t stream_base = 0;

  bool need_graph = false;
  bool need_aut = false;
  bool triples_apply = false;  // gcd(n, 6) = 1
  std::vector<ZeroSumTriple> triples;

  std::uint64_t semidirect_order = 0;
  std::vector<Permutation> semidirect;  // sorted

  bool events_supported = false;
  std::string events_skip_reason;
  std::vector<Subgroup> subgroups;
  std::vector<Permutation> group_automorphisms;
  bool good_pair_supported = false;
};

ordered_json run_trial(const RunSetup& setup, int trial) {
  const Group& group = *setup.group;
  const ExperimentConfig& cfg = *setup.cfg;
  RandomStream stream(cfg.seed, setup.stream_base + static_cast<std::uint64_t>(trial));

  ConnectionSet s = sample_connection_set(group, setup.p, stream);
  SizeDecomposition dec = decompose(group, s);

  ordered_json rec;
  rec["trial"] = trial;
  rec["size"] = s.size();
  rec["x_prime"] = dec.x_prime;
  rec["x_double_prime"] = dec.x_double_prime;

  std::optional<CayleyGraph> graph;
  if (setup.need_graph) graph.emplace(group, s);

  std::optional<AutomorphismGroup> aut;
  std::string aut_skip;
  if (setup.need_aut) {
    AutLimits limits;
    limits.max_vertices = cfg.caps.aut_exact;
    limits.max_elements = cfg.caps.aut_elements;
    try {
      aut = compute_automorphism_group(*graph, limits);
    } catch (const ScaleError& e) {
      aut_skip = e.what();
    }
  }

  if (has(cfg.estimators, Estimator::AutSmall)) {
    ordered_json a;
    if (aut) {
      a["order"] = aut->order();
      a["is_small"] = aut->order() == setup.semidirect_order;
      bool contains = true;
      for (const Permutation& p : setup.semidirect)
        if (!aut->contains(p)) {
          contains = false;
          break;
        }
      a["contains_semidirect"] = contains;
    } else {
      a["skipped"] = aut_skip;
    }
    rec["aut"] = std::move(a);
  }

  if (has(cfg.estimators, Estimator::Triples)) {
    ordered_json t;
    if (setup.triples_apply) {
      Bitset members = s.member_bits(group.order());
      int count = 0;
      for (const ZeroSumTriple& tri : setup.triples) {
        bool independent = true;
        for (int d : tri.difference_set)
          if (members.test(d)) {
            independent = false;
            break;
          }
        if (independent) ++count;
      }
      t["independent_count"] = count;
    } else {
      t["skipped"] = "triple statistics require gcd(n, 6) = 1";
    }
    rec["triples"] = std::move(t);
  }

  if (has(cfg.estimators, Estimator::ChiD)) {
    ordered_json cd;
    if (!aut) {
      cd["failure"] = "aut_unavailable";
      cd["qualifying"] = false;
    } else {
      bool small = aut->order() == setup.semidirect_order;
      cd["is_small"] = small;
      ChromaticResult base;
      bool chi_exact = true;
      try {
        base = chromatic_number_exact(*graph, cfg.caps.chi_exact);
      } catch (const ScaleError&) {
        chi_exact = false;
        Coloring greedy = greedy_coloring(*graph, GreedyStrategy::Saturation);
        base = ChromaticResult{greedy.k, std::move(greedy)};
      }
      cd["chi"] = base.chi;
      cd["chi_exact"] = chi_exact;

      int cert_colors = -1;
      if (group.family() == Family::TypeI) {
        cd["path"] = "triple";
        bool found = false;
        try {
          Type1Certificate cert =
              type1_distinguishing_coloring(*graph, *aut, base, setup.triples);
          found = true;
          // Only a distinguishing certificate upper-bounds chi_D.
          if (cert.verdict.is_distinguishing) cert_colors = cert.coloring.k;
          cd["certificate"] = {
              {"triple", {cert.triple.elements[0], cert.triple.elements[1],
                          cert.triple.elements[2]}},
              {"colors", cert.coloring.k},
              {"proper", is_proper(*graph, cert.coloring)},
              {"distinguishing", cert.verdict.is_distinguishing},
              {"chi_plus_one", cert.coloring.k == base.chi + 1},
          };
        } catch (const NoTripleFound&) {
          cd["failure"] = "no_triple";
        }
        cd["qualifying"] = small && found;
      } else {
        cd["path"] = "motion";
        auto classes = base.witness.classes();
        int class_color = 0;
        for (int c = 1; c < base.witness.k; ++c)
          if (classes[c].size() > classes[class_color].size()) class_color = c;
        AutomorphismGroup stab = stabilizer_of_class(*aut, classes[class_color]);
        MotionBound mb = motion_bound(stab, classes[class_color], 2);
        ordered_json mo;
        mo["class_color"] = class_color;
        mo["class_size"] = classes[class_color].size();
        mo["stabilizer_order"] = stab.order();
        mo["f_at_2"] = mb.f;
        long long t = 0;
        if (mb.f < 2.0) {
          t = 2;
        } else {
          long long n = group.order(), m = group.involution_count();
          if (n > m * base.chi) {
            ThresholdCheck check = type2_threshold_check(n, m, base.chi);
            mo["threshold_applies"] = check.applies;
            t = check.t;
          } else {
            cd["failure"] = "t_formula_domain";
          }
        }
        if (t > 1'000'000) {
          cd["failure"] = "t_out_of_range";
          t = 0;
        }
        bool success = false;
        if (t >= 1) {
          mo["t"] = t;
          auto recolored = motion_recolor(*graph, base.witness, class_color,
                                          static_cast<int>(t), *aut, stream,
                                          cfg.max_attempts);
          success = recolored.has_value();
          if (success) {
            cert_colors = recolored->k;
            mo["colors"] = recolored->k;
            mo["proper"] = is_proper(*graph, *recolored);
            mo["chi_plus_one"] = t == 2 && recolored->k <= base.chi + 1;
          } else {
            cd["failure"] = "recolor_exhausted";
          }
        }
        mo["success"] = success;
        cd["motion"] = std::move(mo);
        cd["qualifying"] = small && t == 2;
      }

      if (cfg.tiny_cross_check && group.order() <= cfg.caps.chid_exact) {
        ChiDResult exact =
            distinguishing_chromatic_number_exact(*graph, *aut, cfg.caps.chid_exact);
        bool consistent = exact.chi_d >= base.chi &&
                          (cert_colors < 0 || exact.chi_d <= cert_colors);
        cd["cross_check"] = {{"chi_d_exact", exact.chi_d}, {"consistent", consistent}};
      }
    }
    rec["chi_d"] = std::move(cd);
  }

  if (has(cfg.estimators, Estimator::StructureEvents)) {
    ordered_json ev;
    if (setup.events_supported) {
      auto coset = coset_union_event(group, s, setup.subgroups);
      ev["coset"] = coset.has_value();
      if (coset) {
        ev["coset_census"] = {{"h", coset->h}, {"k", coset->k}, {"j", coset->j},
                              {"i", coset->i}, {"l", coset->l}};
      }
      auto normalizer = normalizer_event(group, s, setup.group_automorphisms);
      ev["normalizer"] = normalizer.has_value();
    } else {
      ev["skipped"] = setup.events_skip_reason;
    }
    if (setup.good_pair_supported)
      ev["good_pair"] = good_pair_event(group, s);
    else
      ev["good_pair_skipped"] = "unsupported family";
    rec["events"] = std::move(ev);
  }

  return rec;
}

struct Aggregated {
  ordered_json aggregates;
  ordered_json bounds;
};

/**
 * Aggregates are a pure function of the serialized records plus the run
 * parameters; the self check replays this on the parsed report.
 */
Aggregated aggregate_run(const json& records, const Group& group,
                         const ExperimentConfig& cfg, double p) {
  Aggregated out;
  long long trials = static_cast<long long>(records.size());
  long long n = group.order(), m = group.involution_count();

  if (has(cfg.estimators, Estimator::AutSmall)) {
    long long computed = 0, small = 0, contains = 0;
    double order_sum = 0.0;
    for (const auto& r : records) {
      const auto& a = r.at("aut");
      if (a.contains("skipped")) continue;
      ++computed;
      if (a.at("is_small").get<bool>()) ++small;
      if (a.at("contains_semidirect").get<bool>()) ++contains;
      order_sum += a.at("order").get<double>();
    }
    WilsonInterval w = wilson95(small, computed);
    ordered_json agg;
    agg["trials"] = trials;
    agg["computed"] = computed;
    agg["is_small_count"] = small;
    agg["is_small_frequency"] = computed ? double(small) / double(computed) : 0.0;
    agg["is_small_wilson_lo"] = w.lo;
    agg["is_small_wilson_hi"] = w.hi;
    agg["containment_count"] = contains;
    agg["containment_frequency"] = computed ? double(contains) / double(computed) : 0.0;
    agg["mean_aut_order"] = computed ? order_sum / double(computed) : 0.0;
    out.aggregates["aut_small"] = std::move(agg);
  }

  if (has(cfg.estimators, Estimator::Triples)) {
    bool apply = std::gcd(n, 6LL) == 1;
    ordered_json agg;
    ordered_json bnd;
    if (apply) {
      std::vector<double> counts;
      long long none = 0;
      for (const auto& r : records) {
        double c = r.at("triples").at("independent_count").get<double>();
        counts.push_back(c);
        if (c == 0.0) ++none;
      }
      agg["trials"] = trials;
      agg["mean_count"] = mean_of(counts);
      agg["mean_count_se"] = mean_se(counts);
      agg["none_count"] = none;
      agg["none_frequency"] = trials ? double(none) / double(trials) : 0.0;
      agg["none_se"] = proportion_se(none, trials);

      long double q = 1.0L - static_cast<long double>(p);
      long double mu = bounds::janson_mu(n, q);
      long double delta = bounds::janson_delta_bound(n, q);
      bounds::TailBound tail = bounds::janson_tail(mu, delta);
      bnd["q"] = static_cast<double>(q);
      bnd["mu"] = static_cast<double>(mu);
      bnd["delta_bound"] = static_cast<double>(delta);
      bnd["tail_applicable"] = tail.applicable;
      if (tail.applicable) bnd["tail"] = static_cast<double>(tail.value);
    } else {
      agg["skipped"] = "triple statistics require gcd(n, 6) = 1";
      bnd["applicable"] = false;
    }
    out.aggregates["triples"] = std::move(agg);
    out.bounds["triples"] = std::move(bnd);
  }

  if (has(cfg.estimators, Estimator::ChiD)) {
    long long qualifying = 0, cert_good = 0, cert_chi_plus_one = 0;
    long long motion_attempted = 0, motion_success = 0;
    long long cross_checked = 0, cross_consistent = 0;
    for (const auto& r : records) {
      const auto& cd = r.at("chi_d");
      if (cd.value("qualifying", false)) ++qualifying;
      if (cd.contains("certificate")) {
        const auto& cert = cd.at("certificate");
        if (cert.at("proper").get<bool>() && cert.at("distinguishing").get<bool>())
          ++cert_good;
        if (cert.at("chi_plus_one").get<bool>()) ++cert_chi_plus_one;
      }
      if (cd.contains("motion")) {
        const auto& mo = cd.at("motion");
        if (mo.contains("t")) ++motion_attempted;
        if (mo.at("success").get<bool>()) ++motion_success;
      }
      if (cd.contains("cross_check")) {
        ++cross_checked;
        if (cd.at("cross_check").at("consistent").get<bool>()) ++cross_consistent;
      }
    }
    WilsonInterval w = wilson95(qualifying, trials);
    ordered_json agg;
    agg["trials"] = trials;
    agg["qualifying_count"] = qualifying;
    agg["qualifying_fraction"] = trials ? double(qualifying) / double(trials) : 0.0;
    agg["qualifying_wilson_lo"] = w.lo;
    agg["qualifying_wilson_hi"] = w.hi;
    agg["certificate_ok_count"] = cert_good;
    agg["certificate_chi_plus_one_count"] = cert_chi_plus_one;
    agg["motion_attempted"] = motion_attempted;
    agg["motion_success"] = motion_success;
    agg["cross_checked"] = cross_checked;
    agg["cross_consistent"] = cross_consistent;
    out.aggregates["chi_d"] = std::move(agg);
  }

  if (has(cfg.estimators, Estimator::StructureEvents)) {
    long long coset = 0, normalizer = 0, good = 0, good_supported = 0, supported = 0;
    for (const auto& r : records) {
      const auto& ev = r.at("events");
      if (!ev.contains("skipped")) {
        ++supported;
        if (ev.at("coset").get<bool>()) ++coset;
        if (ev.at("normalizer").get<bool>()) ++normalizer;
      }
      if (ev.contains("good_pair")) {
        ++good_supported;
        if (ev.at("good_pair").get<bool>()) ++good;
      }
    }
    ordered_json agg;
    agg["trials"] = trials;
    agg["scanned"] = supported;
    WilsonInterval wc = wilson95(coset, supported);
    agg["coset_count"] = coset;
    agg["coset_frequency"] = supported ? double(coset) / double(supported) : 0.0;
    agg["coset_wilson_lo"] = wc.lo;
    agg["coset_wilson_hi"] = wc.hi;
    WilsonInterval wn = wilson95(normalizer, supported);
    agg["normalizer_count"] = normalizer;
    agg["normalizer_frequency"] =
        supported ? double(normalizer) / double(supported) : 0.0;
    agg["normalizer_wilson_lo"] = wn.lo;
    agg["normalizer_wilson_hi"] = wn.hi;
    agg["good_pair_scanned"] = good_supported;
    agg["good_pair_count"] = good;
    agg["good_pair_frequency"] =
        good_supported ? double(good) / double(good_supported) : 0.0;
    out.aggregates["structure_events"] = std::move(agg);

    ordered_json bnd;
    if (group.family() == Family::TypeI && group.is_cyclic()) {
      // S empty or full: q^draws + p^draws, with one draw per pair.
      long double draws = static_cast<long double>(trial_count(group));
      long double exact = std::pow(1.0L - static_cast<long double>(p), draws) +
                          std::pow(static_cast<long double>(p), draws);
      bnd["good_pair_exact_probability"] = static_cast<double>(exact);
      bnd["draws"] = static_cast<long long>(draws);
    }
    out.bounds["structure_events"] = std::move(bnd);
  }

  if (has(cfg.estimators, Estimator::SizeConcentration)) {
    long long identity_violations = 0;
    std::vector<double> sizes;
    for (const auto& r : records) {
      double size = r.at("size").get<double>();
      sizes.push_back(size);
      if (r.at("x_prime").get<double>() + 2.0 * r.at("x_double_prime").get<double>() !=
          size)
        ++identity_violations;
    }
    double expected = static_cast<double>(n - 1) * p;
    ordered_json agg;
    agg["trials"] = trials;
    agg["identity_violations"] = identity_violations;
    agg["mean_size"] = mean_of(sizes);
    agg["mean_size_se"] = mean_se(sizes);
    agg["expected_mean"] = expected;
    double cap137 = 13.0 * static_cast<double>(n) * p / 7.0;
    long long above137 = 0;
    for (double s : sizes)
      if (s > cap137) ++above137;
    agg["above_13np_over_7_count"] = above137;
    ordered_json tails = ordered_json::array();
    for (double t : cfg.t_grid) {
      double threshold = expected + 3.0 * t;
      long long count = 0;
      for (double s : sizes)
        if (s >= threshold) ++count;
      ordered_json row;
      row["t"] = t;
      row["threshold"] = threshold;
      row["count"] = count;
      row["frequency"] = trials ? double(count) / double(trials) : 0.0;
      row["se"] = proportion_se(count, trials);
      row["bound"] = static_cast<double>(bounds::chernoff_size_tail(n, m, p, t));
      tails.push_back(std::move(row));
    }
    agg["tails"] = std::move(tails);
    out.aggregates["size_concentration"] = std::move(agg);

    ordered_json bnd;
    bnd["expected_mean"] = expected;
    bnd["thirteen_np_over_7"] = cap137;
    bnd["reference_t"] = static_cast<double>(bounds::reference_size_tail_t(n, m));
    out.bounds["size_concentration"] = std::move(bnd);
  }

  return out;
}

ordered_json config_echo(const ExperimentConfig& cfg) {
  ordered_json j;
  j["group"] = cfg.group;
  j["p_grid"] = cfg.p_values;
  j["trials"] = cfg.trials;
  j["seed"] = cfg.seed;
  ordered_json est = ordered_json::array();
  for (Estimator e : cfg.estimators) est.push_back(estimator_name(e));
  j["estimators"] = std::move(est);
  j["caps"] = {{"aut_exact", cfg.caps.aut_exact},
               {"aut_elements", cfg.caps.aut_elements},
               {"chi_exact", cfg.caps.chi_exact},
               {"chid_exact", cfg.caps.chid_exact},
               {"group_enum", cfg.caps.group_enum}};
  j["t_grid"] = cfg.t_grid;
  j["max_attempts"] = cfg.max_attempts;
  j["tiny_cross_check"] = cfg.tiny_cross_check;
  j["threads"] = cfg.threads;
  return j;
}

RunSetup make_setup(const Group& group, const ExperimentConfig& cfg) {
  RunSetup setup;
  setup.group = &group;
  setup.cfg = &cfg;
  setup.need_aut =
      has(cfg.estimators, Estimator::AutSmall) || has(cfg.estimators, Estimator::ChiD);
  setup.need_graph = setup.need_aut || has(cfg.estimators, Estimator::ChiD);
  setup.triples_apply = std::gcd(static_cast<long long>(group.order()), 6LL) == 1;
  if (has(cfg.estimators, Estimator::Triples) ||
      (has(cfg.estimators, Estimator::ChiD) && group.family() == Family::TypeI))
    setup.triples = enumerate_zero_sum_triples(group);
  if (setup.need_aut) {
    AutomorphismGroup semi = semidirect_elements(group);
    setup.semidirect_order = semi.order();
    setup.semidirect = semi.elements();
  }
  if (has(cfg.estimators, Estimator::StructureEvents)) {
    try {
      setup.subgroups = group.subgroups(cfg.caps.group_enum);
      setup.group_automorphisms = group.automorphisms(cfg.caps.group_enum);
      setup.events_supported = true;
    } catch (const ScaleError& e) {
      setup.events_supported = false;
      setup.events_skip_reason = e.what();
    }
    setup.good_pair_supported = group.family() != Family::Other;
  }
  return setup;
}

}  // namespace

void parallel_for(int count, int threads, const std::function<void(int)>& fn) {
  if (threads <= 0) threads = static_cast<int>(std::thread::hardware_concurrency());
  threads = std::max(1, std::min(threads, count));
  if (threads == 1) {
    for (int i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<int> next{0};
  std::mutex err_mutex;
  std::exception_ptr error;
  std::vector<std::thread> pool;
  pool.reserve(threads);
  for (int w = 0; w < threads; ++w)
    pool.emplace_back([&] {
      while (true) {
        int i = next.fetch_add(1);
        if (i >= count) return;
        try {
          fn(i);
        } catch (...) {
          std::lock_guard<std::mutex> lock(err_mutex);
          if (!error) error = std::current_exception();
          return;
        }
      }
    });
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
}

ordered_json run_experiment(const ExperimentConfig& config) {
  if (config.trials < 1) throw std::invalid_argument("trials must be >= 1");
  if (config.estimators.empty())
    throw std::invalid_argument("config selects no estimators");
  if (config.p_values.empty())
    throw std::invalid_argument("config provides no p values");
  Group group = Group::parse(config.group);

  ordered_json report;
  report["config"] = config_echo(config);
  report["group"] = {{"n", group.order()},
                     {"m", group.involution_count()},
                     {"family", family_name(group.family())},
                     {"draws_per_trial", trial_count(group)}};

  RunSetup setup = make_setup(group, config);
  ordered_json runs = ordered_json::array();
  for (std::size_t run_index = 0; run_index < config.p_values.size(); ++run_index) {
    setup.p = config.p_values[run_index];
    setup.stream_base = static_cast<std::uint64_t>(run_index) *
                        static_cast<std::uint64_t>(config.trials);
    std::vector<ordered_json> records(config.trials);
    parallel_for(config.trials, config.threads,
                 [&](int trial) { records[trial] = run_trial(setup, trial); });
    ordered_json run;
    run["p"] = setup.p;
    ordered_json recs = ordered_json::array();
    for (auto& r : records) recs.push_back(std::move(r));
    Aggregated agg = aggregate_run(recs, group, config, setup.p);
    run["trials"] = std::move(recs);
    run["aggregates"] = std::move(agg.aggregates);
    run["bounds"] = std::move(agg.bounds);
    runs.push_back(std::move(run));
  }
  report["runs"] = std::move(runs);
  return report;
}

ExperimentConfig parse_experiment_config(const json& j) {
  ExperimentConfig cfg;
  if (!j.is_object()) throw std::invalid_argument("config must be a JSON object");
  if (!j.contains("group") || !j.at("group").is_string())
    throw std::invalid_argument("config requires a string \"group\"");
  cfg.group = j.at("group").get<std::string>();

  bool has_p = j.contains("p"), has_grid = j.contains("p_grid");
  if (has_p == has_grid)
    throw std::invalid_argument("config requires exactly one of \"p\" or \"p_grid\"");
  cfg.p_values.clear();
  if (has_p)
    cfg.p_values.push_back(j.at("p").get<double>());
  else
    for (const auto& v : j.at("p_grid")) cfg.p_values.push_back(v.get<double>());
  for (double p : cfg.p_values)
    if (!(p >= 0.0 && p <= 1.0))
      throw std::invalid_argument("p values must lie in [0, 1]");

  if (!j.contains("trials")) throw std::invalid_argument("config requires \"trials\"");
  cfg.trials = j.at("trials").get<int>();
  if (cfg.trials < 1) throw std::invalid_argument("trials must be >= 1");
  if (!j.contains("seed")) throw std::invalid_argument("config requires \"seed\"");
  cfg.seed = j.at("seed").get<std::uint64_t>();

  if (!j.contains("estimators") || !j.at("estimators").is_array() ||
      j.at("estimators").empty())
    throw std::invalid_argument("config requires a nonempty \"estimators\" array");
  for (const auto& name : j.at("estimators")) {
    auto e = estimator_from_name(name.get<std::string>());
    if (!e)
      throw std::invalid_argument("unknown estimator \"" + name.get<std::string>() +
                                  "\"");
    if (!has(cfg.estimators, *e)) cfg.estimators.push_back(*e);
  }
  std::sort(cfg.estimators.begin(), cfg.estimators.end());

  if (j.contains("caps")) {
    const auto& c = j.at("caps");
    cfg.caps.aut_exact = c.value("aut_exact", cfg.caps.aut_exact);
    cfg.caps.aut_elements = c.value("aut_elements", cfg.caps.aut_elements);
    cfg.caps.chi_exact = c.value("chi_exact", cfg.caps.chi_exact);
    cfg.caps.chid_exact = c.value("chid_exact", cfg.caps.chid_exact);
    cfg.caps.group_enum = c.value("group_enum", cfg.caps.group_enum);
  }
  if (j.contains("t_grid")) {
    cfg.t_grid.clear();
    for (const auto& v : j.at("t_grid")) cfg.t_grid.push_back(v.get<double>());
  }
  cfg.max_attempts = j.value("max_attempts", cfg.max_attempts);
  cfg.tiny_cross_check = j.value("tiny_cross_check", cfg.tiny_cross_check);
  cfg.threads = j.value("threads", cfg.threads);
  return cfg;
}

namespace {

ExperimentConfig single(ExperimentConfig cfg, Estimator e) {
  cfg.estimators = {e};
  return cfg;
}

}  // namespace

ordered_json run_aut_small_experiment(ExperimentConfig config) {
  return run_experiment(single(std::move(config), Estimator::AutSmall));
}
ordered_json run_triple_experiment(ExperimentConfig config) {
  return run_experiment(single(std::move(config), Estimator::Triples));
}
ordered_json run_chi_d_experiment(ExperimentConfig config) {
  return run_experiment(single(std::move(config), Estimator::ChiD));
}
ordered_json run_structure_event_experiment(ExperimentConfig config) {
  return run_experiment(single(std::move(config), Estimator::StructureEvents));
}
ordered_json run_size_concentration_experiment(ExperimentConfig config) {
  return run_experiment(single(std::move(config), Estimator::SizeConcentration));
}

bool report_self_check(const json& report) {
  try {
    ExperimentConfig cfg = parse_experiment_config(report.at("config"));
    Group group = Group::parse(cfg.group);
    const auto& runs = report.at("runs");
    if (runs.size() != cfg.p_values.size()) return false;
    for (std::size_t i = 0; i < runs.size(); ++i) {
      const auto& run = runs[i];
      if (run.at("p").get<double>() != cfg.p_values[i]) return false;
      if (static_cast<int>(run.at("trials").size()) != cfg.trials) return false;
      Aggregated agg =
          aggregate_run(run.at("trials"), group, cfg, cfg.p_values[i]);
      if (json(run.at("aggregates")) != json(agg.aggregates)) return false;
      if (json(run.at("bounds")) != json(agg.bounds)) return false;
    }
    return true;
  } catch (const std::exception&) {
    return false;
  }
}

std::string report_to_csv(const json& report) {
  std::ostringstream out;
  out << "estimator,group,p,trials,seed,param,frequency,wilson_lo,wilson_hi,bound,"
         "mean,mean_se,note\n";
  const auto& config = report.at("config");
  std::string group = config.at("group").get<std::string>();
  long long trials = config.at("trials").get<long long>();
  std::uint64_t seed = config.at("seed").get<std::uint64_t>();

  auto row = [&](const std::string& estimator, double p, const std::string& param,
                 const json& freq, const json& lo, const json& hi, const json& bound,
                 const json& mean, const json& se, const std::string& note) {
    auto cell = [](const json& v) {
      if (v.is_null()) return std::string();
      return v.dump();
    };
    out << estimator << ',' << group << ',' << p << ',' << trials << ',' << seed
        << ',' << param << ',' << cell(freq) << ',' << cell(lo) << ',' << cell(hi)
        << ',' << cell(bound) << ',' << cell(mean) << ',' << cell(se) << ',' << note
        << '\n';
  };

  for (const auto& run : report.at("runs")) {
    double p = run.at("p").get<double>();
    const auto& aggs = run.at("aggregates");
    const auto& bounds = run.at("bounds");
    if (aggs.contains("aut_small")) {
      const auto& a = aggs.at("aut_small");
      row("aut_small", p, "", a.at("is_small_frequency"), a.at("is_small_wilson_lo"),
          a.at("is_small_wilson_hi"), nullptr, a.at("mean_aut_order"), nullptr,
          "containment=" + a.at("containment_frequency").dump());
    }
    if (aggs.contains("triples")) {
      const auto& a = aggs.at("triples");
      if (!a.contains("skipped")) {
        const auto& b = bounds.at("triples");
        row("triples", p, "", a.at("none_frequency"), nullptr, nullptr,
            b.contains("tail") ? b.at("tail") : json(nullptr), a.at("mean_count"),
            a.at("mean_count_se"), "mu=" + b.at("mu").dump());
      }
    }
    if (aggs.contains("chi_d")) {
      const auto& a = aggs.at("chi_d");
      row("chi_d", p, "", a.at("qualifying_fraction"), a.at("qualifying_wilson_lo"),
          a.at("qualifying_wilson_hi"), nullptr, nullptr, nullptr,
          "certificate_ok=" + a.at("certificate_ok_count").dump() +
              ";motion_success=" + a.at("motion_success").dump());
    }
    if (aggs.contains("structure_events")) {
      const auto& a = aggs.at("structure_events");
      row("structure_events.coset", p, "", a.at("coset_frequency"),
          a.at("coset_wilson_lo"), a.at("coset_wilson_hi"), nullptr, nullptr, nullptr,
          "");
      row("structure_events.normalizer", p, "", a.at("normalizer_frequency"),
          a.at("normalizer_wilson_lo"), a.at("normalizer_wilson_hi"), nullptr,
          nullptr, nullptr, "");
      const auto& b = bounds.at("structure_events");
      row("structure_events.good_pair", p, "", a.at("good_pair_frequency"), nullptr,
          nullptr,
          b.contains("good_pair_exact_probability")
              ? b.at("good_pair_exact_probability")
              : json(nullptr),
          nullptr, nullptr, "");
    }
    if (aggs.contains("size_concentration")) {
      const auto& a = aggs.at("size_concentration");
      row("size_concentration.mean", p, "", nullptr, nullptr, nullptr,
          a.at("expected_mean"), a.at("mean_size"), a.at("mean_size_se"),
          "identity_violations=" + a.at("identity_violations").dump());
      for (const auto& tail : a.at("tails"))
        row("size_concentration.tail", p, "t=" + tail.at("t").dump(),
            tail.at("frequency"), nullptr, nullptr, tail.at("bound"), nullptr,
            tail.at("se"), "threshold=" + tail.at("threshold").dump());
    }
  }
  return out.str();
}

}  // namespace caydis
