// Command line front end: sample connection sets, analyze a single graph,
// run Monte Carlo experiments, evaluate reference bounds, and census triple
// overlaps. Exit codes: 0 ok, 2 usage or parameter error, 3 scale cap,
// 4 runtime failure.

#include <algorithm>
#include <cctype>
#include <chrono>
#include <ctime>
#include <fstream>
#include <iostream>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "caydis/bounds.hpp"
#include "caydis/coloring.hpp"
#include "caydis/distinguishing.hpp"
#include "caydis/errors.hpp"
#include "caydis/events.hpp"
#include "caydis/graph.hpp"
#include "caydis/group.hpp"
#include "caydis/harness.hpp"
#include "caydis/rng.hpp"
#include "caydis/sampler.hpp"
#include "caydis/symmetry.hpp"

namespace {

using caydis::Group;
using nlohmann::ordered_json;

std::string iso8601_now() {
  std::time_t t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  char buf[32];
  std::tm tm{};
  gmtime_r(&t, &tm);
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  out << text;
  if (!out) throw std::runtime_error("write to " + path + " failed");
}

void emit(const ordered_json& doc, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << doc.dump(2) << "\n";
  } else {
    ordered_json stamped = doc;
    stamped["generated_at"] = iso8601_now();
    write_text(out_path, stamped.dump(2) + "\n");
    std::cout << "wrote " << out_path << "\n";
  }
}

std::vector<int> parse_members(const std::string& csv) {
  std::vector<int> members;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    size_t pos = 0;
    int value = std::stoi(item, &pos);
    while (pos < item.size() && std::isspace(static_cast<unsigned char>(item[pos])))
      ++pos;
    if (pos != item.size())
      throw std::invalid_argument("bad member list entry \"" + item + "\"");
    members.push_back(value);
  }
  return members;
}

caydis::ConnectionSet obtain_set(const Group& group, const std::string& members_csv,
                                 double p, std::uint64_t seed, std::uint64_t trial) {
  if (!members_csv.empty())
    return caydis::connection_set_from_members(group, parse_members(members_csv));
  if (p < 0.0)
    throw std::invalid_argument("provide either --members or --p");
  caydis::RandomStream stream(seed, trial);
  return caydis::sample_connection_set(group, p, stream);
}

ordered_json set_summary(const Group& group, const caydis::ConnectionSet& s) {
  caydis::SizeDecomposition dec = caydis::decompose(group, s);
  ordered_json j;
  j["group"] = group.spec_string();
  j["n"] = group.order();
  j["m"] = group.involution_count();
  j["family"] = caydis::family_name(group.family());
  if (s.p >= 0.0) j["p"] = s.p;
  j["size"] = s.size();
  j["x_prime"] = dec.x_prime;
  j["x_double_prime"] = dec.x_double_prime;
  j["members"] = s.members;
  return j;
}

int run_sample(const std::string& group_spec, double p, std::uint64_t seed,
               std::uint64_t trial, const std::string& out_path,
               const std::string& dimacs_path) {
  Group group = Group::parse(group_spec);
  caydis::RandomStream stream(seed, trial);
  caydis::ConnectionSet s = caydis::sample_connection_set(group, p, stream);
  ordered_json j = set_summary(group, s);
  j["seed"] = seed;
  j["trial"] = trial;
  if (!dimacs_path.empty()) {
    caydis::CayleyGraph graph(group, s);
    std::ostringstream dimacs;
    graph.write_dimacs(dimacs);
    write_text(dimacs_path, dimacs.str());
    j["dimacs"] = dimacs_path;
  }
  emit(j, out_path);
  return 0;
}

int run_analyze(const std::string& group_spec, const std::string& members_csv,
                double p, std::uint64_t seed, std::uint64_t trial,
                const caydis::Caps& caps, const std::string& out_path) {
  Group group = Group::parse(group_spec);
  caydis::ConnectionSet s = obtain_set(group, members_csv, p, seed, trial);
  caydis::CayleyGraph graph(group, s);

  ordered_json j = set_summary(group, s);
  j["degree"] = graph.degree();
  j["edges"] = graph.edge_count();

  caydis::AutomorphismGroup semi = caydis::semidirect_elements(group);
  j["semidirect_order"] = semi.order();

  std::optional<caydis::AutomorphismGroup> aut;
  caydis::AutLimits limits;
  limits.max_vertices = caps.aut_exact;
  limits.max_elements = caps.aut_elements;
  try {
    aut = caydis::compute_automorphism_group(graph, limits);
    j["aut"] = {{"order", aut->order()},
                {"is_small", aut->order() == semi.order()}};
  } catch (const caydis::ScaleError& e) {
    j["aut"] = {{"skipped", e.what()}};
  }

  std::optional<caydis::ChromaticResult> chi;
  try {
    chi = caydis::chromatic_number_exact(graph, caps.chi_exact);
    j["chi"] = chi->chi;
  } catch (const caydis::ScaleError& e) {
    j["chi"] = nullptr;
    j["chi_skipped"] = e.what();
  }

  if (aut && chi) {
    if (group.family() == caydis::Family::TypeI) {
      ordered_json cert;
      cert["path"] = "triple";
      try {
        auto triples = caydis::enumerate_zero_sum_triples(group);
        caydis::Type1Certificate c =
            caydis::type1_distinguishing_coloring(graph, *aut, *chi, triples);
        cert["triple"] = {c.triple.elements[0], c.triple.elements[1],
                          c.triple.elements[2]};
        cert["colors"] = c.coloring.k;
        cert["proper"] = caydis::is_proper(graph, c.coloring);
        cert["distinguishing"] = c.verdict.is_distinguishing;
      } catch (const caydis::NoTripleFound& e) {
        cert["failure"] = e.what();
      }
      j["certificate"] = std::move(cert);
    } else {
      ordered_json cert;
      cert["path"] = "motion";
      auto classes = chi->witness.classes();
      int class_color = 0;
      for (int c = 1; c < chi->witness.k; ++c)
        if (classes[c].size() > classes[class_color].size()) class_color = c;
      caydis::AutomorphismGroup stab =
          caydis::stabilizer_of_class(*aut, classes[class_color]);
      caydis::MotionBound mb = caydis::motion_bound(stab, classes[class_color], 2);
      cert["class_color"] = class_color;
      cert["f_at_2"] = mb.f;
      cert["criterion_met"] = mb.criterion_met;
      if (mb.f < 2.0) {
        caydis::RandomStream stream(seed, trial + 1);
        auto recolored = caydis::motion_recolor(graph, chi->witness, class_color, 2,
                                                *aut, stream, 1000);
        cert["success"] = recolored.has_value();
        if (recolored) {
          cert["colors"] = recolored->k;
          cert["proper"] = caydis::is_proper(graph, *recolored);
        }
      }
      j["certificate"] = std::move(cert);
    }
  }

  if (group.order() <= caps.chid_exact && aut) {
    caydis::ChiDResult exact =
        caydis::distinguishing_chromatic_number_exact(graph, *aut, caps.chid_exact);
    j["chi_d_exact"] = exact.chi_d;
  }

  ordered_json ev;
  try {
    auto coset = caydis::coset_union_event(group, s, caps.group_enum);
    ev["coset"] = coset.has_value();
    if (coset)
      ev["coset_census"] = {{"h", coset->h}, {"k", coset->k}, {"j", coset->j},
                            {"i", coset->i}, {"l", coset->l}};
    ev["normalizer"] = caydis::normalizer_event(group, s, caps.group_enum).has_value();
  } catch (const caydis::ScaleError& e) {
    ev["skipped"] = e.what();
  }
  try {
    ev["good_pair"] = caydis::good_pair_event(group, s);
  } catch (const caydis::UnsupportedFamilyError&) {
    ev["good_pair"] = nullptr;
  }
  j["events"] = std::move(ev);

  emit(j, out_path);
  return 0;
}

int run_experiment_cmd(const std::string& config_path, const std::string& out_path,
                       const std::string& csv_path, int threads_override,
                       std::int64_t seed_override) {
  std::ifstream in(config_path);
  if (!in) throw std::invalid_argument("cannot read config " + config_path);
  nlohmann::json cfg_json;
  try {
    in >> cfg_json;
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument(std::string("config is not valid JSON: ") + e.what());
  }
  caydis::ExperimentConfig cfg = caydis::parse_experiment_config(cfg_json);
  if (threads_override >= 0) cfg.threads = threads_override;
  if (seed_override >= 0) cfg.seed = static_cast<std::uint64_t>(seed_override);

  ordered_json report = caydis::run_experiment(cfg);
  if (!caydis::report_self_check(report))
    throw std::runtime_error("report failed its aggregate self check");

  if (!out_path.empty()) {
    ordered_json stamped = report;
    stamped["generated_at"] = iso8601_now();
    write_text(out_path, stamped.dump(2) + "\n");
    std::cout << "wrote " << out_path << "\n";
  }
  if (!csv_path.empty()) {
    write_text(csv_path, caydis::report_to_csv(report));
    std::cout << "wrote " << csv_path << "\n";
  }

  // Stdout stays compact: config echo plus per-run aggregates and bounds.
  ordered_json summary;
  summary["config"] = report["config"];
  summary["group"] = report["group"];
  ordered_json runs = ordered_json::array();
  for (const auto& run : report["runs"]) {
    ordered_json r;
    r["p"] = run["p"];
    r["aggregates"] = run["aggregates"];
    r["bounds"] = run["bounds"];
    runs.push_back(std::move(r));
  }
  summary["runs"] = std::move(runs);
  std::cout << summary.dump(2) << "\n";
  return 0;
}

int run_bounds(const std::string& group_spec, double q, double p, double t,
               double c1, double c2, double bound_p, const std::string& out_path) {
  Group group = Group::parse(group_spec);
  long long n = group.order(), m = group.involution_count();
  ordered_json j;
  j["group"] = group.spec_string();
  j["n"] = n;
  j["m"] = m;
  j["family"] = caydis::family_name(group.family());

  if (std::gcd(n, 6LL) == 1) {
    ordered_json triples;
    triples["count"] = caydis::bounds::zero_sum_triple_count(n);
    long double mu = caydis::bounds::janson_mu(n, q);
    long double delta = caydis::bounds::janson_delta_bound(n, q);
    triples["q"] = q;
    triples["mu"] = static_cast<double>(mu);
    triples["delta_bound"] = static_cast<double>(delta);
    caydis::bounds::TailBound tail = caydis::bounds::janson_tail(mu, delta);
    triples["tail_applicable"] = tail.applicable;
    if (tail.applicable) triples["tail"] = static_cast<double>(tail.value);
    j["triples"] = std::move(triples);
  }

  ordered_json size;
  size["p"] = p;
  size["expected_mean"] = static_cast<double>(n - 1) * p;
  double ref_t = static_cast<double>(caydis::bounds::reference_size_tail_t(n, m));
  size["reference_t"] = ref_t;
  double use_t = t > 0.0 ? t : ref_t;
  size["t"] = use_t;
  size["chernoff_tail"] =
      static_cast<double>(caydis::bounds::chernoff_size_tail(n, m, p, use_t));
  j["size"] = std::move(size);

  if (c1 > 0.0 && c2 > 0.0) {
    ordered_json pb;
    pb["p"] = bound_p;
    pb["c1"] = c1;
    pb["c2"] = c2;
    pb["core"] =
        static_cast<double>(caydis::bounds::product_bound_core(bound_p, c1, c2));
    pb["log2_value"] = static_cast<double>(
        caydis::bounds::product_bound_log2_value(n, bound_p, c1, c2));
    pb["value"] =
        static_cast<double>(caydis::bounds::product_bound_value(n, bound_p, c1, c2));
    j["product_bound"] = std::move(pb);
  }

  emit(j, out_path);
  return 0;
}

int run_census(const std::string& group_spec, double q, const std::string& out_path) {
  Group group = Group::parse(group_spec);
  long long n = group.order();
  auto triples = caydis::enumerate_zero_sum_triples(group);
  caydis::bounds::OverlapCensus census = caydis::bounds::overlap_census(group, triples);

  long long total2 = 0, total4 = 0, total6 = 0;
  int max2 = 0, max4 = 0, max6 = 0;
  bool partner_ok = true;
  for (const auto& row : census.rows) {
    total2 += row.count2;
    total4 += row.count4;
    total6 += row.count6;
    max2 = std::max(max2, row.count2);
    max4 = std::max(max4, row.count4);
    max6 = std::max(max6, row.count6);
    if (row.count6 == 1 && row.partner6 < 0) partner_ok = false;
  }

  ordered_json j;
  j["group"] = group.spec_string();
  j["n"] = n;
  j["triples"] = triples.size();
  j["triples_formula"] = caydis::bounds::zero_sum_triple_count(n);
  j["ordered_overlapping_pairs"] = census.ordered_pairs;
  j["overlap2"] = {{"total", total2}, {"max_per_triple", max2}};
  j["overlap4"] = {{"total", total4}, {"max_per_triple", max4}};
  j["overlap6"] = {{"total", total6}, {"max_per_triple", max6},
                   {"partner_recorded", partner_ok}};
  j["q"] = q;
  j["delta_exact"] =
      static_cast<double>(caydis::bounds::delta_exact(group, triples, q));
  j["delta_bound"] =
      static_cast<double>(caydis::bounds::janson_delta_bound(n, q));
  emit(j, out_path);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Random Cayley graph sampler and distinguishing-coloring toolkit"};
  app.require_subcommand(1);

  std::string group_spec = "25";
  std::string members_csv;
  std::string out_path, dimacs_path, csv_path, config_path;
  double p = -1.0, q = 0.5, t = -1.0, c1 = -1.0, c2 = -1.0, bound_p = 0.5;
  std::uint64_t seed = 1, trial = 0;
  int threads = -1;
  std::int64_t seed_override = -1;
  caydis::Caps caps;

  CLI::App* sample = app.add_subcommand("sample", "Sample one connection set");
  sample->add_option("--group", group_spec, "Group spec, e.g. 25 or 2,2,3,3");
  sample->add_option("--p", p, "Keep probability in [0, 1]")->required();
  sample->add_option("--seed", seed, "Master seed");
  sample->add_option("--trial", trial, "Substream index");
  sample->add_option("--out", out_path, "Write JSON here instead of stdout");
  sample->add_option("--export-dimacs", dimacs_path, "Also write the graph in DIMACS");

  CLI::App* analyze = app.add_subcommand("analyze", "Analyze one Cayley graph");
  analyze->add_option("--group", group_spec, "Group spec");
  analyze->add_option("--members", members_csv, "Explicit connection set, e.g. 1,24");
  analyze->add_option("--p", p, "Sample at this probability instead");
  analyze->add_option("--seed", seed, "Master seed");
  analyze->add_option("--trial", trial, "Substream index");
  analyze->add_option("--aut-cap", caps.aut_exact, "Vertex cap for exact Aut");
  analyze->add_option("--chi-cap", caps.chi_exact, "Vertex cap for exact chi");
  analyze->add_option("--out", out_path, "Write JSON here instead of stdout");

  CLI::App* experiment = app.add_subcommand("experiment", "Run a Monte Carlo experiment");
  experiment->add_option("--config", config_path, "JSON config file")->required();
  experiment->add_option("--out", out_path, "Write the full report here");
  experiment->add_option("--csv", csv_path, "Write the aggregate CSV here");
  experiment->add_option("--threads", threads, "Worker threads (0 = hardware)");
  experiment->add_option("--seed", seed_override, "Override the config seed");

  CLI::App* bounds = app.add_subcommand("bounds", "Evaluate reference bounds");
  bounds->add_option("--group", group_spec, "Group spec");
  bounds->add_option("--q", q, "Pair survival probability for triple bounds");
  bounds->add_option("--p", bound_p, "Probability for the size and product bounds")
      ->default_val(0.5);
  bounds->add_option("--t", t, "Size tail offset (default: reference scale)");
  bounds->add_option("--c1", c1, "Product bound inner exponent");
  bounds->add_option("--c2", c2, "Product bound outer exponent");

  CLI::App* census = app.add_subcommand("census", "Census triple overlaps");
  census->add_option("--group", group_spec, "Group spec");
  census->add_option("--q", q, "Pair survival probability for the exact sum");
  census->add_option("--out", out_path, "Write JSON here instead of stdout");

  try {
    app.parse(argc, argv);
    if (*sample) return run_sample(group_spec, p, seed, trial, out_path, dimacs_path);
    if (*analyze)
      return run_analyze(group_spec, members_csv, p, seed, trial, caps, out_path);
    if (*experiment)
      return run_experiment_cmd(config_path, out_path, csv_path, threads, seed_override);
    if (*bounds) return run_bounds(group_spec, q, bound_p, t, c1, c2, bound_p, out_path);
    if (*census) return run_census(group_spec, q, out_path);
    return 2;
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  } catch (const caydis::ScaleError& e) {
    std::cerr << "scale: " << e.what() << "\n";
    return 3;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  }
}
