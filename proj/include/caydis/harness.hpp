#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include <json.hpp>

namespace caydis {

/** Desk-scale caps for the exact subroutines; acceptance tests pin these. */
struct Caps {
  int aut_exact = 64;                     // vertex cap for exact Aut search
  std::uint64_t aut_elements = 1'000'000; // element budget for exact Aut
  int chi_exact = 40;                     // vertex cap for exact chi
  int chid_exact = 12;                    // vertex cap for exact chi_D
  int group_enum = 200;                   // order cap for subgroup/Aut(A) scans
};

enum class Estimator {
  AutSmall,
  Triples,
  ChiD,
  StructureEvents,
  SizeConcentration,
};

const char* estimator_name(Estimator e);

/**
 * A Monte Carlo experiment: `trials` sampled connection sets per p value,
 * with the selected per-trial estimators evaluated on each sample. Trial i
 * of run j draws from the substream (seed, j * trials + i); within a trial,
 * sampling draws first, then any recoloring draws, so enabling more
 * estimators never perturbs earlier ones.
 */
struct ExperimentConfig {
  std::string group = "25";
  std::vector<double> p_values = {0.5};
  int trials = 100;
  std::uint64_t seed = 1;
  std::vector<Estimator> estimators;
  Caps caps;
  std::vector<double> t_grid = {0.5, 1, 2, 3, 4, 6, 8};  // size tail grid
  int max_attempts = 1000;                               // recolor attempts
  bool tiny_cross_check = true;  // exact chi_D comparison when n <= cap
  int threads = 1;               // 0 = hardware concurrency
};

/** Parses the JSON config format (see README). Throws std::invalid_argument. */
ExperimentConfig parse_experiment_config(const nlohmann::json& j);

/**
 * Runs the experiment and returns the report: config echo plus one run per
 * p value, each with per-trial records, aggregates, and reference bounds.
 * Byte-deterministic for a fixed config (thread count included), regardless
 * of scheduling.
 */
nlohmann::ordered_json run_experiment(const ExperimentConfig& config);

/** Convenience single-estimator wrappers. */
nlohmann::ordered_json run_aut_small_experiment(ExperimentConfig config);
nlohmann::ordered_json run_triple_experiment(ExperimentConfig config);
nlohmann::ordered_json run_chi_d_experiment(ExperimentConfig config);
nlohmann::ordered_json run_structure_event_experiment(ExperimentConfig config);
nlohmann::ordered_json run_size_concentration_experiment(ExperimentConfig config);

/**
 * Recomputes every aggregate and bound from the per-trial records and
 * compares with the stored values. True iff the report is self-consistent.
 */
bool report_self_check(const nlohmann::json& report);

/** One CSV row per (estimator, parameter point); see README for columns. */
std::string report_to_csv(const nlohmann::json& report);

/** Deterministic-order parallel map over [0, count). threads = 0: hardware. */
void parallel_for(int count, int threads, const std::function<void(int)>& fn);

}  // namespace caydis
