#pragma once

#include <vector>

#include "caydis/graph.hpp"

namespace caydis {

/**
 * Vertex coloring with colors 0..k-1, k = number of distinct colors used.
 * Construction compacts arbitrary labels into that canonical range,
 * preserving the order of the original labels.
 */
struct Coloring {
  std::vector<int> colors;
  int k = 0;

  static Coloring from_colors(std::vector<int> raw);

  int size() const { return static_cast<int>(colors.size()); }
  /** Color classes by color id; each class sorted ascending. */
  std::vector<std::vector<int>> classes() const;
};

/** Pre: coloring covers every vertex (size match), else std::invalid_argument. */
bool is_proper(const CayleyGraph& graph, const Coloring& coloring);

enum class GreedyStrategy { IndexOrder, Saturation };

/** First-fit greedy; Saturation picks the most saturated vertex first (DSATUR). */
Coloring greedy_coloring(const CayleyGraph& graph, GreedyStrategy strategy);

/** Greedy maximal clique (degree order), usable as a chromatic lower bound. */
std::vector<int> greedy_clique(const CayleyGraph& graph);

struct ChromaticResult {
  int chi = 0;
  Coloring witness;
};

/**
 * Exact chromatic number by branch and bound: DSATUR upper bound, greedy
 * clique lower bound, then k-colorability backtracking for ascending k with
 * the clique precolored and new colors introduced in canonical order.
 * Deterministic; throws ScaleError when the graph exceeds the cap.
 */
ChromaticResult chromatic_number_exact(const CayleyGraph& graph, int cap = 40);

}  // namespace caydis
