#include "caydis/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace caydis::bounds {

namespace {

void require_unit(long double x, const char* name) {
  if (!(x >= 0.0L && x <= 1.0L))
    throw std::invalid_argument(std::string(name) + " must lie in [0, 1]");
}

void require_coprime_to_six(long long n) {
  if (n < 1 || std::gcd(n, 6LL) != 1)
    throw std::invalid_argument("n must be coprime to 6");
}

}  // namespace

long double product_bound_core(long double p, long double c1, long double c2) {
  require_unit(p, "p");
  if (c1 <= 0.0L || c2 <= 0.0L)
    throw std::invalid_argument("c1, c2 must be positive");
  return std::pow(std::pow(p, c1) + std::pow(1.0L - p, c1), c2);
}

long double product_bound_log2_value(long long n, long double p, long double c1,
                               long double c2) {
  require_unit(p, "p");
  if (n < 2) throw std::invalid_argument("n must be >= 2");
  if (c1 <= 0.0L || c2 <= 0.0L)
    throw std::invalid_argument("c1, c2 must be positive");
  long double log2n = std::log2(static_cast<long double>(n));
  return log2n * log2n + c2 * std::log2(std::pow(p, c1) + std::pow(1.0L - p, c1));
}

long double product_bound_value(long long n, long double p, long double c1, long double c2) {
  return std::exp2(product_bound_log2_value(n, p, c1, c2));
}

long long zero_sum_triple_count(long long n) {
  require_coprime_to_six(n);
  return (n - 1) * (n - 5) / 6;
}

long double janson_mu(long long n, long double q) {
  require_unit(q, "q");
  return static_cast<long double>(zero_sum_triple_count(n)) * q * q * q;
}

long double janson_delta_bound(long long n, long double q) {
  require_unit(q, "q");
  long double count = static_cast<long double>(zero_sum_triple_count(n));
  long double q3 = q * q * q;
  return 3.0L * n * count * q3 * q * q + count * q3 * q + count * q3;
}

TailBound janson_tail(long double mu, long double delta) {
  if (mu < 0.0L || delta < 0.0L)
    throw std::invalid_argument("mu and delta must be nonnegative");
  if (mu == 0.0L || mu > delta || delta == 0.0L) return TailBound{false, 0.0L};
  return TailBound{true, std::exp(-mu * mu / (2.0L * delta))};
}

long double chernoff_size_tail(long long n, long long m, long double p, long double t) {
  require_unit(p, "p");
  if (t <= 0.0L) throw std::invalid_argument("t must be positive");
  if (m < 1 || n < m || (n - m) % 2 != 0)
    throw std::invalid_argument("need m >= 1 and n - m even");
  long double mean1 = static_cast<long double>(m - 1) * p;
  long double mean2 = static_cast<long double>((n - m) / 2) * p;
  return std::exp(-t * t / (2.0L * (mean1 + t / 3.0L))) +
         std::exp(-t * t / (2.0L * (mean2 + t / 3.0L)));
}

long double reference_size_tail_t(long long n, long long m) {
  long double nn = static_cast<long double>(n);
  return 2.0L * nn / (13.0L * (m + 2.0L * std::log2(2.0L * nn)));
}

namespace {

int sorted_intersection_size(const std::vector<int>& a, const std::vector<int>& b) {
  int count = 0;
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i] < b[j])
      ++i;
    else if (a[i] > b[j])
      ++j;
    else {
      ++count;
      ++i;
      ++j;
    }
  }
  return count;
}

}  // namespace

OverlapCensus overlap_census(const Group& group,
                             const std::vector<ZeroSumTriple>& triples) {
  require_coprime_to_six(group.order());
  OverlapCensus census;
  census.rows.resize(triples.size());
  for (std::size_t i = 0; i < triples.size(); ++i) {
    census.rows[i].triple = static_cast<int>(i);
    for (std::size_t j = 0; j < triples.size(); ++j) {
      if (i == j) continue;
      int overlap = sorted_intersection_size(triples[i].difference_set,
                                             triples[j].difference_set);
      if (overlap == 0) continue;
      ++census.ordered_pairs;
      if (overlap == 2)
        ++census.rows[i].count2;
      else if (overlap == 4)
        ++census.rows[i].count4;
      else if (overlap == 6) {
        ++census.rows[i].count6;
        census.rows[i].partner6 =
            census.rows[i].count6 == 1 ? static_cast<int>(j) : -1;
      } else {
        throw std::logic_error("difference-set overlap outside {2, 4, 6}");
      }
    }
  }
  return census;
}

long double delta_exact(const Group& group,
                        const std::vector<ZeroSumTriple>& triples, long double q) {
  require_unit(q, "q");
  OverlapCensus census = overlap_census(group, triples);
  long double q3 = q * q * q;
  long double sum = 0.0L;
  for (const OverlapRow& row : census.rows) {
    // overlap 2 -> 10 distinct differences -> 5 inverse-closed pairs, etc.
    sum += row.count2 * q3 * q * q + row.count4 * q3 * q + row.count6 * q3;
  }
  return sum;
}

}  // namespace caydis::bounds
