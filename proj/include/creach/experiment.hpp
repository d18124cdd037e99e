#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "creach/decide.hpp"
#include "creach/rng.hpp"

namespace creach {

struct SamplingParams {
  double t_const = 2.0;   // confidence constant t
  double rel_err = 0.05;  // relative error r
  double delta = 0.01;    // convergence threshold
  long long pilot_size = 500;
  u64 rng_seed = 1;
  int threads = 0;              // 0: parallel kernels, 1: serial reference
  bool pair_pop_squared = false;  // population 4^n instead of 2^n
  double ca_pop_cap = 0;        // >0 caps the 256^n rule-vector population
  long long max_iterations = 1000;
};

void validate(const SamplingParams& p);  // throws std::invalid_argument

struct SampleStats {
  long long size = 0;
  double mean = 0;
  double variance = 0;  // unbiased, n-1 denominator
};

SampleStats summarize(const std::vector<u64>& xs);
SampleStats summarize(const std::vector<double>& xs);

double cochran_c(const SamplingParams& p);
long long pilot_to_second_size(const SampleStats& stats1, double C);

struct FinalSize {
  long long m0 = 0;
  long long m = 0;
};

FinalSize final_sample_size(const SampleStats& stats2, const SamplingParams& p,
                            double population);

double running_estimate(double prev, long long k, double sample_mean);

struct ExperimentReport {
  int ca_size = 0;
  long long m_pairs = 0;  // m' pairs per sampled CA
  long long m_cas = 0;    // m'' CAs per iteration
  std::vector<double> estimates;
  double final_avg_edges = 0;
  long long iterations = 0;
  std::vector<std::string> warnings;
};

ExperimentReport avg_explored_edges(int n, const SamplingParams& params);

// Explored-edge count for m_pairs random (S, D) pairs on each CA; trial (i, j)
// draws from substream base.sub(i).sub(j), so both variants agree exactly.
std::vector<u64> measure_trials(const std::vector<RuleVector>& cas, long long m_pairs,
                                SplitMix64 base, bool parallel);
std::vector<u64> measure_trials_serial(const std::vector<RuleVector>& cas, long long m_pairs,
                                       SplitMix64 base);

RuleVector random_rule_vector(int n, SplitMix64 g);

struct GrowthPoint {
  double n = 0;
  double e = 0;
};

double growth_rate(const GrowthPoint& p1, const GrowthPoint& p2);

struct GrowthFit {
  std::vector<GrowthPoint> points;
  std::vector<double> exponents;  // pairwise, between consecutive points
  int bound_exponent = 3;
};

GrowthFit fit_growth(std::vector<GrowthPoint> points);

std::string to_csv(const std::vector<ExperimentReport>& reports);
std::string to_csv(const GrowthFit& fit);
std::vector<GrowthPoint> parse_growth_csv(std::istream& in);

}  // namespace creach
