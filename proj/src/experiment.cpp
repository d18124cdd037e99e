#include "creach/experiment.hpp"

#include <cmath>
#include <cstdio>
#include <istream>
#include <sstream>
#include <stdexcept>

namespace creach {

void validate(const SamplingParams& p) {
  if (!(p.t_const > 0)) throw std::invalid_argument("t_const must be positive");
  if (!(p.rel_err > 0 && p.rel_err < 1)) throw std::invalid_argument("rel_err must be in (0,1)");
  if (!(p.delta > 0 && p.delta < 1)) throw std::invalid_argument("delta must be in (0,1)");
  if (p.pilot_size < 2) throw std::invalid_argument("pilot_size must be at least 2");
  if (p.max_iterations < 1) throw std::invalid_argument("max_iterations must be at least 1");
}

template <class T>
static SampleStats summarize_impl(const std::vector<T>& xs) {
  if (xs.empty()) throw std::invalid_argument("empty sample");
  double sum = 0;
  for (const T& x : xs) sum += static_cast<double>(x);
  double mean = sum / static_cast<double>(xs.size());
  double ss = 0;
  for (const T& x : xs) {
    double d = static_cast<double>(x) - mean;
    ss += d * d;
  }
  double var = xs.size() > 1 ? ss / static_cast<double>(xs.size() - 1) : 0;
  return {static_cast<long long>(xs.size()), mean, var};
}

SampleStats summarize(const std::vector<u64>& xs) { return summarize_impl(xs); }
SampleStats summarize(const std::vector<double>& xs) { return summarize_impl(xs); }

double cochran_c(const SamplingParams& p) { return p.rel_err * p.rel_err / (p.t_const * p.t_const); }

static long long round_size(double x) {
  long long v = std::llround(x);  // half away from zero = half up for x >= 0
  return v < 1 ? 1 : v;
}

long long pilot_to_second_size(const SampleStats& stats1, double C) {
  if (stats1.mean == 0) throw std::invalid_argument("degenerate pilot: zero mean");
  double mu2 = stats1.mean * stats1.mean;
  double n1 = static_cast<double>(stats1.size);
  double n2 = stats1.variance / (C * mu2) *
              (1 + 8 * C + stats1.variance / (n1 * mu2) + 2 / n1);
  return round_size(n2);
}

FinalSize final_sample_size(const SampleStats& stats2, const SamplingParams& p,
                            double population) {
  if (stats2.mean == 0) throw std::invalid_argument("degenerate sample: zero mean");
  if (!(population >= 1)) throw std::invalid_argument("population must be at least 1");
  double m0 = p.t_const * p.t_const * stats2.variance /
              (p.rel_err * p.rel_err * stats2.mean * stats2.mean);
  double m = m0 / (1 + m0 / population);
  return {round_size(m0), round_size(m)};
}

double running_estimate(double prev, long long k, double sample_mean) {
  if (k < 1) throw std::invalid_argument("k must be at least 1");
  if (k == 1) return sample_mean;
  double kd = static_cast<double>(k);
  return (kd - 1) / kd * prev + sample_mean / kd;
}

RuleVector random_rule_vector(int n, SplitMix64 g) {
  RuleVector rv(n);
  for (int i = 0; i < n; ++i) rv[i] = Rule{static_cast<std::uint8_t>(g.draw_bits(8))};
  return rv;
}

static u64 one_trial(const RuleVector& rv, int n, SplitMix64 g) {
  Configuration S{g.draw_bits128(n), n};
  Configuration D{g.draw_bits128(n), n};
  return decide(rv, S, D).explored_edges;
}

std::vector<u64> measure_trials_serial(const std::vector<RuleVector>& cas, long long m_pairs,
                                       SplitMix64 base) {
  int n = static_cast<int>(cas.at(0).size());
  std::vector<u64> counts(cas.size() * static_cast<std::size_t>(m_pairs));
  for (std::size_t i = 0; i < cas.size(); ++i) {
    SplitMix64 ca_stream = base.sub(i);
    for (long long j = 0; j < m_pairs; ++j)
      counts[i * m_pairs + j] = one_trial(cas[i], n, ca_stream.sub(j));
  }
  return counts;
}

std::vector<u64> measure_trials(const std::vector<RuleVector>& cas, long long m_pairs,
                                SplitMix64 base, bool parallel) {
  if (!parallel) return measure_trials_serial(cas, m_pairs, base);
  int n = static_cast<int>(cas.at(0).size());
  std::vector<u64> counts(cas.size() * static_cast<std::size_t>(m_pairs));
  const std::int64_t total = static_cast<std::int64_t>(counts.size());
#ifdef CREACH_OPENMP
#pragma omp parallel for schedule(dynamic, 16)
#endif
  for (std::int64_t t = 0; t < total; ++t) {
    std::size_t i = static_cast<std::size_t>(t / m_pairs);
    long long j = t % m_pairs;
    counts[t] = one_trial(cas[i], n, base.sub(i).sub(j));
  }
  return counts;
}

// Two-stage Cochran sizing over any trial source: measure(count, tag) must
// return that many observations drawn from the tagged substream.
template <class Measure>
static long long two_stage_size(const SamplingParams& p, double C, double population,
                                const char* what, Measure measure,
                                std::vector<std::string>& warnings) {
  SampleStats s1 = summarize(measure(p.pilot_size, u64{1}));
  if (s1.mean == 0 || s1.variance == 0) {
    warnings.push_back(std::string("degenerate pilot for ") + what +
                       "; using the pilot size");
    return s1.size;
  }
  long long n2 = pilot_to_second_size(s1, C);
  SampleStats s2 = summarize(measure(n2, u64{2}));
  if (s2.mean == 0 || s2.variance == 0) {
    warnings.push_back(std::string("degenerate second-stage sample for ") + what +
                       "; using that sample's size");
    return s2.size;
  }
  return final_sample_size(s2, p, population).m;
}

ExperimentReport avg_explored_edges(int n, const SamplingParams& params) {
  validate(params);
  if (n < 2) throw std::invalid_argument("experiment needs n >= 2");
  if (n > kMaxCells) throw std::invalid_argument("n exceeds the lattice limit");

  const bool parallel = params.threads != 1;
  const double C = cochran_c(params);
  SplitMix64 root = SplitMix64(params.rng_seed).sub(static_cast<u64>(n));
  ExperimentReport rep;
  rep.ca_size = n;

  // stage 1: m' pairs, sized on one pilot CA
  RuleVector pilot_ca = random_rule_vector(n, root.sub(1));
  double pair_pop = std::exp2(params.pair_pop_squared ? 2.0 * n : static_cast<double>(n));
  rep.m_pairs = two_stage_size(
      params, C, pair_pop, "pairs",
      [&](long long count, u64 tag) {
        return measure_trials({pilot_ca}, count, root.sub(2).sub(tag), parallel);
      },
      rep.warnings);

  // stage 2: m'' rule vectors, observing the per-CA mean over m' pairs
  double ca_pop = std::exp2(8.0 * n);
  if (params.ca_pop_cap > 0 && params.ca_pop_cap < ca_pop) ca_pop = params.ca_pop_cap;
  auto ca_means = [&](long long count, u64 tag) {
    std::vector<RuleVector> cas(count);
    SplitMix64 pool = root.sub(3).sub(tag);
    for (long long i = 0; i < count; ++i) cas[i] = random_rule_vector(n, pool.sub(i));
    std::vector<u64> counts = measure_trials(cas, rep.m_pairs, root.sub(4).sub(tag), parallel);
    std::vector<double> means(count);
    for (long long i = 0; i < count; ++i) {
      u128 sum = 0;
      for (long long j = 0; j < rep.m_pairs; ++j) sum += counts[i * rep.m_pairs + j];
      means[i] = static_cast<double>(sum) / static_cast<double>(rep.m_pairs);
    }
    return means;
  };
  rep.m_cas = two_stage_size(params, C, ca_pop, "rule vectors", ca_means, rep.warnings);

  // convergence loop over fresh batches
  double prev = 0;
  for (long long k = 1; k <= params.max_iterations; ++k) {
    std::vector<RuleVector> cas(rep.m_cas);
    SplitMix64 pool = root.sub(5).sub(k);
    for (long long i = 0; i < rep.m_cas; ++i) cas[i] = random_rule_vector(n, pool.sub(i));
    std::vector<u64> counts = measure_trials(cas, rep.m_pairs, root.sub(6).sub(k), parallel);
    u128 sum = 0;
    for (u64 c : counts) sum += c;
    double batch_mean = static_cast<double>(sum) / static_cast<double>(counts.size());
    double est = running_estimate(prev, k, batch_mean);
    rep.estimates.push_back(est);
    rep.iterations = k;
    rep.final_avg_edges = est;
    if (est == 0) {
      if (k > 1) {
        rep.warnings.push_back("estimate collapsed to zero");
        return rep;
      }
    } else if (std::fabs(est - prev) / est < params.delta) {
      return rep;
    }
    prev = est;
  }
  rep.warnings.push_back("convergence loop hit max_iterations");
  return rep;
}

double growth_rate(const GrowthPoint& p1, const GrowthPoint& p2) {
  if (p1.n == p2.n) throw std::invalid_argument("growth rate needs distinct sizes");
  if (!(p1.e > 0) || !(p2.e > 0))
    throw std::invalid_argument("growth rate needs positive edge counts");
  return std::log(p2.e / p1.e) / std::log(p2.n / p1.n);
}

GrowthFit fit_growth(std::vector<GrowthPoint> points) {
  GrowthFit fit;
  fit.points = std::move(points);
  for (std::size_t i = 1; i < fit.points.size(); ++i)
    fit.exponents.push_back(growth_rate(fit.points[i - 1], fit.points[i]));
  return fit;
}

static std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.10g", v);
  return buf;
}

std::string to_csv(const std::vector<ExperimentReport>& reports) {
  std::string out = "n,m_pairs,m_cas,k_iterations,avg_edges\n";
  for (const ExperimentReport& r : reports)
    out += std::to_string(r.ca_size) + ',' + std::to_string(r.m_pairs) + ',' +
           std::to_string(r.m_cas) + ',' + std::to_string(r.iterations) + ',' +
           fmt(r.final_avg_edges) + '\n';
  return out;
}

std::string to_csv(const GrowthFit& fit) {
  std::string out = "n,e,a\n";
  for (std::size_t i = 0; i < fit.points.size(); ++i) {
    out += fmt(fit.points[i].n) + ',' + fmt(fit.points[i].e) + ',';
    if (i > 0) out += fmt(fit.exponents[i - 1]);
    out += '\n';
  }
  return out;
}

std::vector<GrowthPoint> parse_growth_csv(std::istream& in) {
  std::vector<GrowthPoint> pts;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::size_t comma = line.find(',');
    if (comma == std::string::npos) throw std::invalid_argument("growth CSV rows need n,e");
    std::string a = line.substr(0, comma);
    std::string b = line.substr(comma + 1);
    if (!b.empty() && b.back() == '\r') b.pop_back();
    if (pts.empty() && a == "n") continue;  // header
    try {
      std::size_t ia = 0, ib = 0;
      GrowthPoint p{std::stod(a, &ia), std::stod(b, &ib)};
      if (ia != a.size() || ib != b.size()) throw std::invalid_argument("");
      pts.push_back(p);
    } catch (const std::exception&) {
      throw std::invalid_argument("growth CSV: bad row '" + line + "'");
    }
  }
  return pts;
}

}  // namespace creach
