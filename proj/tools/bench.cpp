// Compares the OpenMP kernels against their serial reference twins.
#include <algorithm>
#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include "creach/experiment.hpp"
#include "creach/oracle.hpp"

using namespace creach;

static double time_ms(const std::function<void()>& f) {
  std::vector<double> runs;
  for (int rep = 0; rep < 3; ++rep) {
    auto t0 = std::chrono::steady_clock::now();
    f();
    auto t1 = std::chrono::steady_clock::now();
    runs.push_back(std::chrono::duration<double, std::milli>(t1 - t0).count());
  }
  std::sort(runs.begin(), runs.end());
  return runs[1];
}

int main(int argc, char** argv) {
  int stg_n = 18;
  int trial_n = 16;
  long long trials = 2000;
  u64 seed = 7;
  for (int i = 1; i + 1 < argc; i += 2) {
    std::string flag = argv[i];
    long long v = std::atoll(argv[i + 1]);
    if (flag == "--stg-n") stg_n = static_cast<int>(v);
    else if (flag == "--trial-n") trial_n = static_cast<int>(v);
    else if (flag == "--trials") trials = v;
    else if (flag == "--seed") seed = static_cast<u64>(v);
    else {
      std::fprintf(stderr, "usage: bench [--stg-n N] [--trial-n N] [--trials K] [--seed S]\n");
      return 2;
    }
  }

  SplitMix64 root(seed);
  std::printf("%-22s %6s %12s %12s %9s\n", "kernel", "n", "serial_ms", "openmp_ms", "speedup");

  {
    RuleVector rv = random_rule_vector(stg_n, root.sub(1));
    volatile u64 sink = 0;
    double ser = time_ms([&] { sink += build_stg_serial(rv, stg_n).succ.back(); });
    double par = time_ms([&] { sink += build_stg(rv, stg_n).succ.back(); });
    if (build_stg(rv, stg_n).succ != build_stg_serial(rv, stg_n).succ) {
      std::fprintf(stderr, "stg kernels disagree\n");
      return 1;
    }
    std::printf("%-22s %6d %12.2f %12.2f %8.2fx\n", "stg_build", stg_n, ser, par, ser / par);
  }

  {
    std::vector<RuleVector> cas;
    SplitMix64 pool = root.sub(2);
    for (int i = 0; i < 8; ++i) cas.push_back(random_rule_vector(trial_n, pool.sub(i)));
    SplitMix64 base = root.sub(3);
    std::vector<u64> a, b;
    double ser = time_ms([&] { a = measure_trials_serial(cas, trials, base); });
    double par = time_ms([&] { b = measure_trials(cas, trials, base, true); });
    if (a != b) {
      std::fprintf(stderr, "trial kernels disagree\n");
      return 1;
    }
    std::printf("%-22s %6d %12.2f %12.2f %8.2fx\n", "experiment_trials", trial_n, ser, par,
                ser / par);
  }
  return 0;
}
