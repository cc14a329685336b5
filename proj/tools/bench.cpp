// Compares the OpenMP kernels against their serial reference implementations
// on representative workloads.

#include <chrono>
#include <cstdio>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "polydec/oracle.hpp"
#include "polydec/taxonomy.hpp"

using namespace polydec;

namespace {

template <typename F>
double time_ms(F&& fn) {
  auto t0 = std::chrono::steady_clock::now();
  fn();
  auto t1 = std::chrono::steady_clock::now();
  return std::chrono::duration<double, std::milli>(t1 - t0).count();
}

void set_threads(int n) {
#ifdef _OPENMP
  omp_set_num_threads(n);
#else
  (void)n;
#endif
}

int max_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

}  // namespace

int main() {
  const int threads = max_threads();
  std::printf("hardware threads available to OpenMP: %d\n", threads);

  Field f5 = FiniteField::get(5, 1);
  {
    // right-component enumeration, 5^7 candidates
    Rng rng(7);
    UniPoly g = random_normal(f5, 2, rng);
    UniPoly h = random_normal(f5, 8, rng);
    UniPoly f = compose(g, h);
    OracleOptions ser{10000000, false}, par{10000000, true};
    size_t n_ser = 0, n_par = 0;
    double t_ser =
        time_ms([&] { n_ser = enumerate_right_components_serial(f, 8, ser).size(); });
    double t_par = time_ms([&] { n_par = enumerate_right_components(f, 8, par).size(); });
    std::printf(
        "oracle deg-16/GF(5)    serial %8.1f ms   parallel %8.1f ms   speedup %.2fx   "
        "(%zu vs %zu hits)\n",
        t_ser, t_par, t_ser / t_par, n_ser, n_par);
  }

  {
    // degree-9 census over GF(9): the candidate loop is the parallel axis
    Field f9 = FiniteField::get(3, 2);
    OracleOptions opt;
    CensusResult r1, r2;
    set_threads(1);
    double t1 = time_ms([&] { r1 = census_p2(f9, CensusMode::Exhaustive, 0, 0, opt); });
    set_threads(threads);
    double t2 = time_ms([&] { r2 = census_p2(f9, CensusMode::Exhaustive, 0, 0, opt); });
    std::printf(
        "census p=3/GF(9)       1-thread %6.1f ms   %d-thread %8.1f ms   speedup %.2fx   "
        "rows %zu/%zu\n",
        t1, threads, t2, t1 / t2, r1.rows.size(), r2.rows.size());
  }

  {
    // sampled degree-25 census over GF(5)
    OracleOptions opt;
    CensusResult r1, r2;
    set_threads(1);
    double t1 = time_ms([&] { r1 = census_p2(f5, CensusMode::Sample, 2000, 42, opt); });
    set_threads(threads);
    double t2 = time_ms([&] { r2 = census_p2(f5, CensusMode::Sample, 2000, 42, opt); });
    std::printf(
        "census p=5 sample      1-thread %6.1f ms   %d-thread %8.1f ms   speedup %.2fx   "
        "classified %llu/%llu\n",
        t1, threads, t2, t1 / t2, static_cast<unsigned long long>(r1.multi_collision),
        static_cast<unsigned long long>(r2.multi_collision));
  }
  return 0;
}
