// Timings for the parallel kernels against their serial references.

#include <chrono>
#include <iostream>
#include <random>

#include "legcob/dga.hpp"
#include "legcob/diagram.hpp"
#include "legcob/invariants.hpp"
#include "legcob/linalg.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

using namespace legcob;
using Clock = std::chrono::steady_clock;

namespace {

double ms_since(Clock::time_point t0)
{
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

void bench_rank()
{
  std::mt19937_64 rng(1);
  const int n = 4096;
  Z2Matrix m(n, n);
  for (int r = 0; r < n; ++r) {
    uint64_t* row = m.row_ptr(r);
    for (int w = 0; w < m.words_per_row(); ++w) row[w] = rng();
  }
  auto t0 = Clock::now();
  int rs = rank_serial(m);
  double serial = ms_since(t0);
  t0 = Clock::now();
  int rp = rank(m);
  double parallel = ms_since(t0);
  std::cout << "gf2 rank " << n << "x" << n << ": serial " << serial << " ms, parallel "
            << parallel << " ms (ranks " << rs << "/" << rp << ", speedup "
            << serial / parallel << "x)\n";
}

// A synthetic Z-graded DGA with a wide degree-0 block: eps must satisfy one
// quadratic relation per degree-1 generator.
Dga synthetic_dga(int deg0, int relations)
{
  Dga g;
  for (int i = 0; i < deg0; ++i) g.generators.push_back({"a" + std::to_string(i), 0});
  g.differential.assign(deg0, {});
  std::mt19937 rng(7);
  for (int r = 0; r < relations; ++r) {
    g.generators.push_back({"b" + std::to_string(r), 1});
    std::vector<Word> words;
    words.push_back({});
    for (int w = 0; w < 3; ++w) {
      int x = static_cast<int>(rng() % deg0), y = static_cast<int>(rng() % deg0);
      words.push_back({x, y});
    }
    std::sort(words.begin(), words.end());
    words.erase(std::unique(words.begin(), words.end()), words.end());
    g.differential.push_back(words);
  }
  return g;
}

void bench_augmentations()
{
  Dga g = synthetic_dga(22, 10);
  AugmentationOptions serial;
  serial.serial = true;
  serial.max_degree_zero = 24;
  auto t0 = Clock::now();
  auto a = enumerate_augmentations(g, serial);
  double s = ms_since(t0);
  AugmentationOptions par;
  par.max_degree_zero = 24;
  t0 = Clock::now();
  auto b = enumerate_augmentations(g, par);
  double p = ms_since(t0);
  bool same = a.size() == b.size();
  for (size_t i = 0; same && i < a.size(); ++i) same = a[i].values == b[i].values;
  std::cout << "augmentation sweep 2^22: serial " << s << " ms, parallel " << p
            << " ms (hits " << a.size() << ", identical " << (same ? "yes" : "NO")
            << ", speedup " << s / p << "x)\n";
}

void bench_disks()
{
  FrontDiagram d = builtin("m821");
  ResolvedDiagram r = lagrangian_resolution(d, maslov_potential(d));
  DiskSearchOptions serial;
  serial.serial = true;
  auto t0 = Clock::now();
  Dga a = build_dga(r, serial);
  double s = ms_since(t0);
  t0 = Clock::now();
  Dga b = build_dga(r);
  double p = ms_since(t0);
  std::cout << "disk search (m821): serial " << s << " ms, parallel " << p << " ms (identical "
            << (a.differential == b.differential ? "yes" : "NO") << ", speedup " << s / p
            << "x)\n";
}

}  // namespace

int main()
{
#ifdef _OPENMP
  std::cout << "openmp threads: " << omp_get_max_threads() << "\n";
#else
  std::cout << "built without openmp\n";
#endif
  bench_rank();
  bench_augmentations();
  bench_disks();
  return 0;
}
