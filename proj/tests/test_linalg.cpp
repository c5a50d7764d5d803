#include <doctest.h>

#include <random>

#include "legcob/linalg.hpp"
#include "oracles.hpp"

using namespace legcob;

namespace {

Z2Matrix random_matrix(std::mt19937& rng, int rows, int cols, double density = 0.5)
{
  Z2Matrix m(rows, cols);
  std::bernoulli_distribution bit(density);
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c)
      if (bit(rng)) m.set(r, c, true);
  return m;
}

}  // namespace

TEST_CASE("rank: identity and zero")
{
  Z2Matrix id(3, 3);
  for (int i = 0; i < 3; ++i) id.set(i, i, true);
  CHECK(rank(id) == 3);
  CHECK(rank(Z2Matrix(4, 7)) == 0);
}

TEST_CASE("rank agrees with the row-span oracle on random matrices")
{
  std::mt19937 rng(20260809);
  for (int trial = 0; trial < 200; ++trial) {
    int rows = 1 + static_cast<int>(rng() % 10);
    int cols = 1 + static_cast<int>(rng() % 10);
    Z2Matrix m = random_matrix(rng, rows, cols);
    int expect = oracle::rank_by_span(m);
    CHECK(rank(m) == expect);
    CHECK(rank_serial(m) == expect);
  }
}

TEST_CASE("rank of the transpose matches")
{
  std::mt19937 rng(7);
  for (int trial = 0; trial < 100; ++trial) {
    Z2Matrix m = random_matrix(rng, 1 + static_cast<int>(rng() % 12), 1 + static_cast<int>(rng() % 12));
    CHECK(rank(m) == rank(transpose(m)));
  }
}

namespace {

// Random two-step complex C_hi -> ... -> C_lo with d.d = 0, built by
// composing random maps through hidden middle spaces.
GradedComplex random_complex(std::mt19937& rng, int degrees, int max_dim)
{
  GradedComplex c;
  std::vector<int> dims(degrees);
  for (int k = 0; k < degrees; ++k) dims[k] = 1 + static_cast<int>(rng() % max_dim);
  for (int k = 0; k < degrees; ++k) c.dims[k] = dims[k];
  // d_k reads only the odd-k half of the basis of C_k and writes only the
  // odd-k half of C_{k-1}; consecutive maps then touch complementary halves
  // and compose to zero by construction.
  auto half = [](int n, bool upper) { return upper ? std::pair{n / 2, n} : std::pair{0, n / 2}; };
  for (int k = 1; k < degrees; ++k) {
    Z2Matrix d(dims[k - 1], dims[k]);
    auto [src_lo, src_hi] = half(dims[k], k % 2 == 1);
    auto [dst_lo, dst_hi] = half(dims[k - 1], k % 2 == 1);
    for (int j = src_lo; j < src_hi; ++j)
      for (int i = dst_lo; i < dst_hi; ++i)
        if (rng() & 1) d.set(i, j, true);
    c.boundary[k] = d;
  }
  return c;
}

}  // namespace

TEST_CASE("complex homology: zero differentials give the chain dimensions")
{
  GradedComplex c;
  c.dims[0] = 3;
  c.dims[1] = 2;
  c.boundary[1] = Z2Matrix(3, 2);
  LaurentDims h = complex_homology(c);
  CHECK(h.at(0) == 3);
  CHECK(h.at(1) == 2);
}

TEST_CASE("complex homology: an isomorphism has no homology")
{
  GradedComplex c;
  c.dims[0] = 1;
  c.dims[1] = 1;
  Z2Matrix d(1, 1);
  d.set(0, 0, true);
  c.boundary[1] = d;
  CHECK(complex_homology(c).empty());
}

TEST_CASE("complex homology rejects non-composing boundaries")
{
  GradedComplex c;
  c.dims[0] = 1;
  c.dims[1] = 1;
  c.dims[2] = 1;
  Z2Matrix d(1, 1);
  d.set(0, 0, true);
  c.boundary[1] = d;
  c.boundary[2] = d;
  CHECK_THROWS_AS(complex_homology(c), ComplexError);
  try {
    complex_homology(c);
  } catch (const ComplexError& e) {
    CHECK(e.degree == 2);
  }
}

TEST_CASE("complex homology agrees with the Smith-elimination oracle")
{
  std::mt19937 rng(99);
  for (int trial = 0; trial < 100; ++trial) {
    GradedComplex c = random_complex(rng, 2 + static_cast<int>(rng() % 4), 6);
    CHECK(complex_homology(c) == oracle::homology_by_smith(c));
  }
}

TEST_CASE("Euler characteristic is conserved on random complexes")
{
  std::mt19937 rng(424242);
  for (int trial = 0; trial < 200; ++trial) {
    GradedComplex c = random_complex(rng, 2 + static_cast<int>(rng() % 5), 7);
    long long chain = 0;
    for (auto& [k, n] : c.dims) chain += (k % 2 == 0) ? n : -n;
    CHECK(complex_homology(c).euler() == chain);
  }
}

TEST_CASE("les_feasible: spec examples")
{
  auto iso = les_feasible({1, 1});
  CHECK(iso.feasible);
  REQUIRE(iso.ranks.size() == 1);
  CHECK(iso.ranks[0] == 1);
  CHECK_FALSE(les_feasible({1, 0, 1}).feasible);
}

TEST_CASE("les_feasible agrees with brute force on random sequences")
{
  std::mt19937 rng(20130707);
  for (int trial = 0; trial < 1000; ++trial) {
    size_t len = 1 + rng() % 8;
    std::vector<long long> v(len);
    for (auto& x : v) x = rng() % 4;
    CHECK(les_feasible(v).feasible == oracle::les_by_bruteforce(v));
  }
}

TEST_CASE("les_feasible is stable under appending zero blocks")
{
  std::mt19937 rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    size_t len = 1 + rng() % 6;
    std::vector<long long> v(len);
    for (auto& x : v) x = rng() % 3;
    bool base = les_feasible(v).feasible;
    std::vector<long long> padded = v;
    padded.insert(padded.end(), {0, 0, 0});
    CHECK(les_feasible(padded).feasible == base);
    std::vector<long long> prefixed{0, 0};
    prefixed.insert(prefixed.end(), v.begin(), v.end());
    CHECK(les_feasible(prefixed).feasible == base);
  }
}
