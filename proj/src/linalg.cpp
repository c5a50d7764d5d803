#include "legcob/linalg.hpp"

#include <algorithm>
#include <utility>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace legcob {

void Z2Matrix::swap_rows(int r, int s)
{
  if (r == s) return;
  uint64_t* a = row_ptr(r);
  uint64_t* b = row_ptr(s);
  for (int w = 0; w < wpr_; ++w) std::swap(a[w], b[w]);
}

bool Z2Matrix::row_is_zero(int r) const
{
  const uint64_t* a = row_ptr(r);
  for (int w = 0; w < wpr_; ++w)
    if (a[w]) return false;
  return true;
}

Z2Matrix transpose(const Z2Matrix& m)
{
  Z2Matrix t(m.cols(), m.rows());
  for (int r = 0; r < m.rows(); ++r)
    for (int c = 0; c < m.cols(); ++c)
      if (m.get(r, c)) t.set(c, r, true);
  return t;
}

Z2Matrix multiply(const Z2Matrix& a, const Z2Matrix& b)
{
  if (a.cols() != b.rows()) throw std::invalid_argument("multiply: shape mismatch");
  Z2Matrix c(a.rows(), b.cols());
  for (int i = 0; i < a.rows(); ++i) {
    uint64_t* ci = c.row_ptr(i);
    for (int k = 0; k < a.cols(); ++k) {
      if (!a.get(i, k)) continue;
      const uint64_t* bk = b.row_ptr(k);
      for (int w = 0; w < c.words_per_row(); ++w) ci[w] ^= bk[w];
    }
  }
  return c;
}

int rank_serial(Z2Matrix m)
{
  const int rows = m.rows(), cols = m.cols();
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int pivot = -1;
    for (int i = r; i < rows; ++i)
      if (m.get(i, c)) { pivot = i; break; }
    if (pivot < 0) continue;
    m.swap_rows(r, pivot);
    for (int i = r + 1; i < rows; ++i)
      if (m.get(i, c)) m.xor_rows(i, r);
    ++r;
  }
  return r;
}

int rank(Z2Matrix m)
{
  const int rows = m.rows(), cols = m.cols();
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int pivot = -1;
    for (int i = r; i < rows; ++i)
      if (m.get(i, c)) { pivot = i; break; }
    if (pivot < 0) continue;
    m.swap_rows(r, pivot);
#ifdef _OPENMP
    bool big = static_cast<long long>(rows - r) * m.words_per_row() > (1 << 14);
#pragma omp parallel for if (big) schedule(static)
#endif
    for (int i = r + 1; i < rows; ++i)
      if (m.get(i, c)) m.xor_rows(i, r);
    ++r;
  }
  return r;
}

LaurentDims complex_homology(const GradedComplex& c)
{
  auto dim_at = [&](int k) {
    auto it = c.dims.find(k);
    return it == c.dims.end() ? 0 : it->second;
  };

  // Shape and d.d = 0 validation.
  for (auto& [k, d] : c.boundary) {
    if (d.cols() != dim_at(k) || d.rows() != dim_at(k - 1))
      throw ComplexError("boundary matrix shape mismatch at degree " + std::to_string(k), k);
  }
  for (auto& [k, d] : c.boundary) {
    auto up = c.boundary.find(k + 1);
    if (up == c.boundary.end()) continue;
    Z2Matrix composite = multiply(d, up->second);
    for (int i = 0; i < composite.rows(); ++i)
      if (!composite.row_is_zero(i))
        throw ComplexError("boundaries do not compose to zero at degree " + std::to_string(k + 1), k + 1);
  }

  auto rank_at = [&](int k) {
    auto it = c.boundary.find(k);
    return it == c.boundary.end() ? 0 : rank(it->second);
  };

  LaurentDims out;
  for (auto& [k, n] : c.dims) {
    if (n == 0) continue;
    int ker = n - rank_at(k);
    int im = rank_at(k + 1);
    out.set(k, ker - im);
  }
  return out;
}

LesResult les_feasible(const std::vector<long long>& v)
{
  LesResult res;
  long long r = 0;
  std::vector<long long> ranks;
  ranks.reserve(v.size());
  for (long long x : v) {
    r = x - r;
    if (r < 0) return res;
    ranks.push_back(r);
  }
  if (r != 0) return res;
  if (!ranks.empty()) ranks.pop_back();  // closing arrow rank is forced to 0
  res.feasible = true;
  res.ranks = std::move(ranks);
  return res;
}

}  // namespace legcob
