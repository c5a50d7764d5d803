#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <vector>

#include "legcob/laurent.hpp"

namespace legcob {

/// Dense GF(2) matrix with bit-packed rows.
class Z2Matrix {
 public:
  Z2Matrix() = default;
  Z2Matrix(int rows, int cols)
      : rows_(rows), cols_(cols), wpr_((cols + 63) / 64), data_(static_cast<size_t>(rows) * wpr_, 0)
  {
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  bool get(int r, int c) const { return (word(r, c >> 6) >> (c & 63)) & 1u; }
  void set(int r, int c, bool v)
  {
    uint64_t& w = word(r, c >> 6);
    uint64_t m = uint64_t(1) << (c & 63);
    w = v ? (w | m) : (w & ~m);
  }
  void flip(int r, int c) { word(r, c >> 6) ^= uint64_t(1) << (c & 63); }

  /// row r ^= row s
  void xor_rows(int r, int s)
  {
    uint64_t* a = row_ptr(r);
    const uint64_t* b = row_ptr(s);
    for (int w = 0; w < wpr_; ++w) a[w] ^= b[w];
  }

  void swap_rows(int r, int s);

  bool row_is_zero(int r) const;

  bool operator==(const Z2Matrix& o) const
  {
    return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
  }

  const uint64_t* row_ptr(int r) const { return data_.data() + static_cast<size_t>(r) * wpr_; }
  uint64_t* row_ptr(int r) { return data_.data() + static_cast<size_t>(r) * wpr_; }
  int words_per_row() const { return wpr_; }

 private:
  uint64_t& word(int r, int w) { return data_[static_cast<size_t>(r) * wpr_ + w]; }
  const uint64_t& word(int r, int w) const { return data_[static_cast<size_t>(r) * wpr_ + w]; }

  int rows_ = 0;
  int cols_ = 0;
  int wpr_ = 0;
  std::vector<uint64_t> data_;
};

Z2Matrix transpose(const Z2Matrix& m);
Z2Matrix multiply(const Z2Matrix& a, const Z2Matrix& b);

/// GF(2) rank by Gaussian elimination on packed words.  Row elimination is
/// OpenMP-parallel for matrices large enough to matter.
int rank(Z2Matrix m);

/// Plain serial elimination, kept as the reference for tests and benchmarks.
int rank_serial(Z2Matrix m);

/// A graded chain complex over GF(2).  boundary[k] maps C_k -> C_{k-1};
/// its shape is dim(C_{k-1}) x dim(C_k).  Degrees with zero dimension may be
/// omitted from both maps.
struct GradedComplex {
  std::map<int, int> dims;
  std::map<int, Z2Matrix> boundary;
};

struct ComplexError : std::runtime_error {
  explicit ComplexError(const std::string& what, int degree_) : std::runtime_error(what), degree(degree_) {}
  int degree;
};

/// Homology dimensions: dims(k) = dim ker(boundary_k) - rank(boundary_{k+1}).
/// Throws ComplexError (carrying the offending degree) when consecutive
/// boundaries do not compose to zero or shapes are inconsistent.
LaurentDims complex_homology(const GradedComplex& c);

struct LesResult {
  bool feasible = false;
  /// Ranks of the interior arrows (size = len(v) - 1 when feasible).
  std::vector<long long> ranks;
};

/// Decides whether the dimension sequence v (implicitly flanked by zeros)
/// can be the dimensions of an exact sequence.  The greedy recurrence
/// r_i = v_i - r_{i-1} is the unique candidate rank vector, so feasibility
/// amounts to nonnegativity plus a vanishing final rank.
LesResult les_feasible(const std::vector<long long>& v);

}  // namespace legcob
