#pragma once

#include <map>
#include <string>
#include <vector>

namespace legcob {

/// Finitely supported map from integer degree to a positive dimension.
/// This is the Poincare-polynomial currency of the whole library: degree k
/// carries dim H^k.  Zero values are never stored, so equality of the
/// underlying maps is equality of polynomials.
class LaurentDims {
 public:
  LaurentDims() = default;

  static LaurentDims from_pairs(const std::vector<std::pair<int, int>>& pairs);

  /// Dimension in a given degree (0 if unsupported).
  int at(int degree) const
  {
    auto it = dims_.find(degree);
    return it == dims_.end() ? 0 : it->second;
  }

  /// Sets dims[degree] = value, erasing the entry when value == 0.
  void set(int degree, int value);

  /// Adds delta to dims[degree]; the result must stay nonnegative.
  void add(int degree, int delta);

  bool empty() const { return dims_.empty(); }
  int min_degree() const;
  int max_degree() const;

  /// Sum of all dimensions.
  long long total() const;

  /// Alternating sum sum_k (-1)^k dims[k].
  long long euler() const;

  const std::map<int, int>& entries() const { return dims_; }

  bool operator==(const LaurentDims& o) const { return dims_ == o.dims_; }
  bool operator!=(const LaurentDims& o) const { return dims_ != o.dims_; }
  bool operator<(const LaurentDims& o) const;

  /// Degreewise sum.
  LaurentDims operator+(const LaurentDims& o) const;

  /// Renders e.g. "2 + t" or "t^-1 + t + t^2"; the zero polynomial is "0".
  std::string str() const;

  /// Canonical serialization [[deg,dim],...] sorted by degree.
  std::vector<std::pair<int, int>> pairs() const;

 private:
  std::map<int, int> dims_;
};

}  // namespace legcob
