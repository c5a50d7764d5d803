#include "legcob/laurent.hpp"

#include <sstream>
#include <stdexcept>

namespace legcob {

LaurentDims LaurentDims::from_pairs(const std::vector<std::pair<int, int>>& pairs)
{
  LaurentDims out;
  for (auto [deg, dim] : pairs) out.add(deg, dim);
  return out;
}

void LaurentDims::set(int degree, int value)
{
  if (value < 0) throw std::invalid_argument("LaurentDims: negative dimension");
  if (value == 0)
    dims_.erase(degree);
  else
    dims_[degree] = value;
}

void LaurentDims::add(int degree, int delta)
{
  set(degree, at(degree) + delta);
}

int LaurentDims::min_degree() const
{
  if (dims_.empty()) throw std::logic_error("LaurentDims: empty");
  return dims_.begin()->first;
}

int LaurentDims::max_degree() const
{
  if (dims_.empty()) throw std::logic_error("LaurentDims: empty");
  return dims_.rbegin()->first;
}

long long LaurentDims::total() const
{
  long long t = 0;
  for (auto& [d, v] : dims_) t += v;
  return t;
}

long long LaurentDims::euler() const
{
  long long t = 0;
  for (auto& [d, v] : dims_) t += (d % 2 == 0) ? v : -v;
  return t;
}

bool LaurentDims::operator<(const LaurentDims& o) const
{
  return std::lexicographical_compare(dims_.begin(), dims_.end(), o.dims_.begin(), o.dims_.end());
}

LaurentDims LaurentDims::operator+(const LaurentDims& o) const
{
  LaurentDims out = *this;
  for (auto& [d, v] : o.dims_) out.add(d, v);
  return out;
}

std::string LaurentDims::str() const
{
  if (dims_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto& [d, v] : dims_) {
    if (!first) os << " + ";
    first = false;
    if (d == 0) {
      os << v;
    } else {
      if (v != 1) os << v << "*";
      os << "t";
      if (d != 1) os << "^" << d;
    }
  }
  return os.str();
}

std::vector<std::pair<int, int>> LaurentDims::pairs() const
{
  return {dims_.begin(), dims_.end()};
}

}  // namespace legcob
