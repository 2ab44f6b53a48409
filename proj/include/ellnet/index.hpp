#ifndef ELLNET_INDEX_HPP
#define ELLNET_INDEX_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "ellnet/error.hpp"

namespace ellnet {

using IndexVector = std::vector<long>;

inline void require_same_rank(const IndexVector& a, const IndexVector& b) {
  if (a.size() != b.size()) throw InvalidArgumentError("index vectors of different rank");
}

inline IndexVector operator+(const IndexVector& a, const IndexVector& b) {
  require_same_rank(a, b);
  IndexVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

inline IndexVector operator-(const IndexVector& a, const IndexVector& b) {
  require_same_rank(a, b);
  IndexVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

inline IndexVector operator-(const IndexVector& a) {
  IndexVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = -a[i];
  return out;
}

inline bool is_zero(const IndexVector& v) {
  for (long x : v)
    if (x != 0) return false;
  return true;
}

inline IndexVector unit_vector(std::size_t rank, std::size_t i) {
  IndexVector e(rank, 0);
  e.at(i) = 1;
  return e;
}

// sum v_i^2 - sum_{i<j} v_i v_j - 1
inline long twist_exponent(const IndexVector& v) {
  long s = -1;
  for (std::size_t i = 0; i < v.size(); ++i) {
    s += v[i] * v[i];
    for (std::size_t j = i + 1; j < v.size(); ++j) s -= v[i] * v[j];
  }
  return s;
}

inline int mod2(long x) { return static_cast<int>(((x % 2) + 2) % 2); }

// floor(x / 2) for negative x as well
inline long floor_half(long x) { return x >= 0 ? x / 2 : -((-x + 1) / 2); }

inline std::string to_string(const IndexVector& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(v[i]);
  }
  return s + ")";
}

}  // namespace ellnet

#endif  // ELLNET_INDEX_HPP
