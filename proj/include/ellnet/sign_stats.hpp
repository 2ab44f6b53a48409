#ifndef ELLNET_SIGN_STATS_HPP
#define ELLNET_SIGN_STATS_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "ellnet/index.hpp"
#include "ellnet/real.hpp"

namespace ellnet {

using Box = std::vector<std::pair<long, long>>;  // inclusive range per coordinate

// Calls f(v) for every v in the box, last coordinate fastest.
template <class F>
void for_each_index(const Box& box, F&& f) {
  if (box.empty()) return;
  for (const auto& [lo, hi] : box)
    if (lo > hi) throw InvalidArgumentError("empty box range");
  IndexVector v(box.size());
  for (std::size_t i = 0; i < box.size(); ++i) v[i] = box[i].first;
  for (;;) {
    f(static_cast<const IndexVector&>(v));
    std::size_t i = box.size();
    while (i > 0) {
      --i;
      if (v[i] < box[i].second) {
        ++v[i];
        break;
      }
      v[i] = box[i].first;
      if (i == 0) return;
    }
  }
}

inline std::uint64_t box_size(const Box& box) {
  std::uint64_t n = 1;
  for (const auto& [lo, hi] : box) n *= static_cast<std::uint64_t>(hi - lo + 1);
  return n;
}

inline Box positive_box(std::size_t rank, long side) { return Box(rank, {1, side}); }

struct CountReport {
  long m = 2;
  std::vector<std::uint64_t> counts;
  Box box;
  std::vector<double> frequencies;

  std::uint64_t total() const {
    std::uint64_t t = 0;
    for (auto c : counts) t += c;
    return t;
  }
  bool within(double lo, double hi) const {
    for (double f : frequencies)
      if (f < lo || f > hi) return false;
    return true;
  }
};

// Tally of source(v) mod m over the box; source returns an integer.
template <class Source>
CountReport sign_counts(Source&& source, const Box& box, long m = 2) {
  if (m < 2) throw InvalidArgumentError("modulus must be at least 2");
  CountReport r{m, std::vector<std::uint64_t>(static_cast<std::size_t>(m), 0), box, {}};
  for_each_index(box, [&](const IndexVector& v) {
    long x = static_cast<long>(source(v));
    ++r.counts[static_cast<std::size_t>(((x % m) + m) % m)];
  });
  double n = static_cast<double>(box_size(box));
  for (auto c : r.counts) r.frequencies.push_back(static_cast<double>(c) / n);
  return r;
}

// Distribution of floor(sum v_i beta_i + theta0) mod m.
inline CountReport floor_array_distribution(const std::vector<Real>& betas, const Real& theta0,
                                            long m, const Box& box) {
  if (betas.size() != box.size()) throw InvalidArgumentError("beta count does not match box rank");
  return sign_counts(
      [&](const IndexVector& v) {
        Real t = theta0;
        for (std::size_t i = 0; i < v.size(); ++i) t += v[i] * betas[i];
        Real f = floor(t);
        Real r = f - m * floor(f / m);
        return r.convert_to<long>();
      },
      box, m);
}

// |(1/N) sum_v exp(2 pi i h S(v))|
template <class S>
Real weyl_sum(S&& s, const Box& box, long h) {
  if (h == 0) throw InvalidArgumentError("weyl_sum needs h != 0");
  Real re = 0, im = 0;
  Real two_pi = 2 * pi_real();
  for_each_index(box, [&](const IndexVector& v) {
    Real t = h * Real(s(v));
    t -= floor(t);
    re += cos(two_pi * t);
    im += sin(two_pi * t);
  });
  Real n = Real(box_size(box));
  return sqrt(re * re + im * im) / n;
}

}  // namespace ellnet

#endif  // ELLNET_SIGN_STATS_HPP
