#ifndef ELLNET_FACTOR_HPP
#define ELLNET_FACTOR_HPP

#include <algorithm>
#include <vector>

#include "ellnet/rational.hpp"

namespace ellnet {

namespace detail {

inline bool probable_prime(const Integer& n) {
  return mpz_probab_prime_p(n.get_mpz_t(), 30) > 0;
}

// Brent's variant of Pollard rho.  n is odd, composite.
inline Integer rho_split(const Integer& n) {
  for (unsigned long c = 1;; ++c) {
    Integer y = 2, x, g = 1, q = 1, ys;
    unsigned long r = 1, m = 128;
    auto f = [&](const Integer& v) {
      Integer t = v * v + c;
      mpz_mod(t.get_mpz_t(), t.get_mpz_t(), n.get_mpz_t());
      return t;
    };
    do {
      x = y;
      for (unsigned long i = 0; i < r; ++i) y = f(y);
      unsigned long k = 0;
      while (k < r && g == 1) {
        ys = y;
        for (unsigned long i = 0; i < std::min(m, r - k); ++i) {
          y = f(y);
          Integer d = x - y;
          q = q * abs(d) % n;
        }
        g = gcd(q, n);
        k += m;
      }
      r *= 2;
    } while (g == 1);
    if (g == n) {
      do {
        ys = f(ys);
        g = gcd(Integer(abs(x - ys)), n);
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

inline void factor_into(Integer n, std::vector<Integer>& out) {
  if (n == 1) return;
  if (probable_prime(n)) {
    out.push_back(n);
    return;
  }
  // rho is hopeless on p^k, so take roots first
  for (unsigned long k = 2; mpz_sizeinbase(n.get_mpz_t(), 2) / k >= 1; ++k) {
    Integer r;
    if (mpz_root(r.get_mpz_t(), n.get_mpz_t(), k) != 0) {
      factor_into(r, out);
      return;
    }
  }
  Integer d = rho_split(n);
  factor_into(d, out);
  factor_into(n / d, out);
}

}  // namespace detail

// Distinct prime divisors of |n|, ascending.  Trial division to 10^6, then rho.
inline std::vector<Integer> prime_divisors(Integer n) {
  std::vector<Integer> out;
  n = abs(n);
  if (n == 0) throw InvalidArgumentError("prime_divisors(0)");
  for (unsigned long p = 2; p <= 1000000UL && n > 1; p += (p == 2 ? 1 : 2)) {
    if (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
      out.emplace_back(p);
      while (mpz_divisible_ui_p(n.get_mpz_t(), p)) n /= p;
    }
    if (Integer(p) * p > n) break;
  }
  std::vector<Integer> big;
  if (n > 1) detail::factor_into(n, big);
  out.insert(out.end(), big.begin(), big.end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace ellnet

#endif  // ELLNET_FACTOR_HPP
