#ifndef ELLNET_REAL_HPP
#define ELLNET_REAL_HPP

#include <boost/multiprecision/mpfr.hpp>

#include <cmath>
#include <cstdlib>
#include <string>

#include "ellnet/rational.hpp"

namespace ellnet {

using Real = boost::multiprecision::mpfr_float;

inline unsigned bits_to_digits10(unsigned bits) {
  return static_cast<unsigned>(std::ceil(bits * 0.30102999566398120)) + 1;
}

// Boost keeps one process-wide default precision for new mpfr_float values.
// Scopes nest; they must not be used concurrently from several threads.
class PrecisionScope {
 public:
  explicit PrecisionScope(unsigned bits) : saved_(Real::default_precision()) {
    Real::default_precision(bits_to_digits10(bits));
  }
  ~PrecisionScope() { Real::default_precision(saved_); }
  PrecisionScope(const PrecisionScope&) = delete;
  PrecisionScope& operator=(const PrecisionScope&) = delete;

 private:
  unsigned saved_;
};

inline Real to_real(const Rational& r) {
  Real out;
  mpfr_set_q(out.backend().data(), r.get_mpq_t(), MPFR_RNDN);
  return out;
}

inline Real pow2(long e) { return ldexp(Real(1), static_cast<int>(e)); }

inline Real pi_real() { return boost::math::constants::pi<Real>(); }

inline Real agm(Real a, Real b, unsigned bits) {
  Real tol = pow2(-static_cast<long>(bits) - 4);
  for (int i = 0; i < 10000; ++i) {
    if (abs(a - b) <= tol * abs(a)) break;
    Real an = (a + b) / 2;
    b = sqrt(a * b);
    a = an;
  }
  return (a + b) / 2;
}

// Decimal with the given number of significant digits, scientific only when
// the magnitude demands it.
inline std::string to_decimal(const Real& x, int significant) {
  return x.str(significant, std::ios_base::fmtflags(0));
}

constexpr unsigned kDefaultPrecision = 256;

inline unsigned max_precision() {
  if (const char* env = std::getenv("ELLNET_MAX_PRECISION")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end != env && v >= 64) return static_cast<unsigned>(v);
  }
  return 4096;
}

}  // namespace ellnet

#endif  // ELLNET_REAL_HPP
