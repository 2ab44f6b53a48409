#ifndef ELLNET_PREDICTOR_HPP
#define ELLNET_PREDICTOR_HPP

#include <vector>

#include "ellnet/net.hpp"
#include "ellnet/sign_rules.hpp"

namespace ellnet {

// Exact sign of Psi_v for v supported on at most two coordinates, from the
// rank-1 or rank-2 net of the corresponding sub-configuration.
inline int exact_sign_at(const Curve& c, const std::vector<CurvePoint>& points,
                         const IndexVector& v) {
  if (v.size() != points.size()) throw InvalidArgumentError("probe rank mismatch");
  std::vector<CurvePoint> sub;
  IndexVector w;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i] != 0) {
      sub.push_back(points[i]);
      w.push_back(v[i]);
    }
  if (sub.empty()) return 0;
  if (sub.size() > 2)
    throw BadProbeError("probe " + to_string(v) + " needs an exact net of rank above 2");
  NetTable t(make_net_config(c, sub));
  return sgn(t.analytic(w));
}

inline SignPredictor build_predictor(const Curve& c, const std::vector<CurvePoint>& points,
                                     IndexVector probe = {}, unsigned bits = kDefaultPrecision) {
  if (probe.empty()) probe = default_probe(points.size());
  auto ctx = analytic_context(c, points, bits);
  require_independent(*ctx);
  return calibrate_twist(ctx, probe, exact_sign_at(c, points, probe));
}

}  // namespace ellnet

#endif  // ELLNET_PREDICTOR_HPP
