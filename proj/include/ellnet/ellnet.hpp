#ifndef ELLNET_ELLNET_HPP
#define ELLNET_ELLNET_HPP

#include "ellnet/curve.hpp"
#include "ellnet/denom.hpp"
#include "ellnet/division_poly.hpp"
#include "ellnet/eds.hpp"
#include "ellnet/error.hpp"
#include "ellnet/factor.hpp"
#include "ellnet/index.hpp"
#include "ellnet/net.hpp"
#include "ellnet/predictor.hpp"
#include "ellnet/quadratic_form.hpp"
#include "ellnet/rational.hpp"
#include "ellnet/real.hpp"
#include "ellnet/sign_rules.hpp"
#include "ellnet/sign_stats.hpp"
#include "ellnet/tate.hpp"

#endif  // ELLNET_ELLNET_HPP
