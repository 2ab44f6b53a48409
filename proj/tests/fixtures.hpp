// Published tables and constants for the four worked configurations.
#ifndef ELLNET_TEST_FIXTURES_HPP
#define ELLNET_TEST_FIXTURES_HPP

#include <string>
#include <vector>

#include "ellnet/ellnet.hpp"

namespace fixtures {

using ellnet::Curve;
using ellnet::CurvePoint;
using ellnet::Rational;

inline Curve e1() { return ellnet::curve_validate(1, -1, 0, -4, 4); }
inline Curve e2() { return ellnet::curve_validate(0, 1, 1, -2, 0); }
inline Curve e3() { return ellnet::curve_validate(0, 0, 0, -7, 10); }
// rank 3, conductor 5077
inline Curve e5077() { return ellnet::curve_validate(0, 0, 1, -7, 6); }

inline CurvePoint pt(const Curve& c, Rational x, Rational y) {
  return ellnet::point_on_curve(c, x, y);
}

struct Config {
  std::string name;
  Curve curve;
  std::vector<CurvePoint> points;
  // printed decimals
  std::string q, u1, u2, beta1, beta2;
};

inline Config ex51() {
  Curve c = e1();
  return {"5.1", c, {pt(c, Rational(69, 25), Rational(-532, 125)), pt(c, 2, -2)},
          "0.0001199632944492781512985480142643667840",
          "0.0803285719586868777961922659399264909608",
          "0.03600942542966326797848808049477306988456",
          "0.2793020829801927957749331343976812416467",
          "0.3681717984734797193981452826601334954064"};
}

inline Config ex52() {
  Curve c = e1();
  return {"5.2", c, {pt(c, -1, 3), pt(c, 3, 2)},
          "0.0001199632944492781512985480142643667840",
          "-0.283422955948679072053638499724508663516",
          "0.00129667871977447963166306014589504823338",
          "0.1396510414900963978874665671988406208233",
          "0.7363435969469594387962905653202669908128"};
}

inline Config ex53() {
  Curve c = e2();
  return {"5.3", c, {pt(c, -1, 1), pt(c, 0, -1)},
          "0.00035785976153723480818280896702856223292",
          "-0.2170771835085414203450101536155224134341",
          "-0.0077622720300518161218942441500824493219",
          "0.1924929051139423228173765652973000996307",
          "0.6122563386959476420220464745591944344939"};
}

inline Config ex54() {
  Curve c = e3();
  return {"5.4", c, {pt(c, -2, 4), pt(c, 1, 2)},
          "-0.0004077489822343239057667854741817549172",
          "0.001201936348983837429349696735400418601519",
          "0.008992979917906651664620780969726498312814",
          "0.4307458699792390794239197192204249668246",
          "0.3018191057841811111031361738974315389666"};
}

inline std::vector<Config> all_configs() { return {ex51(), ex52(), ex53(), ex54()}; }

// A printed table: rows listed top (largest v2) to bottom.
struct PrintedTable {
  Config config;
  long v1min, v1max, v2min, v2max;
  ellnet::DenominatorConvention convention;
  std::vector<std::vector<std::string>> rows;

  std::string at(long v1, long v2) const {
    return rows.at(static_cast<std::size_t>(v2max - v2))
        .at(static_cast<std::size_t>(v1 - v1min));
  }
  std::size_t entries() const {
    return static_cast<std::size_t>((v1max - v1min + 1) * (v2max - v2min + 1));
  }
};

// Table 1 is printed with gamma_12 = D(P1+P2); see the README.
inline PrintedTable table1() {
  return {ex51(), 0, 3, 0, 5, ellnet::DenominatorConvention::product,
          {{"-832", "1232600000", "430685595625000000", "3330569636331576171875000000"},
           {"112", "-12560000", "-18772893750000", "121093285553785156250000"},
           {"-4", "-165500", "-141878687500", "-1754232556789062500"},
           {"-2", "-150", "196317500", "-1270400610718750"},
           {"1", "95", "152725", "-181061702375"},
           {"0", "5", "-3595", "63803440"}}};
}

inline PrintedTable table2() {
  return {ex52(), 0, 3, 0, 6, ellnet::DenominatorConvention::quotient,
          {{"-219900856", "71486913947", "48178148140103", "-112925826309806338"},
           {"-495235", "58762243", "3246745150", "-20471103308793"},
           {"-749", "170718", "-24093133", "-16532329817"},
           {"62", "2291", "-154139", "-28273396"},
           {"7", "67", "-1256", "-101083"},
           {"1", "4", "3", "-1579"},
           {"0", "1", "5", "-94"}}};
}

inline PrintedTable table3() {
  return {ex53(), -5, 5, -2, 2, ellnet::DenominatorConvention::quotient,
          {{"535", "44", "-7", "-1", "1", "-1", "-4", "17", "151", "-55", "-106201"},
           {"1187", "67", "1", "-2", "-1", "1", "1", "-5", "26", "709", "-19061"},
           {"-3376", "129", "19", "-3", "-1", "0", "1", "3", "-19", "-129", "3376"},
           {"19061", "-709", "-26", "5", "-1", "-1", "1", "2", "-1", "-67", "-1187"},
           {"106201", "55", "-151", "-17", "4", "1", "-1", "1", "7", "-44", "-535"}}};
}

inline PrintedTable table4() {
  return {ex54(), 0, 4, 0, 6, ellnet::DenominatorConvention::quotient,
          {{"-54525952", "1086324736", "81340137472", "-15800157077504", "-29481936481157120"},
           {"-163840", "-950272", "131956736", "30954979328", "-31977195339776"},
           {"-2048", "-17408", "280576", "85124096", "30585993216"},
           {"32", "-352", "-9440", "979488", "449423648"},
           {"4", "-4", "-276", "-16028", "8814788"},
           {"1", "3", "-31", "-1697", "67225"},
           {"0", "1", "8", "-409", "-65488"}}};
}

// Count of entries of t equal to the scaled net under the given convention.
inline std::size_t matching_entries(const PrintedTable& t, ellnet::DenominatorConvention conv) {
  ellnet::NetTable net(ellnet::make_net_config(t.config.curve, t.config.points,
                                               ellnet::Normalization::denominator_cleared, conv));
  std::size_t ok = 0;
  for (long b = t.v2min; b <= t.v2max; ++b)
    for (long a = t.v1min; a <= t.v1max; ++a)
      if (net.value({a, b}) == Rational(t.at(a, b))) ++ok;
  return ok;
}

inline bool close_rel(const ellnet::Real& x, const std::string& printed, double tol = 1e-9) {
  ellnet::Real p(printed);
  return abs(x - p) <= tol * abs(p);
}

}  // namespace fixtures

#endif  // ELLNET_TEST_FIXTURES_HPP
