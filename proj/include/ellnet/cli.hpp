#ifndef ELLNET_CLI_HPP
#define ELLNET_CLI_HPP

#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "ellnet/ellnet.hpp"

namespace ellnet::cli {

struct Token {
  std::string text;
  std::size_t line, column;
};

inline std::vector<std::vector<Token>> tokenize_lines(const std::string& text) {
  std::vector<std::vector<Token>> lines;
  std::istringstream in(text);
  std::string raw;
  std::size_t lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.resize(hash);
    std::vector<Token> toks;
    std::size_t i = 0;
    while (i < raw.size()) {
      if (std::isspace(static_cast<unsigned char>(raw[i]))) {
        ++i;
        continue;
      }
      std::size_t j = i;
      while (j < raw.size() && !std::isspace(static_cast<unsigned char>(raw[j]))) ++j;
      toks.push_back({raw.substr(i, j - i), lineno, i + 1});
      i = j;
    }
    if (!toks.empty()) lines.push_back(std::move(toks));
  }
  return lines;
}

inline Rational parse_token(const Token& t, std::vector<std::string>& warnings) {
  std::optional<ParsedRational> r;
  try {
    r = parse_rational(t.text);
  } catch (const DivisionByZeroError&) {
    r.reset();
  }
  if (!r)
    throw ParseError("line " + std::to_string(t.line) + ", column " + std::to_string(t.column) +
                     ": '" + t.text + "' is not a rational number");
  if (!r->was_lowest_terms)
    warnings.push_back("line " + std::to_string(t.line) + ": " + t.text +
                       " normalized to " + to_string(r->value));
  return r->value;
}

struct ParsedCurve {
  Curve curve;
  std::vector<std::string> warnings;
};

// "a1 a2 a3 a4 a6"
inline ParsedCurve parse_curve_spec(const std::string& text) {
  ParsedCurve out;
  std::vector<Token> toks;
  for (auto& l : tokenize_lines(text)) toks.insert(toks.end(), l.begin(), l.end());
  if (toks.size() != 5) {
    std::string where = toks.size() > 5 ? ", extra token at line " + std::to_string(toks[5].line) +
                                              ", column " + std::to_string(toks[5].column)
                                        : "";
    throw ParseError("curve needs 5 coefficients a1 a2 a3 a4 a6, got " +
                     std::to_string(toks.size()) + where);
  }
  Rational a[5];
  for (int i = 0; i < 5; ++i) a[i] = parse_token(toks[static_cast<std::size_t>(i)], out.warnings);
  out.curve = curve_validate(a[0], a[1], a[2], a[3], a[4]);
  return out;
}

struct ParsedPoints {
  std::vector<CurvePoint> points;
  std::vector<std::string> warnings;
};

// One "x y" per line, each checked against the curve.
inline ParsedPoints parse_points_spec(const std::string& text, const Curve& c) {
  ParsedPoints out;
  for (const auto& l : tokenize_lines(text)) {
    std::string where = "line " + std::to_string(l.front().line);
    if (l.size() != 2) throw ParseError(where + ": expected 'x y'");
    Rational x = parse_token(l[0], out.warnings), y = parse_token(l[1], out.warnings);
    try {
      out.points.push_back(point_on_curve(c, x, y));
    } catch (const NotOnCurveError& e) {
      throw NotOnCurveError(where + ": " + e.what());
    }
  }
  if (out.points.empty()) throw ParseError("no points given");
  return out;
}

// "V1MIN:V1MAX,V2MIN:V2MAX" (any number of comma-separated ranges)
inline Box parse_box(const std::string& text) {
  Box box;
  std::istringstream in(text);
  std::string part;
  while (std::getline(in, part, ',')) {
    auto colon = part.find(':');
    try {
      if (colon == std::string::npos) throw std::invalid_argument(part);
      std::size_t used = 0;
      long lo = std::stol(part.substr(0, colon), &used);
      if (used != colon) throw std::invalid_argument(part);
      std::string rest = part.substr(colon + 1);
      long hi = std::stol(rest, &used);
      if (used != rest.size()) throw std::invalid_argument(part);
      if (lo > hi) throw ParseError("empty range '" + part + "'");
      box.emplace_back(lo, hi);
    } catch (const std::logic_error&) {
      throw ParseError("bad box range '" + part + "'; expected MIN:MAX");
    }
  }
  if (box.empty()) throw ParseError("empty box");
  return box;
}

inline IndexVector parse_index(const std::string& text) {
  IndexVector v;
  std::istringstream in(text);
  std::string part;
  while (std::getline(in, part, ',')) {
    try {
      std::size_t used = 0;
      v.push_back(std::stol(part, &used));
      if (used != part.size()) throw std::invalid_argument(part);
    } catch (const std::logic_error&) {
      throw ParseError("bad index component '" + part + "'");
    }
  }
  return v;
}

enum class Command {
  net_table,
  signs_predict,
  signs_verify,
  analytic_params,
  stats_signs,
  denom_net,
  eds_curve,
  shipsey
};

inline Command parse_command(const std::string& s) {
  static const std::pair<const char*, Command> table[] = {
      {"net-table", Command::net_table},       {"signs-predict", Command::signs_predict},
      {"signs-verify", Command::signs_verify}, {"analytic-params", Command::analytic_params},
      {"stats-signs", Command::stats_signs},   {"denom-net", Command::denom_net},
      {"eds-curve", Command::eds_curve},       {"shipsey", Command::shipsey}};
  for (const auto& [name, c] : table)
    if (s == name) return c;
  throw ParseError("unknown command '" + s + "'");
}

struct JobSpec {
  Command command = Command::net_table;
  std::string curve_text;
  std::string points_text;
  std::string box_text;
  unsigned precision = kDefaultPrecision;
  bool scaled = false;
  DenominatorConvention convention = DenominatorConvention::quotient;
  long modulus = 2;
  std::string probe_text;
  std::vector<std::string> args;  // positional extras (eds-curve seeds)
};

inline std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

namespace detail {

inline std::string idx_cols(const IndexVector& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "\t" : "") + std::to_string(v[i]);
  return s;
}

inline std::string sign_text(int s) { return s > 0 ? "+1" : (s < 0 ? "-1" : "0"); }

struct Loaded {
  Curve curve;
  std::vector<CurvePoint> points;
};

inline Loaded load(const JobSpec& job, std::ostream& err, bool need_points = true) {
  if (job.curve_text.empty()) throw ParseError("--curve is required");
  auto pc = parse_curve_spec(job.curve_text);
  for (auto& w : pc.warnings) err << "warning: " << w << "\n";
  Loaded l{pc.curve, {}};
  if (need_points) {
    if (job.points_text.empty()) throw ParseError("--points is required");
    auto pp = parse_points_spec(job.points_text, pc.curve);
    for (auto& w : pp.warnings) err << "warning: " << w << "\n";
    l.points = std::move(pp.points);
  }
  return l;
}

inline Box box_or(const JobSpec& job, Box fallback) {
  return job.box_text.empty() ? fallback : parse_box(job.box_text);
}

inline void require_box_rank(const Box& box, std::size_t rank) {
  if (box.size() != rank)
    throw ParseError("box has " + std::to_string(box.size()) + " ranges for " +
                     std::to_string(rank) + " points");
}

inline SignPredictor predictor_for(const JobSpec& job, const Loaded& l) {
  IndexVector probe = job.probe_text.empty() ? IndexVector{} : parse_index(job.probe_text);
  return build_predictor(l.curve, l.points, probe, job.precision);
}

inline int net_table_cmd(const JobSpec& job, std::ostream& out, std::ostream& err) {
  auto l = load(job, err);
  if (l.points.size() > 2) throw ParseError("net-table supports 1 or 2 points");
  auto norm = job.scaled ? Normalization::denominator_cleared : Normalization::analytic;
  NetTable t(make_net_config(l.curve, l.points, norm, job.convention));
  Box box = box_or(job, l.points.size() == 1 ? Box{{0, 10}} : Box{{0, 3}, {0, 6}});
  require_box_rank(box, l.points.size());
  NetBox nb{box[0].first, box[0].second, 0, 0};
  if (box.size() == 2) {
    nb.v2min = box[1].first;
    nb.v2max = box[1].second;
  }
  auto grid = net_table(t, nb);
  out << (box.size() == 2 ? "v2\\v1" : "n");
  for (long a = nb.v1min; a <= nb.v1max; ++a) out << "\t" << a;
  out << "\n";
  for (long b = nb.v2max; b >= nb.v2min; --b) {
    out << (box.size() == 2 ? std::to_string(b) : std::string("W"));
    for (const auto& x : grid[static_cast<std::size_t>(b - nb.v2min)]) out << "\t" << to_string(x);
    out << "\n";
  }
  return 0;
}

inline int signs_predict_cmd(const JobSpec& job, std::ostream& out, std::ostream& err) {
  auto l = load(job, err);
  auto pred = predictor_for(job, l);
  Box box = box_or(job, Box(l.points.size(), {-5, 5}));
  require_box_rank(box, l.points.size());
  out << "# twist " << pred.twist << " probe " << to_string(pred.probe) << "\n";
  for_each_index(box, [&](const IndexVector& v) {
    if (is_zero(v)) return;
    out << idx_cols(v) << "\t" << sign_text(pred.sign(v)) << "\n";
  });
  return 0;
}

inline int signs_verify_cmd(const JobSpec& job, std::ostream& out, std::ostream& err) {
  auto l = load(job, err);
  if (l.points.size() > 2) throw ParseError("signs-verify supports 1 or 2 points");
  auto pred = predictor_for(job, l);
  Box box = box_or(job, Box(l.points.size(), {-50, 50}));
  require_box_rank(box, l.points.size());
  NetTable t(make_net_config(l.curve, l.points));
  long r1 = std::max(std::labs(box[0].first), std::labs(box[0].second));
  long r2 = box.size() > 1 ? std::max(std::labs(box[1].first), std::labs(box[1].second)) : 0;
  t.reserve(r1, r2);
  std::uint64_t agree = 0, total = 0;
  for_each_index(box, [&](const IndexVector& v) {
    if (is_zero(v)) return;
    int p = pred.sign(v), e = sgn(t.analytic(v));
    ++total;
    if (p == e) ++agree;
    out << idx_cols(v) << "\t" << sign_text(p) << "\t" << sign_text(e) << "\t"
        << (p == e ? "yes" : "no") << "\n";
  });
  out << "agree " << agree << "/" << total << "\n";
  return agree == total ? 0 : 1;
}

inline int analytic_params_cmd(const JobSpec& job, std::ostream& out, std::ostream& err) {
  auto l = load(job, err);
  auto ctx = analytic_context(l.curve, l.points, job.precision);
  PrecisionScope scope(job.precision);
  out << "q\t" << to_decimal(ctx->q, 30) << "\n";
  for (std::size_t i = 0; i < ctx->rank(); ++i)
    out << "u" << i + 1 << "\t" << to_decimal(ctx->u[i], 30) << "\n";
  for (std::size_t i = 0; i < ctx->rank(); ++i)
    out << "beta" << i + 1 << "\t" << to_decimal(ctx->beta[i], 30) << "\n";
  out << "k\t" << ctx->k << "\n";
  for (std::size_t i = 0; i < ctx->rank(); ++i)
    if (ctx->torsion[i]) err << "warning: point " << i + 1 << " has finite order\n";
  return 0;
}

inline void print_report(const CountReport& r, std::ostream& out) {
  out << "modulus\t" << r.m << "\n";
  out << "box";
  for (const auto& [lo, hi] : r.box) out << "\t" << lo << ":" << hi;
  out << "\n";
  out << "residue\tcount\tfrequency\n";
  for (std::size_t j = 0; j < r.counts.size(); ++j)
    out << j << "\t" << r.counts[j] << "\t" << std::setprecision(6) << std::fixed
        << r.frequencies[j] << "\n";
  out << std::defaultfloat;
}

inline int stats_signs_cmd(const JobSpec& job, std::ostream& out, std::ostream& err) {
  auto l = load(job, err);
  auto pred = predictor_for(job, l);
  Box box = box_or(job, positive_box(l.points.size(), 100));
  require_box_rank(box, l.points.size());
  print_report(sign_counts([&](const IndexVector& v) { return is_zero(v) ? 0 : pred.parity(v); },
                           box, job.modulus),
               out);
  return 0;
}

inline int denom_net_cmd(const JobSpec& job, std::ostream& out, std::ostream& err) {
  auto l = load(job, err);
  auto cfg = make_denom_config(l.curve, l.points);
  if (!cfg.pairwise_ok) err << "warning: some P_i + P_j reduces to a singular point\n";
  auto pred = predictor_for(job, l);
  Box box = box_or(job, Box(l.points.size(), {-3, 3}));
  require_box_rank(box, l.points.size());
  out << "# twist " << pred.twist << "\n";
  for_each_index(box, [&](const IndexVector& v) {
    out << idx_cols(v) << "\t" << to_string(signed_denominator_net(cfg, pred, v)) << "\n";
  });
  return 0;
}

inline int eds_curve_cmd(const JobSpec& job, std::ostream& out, std::ostream& err) {
  if (job.args.size() != 3) throw ParseError("eds-curve needs W2 W3 W4");
  std::vector<std::string> warnings;
  Rational w[3];
  for (int i = 0; i < 3; ++i)
    w[i] = parse_token({job.args[static_cast<std::size_t>(i)], 1, static_cast<std::size_t>(i + 1)},
                       warnings);
  for (auto& s : warnings) err << "warning: " << s << "\n";
  auto [c, p] = curve_from_eds(w[0], w[1], w[2]);
  out << to_string(c.a1) << " " << to_string(c.a2) << " " << to_string(c.a3) << " "
      << to_string(c.a4) << " " << to_string(c.a6) << "\n";
  if (c.singular) err << "warning: the cubic is singular\n";
  return 0;
}

inline int shipsey_cmd(const JobSpec& job, std::ostream& out, std::ostream& err) {
  auto l = load(job, err, false);
  Box box = box_or(job, Box{{1, 20}});
  if (box.size() != 1 || box[0].first < 0) throw ParseError("shipsey takes one range N0:N1, N0 >= 0");
  auto w = shipsey_signs(l.curve, box[0].second);
  for (long n = box[0].first; n <= box[0].second; ++n)
    out << n << "\t" << to_string(w[static_cast<std::size_t>(n)]) << "\n";
  return 0;
}

}  // namespace detail

// Exit codes: 0 success, 1 a verification mismatch, 2 bad input.
inline int run(const JobSpec& job, std::ostream& out, std::ostream& err) {
  try {
    if (job.precision < 64 || job.precision > 4096)
      throw ParseError("precision must lie in [64, 4096]");
    switch (job.command) {
      case Command::net_table: return detail::net_table_cmd(job, out, err);
      case Command::signs_predict: return detail::signs_predict_cmd(job, out, err);
      case Command::signs_verify: return detail::signs_verify_cmd(job, out, err);
      case Command::analytic_params: return detail::analytic_params_cmd(job, out, err);
      case Command::stats_signs: return detail::stats_signs_cmd(job, out, err);
      case Command::denom_net: return detail::denom_net_cmd(job, out, err);
      case Command::eds_curve: return detail::eds_curve_cmd(job, out, err);
      case Command::shipsey: return detail::shipsey_cmd(job, out, err);
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

}  // namespace ellnet::cli

#endif  // ELLNET_CLI_HPP
