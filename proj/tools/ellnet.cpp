// Command-line front end: ellnet <command> [options]
#include <iostream>

#include "CLI11.hpp"
#include "ellnet/cli.hpp"

int main(int argc, char** argv) {
  using namespace ellnet::cli;
  CLI::App app{"Elliptic nets: exact tables, sign prediction, denominator nets"};
  app.require_subcommand(1);

  JobSpec job;
  std::string curve_file, points_file, convention = "quotient";

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--curve", curve_file, "file with a1 a2 a3 a4 a6");
    sub->add_option("--points", points_file, "file with one 'x y' per line");
    sub->add_option("--box", job.box_text, "V1MIN:V1MAX,V2MIN:V2MAX");
    sub->add_option("--precision", job.precision, "working precision in bits");
    sub->add_flag("--scaled", job.scaled, "denominator-cleared normalization");
    sub->add_option("--gamma", convention, "quotient or product denominator form")
        ->check(CLI::IsMember({"quotient", "product"}));
    sub->add_option("--modulus", job.modulus, "modulus for stats-signs");
    sub->add_option("--probe", job.probe_text, "calibration index, e.g. 2,2");
  };

  const char* names[] = {"net-table",   "signs-predict", "signs-verify", "analytic-params",
                         "stats-signs", "denom-net",     "eds-curve",    "shipsey"};
  for (const char* name : names) {
    auto* sub = app.add_subcommand(name);
    add_common(sub);
    if (std::string(name) == "eds-curve") sub->add_option("seeds", job.args, "W2 W3 W4");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    job.command = parse_command(app.get_subcommands().front()->get_name());
    if (!curve_file.empty()) job.curve_text = read_file(curve_file);
    if (!points_file.empty()) job.points_text = read_file(points_file);
  } catch (const ellnet::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  job.convention = convention == "product" ? ellnet::DenominatorConvention::product
                                           : ellnet::DenominatorConvention::quotient;
  return run(job, std::cout, std::cerr);
}
