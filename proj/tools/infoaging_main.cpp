#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"

#include "infoaging/commands.hpp"
#include "infoaging/model_io.hpp"

namespace {

using namespace infoaging;

struct CliOptions {
  std::string model_path;
  std::string out_path = "-";
  std::string lengths;
  std::string deltas;
  std::string loss = "quadratic";
  std::string base = "2";
  int max_aoi = 30;
  int max_lag = 50;
  int search_bound = 50;
  long samples = 1000000;
  int burn_in = kDefaultBurnIn;
  std::uint64_t seed = 1;
  double tamper = 0.0;
};

Loss parse_loss(const std::string& name) {
  if (name == "quadratic") return Loss::quadratic;
  if (name == "log") return Loss::log_loss;
  throw Error(ErrorCode::bad_config, "loss must be 'quadratic' or 'log'");
}

LogBase parse_base(const std::string& name) {
  if (name == "e") return LogBase::natural;
  if (name == "2") return LogBase::two;
  throw Error(ErrorCode::bad_config, "base must be 'e' or '2'");
}

int dispatch(const std::string& command, const CliOptions& opt) {
  RunConfig config;
  config.model = load_model_file(opt.model_path);
  config.max_aoi = opt.max_aoi;
  config.max_lag = opt.max_lag;
  config.search_bound = opt.search_bound;
  config.samples = opt.samples;
  config.burn_in = opt.burn_in;
  config.seed = opt.seed;
  config.loss = parse_loss(opt.loss);
  config.base = parse_base(opt.base);
  config.tamper = opt.tamper;
  if (!opt.lengths.empty()) config.lengths = parse_int_list(opt.lengths);
  if (command == "validate" && opt.lengths.empty()) config.lengths = {1, 2, 4};
  if (!opt.deltas.empty()) config.validate_deltas = parse_int_list(opt.deltas);

  std::ofstream file;
  std::ostream* out = &std::cout;
  if (opt.out_path != "-") {
    file.open(opt.out_path, std::ios::binary);
    if (!file) throw Error(ErrorCode::bad_config, "cannot open output file '" + opt.out_path + "'");
    out = &file;
  }

  if (command == "acf") return run_acf(config, *out);
  if (command == "entropy-curve") return run_entropy_curve(config, *out);
  if (command == "epsilon") return run_epsilon(config, *out);
  return run_validate(config, *out, std::cerr);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Closed-form remote-estimation error and epsilon-Markov divergence of noisy "
               "Gaussian AR(p) sources, with a seeded Monte Carlo validator"};
  app.require_subcommand(1);

  CliOptions opt;
  std::string command;

  const auto add_common = [&](CLI::App* sub) {
    sub->add_option("--model", opt.model_path, "Model JSON file")->required();
    sub->add_option("--out", opt.out_path, "Output CSV file, or '-' for stdout");
    sub->callback([&, sub] { command = sub->get_name(); });
  };

  CLI::App* acf = app.add_subcommand("acf", "Stationary autocovariances gamma(0..K)");
  add_common(acf);
  acf->add_option("--max-lag", opt.max_lag, "Largest lag K");

  CLI::App* curve =
      app.add_subcommand("entropy-curve", "L-conditional entropy vs AoI per feature length");
  add_common(curve);
  curve->add_option("--lengths", opt.lengths, "Feature lengths, e.g. 1..5 or 1,2,4");
  curve->add_option("--max-aoi", opt.max_aoi, "Largest AoI delta");
  curve->add_option("--loss", opt.loss, "Loss function: quadratic or log");
  curve->add_option("--base", opt.base, "Log base for log loss: e or 2");

  CLI::App* epsilon = app.add_subcommand("epsilon", "epsilon(l) with maximizing (mu, nu)");
  add_common(epsilon);
  epsilon->add_option("--lengths", opt.lengths, "Feature lengths, e.g. 1..5");
  epsilon->add_option("--search-bound", opt.search_bound, "Grid bound M on mu and nu");
  epsilon->add_option("--base", opt.base, "Log base of the underlying CMI: e or 2");

  CLI::App* validate =
      app.add_subcommand("validate", "Closed forms vs seeded Monte Carlo OLS (exit 3 on |z| > 5)");
  add_common(validate);
  validate->add_option("--lengths", opt.lengths, "Feature lengths, default 1,2,4");
  validate->add_option("--deltas", opt.deltas, "AoI grid, default 0,1,4,8,12");
  validate->add_option("--samples", opt.samples, "Trajectory length n");
  validate->add_option("--seed", opt.seed, "RNG seed");
  validate->add_option("--burn-in", opt.burn_in, "Discarded leading steps");
  validate->add_option("--tamper", opt.tamper, "Offset added to closed forms (test hook)")
      ->group("");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: bad-config: " << e.what() << '\n';
    return infoaging::kExitConfig;
  }

  try {
    return dispatch(command, opt);
  } catch (const infoaging::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return infoaging::kExitConfig;
  } catch (const std::exception& e) {
    std::cerr << "error: internal: " << e.what() << '\n';
    return infoaging::kExitConfig;
  }
}
