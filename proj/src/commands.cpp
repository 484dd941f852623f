#include "infoaging/commands.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>

#include "infoaging/epsilon_markov.hpp"

namespace infoaging {
namespace {

// Fixed CSV number format: 17 significant digits, '.' decimal separator,
// enough to round-trip any double bit-exactly.
std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

const char* loss_name(Loss loss) { return loss == Loss::quadratic ? "quadratic" : "log"; }

const char* base_name(Loss loss, LogBase base) {
  if (loss == Loss::quadratic) return "-";
  return base == LogBase::two ? "2" : "e";
}

void require_lengths(const std::vector<int>& lengths) {
  if (lengths.empty()) throw Error(ErrorCode::bad_config, "length list is empty");
  for (int l : lengths)
    if (l < 1) throw Error(ErrorCode::bad_config, "feature lengths must be >= 1");
}

int max_of(const std::vector<int>& v) { return *std::max_element(v.begin(), v.end()); }

}  // namespace

int run_acf(const RunConfig& config, std::ostream& out) {
  if (config.max_lag < 0) throw Error(ErrorCode::bad_config, "max lag must be >= 0");
  const AutocovTable acf = autocovariance(config.model, config.max_lag);
  out << "lag,gamma\n";
  for (int k = 0; k <= config.max_lag; ++k) out << k << ',' << fmt(acf.at(k)) << '\n';
  return kExitOk;
}

int run_entropy_curve(const RunConfig& config, std::ostream& out) {
  require_lengths(config.lengths);
  if (config.max_aoi < 0) throw Error(ErrorCode::bad_config, "max AoI must be >= 0");

  const int k_needed = std::max(config.max_aoi + max_of(config.lengths), 2 * config.model.order());
  const AutocovTable acf = autocovariance(config.model, k_needed);

  std::vector<EntropyCurve> curves;
  curves.reserve(config.lengths.size());
  for (int l : config.lengths)
    curves.push_back(
        entropy_curve(acf, config.model.sigma2_n, config.loss, l, config.max_aoi, config.base));

  out << "delta,l,loss,base,H\n";
  for (int delta = 0; delta <= config.max_aoi; ++delta)
    for (const EntropyCurve& c : curves)
      out << delta << ',' << c.l << ',' << loss_name(config.loss) << ','
          << base_name(config.loss, config.base) << ','
          << fmt(c.points[static_cast<std::size_t>(delta)].second) << '\n';
  return kExitOk;
}

int run_epsilon(const RunConfig& config, std::ostream& out) {
  require_lengths(config.lengths);
  if (config.search_bound < 0) throw Error(ErrorCode::bad_config, "search bound must be >= 0");

  const int k_needed =
      std::max(2 * config.search_bound + max_of(config.lengths) + 1, 2 * config.model.order());
  const AutocovTable acf = autocovariance(config.model, k_needed);

  out << "l,epsilon,argmax_mu,argmax_nu,base\n";
  for (int l : config.lengths) {
    EpsilonQuery query{l, config.search_bound, config.base, false};
    const EpsilonReport report = epsilon_l(acf, config.model.sigma2_n, query);
    out << l << ',' << fmt(report.epsilon) << ',' << report.argmax_mu << ',' << report.argmax_nu
        << ',' << (config.base == LogBase::two ? "2" : "e") << '\n';
  }
  return kExitOk;
}

int run_validate(const RunConfig& config, std::ostream& out, std::ostream& meta) {
  require_lengths(config.lengths);
  if (config.validate_deltas.empty()) throw Error(ErrorCode::bad_config, "delta list is empty");
  for (int d : config.validate_deltas)
    if (d < 0) throw Error(ErrorCode::bad_config, "deltas must be >= 0");
  if (config.samples < 1) throw Error(ErrorCode::bad_config, "samples must be >= 1");

  const int k_needed = std::max(max_of(config.validate_deltas) + max_of(config.lengths),
                                2 * config.model.order());
  const AutocovTable acf = autocovariance(config.model, k_needed);

  meta << "# rng=" << kRngDescription << " seed=" << config.seed
       << " samples=" << config.samples << " burn_in=" << config.burn_in << '\n';

  const Trajectory traj =
      simulate(config.model, static_cast<int>(config.samples), config.burn_in, config.seed);

  bool ok = true;
  out << "delta,l,closed_form,empirical,stderr,z\n";
  for (int delta : config.validate_deltas) {
    for (int l : config.lengths) {
      const double closed = h2_conditional(acf, config.model.sigma2_n, delta, l) + config.tamper;
      const MmseEstimate est = empirical_mmse(traj, delta, l);
      const double z = (est.mse - closed) / est.std_err;
      if (std::fabs(z) > 5.0) ok = false;
      out << delta << ',' << l << ',' << fmt(closed) << ',' << fmt(est.mse) << ','
          << fmt(est.std_err) << ',' << fmt(z) << '\n';
    }
  }
  return ok ? kExitOk : kExitValidationFailed;
}

std::vector<int> parse_int_list(const std::string& text) {
  const auto parse_one = [](const std::string& tok) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(tok, &used);
    } catch (const std::exception&) {
      throw Error(ErrorCode::bad_config, "cannot parse integer '" + tok + "'");
    }
    if (used != tok.size())
      throw Error(ErrorCode::bad_config, "cannot parse integer '" + tok + "'");
    return v;
  };

  std::vector<int> values;
  if (const auto dots = text.find(".."); dots != std::string::npos) {
    const int lo = parse_one(text.substr(0, dots));
    const int hi = parse_one(text.substr(dots + 2));
    if (lo > hi) throw Error(ErrorCode::bad_config, "empty range '" + text + "'");
    for (int v = lo; v <= hi; ++v) values.push_back(v);
    return values;
  }
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t comma = text.find(',', start);
    const std::string tok =
        comma == std::string::npos ? text.substr(start) : text.substr(start, comma - start);
    values.push_back(parse_one(tok));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return values;
}

}  // namespace infoaging
