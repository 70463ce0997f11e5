#include "ginient/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>
#include <ostream>
#include <random>
#include <sstream>

#include "ginient/entropy.hpp"
#include "ginient/errors.hpp"
#include "ginient/families.hpp"
#include "ginient/fitgof.hpp"
#include "ginient/inequality.hpp"
#include "ginient/maxent.hpp"
#include "ginient/report.hpp"
#include "ginient/sample.hpp"

namespace ginient::cli {

namespace {

class UsageError : public Error {
 public:
  using Error::Error;
};

struct GlobalOptions {
  std::optional<double> quad_tol;
  std::uint64_t seed = 20240601;
};

QuadratureSettings settings_from(const GlobalOptions& g) {
  QuadratureSettings q;
  if (g.quad_tol) {
    q.abs_tol = *g.quad_tol;
    q.rel_tol = *g.quad_tol;
  }
  q.validate();
  return q;
}

Sample load_data(const std::string& where, const std::optional<std::string>& column) {
  if (where == "builtin") return builtin_dataset();
  return load_csv(where, column);
}

ModelPtr build_model(const std::string& family, double theta, std::optional<double> model_nu) {
  if (!is_known_family(family)) throw UsageError("unknown family '" + family + "'");
  if (family == "maxentlomax") return make_model(family, theta, model_nu.value_or(3.0));
  return make_model(family, theta);
}

std::vector<double> parse_probs(const std::string& text) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    auto v = parse_number(item);
    if (!v) throw DataError("cannot parse probability '" + item + "'");
    out.push_back(*v);
  }
  return out;
}

void emit(const std::string& text, const std::optional<std::string>& path, std::ostream& out) {
  if (path) {
    write_file_atomic(*path, text);
  } else {
    out << text;
  }
}

// ----------------------------------------------------------------- entropy

struct EntropyArgs {
  double alpha = 0.0;
  std::optional<std::string> probs;
  std::optional<std::string> family;
  std::optional<double> theta;
  std::optional<double> nu;
};

void run_entropy(const EntropyArgs& a, const GlobalOptions& g, std::ostream& out) {
  if (a.probs.has_value() == a.family.has_value()) {
    throw UsageError("entropy needs exactly one of --probs or --family");
  }
  if (a.probs) {
    const ProbVector p(parse_probs(*a.probs));
    const double value = (a.alpha == 1.0) ? shannon_discrete(p) : mathai_discrete(p, EntropyOrder(a.alpha));
    out << format_full(value) << '\n';
    return;
  }
  if (!a.theta) throw UsageError("--family needs --theta");
  const ModelPtr model = build_model(*a.family, *a.theta, a.nu);
  out << format_full(mathai_continuous(*model, EntropyOrder(a.alpha), settings_from(g))) << '\n';
}

// -------------------------------------------------------------- inequality

struct InequalityArgs {
  std::string index;
  std::optional<double> nu;
  std::optional<std::string> family;
  std::optional<double> theta;
  std::optional<double> model_nu;
  std::optional<std::string> data;
  std::optional<std::string> column;
  std::size_t grid = 101;
  std::size_t mc_draws = 0;
  std::optional<std::string> out_path;
};

double empirical_index(const std::string& index, const Sample& s, const GiniOrder& nu) {
  if (index == "gmd") return empirical_gmd(s);
  const EmpiricalIndices e = empirical_indices(s, nu);
  return index == "gini" ? e.gini : e.generalized_gini;
}

void run_inequality(const InequalityArgs& a, const GlobalOptions& g, std::ostream& out) {
  if (a.family.has_value() == a.data.has_value()) {
    throw UsageError("inequality needs exactly one of --family or --data");
  }
  const GiniOrder nu(a.nu.value_or(2.0));
  const QuadratureSettings q = settings_from(g);

  if (a.data) {
    const Sample s = load_data(*a.data, a.column);
    if (a.index == "lorenz") {
      emit(lorenz_csv(empirical_indices(s, nu).lorenz), a.out_path, out);
    } else {
      emit(format_full(empirical_index(a.index, s, nu)) + "\n", a.out_path, out);
    }
    return;
  }

  if (!a.theta) throw UsageError("--family needs --theta");
  const ModelPtr model = build_model(*a.family, *a.theta, a.model_nu);
  if (a.index == "lorenz") {
    emit(lorenz_csv(lorenz_grid(*model, a.grid, q)), a.out_path, out);
    return;
  }
  double value = 0.0;
  if (a.index == "gini") value = gini_model(*model, q);
  else if (a.index == "ggini") value = generalized_gini_model(*model, nu, q);
  else value = gmd_model(*model, q);
  std::string text = format_full(value) + "\n";

  if (a.mc_draws > 0) {
    // Inverse-CDF draws as an independent sanity check of the model value.
    std::mt19937_64 rng(g.seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::vector<double> draws(a.mc_draws);
    for (double& d : draws) d = quantile(*model, unit(rng));
    const Sample mc(std::move(draws), "monte-carlo", BuiltinSource{});
    std::ostringstream os;
    os << "monte-carlo (" << a.mc_draws << " draws, seed " << g.seed
       << "): " << format_full(empirical_index(a.index, mc, nu)) << '\n';
    text += os.str();
  }
  emit(text, a.out_path, out);
}

// ------------------------------------------------------------ fit / compare

struct FitArgs {
  std::string family;
  std::optional<double> nu;
  std::string data;
  std::optional<std::string> column;
  std::string format = "text";
  std::optional<std::string> out_path;
};

int run_fit(const FitArgs& a, std::ostream& out) {
  if (!is_known_family(a.family)) throw UsageError("unknown family '" + a.family + "'");
  const Sample s = load_data(a.data, a.column);
  std::optional<GiniOrder> nu;
  if (a.family == "maxentlomax") {
    nu = GiniOrder(a.nu.value_or(3.0));
  } else if (a.nu) {
    throw UsageError("--nu applies only to family maxentlomax");
  }
  const FitReport r = fit_mle(a.family, s, nu);
  std::string text;
  if (a.format == "json") text = report_to_json(r);
  else if (a.format == "csv") text = reports_to_csv({r});
  else text = reports_to_text({r});
  emit(text, a.out_path, out);
  return kSuccess;
}

struct CompareArgs {
  double nu = 3.0;
  std::string data;
  std::optional<std::string> column;
  std::string format = "text";
  std::optional<std::string> out_path;
};

int run_compare(const CompareArgs& a, std::ostream& out, std::ostream& err) {
  const Sample s = load_data(a.data, a.column);
  const GiniOrder nu(a.nu);
  const std::vector<FitReport> rows = compare_all(s, nu);
  std::string text;
  if (a.format == "json") text = comparison_to_json(s.name(), nu.nu(), s.size(), rows);
  else if (a.format == "csv") text = reports_to_csv(rows);
  else text = reports_to_text(rows);
  emit(text, a.out_path, out);
  const bool any_failed = std::any_of(rows.begin(), rows.end(), [](const FitReport& r) { return !r.ok(); });
  if (any_failed) {
    for (const FitReport& r : rows) {
      if (!r.ok()) err << "fit failed for " << r.family << ": " << *r.error << '\n';
    }
    return kNumericError;
  }
  return kSuccess;
}

// ----------------------------------------------------------------- pathway

struct PathwayArgs {
  double alpha = 0.0;
  double a = 1.0;
  double delta = 1.0;
  double gamma = 1.0;
  std::size_t grid = 100;
  double xmax = 10.0;
  std::optional<std::string> out_path;
};

void run_pathway(const PathwayArgs& p, const GlobalOptions& g, std::ostream& out) {
  if (p.grid < 1) throw UsageError("--grid must be at least 1");
  if (!(p.xmax > 0.0)) throw UsageError("--xmax must be positive");
  const QuadratureSettings q = settings_from(g);
  const PathwayModel model = (p.alpha == 1.0) ? PathwayModel::gamma_limit(p.a, p.delta, p.gamma, q)
                                              : PathwayModel(p.a, p.delta, p.gamma, p.alpha, q);
  std::ostringstream os;
  os << "x,f,F\n";
  for (std::size_t i = 1; i <= p.grid; ++i) {
    const double x = p.xmax * static_cast<double>(i) / static_cast<double>(p.grid);
    os << format_full(x) << ',' << format_full(pathway_density(model, x)) << ',' << format_full(model.cdf(x))
       << '\n';
  }
  emit(os.str(), p.out_path, out);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Mathai entropy, inequality indices and maximum-entropy Lomax fitting", "ginient"};
  app.set_version_flag("--version", std::string("ginient ") + kVersion);

  GlobalOptions global;
  app.add_option("--quad-tol", global.quad_tol, "Absolute and relative quadrature tolerance")
      ->check(CLI::PositiveNumber);
  app.add_option("--seed", global.seed, "Seed for Monte-Carlo cross-checks");

  const std::vector<std::string> families = family_names();

  EntropyArgs entropy;
  auto* entropy_cmd = app.add_subcommand("entropy", "Mathai entropy of a probability vector or a model");
  entropy_cmd->add_option("--alpha", entropy.alpha, "Entropy order (< 2)")->required();
  entropy_cmd->add_option("--probs", entropy.probs, "Comma-separated probabilities");
  entropy_cmd->add_option("--family", entropy.family, "Model family");
  entropy_cmd->add_option("--theta", entropy.theta, "Model parameter (alpha for maxentlomax)");
  entropy_cmd->add_option("--nu", entropy.nu, "Gini order of a maxentlomax model (default 3)");

  InequalityArgs inequality;
  auto* ineq_cmd = app.add_subcommand("inequality", "Gini, generalized Gini, GMD or Lorenz curve");
  ineq_cmd->add_option("--index", inequality.index, "gini | ggini | gmd | lorenz")
      ->required()
      ->check(CLI::IsMember({"gini", "ggini", "gmd", "lorenz"}));
  ineq_cmd->add_option("--nu", inequality.nu, "Order of the generalized Gini index (default 2)");
  ineq_cmd->add_option("--family", inequality.family, "Model family");
  ineq_cmd->add_option("--theta", inequality.theta, "Model parameter (alpha for maxentlomax)");
  ineq_cmd->add_option("--model-nu", inequality.model_nu, "Gini order of a maxentlomax model (default 3)");
  ineq_cmd->add_option("--data", inequality.data, "CSV path or 'builtin'");
  ineq_cmd->add_option("--column", inequality.column, "CSV column name");
  ineq_cmd->add_option("--grid", inequality.grid, "Lorenz grid points for models")->check(CLI::Range(2, 100000));
  ineq_cmd->add_option("--mc-draws", inequality.mc_draws, "Also report a Monte-Carlo estimate from N draws");
  ineq_cmd->add_option("--out", inequality.out_path, "Write output to a file");

  FitArgs fit;
  auto* fit_cmd = app.add_subcommand("fit", "Maximum-likelihood fit of one family");
  fit_cmd->add_option("--family", fit.family, "Family name")->required();
  fit_cmd->add_option("--nu", fit.nu, "Gini order for maxentlomax (default 3)");
  fit_cmd->add_option("--data", fit.data, "CSV path or 'builtin'")->required();
  fit_cmd->add_option("--column", fit.column, "CSV column name");
  fit_cmd->add_option("--format", fit.format, "text | csv | json")->check(CLI::IsMember({"text", "csv", "json"}));
  fit_cmd->add_option("--out", fit.out_path, "Write output to a file");

  CompareArgs compare;
  auto* compare_cmd = app.add_subcommand("compare", "Fit every family and rank by AIC");
  compare_cmd->add_option("--nu", compare.nu, "Gini order of the maxentlomax row")->capture_default_str();
  compare_cmd->add_option("--data", compare.data, "CSV path or 'builtin'")->required();
  compare_cmd->add_option("--column", compare.column, "CSV column name");
  compare_cmd->add_option("--format", compare.format, "text | csv | json")
      ->check(CLI::IsMember({"text", "csv", "json"}));
  compare_cmd->add_option("--out", compare.out_path, "Write output to a file");

  PathwayArgs pathway;
  auto* pathway_cmd = app.add_subcommand("pathway", "CSV grid (x, f, F) of a pathway density");
  pathway_cmd->add_option("--alpha", pathway.alpha, "Pathway parameter (1 = gamma limit)")->required();
  pathway_cmd->add_option("--a", pathway.a, "Scale-like parameter a > 0")->required();
  pathway_cmd->add_option("--delta", pathway.delta, "Exponent delta > 0")->required();
  pathway_cmd->add_option("--gamma", pathway.gamma, "Power gamma > 0")->required();
  pathway_cmd->add_option("--grid", pathway.grid, "Number of grid points")->required();
  pathway_cmd->add_option("--xmax", pathway.xmax, "Right end of the grid")->required();
  pathway_cmd->add_option("--out", pathway.out_path, "Write output to a file");

  app.require_subcommand(1);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      app.exit(e, out, err);
      return kSuccess;
    }
    err << "error: " << e.what() << "\n\n" << app.help();
    return kUsageError;
  }

  try {
    if (entropy_cmd->parsed()) {
      run_entropy(entropy, global, out);
    } else if (ineq_cmd->parsed()) {
      run_inequality(inequality, global, out);
    } else if (fit_cmd->parsed()) {
      return run_fit(fit, out);
    } else if (compare_cmd->parsed()) {
      return run_compare(compare, out, err);
    } else if (pathway_cmd->parsed()) {
      run_pathway(pathway, global, out);
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kUsageError;
  } catch (const DataError& e) {
    err << "data error: " << e.what() << '\n';
    return kDataError;
  } catch (const DomainError& e) {
    err << "domain error: " << e.what() << '\n';
    return kDataError;
  } catch (const NumericError& e) {
    err << "numeric error: " << e.what() << '\n';
    return kNumericError;
  }
  return kSuccess;
}

}  // namespace ginient::cli
