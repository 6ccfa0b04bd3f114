#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "lcgp/errors.hpp"
#include "lcgp/pipeline.hpp"

namespace {

enum Exit : int { kOk = 0, kNotParametrizable = 2, kInputError = 3, kComputeError = 4 };

struct Options {
  std::string problem;
  std::string order = "degrevlex";
  std::optional<double> jitter;
  std::optional<double> noise;
  std::string out;
  unsigned long seed = 0;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void emit(const Options& opt, const std::string& text) {
  if (opt.out.empty() || opt.out == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(opt.out, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + opt.out);
  out << text;
}

struct Context {
  lcgp::ProblemSpec spec;
  lcgp::Analysis analysis;
};

Context prepare(const Options& opt) {
  Context c;
  c.spec = lcgp::parse_problem(read_file(opt.problem));
  if (opt.noise) c.spec.noise_variance = *opt.noise;
  if (opt.jitter) c.spec.jitter = *opt.jitter;
  lcgp::KernelOptions ko;
  ko.base = opt.order == "lex" ? lcgp::BaseOrder::Lex : lcgp::BaseOrder::DegRevLex;
  c.analysis = lcgp::analyze(c.spec, ko);
  if (!c.analysis.parametrizable())
    std::cerr << "note: the system is not parametrizable; continuing with its controllable part\n";
  return c;
}

int verdict(const Context& c) { return c.analysis.parametrizable() ? kOk : kNotParametrizable; }

/// Fits if the problem has a [fit] section; otherwise the spec's model.
lcgp::GPModel model_for(const Context& c) {
  if (!c.spec.fit) return lcgp::make_model(c.spec, c.analysis);
  const auto& g = *c.spec.fit;
  lcgp::GPModel base;
  base.jitter = c.spec.jitter;
  return lcgp::fit_hyperparameters(lcgp::kernel_family(c.spec, c.analysis), c.spec.data,
                                   lcgp::make_grid(g.lengthscales, g.variances, g.noise_variances),
                                   base);
}

int run_parametrize(const Options& opt) {
  Context c = prepare(opt);
  emit(opt, lcgp::format_report(lcgp::make_report(c.spec, c.analysis)));
  return verdict(c);
}

int run_pushforward(const Options& opt) {
  Context c = prepare(opt);
  emit(opt, lcgp::to_string(lcgp::pushforward(c.spec, c.analysis), lcgp::kernel_names(c.spec)));
  return verdict(c);
}

int run_fit(const Options& opt) {
  Context c = prepare(opt);
  lcgp::GPModel m = model_for(c);
  std::ostringstream os;
  os.precision(17);
  os << "lengthscale = " << m.hyperparameters.lengthscale << '\n'
     << "variance = " << m.hyperparameters.variance << '\n'
     << "noise = " << m.noise_variance << '\n'
     << "log_marginal_likelihood = " << lcgp::log_marginal_likelihood(m, c.spec.data) << '\n';
  emit(opt, os.str());
  return verdict(c);
}

int run_predict(const Options& opt) {
  Context c = prepare(opt);
  lcgp::ConditionedGP gp(model_for(c), c.spec.data);
  const auto queries = lcgp::expand_queries(c.spec);
  std::ostringstream os;
  lcgp::write_csv(os, c.spec.coordinates, queries, gp.predict(queries));
  emit(opt, os.str());
  return verdict(c);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Gaussian process priors for linear operator equations"};
  app.require_subcommand(1);
  Options opt;
  int (*action)(const Options&) = nullptr;
  auto add = [&](const char* name, const char* help, int (*fn)(const Options&)) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("problem", opt.problem, "Problem file")->required()->check(CLI::ExistingFile);
    sub->add_option("--order", opt.order, "Base monomial order")
        ->check(CLI::IsMember({"degrevlex", "lex"}));
    sub->add_option("--jitter", opt.jitter, "Absolute diagonal jitter (default: relative 1e-8)")
        ->check(CLI::NonNegativeNumber);
    sub->add_option("--noise", opt.noise, "Observation noise variance")->check(CLI::NonNegativeNumber);
    sub->add_option("--out", opt.out, "Output file (default: stdout)");
    sub->add_option("--seed", opt.seed, "Seed for randomized utilities; all commands are deterministic");
    sub->callback([&action, fn] { action = fn; });
  };
  add("parametrize", "Compute B, A' and the parametrizability verdict", run_parametrize);
  add("pushforward", "Print the constrained covariance matrix", run_pushforward);
  add("fit", "Select hyperparameters by log marginal likelihood", run_fit);
  add("predict", "Write posterior mean and standard deviation as CSV", run_predict);
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kInputError;
  }

  try {
    return action(opt);
  } catch (const lcgp::ParseError& e) {
    std::cerr << opt.problem << ": " << e.what() << '\n';
    return kInputError;
  } catch (const lcgp::FactorizationError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kComputeError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kComputeError;
  }
}
