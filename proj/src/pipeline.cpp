#include "lcgp/pipeline.hpp"

#include <sstream>

#include "lcgp/errors.hpp"

namespace lcgp {

bool Analysis::parametrizable() const {
  return kind == RingKind::Ore ? ore_report.parametrizable : report.parametrizable;
}

std::size_t Analysis::latent_count() const {
  return kind == RingKind::Ore ? ore_report.parametrization.cols() : report.parametrization.cols();
}

Analysis analyze(const ProblemSpec& spec, const KernelOptions& options) {
  Analysis a;
  a.kind = spec.kind;
  if (spec.kind == RingKind::Ore) a.ore_report = ore::ore_check_parametrizable(spec.skew);
  else a.report = check_parametrizable(spec.matrix, options);
  return a;
}

std::vector<std::string> kernel_names(const ProblemSpec& spec) {
  return kernel_variable_names(spec.coordinates);
}

std::vector<KernelExpr> latent_kernels(const ProblemSpec& spec, const Analysis& analysis,
                                       const std::optional<Hyperparameters>& uniform) {
  const std::size_t d = spec.dimension();
  const std::size_t n = analysis.latent_count();
  if (uniform)
    return std::vector<KernelExpr>(
        n, se_kernel(d, Rational(uniform->lengthscale), Rational(uniform->variance)));
  std::vector<KernelExpr> out(n, se_kernel(d, spec.kernel.lengthscale, spec.kernel.variance));
  for (const auto& [i, k] : spec.latent_overrides) {
    if (i >= n)
      throw DimensionError("kernel override for latent " + std::to_string(i) + ", but only " +
                           std::to_string(n) + " latent processes");
    out[i] = se_kernel(d, k.lengthscale, k.variance);
  }
  return out;
}

MatrixKernel pushforward(const ProblemSpec& spec, const Analysis& analysis,
                         const std::optional<Hyperparameters>& uniform) {
  auto latent = latent_kernels(spec, analysis, uniform);
  if (spec.kind == RingKind::Ore)
    return pushforward_covariance(analysis.ore_report.parametrization, latent);
  return pushforward_covariance(analysis.report.parametrization, latent, spec.shift_step);
}

bool annihilates(const ProblemSpec& spec, const MatrixKernel& k) {
  if (spec.kind == RingKind::Ore) return annihilation_check(spec.skew, k);
  return annihilation_check(spec.matrix, k, spec.shift_step);
}

KernelFamily kernel_family(const ProblemSpec& spec, const Analysis& analysis) {
  return [spec, analysis](const Hyperparameters& h) {
    return compile_evaluator(pushforward(spec, analysis, h));
  };
}

GPModel make_model(const ProblemSpec& spec, const Analysis& analysis) {
  GPModel m;
  m.kernel = compile_evaluator(pushforward(spec, analysis));
  m.noise_variance = spec.noise_variance;
  m.jitter = spec.jitter;
  m.hyperparameters = {spec.kernel.lengthscale.get_d(), spec.kernel.variance.get_d()};
  return m;
}

Report make_report(const ProblemSpec& spec, const Analysis& analysis) {
  Report r;
  r.parametrizable = analysis.parametrizable();
  if (spec.kind == RingKind::Ore) {
    const auto& t = spec.coordinates[0];
    const auto& d = spec.generators[0];
    const auto& b = analysis.ore_report.parametrization;
    const auto& ap = analysis.ore_report.controllable;
    r.parametrization = {b.rows(), b.cols(), b.cols() ? ore::to_string(b, t, d) : ""};
    r.controllable = {ap.rows(), ap.cols(), ap.cols() ? ore::to_string(ap, t, d) : ""};
    return r;
  }
  const auto& b = analysis.report.parametrization;
  const auto& ap = analysis.report.controllable;
  r.parametrization = {b.rows(), b.cols(), b.cols() ? b.to_string() : ""};
  r.controllable = {ap.rows(), ap.cols(), ap.cols() ? ap.to_string() : ""};
  if (r.parametrizable) {
    const auto& cert = analysis.report.certificates;
    const std::size_t cols = spec.matrix.rows();
    PolyMatrix c = PolyMatrix::from_rows(cert, Polynomial(spec.matrix.nvars()), cols);
    r.certificates = ReportMatrix{c.rows(), c.cols(), c.cols() ? to_string(c, spec.generators) : ""};
  }
  return r;
}

namespace {

void write_matrix(std::ostream& os, const std::string& name, const ReportMatrix& m) {
  os << name << ' ' << m.rows << " x " << m.cols << '\n' << m.text;
}

}  // namespace

std::string format_report(const Report& r) {
  std::ostringstream os;
  os << report_header << '\n';
  os << "parametrizable = " << (r.parametrizable ? "true" : "false") << '\n';
  write_matrix(os, "parametrization", r.parametrization);
  write_matrix(os, "controllable", r.controllable);
  if (r.certificates) write_matrix(os, "certificates", *r.certificates);
  return os.str();
}

Report parse_report(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  auto next = [&](const char* what) {
    if (!std::getline(in, line)) throw ParseError(std::string("expected ") + what, line_no + 1, 1);
    ++line_no;
  };
  next("report header");
  if (line != report_header) throw ParseError("not an lcgp report", line_no, 1);
  Report r;
  next("verdict");
  if (line == "parametrizable = true") r.parametrizable = true;
  else if (line == "parametrizable = false") r.parametrizable = false;
  else throw ParseError("expected 'parametrizable = true|false'", line_no, 1);
  auto read_matrix = [&](const std::string& name, ReportMatrix& m) {
    std::istringstream hdr(line);
    std::string word, x;
    if (!(hdr >> word >> m.rows >> x >> m.cols) || word != name || x != "x")
      throw ParseError("expected '" + name + " <rows> x <cols>'", line_no, 1);
    if (m.cols == 0) return;
    for (std::size_t i = 0; i < m.rows; ++i) {
      next("matrix row");
      m.text += line + '\n';
    }
  };
  next("parametrization");
  read_matrix("parametrization", r.parametrization);
  next("controllable");
  read_matrix("controllable", r.controllable);
  if (std::getline(in, line)) {
    ++line_no;
    r.certificates.emplace();
    read_matrix("certificates", *r.certificates);
  }
  return r;
}

}  // namespace lcgp
