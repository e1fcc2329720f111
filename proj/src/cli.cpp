#include "polyspec/cli.hpp"

#include "polyspec/asymptotics.hpp"
#include "polyspec/equidecomp.hpp"
#include "polyspec/fourier.hpp"
#include "polyspec/io.hpp"
#include "polyspec/spectral.hpp"

#include <CLI11.hpp>

#include <ostream>

namespace polyspec::cli {

namespace {

struct Options {
  std::string polytope;
  std::string second;
  std::string flag_file;
  std::string xi;
  int precision = 53;
  double tol = 1e-9;
  double eta = 0.05;
  std::size_t samples = 1000;
  std::uint64_t seed = 1;
  bool to_cube = false;
};

Precision precision_of(const Options& o) {
  Precision p;
  p.bits = Precision::resolve(o.precision);
  return p;
}

void emit(std::ostream& out, const Json& j) { out << j.dump(2) << '\n'; }

int invariants(const Options& o, std::ostream& out) {
  const auto a = parse_polytope(read_json_file(o.polytope));
  const auto profile = invariant_profile(a);
  emit(out, to_json(profile));
  return profile.all_zero() ? kOk : kPropertyFails;
}

int ft(const Options& o, std::ostream& out) {
  const auto a = parse_polytope(read_json_file(o.polytope));
  const auto xi = parse_frequency(o.xi);
  if (xi.size() != a.dim()) throw GeometryError("--xi has the wrong number of coordinates");
  const auto p = precision_of(o);
  if (o.flag_file.empty()) {
    emit(out, to_json(ft_indicator(a, xi, p)));
  } else {
    const auto flag = parse_flag(read_json_file(o.flag_file), a.dim());
    emit(out, to_json(ft_flag_measure(a, flag, xi, p)));
  }
  return kOk;
}

int spectrum_check(const Options& o, std::ostream& out) {
  const auto a = parse_polytope(read_json_file(o.polytope));
  const auto lambda = parse_spectrum(read_json_file(o.second));
  if (!(o.tol > 0)) throw std::invalid_argument("--tol must be positive");
  const auto report = orthogonality_report(a, lambda, o.tol, precision_of(o));
  emit(out, to_json(report, lambda));
  return report.violations.empty() ? kOk : kPropertyFails;
}

int certify(const Options& o, std::ostream& out) {
  const auto a = parse_polytope(read_json_file(o.polytope));
  Json certs = Json::array();
  if (auto c = non_spectrality_certificate(a)) certs.push_back(to_json(*c));
  if (auto c = non_tiling_certificate(a)) certs.push_back(to_json(*c));
  const bool found = !certs.empty();
  emit(out, Json{{"certificates", std::move(certs)}, {"conclusive", found}});
  return found ? kPropertyFails : kOk;
}

int equidecomp(const Options& o, std::ostream& out) {
  const auto a = parse_polytope(read_json_file(o.polytope));
  EquidecompVerdict v;
  if (o.to_cube) {
    if (!o.second.empty()) throw std::invalid_argument("--to-cube takes a single polytope");
    v = equidecomposable_to_cube(a);
  } else {
    if (o.second.empty()) throw std::invalid_argument("equidecomp needs two polytopes or --to-cube");
    v = translation_equidecomposable(a, parse_polytope(read_json_file(o.second)));
  }
  emit(out, to_json(v));
  return v.equidecomposable ? kOk : kPropertyFails;
}

int asymptotics(const Options& o, std::ostream& out) {
  const auto a = parse_polytope(read_json_file(o.polytope));
  if (o.flag_file.empty()) throw std::invalid_argument("asymptotics needs --flag");
  const auto flag = parse_flag(read_json_file(o.flag_file), a.dim());
  if (!(o.eta > 0)) throw std::invalid_argument("--eta must be positive");
  if (o.samples == 0) throw std::invalid_argument("--samples must be at least 1");
  auto schedule = MainTermSchedule::standard();
  schedule.samples = o.samples;
  schedule.seed = o.seed;
  schedule.precision = precision_of(o);
  const auto report = verify_main_term(a, flag, o.eta, schedule);
  emit(out, to_json(report));
  return report.pass ? kOk : kPropertyFails;
}

int validate(const Options& o, std::ostream& out) {
  ValidationOptions vo;
  vo.seed = o.seed;
  const auto a = parse_polytope(read_json_file(o.polytope), vo);
  emit(out, Json{{"valid", true},
                 {"dim", a.dim()},
                 {"simplices", a.simplices().size()},
                 {"volume", to_string(a.volume())}});
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Hadwiger invariants, polytope Fourier transforms and spectrality checks"};
  app.require_subcommand(1, 1);
  Options o;

  auto add_polytope = [&](CLI::App* sub) {
    sub->add_option("polytope", o.polytope, "Polytope JSON file")->required();
  };
  auto add_precision = [&](CLI::App* sub) {
    sub->add_option("--precision", o.precision, "Working precision in bits (53, 64 or 113)");
  };

  auto* inv = app.add_subcommand("invariants", "Hadwiger invariants over all enumerated flags");
  add_polytope(inv);

  auto* ftc = app.add_subcommand("ft", "Fourier transform of the indicator or of a flag measure");
  add_polytope(ftc);
  ftc->add_option("--xi", o.xi, "Frequency, comma-separated rationals or decimals")->required();
  ftc->add_option("--flag", o.flag_file, "Flag JSON file");
  add_precision(ftc);

  auto* spec = app.add_subcommand("spectrum-check", "Pairwise orthogonality of exponentials");
  add_polytope(spec);
  spec->add_option("points", o.second, "Candidate spectrum JSON file")->required();
  spec->add_option("--tol", o.tol, "Violation threshold");
  add_precision(spec);

  auto* cert = app.add_subcommand("certify", "Non-spectrality and non-tiling certificates");
  add_polytope(cert);

  auto* eq = app.add_subcommand("equidecomp", "Translational equidecomposability verdict");
  add_polytope(eq);
  eq->add_option("other", o.second, "Second polytope JSON file");
  eq->add_flag("--to-cube", o.to_cube, "Compare with a cube of the same volume");

  auto* asy = app.add_subcommand("asymptotics", "Check the main-term approximation on cone domains");
  add_polytope(asy);
  asy->add_option("--flag", o.flag_file, "Flag JSON file")->required();
  asy->add_option("--eta", o.eta, "Target residual bound");
  asy->add_option("--samples", o.samples, "Samples per configuration");
  asy->add_option("--seed", o.seed, "Sampling seed");
  add_precision(asy);

  auto* val = app.add_subcommand("validate", "Parse and validate a polytope");
  add_polytope(val);
  val->add_option("--seed", o.seed, "Seed for sampled overlap checks (d > 3)");

  std::vector<std::string> rev(args.rbegin(), args.rend());
  if (!rev.empty()) rev.pop_back();  // program name
  try {
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInputError;
  }

  try {
    if (inv->parsed()) return invariants(o, out);
    if (ftc->parsed()) return ft(o, out);
    if (spec->parsed()) return spectrum_check(o, out);
    if (cert->parsed()) return certify(o, out);
    if (eq->parsed()) return equidecomp(o, out);
    if (asy->parsed()) return asymptotics(o, out);
    if (val->parsed()) return validate(o, out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }
  return kInputError;
}

}  // namespace polyspec::cli
