// qsnell: refraction, critical angles and reflection amplitudes for complex
// and quaternionic step potentials.

#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qsnell/errors.hpp"
#include "qsnell/scattering.hpp"
#include "qsnell/sweep.hpp"
#include "qsnell/verification.hpp"

namespace
{

constexpr int kExitAssertion = 1;
constexpr int kExitInvalid = 2;

struct SharedOptions
{
  double energy = 1.0;
  double v1 = 0.0;
  double v2 = 0.0;
  double v3 = 0.0;
  double d_star = 0.0;
  double theta_deg = 0.0;
  std::string mode = "paper-literal";
  std::string format = "csv";
  std::string output;
  int points = 100;

  [[nodiscard]] qsnell::ScatteringConfig config() const
  {
    qsnell::ScatteringConfig c;
    c.energy = energy;
    c.theta = theta_deg * std::numbers::pi / 180.0;
    c.potential = {v1, v2, v3, d_star};
    c.validate();
    return c;
  }
};

void add_potential_flags(CLI::App* cmd, SharedOptions& o)
{
  cmd->add_option("--e", o.energy, "incident energy E (natural units hbar = 2m = 1)");
  cmd->add_option("--v1", o.v1, "complex part V1 of the step");
  cmd->add_option("--v2", o.v2, "quaternionic j part V2");
  cmd->add_option("--v3", o.v3, "quaternionic k part V3");
  cmd->add_option("--d-star", o.d_star, "interface position on the stratification axis");
}

void add_output_flags(CLI::App* cmd, SharedOptions& o)
{
  cmd->add_option("--format", o.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  cmd->add_option("--output", o.output, "write to PATH instead of stdout");
}

void add_mode_flag(CLI::App* cmd, SharedOptions& o)
{
  cmd->add_option("--mode", o.mode, "evanescent convention: paper-literal or dispersion-consistent")
      ->check(CLI::IsMember({"paper-literal", "dispersion-consistent"}));
}

void emit(const qsnell::Table& table, const SharedOptions& o)
{
  std::ofstream file;
  std::ostream* out = &std::cout;
  if (!o.output.empty())
  {
    file.open(o.output, std::ios::binary);
    if (!file)
    {
      throw qsnell::DomainError("cannot open output file " + o.output);
    }
    out = &file;
  }
  if (o.format == "json")
  {
    qsnell::write_json(table, *out);
  }
  else
  {
    qsnell::write_csv(table, *out);
  }
}

}  // namespace

int main(int argc, char** argv)
{
  CLI::App app{"Snell law and reflection amplitudes for complex and quaternionic step potentials"};
  app.require_subcommand(1);
  SharedOptions o;

  auto* snell = app.add_subcommand("snell", "refraction angle, regime and lab-frame rays for one configuration");
  add_potential_flags(snell, o);
  snell->add_option("--theta-deg", o.theta_deg, "incidence angle in degrees");
  add_output_flags(snell, o);

  double start = 0.0;
  std::optional<double> stop;
  std::optional<double> epsilon;
  auto* critical = app.add_subcommand("critical", "critical angle against the potential ratio x");
  critical->add_option("--start", start, "first ratio (default 0)");
  critical->add_option("--stop", stop, "end of the half-open ratio range (default 1)");
  critical->add_option("--points", o.points, "number of rows");
  critical->add_option("--epsilon", epsilon, "add theta_C(x, epsilon x) column");
  add_output_flags(critical, o);

  std::string axis = "potential-ratio";
  auto* reflect = app.add_subcommand("reflect", "|R| and arg R for complex vs pure quaternionic steps of equal modulus");
  add_potential_flags(reflect, o);
  reflect->add_option("--theta-deg", o.theta_deg, "incidence angle in degrees (potential-ratio axis)");
  reflect->add_option("--axis", axis, "potential-ratio or incidence-angle")
      ->check(CLI::IsMember({"potential-ratio", "incidence-angle"}));
  reflect->add_option("--start", start, "first sample (ratio, or degrees)");
  reflect->add_option("--stop", stop, "end of the half-open range (default 1, or 90 degrees)");
  reflect->add_option("--points", o.points, "number of rows");
  add_mode_flag(reflect, o);
  add_output_flags(reflect, o);

  qsnell::WavefieldGrid grid;
  auto* wavefield = app.add_subcommand("wavefield", "quaternion components of Psi on a (y*, z*) grid");
  add_potential_flags(wavefield, o);
  wavefield->add_option("--theta-deg", o.theta_deg, "incidence angle in degrees");
  wavefield->add_option("--y-min", grid.y_min);
  wavefield->add_option("--y-max", grid.y_max);
  wavefield->add_option("--z-min", grid.z_min);
  wavefield->add_option("--z-max", grid.z_max);
  wavefield->add_option("--points", grid.points, "samples per axis");
  add_mode_flag(wavefield, o);
  add_output_flags(wavefield, o);

  std::string scope = "all";
  auto* verify = app.add_subcommand("verify", "run the built-in verification suites");
  verify->add_option("--scope", scope, "algebra, dispersion, oracle, pde, identity or all")
      ->check(CLI::IsMember({"algebra", "dispersion", "oracle", "pde", "identity", "all"}));
  auto* verify_mode = verify->add_option("--mode", o.mode, "restrict to one evanescent convention")
                          ->check(CLI::IsMember({"paper-literal", "dispersion-consistent"}));

  try
  {
    app.parse(argc, argv);
  }
  catch (const CLI::ParseError& e)
  {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitInvalid;
  }

  try
  {
    const qsnell::EvanescentMode mode = qsnell::parse_evanescent_mode(o.mode);
    if (snell->parsed())
    {
      emit(qsnell::snell_table(o.config()), o);
    }
    else if (critical->parsed())
    {
      emit(qsnell::critical_table({start, stop.value_or(1.0), o.points, epsilon}), o);
    }
    else if (reflect->parsed())
    {
      qsnell::ReflectSweep sweep;
      sweep.start = start;
      sweep.count = o.points;
      sweep.energy = o.energy;
      sweep.d_star = o.d_star;
      sweep.mode = mode;
      if (axis == "potential-ratio")
      {
        sweep.axis = qsnell::SweepAxis::PotentialRatio;
        sweep.stop = stop.value_or(1.0);
        sweep.theta = o.config().theta;
      }
      else
      {
        sweep.axis = qsnell::SweepAxis::IncidenceAngle;
        sweep.stop = stop.value_or(90.0);
        sweep.modulus = qsnell::StepPotential{o.v1, o.v2, o.v3, 0.0}.modulus();
      }
      if (!(sweep.energy > 0.0))
      {
        throw qsnell::DomainError("energy must be positive");
      }
      emit(qsnell::reflect_table(sweep), o);
    }
    else if (wavefield->parsed())
    {
      emit(qsnell::wavefield_table(o.config(), mode, grid), o);
    }
    else if (verify->parsed())
    {
      std::vector<qsnell::EvanescentMode> modes{qsnell::EvanescentMode::PaperLiteral,
                                                qsnell::EvanescentMode::DispersionConsistent};
      if (verify_mode->count() > 0)
      {
        modes = {mode};
      }
      const qsnell::VerificationReport report = qsnell::run_verification(qsnell::parse_verify_scope(scope), modes);
      qsnell::print_report(report, std::cout);
      return report.passed() ? 0 : kExitAssertion;
    }
  }
  catch (const qsnell::DomainError& e)
  {
    std::cerr << "qsnell: " << e.what() << '\n';
    return kExitInvalid;
  }
  return 0;
}
