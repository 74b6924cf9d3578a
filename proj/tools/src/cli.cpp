#include "twodir_cli/cli.hpp"

#include <CLI11.hpp>

#include <charconv>
#include <filesystem>
#include <fstream>
#include <memory>
#include <optional>
#include <ostream>
#include <sstream>

#include "twodir/cascade.hpp"
#include "twodir/derivs.hpp"
#include "twodir/errors.hpp"
#include "twodir/fixtures.hpp"
#include "twodir/mask.hpp"
#include "twodir/moments.hpp"
#include "twodir/pointvals.hpp"
#include "twodir/report.hpp"

namespace twodir::cli {

namespace {

struct Options {
  std::string input;
  int level = 0;
  int cascade_level = 5;
  int derivative = 0;
  std::string function = "phi";
  int order = 3;
  std::string out_path;
  std::string format = "csv";
  int iterations = kDefaultCascadeIterations;
  double tol = kDefaultCascadeTol;
  std::string example;
};

/// A file path wins over a builtin fixture of the same name.
TwoDirectionSystem open_input(const std::string& input) {
  if (std::filesystem::exists(input)) return load_system(input);
  for (auto name : fixture_names())
    if (input == name || "example-" + input == name) return load_fixture(input);
  throw InputError("cannot open '" + input + "': no such file or builtin fixture");
}

/// "phi" -> 0, "psi:s" -> s after checking 1 <= s <= d-1.
int parse_selector(const std::string& sel, int dilation) {
  if (sel == "phi") return 0;
  if (sel.rfind("psi:", 0) == 0) {
    const std::string num = sel.substr(4);
    int s = 0;
    auto [ptr, ec] = std::from_chars(num.data(), num.data() + num.size(), s);
    if (ec == std::errc() && ptr == num.data() + num.size() && s >= 1 && s <= dilation - 1) return s;
    throw InputError("--function " + sel + ": wavelet index must lie in [1, " + std::to_string(dilation - 1) + "]");
  }
  throw InputError("--function must be phi or psi:s, got '" + sel + "'");
}

/// Writes through `emit` to --out when given, else to `out`.
template <class Emit>
void deliver(const std::string& path, std::ostream& out, Emit emit) {
  if (path.empty()) {
    emit(out);
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw InputError("cannot write '" + path + "'");
  emit(f);
  if (!f) throw InputError("write to '" + path + "' failed");
}

void cmd_validate(const Options& o, std::ostream& out) {
  const auto sys = open_input(o.input);
  const auto hull = support_hull(sys);
  const auto ce = condition_e(sys);
  out << "name=" << sys.name() << '\n';
  out << "dilation=" << sys.dilation() << '\n';
  out << "multiplicity=" << sys.multiplicity() << '\n';
  out << "phi_plus=[" << sys.phi_plus().kmin() << ", " << sys.phi_plus().kmax() << "]\n";
  out << "phi_minus=[" << sys.phi_minus().kmin() << ", " << sys.phi_minus().kmax() << "]\n";
  out << "wavelets=" << sys.wavelets().size() << '\n';
  out << "support=[" << hull.a << ", " << hull.b << "]" << (hull.converged ? "" : " (hull did not converge)") << '\n';
  out << "condition_e=" << (ce.satisfied ? "true" : "false") << '\n';
}

void cmd_condition_e(const Options& o, std::ostream& out) { write_condition_e(out, condition_e(open_input(o.input))); }

void cmd_moments(const Options& o, std::ostream& out) {
  const auto sys = open_input(o.input);
  const auto table = continuous_moments(sys, o.order);
  deliver(o.out_path, out, [&](std::ostream& os) { write_moments_json(os, table, sys.dilation()); });
}

void emit_table(const Options& o, std::ostream& out, const PointValueTable& t, const TableJsonExtras& extras) {
  deliver(o.out_path, out, [&](std::ostream& os) {
    if (o.format == "json")
      write_table_json(os, t, extras);
    else
      write_csv(os, t);
  });
}

void cmd_values(const Options& o, std::ostream& out, std::ostream& err) {
  const auto sys = open_input(o.input);
  const int s = parse_selector(o.function, sys.dilation());
  if (s > 0) sys.wavelet(s);  // fail before any solving when masks are missing

  PointValueResult base = [&] {
    if (o.derivative == 0) return integer_values(sys);
    return derivative_integer_values(sys, o.derivative, continuous_moments(sys, o.derivative));
  }();
  for (const auto& w : base.report.warnings) err << "warning: " << w << '\n';

  TableJsonExtras extras;
  extras.report = &base.report;
  PointValueTable phi = o.derivative == 0 ? refine_to(sys, base.table, o.level)
                                          : refine_derivative_to(sys, base.table, o.level);
  emit_table(o, out, s == 0 ? phi : derivative_wavelet_values(sys, s, phi), extras);
}

void cmd_cascade(const Options& o, std::ostream& out, std::ostream& err) {
  const auto sys = open_input(o.input);
  const auto state = cascade_run(sys, o.cascade_level, o.iterations, o.tol);
  TableJsonExtras extras;
  extras.iterations = state.iteration;
  extras.delta = state.delta;
  emit_table(o, out, state.table, extras);
  // Keep stdout a clean CSV when the table itself goes there.
  std::ostream& info = o.out_path.empty() ? err : out;
  info << "iterations=" << state.iteration << '\n';
  info << "delta=" << format_double(state.delta) << '\n';
  info << "converged=" << (state.converged ? "true" : "false") << '\n';
}

void cmd_example(const Options& o, std::ostream& out) {
  const std::string_view text = fixture_text(o.example);
  deliver(o.out_path, out, [&](std::ostream& os) { os << text; });
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Point values, moments and derivatives of two-direction multiwavelets", "twodir"};
  app.require_subcommand(1);

  auto add_input = [&](CLI::App* sub) {
    sub->add_option("input", o.input, "Mask file (JSON) or builtin fixture name (5.1, 5.2)")->required();
  };
  auto add_output = [&](CLI::App* sub) {
    sub->add_option("--out,-o", o.out_path, "Output file (default: stdout)");
    sub->add_option("--format", o.format, "Table format")->check(CLI::IsMember({"csv", "json"}));
  };

  auto* validate = app.add_subcommand("validate", "Check a mask file and summarize it");
  add_input(validate);

  auto* cond = app.add_subcommand("condition-e", "Condition E verdict and eigenvalues");
  add_input(cond);

  auto* moments = app.add_subcommand("moments", "Continuous moments m_0..m_J as JSON");
  add_input(moments);
  moments->add_option("--order,-J", o.order, "Highest moment order")->check(CLI::Range(0, kMaxMomentOrder));
  moments->add_option("--out,-o", o.out_path, "Output file (default: stdout)");

  auto* values = app.add_subcommand("values", "Exact point values on a dyadic grid");
  add_input(values);
  values->add_option("--levels,-L", o.level, "Grid level L (spacing d^-L)")->check(CLI::Range(0, kMaxLevel));
  values->add_option("--derivative,-n", o.derivative, "Derivative order")
      ->check(CLI::Range(0, kMaxDerivativeOrder));
  values->add_option("--function,-f", o.function, "phi or psi:s");
  add_output(values);

  auto* cascade = app.add_subcommand("cascade", "Approximate phi by the cascade algorithm");
  add_input(cascade);
  cascade->add_option("--levels,-L", o.cascade_level, "Grid level L")->check(CLI::Range(1, kMaxLevel));
  cascade->add_option("--iterations,-N", o.iterations, "Maximum number of steps")->check(CLI::PositiveNumber);
  cascade->add_option("--tol", o.tol, "Stop once the sup-norm change is at most this")
      ->check(CLI::NonNegativeNumber);
  add_output(cascade);

  auto* example = app.add_subcommand("example", "Write a builtin fixture as a mask file");
  example->add_option("name", o.example, "Fixture: 5.1 or 5.2")->required();
  example->add_option("--emit,-e", o.out_path, "Output file (default: stdout)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (validate->parsed()) cmd_validate(o, out);
    else if (cond->parsed()) cmd_condition_e(o, out);
    else if (moments->parsed()) cmd_moments(o, out);
    else if (values->parsed()) cmd_values(o, out, err);
    else if (cascade->parsed()) cmd_cascade(o, out, err);
    else if (example->parsed()) cmd_example(o, out);
    return kExitOk;
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kExitDomain;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}

}  // namespace twodir::cli
