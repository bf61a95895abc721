#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include <CLI11.hpp>

#include "hgt/cli/commands.hpp"
#include "hgt/error.hpp"

namespace hgt::cli {

namespace {

std::string read_all(std::istream& in) { return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()}; }

struct IoOptions {
  std::string input;
  std::string output;
};

void add_io(CLI::App* sub, IoOptions& io) {
  sub->add_option("--input", io.input, "Spec file (default: stdin)");
  sub->add_option("--output", io.output, "Report file (default: stdout)");
}

EquationSpecFile load_spec(const IoOptions& io, std::istream& in) {
  if (io.input.empty() || io.input == "-") return parse_spec(read_all(in));
  std::ifstream file(io.input, std::ios::binary);
  if (!file) throw UsageError("cannot open input file '" + io.input + "'");
  return parse_spec(read_all(file));
}

void emit(const Report& report, const IoOptions& io, std::ostream& out) {
  if (io.output.empty() || io.output == "-") {
    report.write(out);
    return;
  }
  std::ofstream file(io.output, std::ios::binary | std::ios::trunc);
  if (!file) throw UsageError("cannot open output file '" + io.output + "'");
  report.write(file);
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact ODEs for polynomial transforms of hypergeometric equations", "hgt"};
  app.require_subcommand(1);

  IoOptions io;
  std::string path = "det";
  bool no_normalize = false;
  unsigned sweep_bound = 0;
  std::string x1_literal;
  bool to_heun = false;

  auto* derive = app.add_subcommand("derive", "Construct the ODE satisfied by y = A z + B z'");
  add_io(derive, io);
  derive->add_option("--path", path, "det | hat | basic | const")->capture_default_str();
  derive->add_flag("--no-normalize", no_normalize, "Omit the normalized operator");

  auto* heun = app.add_subcommand("heun", "Reduce a derived operator to Heun form, or sweep for reducible cases");
  add_io(heun, io);
  heun->add_option("--sweep", sweep_bound, "Exact grid sweep with |numerator|, denominator <= bound");

  auto* x1 = app.add_subcommand("x1", "Build an exceptional X1-Jacobi polynomial and verify its ODE");
  add_io(x1, io);
  x1->add_option("spec", x1_literal, "x1(g, h, k); read from the 'x1' key of the input when omitted");
  x1->add_flag("--to-heun", to_heun, "Apply eta = 1 - 2x and extract Heun parameters");

  auto* verify = app.add_subcommand("verify", "Exact residual of a candidate solution");
  add_io(verify, io);

  auto* classify = app.add_subcommand("classify", "Classify the singular points of an operator");
  add_io(classify, io);

  std::vector<const char*> argv{"hgt"};
  for (const auto& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  }

  try {
    Report report;
    if (derive->parsed()) {
      report = cmd_derive(load_spec(io, in), DeriveOptions{parse_derive_path(path), !no_normalize});
    } else if (heun->parsed()) {
      if (heun->count("--sweep") > 0) {
        if (sweep_bound == 0) throw UsageError("--sweep needs a positive bound");
        report = cmd_heun_sweep(sweep_bound);
      } else {
        report = cmd_heun(load_spec(io, in));
      }
    } else if (x1->parsed()) {
      std::optional<X1JacobiSpec> spec;
      if (!x1_literal.empty()) {
        spec = X1JacobiSpec::parse(x1_literal);
      } else {
        spec = load_spec(io, in).x1;
      }
      if (!spec) throw UsageError("x1 needs a spec literal or an 'x1' key in the input");
      report = cmd_x1(*spec, to_heun);
    } else if (verify->parsed()) {
      report = cmd_verify(load_spec(io, in));
    } else if (classify->parsed()) {
      report = cmd_classify(load_spec(io, in));
    }
    emit(report, io, out);
    return kSuccess;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kUsageError;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsageError;
  } catch (const MathError& e) {
    err << "math error: " << e.what() << "\n";
    return kMathError;
  }
}

}  // namespace hgt::cli
