#pragma once

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "hgt/cli/report.hpp"
#include "hgt/cli/spec_file.hpp"

namespace hgt::cli {

/// Exit status contract of the command-line tool.
enum ExitCode : int { kSuccess = 0, kUsageError = 1, kMathError = 2 };

/// Missing or inconsistent inputs for a command; maps to kUsageError.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class DerivePath { Determinant, Hat, Basic, Const };

DerivePath parse_derive_path(const std::string& name);
std::string to_string(DerivePath path);

struct DeriveOptions {
  DerivePath path = DerivePath::Determinant;
  bool normalize = true;
};

DerivationReport derive(const EquationSpecFile& spec, const DeriveOptions& options);

Report cmd_derive(const EquationSpecFile& spec, const DeriveOptions& options);
Report cmd_heun(const EquationSpecFile& spec);
Report cmd_heun_sweep(unsigned bound);
Report cmd_x1(const X1JacobiSpec& spec, bool to_heun);
Report cmd_verify(const EquationSpecFile& spec);
Report cmd_classify(const EquationSpecFile& spec);

/// Operator named by a spec: explicit c2/c1/c0, the derived operator when
/// A or B is given, otherwise the hypergeometric operator itself.
OdeOperator2 resolve_operator(const EquationSpecFile& spec);

/// Full command-line entry point; args excludes the program name.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace hgt::cli
