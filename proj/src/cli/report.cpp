#include "hgt/cli/report.hpp"

#include <ostream>
#include <sstream>

namespace hgt::cli {

Report& Report::block() {
  blocks_.emplace_back();
  return *this;
}

Report& Report::add(std::string key, std::string value) {
  if (blocks_.empty()) blocks_.emplace_back();
  blocks_.back().emplace_back(std::move(key), std::move(value));
  return *this;
}

void Report::write(std::ostream& os) const {
  bool first = true;
  for (const auto& b : blocks_) {
    if (b.empty()) continue;
    if (!first) os << '\n';
    first = false;
    for (const auto& [k, v] : b) os << k << ": " << v << '\n';
  }
}

std::string Report::str() const {
  std::ostringstream os;
  write(os);
  return os.str();
}

void append_operator(Report& report, const std::string& prefix, const OdeOperator2& op) {
  report.add(prefix + ".c2", op.c2().to_string());
  report.add(prefix + ".c1", op.c1().to_string());
  report.add(prefix + ".c0", op.c0().to_string());
}

std::string describe(const SingularPoint& point) {
  std::string out = point.at_infinity() ? "inf" : point.location->to_string();
  out += " ";
  out += to_string(point.kind);
  if (!point.at_infinity()) out += " multiplicity=" + std::to_string(point.c2_multiplicity);
  return out;
}

void append_singularities(Report& report, const std::vector<SingularPoint>& points) {
  for (const auto& p : points) report.add("singular", describe(p));
  report.add("fuchsian", is_fuchsian(points) ? "yes" : "no");
}

void append_heun(Report& report, const std::string& prefix, const HeunParameters& params) {
  report.add(prefix + ".gamma", params.gamma.to_string());
  report.add(prefix + ".delta", params.delta.to_string());
  report.add(prefix + ".epsilon", params.epsilon.to_string());
  report.add(prefix + ".mu", params.mu.to_string());
  report.add(prefix + ".alpha_beta", params.alpha_beta_product.to_string());
  report.add(prefix + ".rho", params.rho.to_string());
  report.add(prefix + ".exponent_quadratic", exponent_quadratic(params).to_string());
}

void append_derivation(Report& report, const DerivationReport& d) {
  report.block();
  append_operator(report, "raw", d.raw_operator);
  if (d.normalized_operator) {
    report.block();
    append_operator(report, "normalized", *d.normalized_operator);
  }
  report.block();
  report.add("cross_check.against", d.cross_check_against);
  report.add("cross_check", d.cross_check.agree ? "agree" : "disagree");
  for (const auto& diff : d.cross_check.diffs) {
    report.add("cross_check." + diff.coefficient + ".closed_form", diff.closed_form.to_string());
    report.add("cross_check." + diff.coefficient + ".determinant", diff.determinant.to_string());
  }
  report.block();
  if (d.singularity_error.empty()) {
    append_singularities(report, d.singularities);
  } else {
    report.add("singular.error", d.singularity_error);
  }
  report.block();
  if (d.heun) {
    report.add("heun", "reducible");
    append_heun(report, "heun", *d.heun);
  } else {
    report.add("heun", "not-reducible");
    report.add("heun.reason", d.heun_error);
  }
  if (!d.residual_checks.empty()) {
    report.block();
    for (const auto& [label, pass] : d.residual_checks) report.add("residual." + label, pass ? "pass" : "fail");
  }
}

}  // namespace hgt::cli
