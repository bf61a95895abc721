#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hgt/heun.hpp"
#include "hgt/operator.hpp"
#include "hgt/transform.hpp"

namespace hgt::cli {

/// Plain-text report: blocks of `key: value` lines separated by blank lines.
class Report {
 public:
  Report& block();
  Report& add(std::string key, std::string value);

  void write(std::ostream& os) const;
  std::string str() const;

 private:
  std::vector<std::vector<std::pair<std::string, std::string>>> blocks_;
};

/// Result of a derivation. residual_checks entries are true iff
/// apply_operator returned the zero polynomial.
struct DerivationReport {
  std::string path;
  OdeOperator2 raw_operator;
  std::optional<OdeOperator2> normalized_operator{};
  std::string cross_check_against{};
  CrossCheck cross_check{};
  std::vector<SingularPoint> singularities{};
  std::string singularity_error{};
  std::optional<HeunParameters> heun{};
  std::string heun_error{};
  std::vector<std::pair<std::string, bool>> residual_checks{};
};

void append_operator(Report& report, const std::string& prefix, const OdeOperator2& op);
void append_singularities(Report& report, const std::vector<SingularPoint>& points);
void append_heun(Report& report, const std::string& prefix, const HeunParameters& params);
void append_derivation(Report& report, const DerivationReport& d);

std::string describe(const SingularPoint& point);

}  // namespace hgt::cli
