#include "hgt/cli/spec_file.hpp"

#include <cctype>
#include <algorithm>
#include <map>

#include "hgt/error.hpp"

namespace hgt::cli {

namespace {

std::size_t skip_space(std::string_view line, std::size_t pos) {
  while (pos < line.size() && std::isspace(static_cast<unsigned char>(line[pos]))) ++pos;
  return pos;
}

template <typename T>
void assign(std::optional<T>& slot, T value) {
  slot = std::move(value);
}

}  // namespace

HypergeomEq EquationSpecFile::equation() const {
  if (family) return equation_of(*family);
  if (sigma && tau && lambda) return HypergeomEq(*sigma, *tau, *lambda);
  throw ParseError("no equation given: need sigma/tau/lambda or family");
}

EquationSpecFile parse_spec(std::string_view text) {
  EquationSpecFile spec;
  std::map<std::string, std::size_t, std::less<>> seen;  // key -> line

  std::size_t line_no = 0;
  while (!text.empty()) {
    ++line_no;
    const auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text.remove_prefix(nl == std::string_view::npos ? text.size() : nl + 1);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);

    const std::size_t start = skip_space(line, 0);
    if (start == line.size() || line[start] == '#') continue;

    const auto colon = line.find(':', start);
    if (colon == std::string_view::npos) throw ParseError(line_no, start + 1, "expected 'key: value'");
    std::string_view key = line.substr(start, colon - start);
    while (!key.empty() && std::isspace(static_cast<unsigned char>(key.back()))) key.remove_suffix(1);
    const std::size_t value_col = skip_space(line, colon + 1);
    const std::string_view value = line.substr(value_col);
    if (value.empty()) throw ParseError(line_no, value_col + 1, "missing value for key '" + std::string(key) + "'");

    if (auto [it, inserted] = seen.emplace(std::string(key), line_no); !inserted) {
      throw ParseError(line_no, start + 1,
                       "duplicate key '" + std::string(key) + "' (first given on line " + std::to_string(it->second) + ")");
    }

    try {
      if (key == "sigma") assign(spec.sigma, Poly::parse(value));
      else if (key == "tau") assign(spec.tau, Poly::parse(value));
      else if (key == "lambda") assign(spec.lambda, Rational::parse(value));
      else if (key == "family") assign(spec.family, ClassicalFamily::parse(value));
      else if (key == "A") assign(spec.a, Poly::parse(value));
      else if (key == "B") assign(spec.b, Poly::parse(value));
      else if (key == "c2") assign(spec.c2, Poly::parse(value));
      else if (key == "c1") assign(spec.c1, Poly::parse(value));
      else if (key == "c0") assign(spec.c0, Poly::parse(value));
      else if (key == "candidate") assign(spec.candidate, Poly::parse(value));
      else if (key == "x1") assign(spec.x1, X1JacobiSpec::parse(value));
      else if (key == "contiguity") assign(spec.contiguity, ClassicalFamily::parse(value));
      else throw ParseError(line_no, start + 1, "unknown key '" + std::string(key) + "'");
    } catch (const ParseError& e) {
      if (e.line() != 0) throw;
      throw ParseError(line_no, value_col + 1, e.what());
    }
  }

  const auto line_of = [&](std::string_view k) -> std::size_t {
    auto it = seen.find(k);
    return it == seen.end() ? 0 : it->second;
  };
  const int triple = int(spec.sigma.has_value()) + int(spec.tau.has_value()) + int(spec.lambda.has_value());
  if (triple != 0 && triple != 3) {
    const std::size_t at = std::max({line_of("sigma"), line_of("tau"), line_of("lambda")});
    throw ParseError(at, 1, "incomplete equation: sigma, tau and lambda must be given together");
  }
  const int op = int(spec.c2.has_value()) + int(spec.c1.has_value()) + int(spec.c0.has_value());
  if (op != 0 && op != 3) {
    const std::size_t at = std::max({line_of("c2"), line_of("c1"), line_of("c0")});
    throw ParseError(at, 1, "incomplete operator: c2, c1 and c0 must be given together");
  }
  if (triple == 3 && spec.family) {
    throw ParseError(line_of("family"), 1, "'family' and sigma/tau/lambda are mutually exclusive");
  }
  if (op == 3 && (triple == 3 || spec.family)) {
    throw ParseError(line_of("c2"), 1, "explicit operator c2/c1/c0 excludes sigma/tau/lambda and family");
  }
  if (op == 3 && (spec.a || spec.b)) {
    throw ParseError(line_of("c2"), 1, "explicit operator c2/c1/c0 cannot be combined with A/B");
  }
  return spec;
}

}  // namespace hgt::cli
