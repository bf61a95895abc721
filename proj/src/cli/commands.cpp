#include "hgt/cli/commands.hpp"

#include "hgt/error.hpp"
#include "hgt/sweep.hpp"

namespace hgt::cli {

namespace {

const Poly kHeunSigma({Rational(0), Rational(-1), Rational(1)});

HypergeomEq require_equation(const EquationSpecFile& spec) {
  if (!spec.has_equation()) throw UsageError("this command needs sigma/tau/lambda or a family");
  return spec.equation();
}

void append_inputs(Report& report, const EquationSpecFile& spec) {
  if (spec.family) report.add("family", spec.family->to_string());
  if (spec.has_equation()) {
    const HypergeomEq eq = spec.equation();
    report.add("sigma", eq.sigma().to_string());
    report.add("tau", eq.tau().to_string());
    report.add("lambda", eq.lambda().to_string());
  }
  if (spec.a) report.add("A", spec.a->to_string());
  if (spec.b) report.add("B", spec.b->to_string());
  if (spec.has_operator()) {
    report.add("c2", spec.c2->to_string());
    report.add("c1", spec.c1->to_string());
    report.add("c0", spec.c0->to_string());
  }
  if (spec.candidate) report.add("candidate", spec.candidate->to_string());
}

bool annihilates(const OdeOperator2& op, const Poly& y) { return apply_operator(op, y).is_zero(); }

}  // namespace

DerivePath parse_derive_path(const std::string& name) {
  if (name == "det") return DerivePath::Determinant;
  if (name == "hat") return DerivePath::Hat;
  if (name == "basic") return DerivePath::Basic;
  if (name == "const") return DerivePath::Const;
  throw UsageError("unknown --path '" + name + "' (expected det, hat, basic or const)");
}

std::string to_string(DerivePath path) {
  switch (path) {
    case DerivePath::Determinant: return "det";
    case DerivePath::Hat: return "hat";
    case DerivePath::Basic: return "basic";
    case DerivePath::Const: return "const";
  }
  return {};
}

DerivationReport derive(const EquationSpecFile& spec, const DeriveOptions& options) {
  const HypergeomEq eq = require_equation(spec);
  if (!spec.a) throw UsageError("derive needs A");

  Poly b;
  if (options.path == DerivePath::Basic) {
    if (spec.b && *spec.b != eq.sigma()) throw UsageError("--path=basic requires B = sigma (or B omitted)");
    b = eq.sigma();
  } else {
    if (!spec.b) throw UsageError("derive needs B (only --path=basic may omit it)");
    b = *spec.b;
  }
  if (options.path == DerivePath::Const && (!spec.a->is_constant() || !b.is_constant())) {
    throw UsageError("--path=const requires constant A and B");
  }

  const LinearTransform t(*spec.a, b);
  const OdeOperator2 det = expand_determinant(eq, t);

  std::optional<OdeOperator2> selected;
  std::string against = "det";
  switch (options.path) {
    case DerivePath::Determinant:
      selected = det;
      against = "hat";
      break;
    case DerivePath::Hat: selected = expand_determinant_hat(eq, t); break;
    case DerivePath::Basic: selected = closed_form_basic(eq, *spec.a); break;
    case DerivePath::Const: selected = closed_form_const(eq, spec.a->coeff(0), b.coeff(0)); break;
  }

  DerivationReport report{.path = to_string(options.path), .raw_operator = *selected};
  if (options.normalize) report.normalized_operator = normalize(*selected);
  report.cross_check_against = against;
  report.cross_check = options.path == DerivePath::Determinant ? cross_validate(expand_determinant_hat(eq, t), det)
                                                               : cross_validate(*selected, det);

  const OdeOperator2 authoritative = normalize(det);
  try {
    report.singularities = classify_singularities(authoritative);
  } catch (const MathError& e) {
    report.singularity_error = e.what();
  }
  try {
    report.heun = heun_reduce(authoritative);
  } catch (const MathError& e) {
    report.heun_error = e.what();
  }

  if (spec.family) {
    const Poly z = polynomial_solution(*spec.family);
    report.residual_checks.emplace_back("z", annihilates(eq.as_operator(), z));
    report.residual_checks.emplace_back("y", annihilates(authoritative, t.apply(z)));
  }
  if (spec.candidate) report.residual_checks.emplace_back("candidate", annihilates(authoritative, *spec.candidate));
  return report;
}

Report cmd_derive(const EquationSpecFile& spec, const DeriveOptions& options) {
  const DerivationReport d = derive(spec, options);
  Report report;
  report.add("command", "derive");
  report.add("path", d.path);
  append_inputs(report, spec);
  append_derivation(report, d);
  return report;
}

Report cmd_heun(const EquationSpecFile& spec) {
  const HypergeomEq eq = require_equation(spec);
  if (!spec.a) throw UsageError("heun needs A (B defaults to sigma)");
  const LinearTransform t(*spec.a, spec.b.value_or(eq.sigma()));
  const OdeOperator2 op = normalize(expand_determinant(eq, t));

  Report report;
  report.add("command", "heun");
  append_inputs(report, spec);
  if (!spec.b) report.add("B", eq.sigma().to_string());
  if (eq.sigma() != kHeunSigma) report.add("warning", "sigma is not x^2 - x; the canonical singular points 0, 1 may be absent");
  report.block();
  append_operator(report, "normalized", op);

  const HeunParameters params = heun_reduce(op);
  report.block();
  append_heun(report, "heun", params);
  report.add("round_trip", equivalent(heun_operator(params), op) ? "pass" : "fail");
  report.block();
  append_singularities(report, classify_singularities(op));
  return report;
}

Report cmd_heun_sweep(unsigned bound) {
  const SweepResult result = heun_sweep(bound);
  Report report;
  report.add("command", "heun");
  report.add("sweep.bound", std::to_string(bound));
  report.add("sweep.sigma", kHeunSigma.to_string());
  report.add("sweep.B", "sigma");
  report.add("sweep.candidates", std::to_string(result.candidates));
  report.add("sweep.hits", std::to_string(result.hits.size()));
  std::size_t index = 0;
  for (const auto& hit : result.hits) {
    report.block();
    report.add("hit", std::to_string(++index));
    report.add("A", Poly({hit.beta, hit.alpha}).to_string());
    report.add("tau", Poly({hit.t0, hit.t1}).to_string());
    report.add("lambda", hit.lambda.to_string());
    append_heun(report, "heun", hit.params);
    report.add("round_trip", equivalent(heun_operator(hit.params), hit.reduced_operator) ? "pass" : "fail");
  }
  return report;
}

Report cmd_x1(const X1JacobiSpec& spec, bool to_heun) {
  const X1Construction c = build_x1(spec);
  const OdeOperator2 op = x1_operator(spec);

  Report report;
  report.add("command", "x1");
  report.add("spec", spec.to_string());
  if (spec.degenerate_zeta()) report.add("warning", "DegenerateZeta: g = h makes zeta constant");
  report.block();
  report.add("zeta", c.zeta.to_string());
  report.add("zeta_tilde", c.zeta_tilde.to_string());
  report.add("zeta_tilde_minus_zeta", (c.zeta_tilde - c.zeta).to_string());
  report.add("A", c.a.to_string());
  report.add("B", c.b.to_string());
  report.add("p_k", c.p_k.to_string());
  report.add("y_hat", c.y_hat.to_string());
  report.add("degree.y_hat", c.y_hat.is_zero() ? "none" : std::to_string(*c.y_hat.degree()));
  report.block();
  append_operator(report, "operator", op);
  const Poly residual = apply_operator(op, c.y_hat);
  report.add("residual", residual.is_zero() ? "pass" : "fail");
  if (!residual.is_zero()) report.add("residual.value", residual.to_string());
  report.block();
  try {
    append_singularities(report, classify_singularities(op));
  } catch (const MathError& e) {
    report.add("singular.error", e.what());
  }

  if (to_heun) {
    const OdeOperator2 heun_op = x1_to_heun(spec);
    const HeunParameters params = heun_reduce(heun_op);
    const Rational expected_mu = (Rational(1) - zeta_root(spec)) / Rational(2);
    report.block();
    report.add("substitution", "eta = 1 - 2x");
    append_operator(report, "heun.operator", heun_op);
    append_heun(report, "heun", params);
    report.add("heun.mu_matches_zeta_root", params.mu == expected_mu ? "yes" : "no");
    report.add("round_trip", equivalent(heun_operator(params), heun_op) ? "pass" : "fail");
  }
  return report;
}

OdeOperator2 resolve_operator(const EquationSpecFile& spec) {
  if (spec.has_operator()) return OdeOperator2(*spec.c2, *spec.c1, *spec.c0);
  const HypergeomEq eq = require_equation(spec);
  if (spec.a || spec.b) {
    return normalize(expand_determinant(eq, LinearTransform(spec.a.value_or(Poly()), spec.b.value_or(Poly()))));
  }
  return eq.as_operator();
}

Report cmd_verify(const EquationSpecFile& spec) {
  Report report;
  report.add("command", "verify");
  if (spec.contiguity) {
    const ClassicalFamily& f = *spec.contiguity;
    if (f.kind != ClassicalFamily::Kind::Jacobi) throw UsageError("contiguity needs a jacobi(a, b, n) literal");
    report.add("contiguity", f.to_string());
    const Poly residual = jacobi_contiguity_residual(f.alpha, f.beta, f.degree);
    report.add("result", residual.is_zero() ? "pass" : "fail");
    if (!residual.is_zero()) report.add("residual", residual.to_string());
    return report;
  }
  if (!spec.candidate) throw UsageError("verify needs a candidate (or contiguity)");
  const OdeOperator2 op = resolve_operator(spec);
  append_inputs(report, spec);
  report.block();
  append_operator(report, "operator", op);
  const Poly residual = apply_operator(op, *spec.candidate);
  report.add("result", residual.is_zero() ? "pass" : "fail");
  if (!residual.is_zero()) report.add("residual", residual.to_string());
  return report;
}

Report cmd_classify(const EquationSpecFile& spec) {
  const OdeOperator2 op = normalize(resolve_operator(spec));
  Report report;
  report.add("command", "classify");
  append_inputs(report, spec);
  report.block();
  append_operator(report, "normalized", op);
  report.block();
  append_singularities(report, classify_singularities(op));
  return report;
}

}  // namespace hgt::cli
