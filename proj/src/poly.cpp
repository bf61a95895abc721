#include "hgt/poly.hpp"

#include <algorithm>
#include <map>
#include <ostream>
#include <set>
#include <sstream>

#include "hgt/error.hpp"

namespace hgt {

Poly::Poly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

void Poly::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Poly Poly::constant(const Rational& c) { return Poly({c}); }

Poly Poly::monomial(const Rational& c, std::size_t power) {
  std::vector<Rational> coeffs(power + 1);
  coeffs[power] = c;
  return Poly(std::move(coeffs));
}

Poly Poly::linear_factor(const Rational& root) { return Poly({-root, Rational(1)}); }

Poly Poly::parse(std::string_view literal) {
  std::vector<Rational> coeffs;
  std::size_t start = 0;
  while (true) {
    const auto comma = literal.find(',', start);
    const auto piece = literal.substr(start, comma == std::string_view::npos ? literal.size() - start
                                                                              : comma - start);
    coeffs.push_back(Rational::parse(piece));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return Poly(std::move(coeffs));
}

Rational Poly::operator()(const Rational& at) const { return eval(*this, at); }

std::string Poly::to_string() const {
  if (coeffs_.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (i) out += ", ";
    out += coeffs_[i].to_string();
  }
  return out;
}

std::string Poly::pretty(std::string_view var) const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    const Rational& c = coeffs_[i];
    if (c.is_zero()) continue;
    const Rational mag = abs(c);
    if (first) {
      if (c.sign() < 0) os << "-";
    } else {
      os << (c.sign() < 0 ? " - " : " + ");
    }
    first = false;
    const bool unit = mag == Rational(1);
    if (!unit || i == 0) os << mag;
    if (!unit && i > 0) os << "*";
    if (i >= 1) os << var;
    if (i >= 2) os << "^" << i;
  }
  return os.str();
}

Poly& Poly::operator+=(const Poly& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  trim();
  return *this;
}

Poly operator*(const Poly& lhs, const Poly& rhs) {
  if (lhs.is_zero() || rhs.is_zero()) return Poly();
  std::vector<Rational> out(lhs.coeffs_.size() + rhs.coeffs_.size() - 1);
  for (std::size_t i = 0; i < lhs.coeffs_.size(); ++i) {
    if (lhs.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) {
      if (!rhs.coeffs_[j].is_zero()) out[i + j].add_product(lhs.coeffs_[i], rhs.coeffs_[j]);
    }
  }
  return Poly(std::move(out));
}

Poly& Poly::operator*=(const Poly& rhs) { return *this = *this * rhs; }

Poly& Poly::operator*=(const Rational& rhs) {
  if (rhs.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  for (auto& c : coeffs_) c *= rhs;
  return *this;
}

Poly& Poly::operator/=(const Rational& rhs) {
  if (rhs.is_zero()) throw MathError(ErrorKind::DivisionByZero, "polynomial scaled by 1/0");
  for (auto& c : coeffs_) c /= rhs;
  return *this;
}

Poly operator-(Poly p) {
  for (auto& c : p.coeffs_) c = -c;
  return p;
}

Poly derivative(const Poly& p) {
  const auto coeffs = p.coeffs();
  if (coeffs.size() <= 1) return Poly();
  std::vector<Rational> out(coeffs.size() - 1);
  for (std::size_t i = 1; i < coeffs.size(); ++i) out[i - 1] = coeffs[i] * Rational(static_cast<std::int64_t>(i));
  return Poly(std::move(out));
}

Rational eval(const Poly& p, const Rational& at) {
  Rational acc(0);
  const auto coeffs = p.coeffs();
  for (std::size_t i = coeffs.size(); i-- > 0;) {
    acc *= at;
    acc += coeffs[i];
  }
  return acc;
}

DivRem divrem(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw MathError(ErrorKind::DivisionByZeroPoly, "division by the zero polynomial");
  const std::size_t db = *b.degree();
  if (a.is_zero() || *a.degree() < db) return {Poly(), a};

  std::vector<Rational> rem(a.coeffs().begin(), a.coeffs().end());
  std::vector<Rational> quot(rem.size() - db);
  const Rational lead = b.leading();
  const auto bc = b.coeffs();
  for (std::size_t k = quot.size(); k-- > 0;) {
    const Rational factor = rem[k + db] / lead;
    quot[k] = factor;
    if (factor.is_zero()) continue;
    for (std::size_t j = 0; j <= db; ++j) rem[k + j].sub_product(factor, bc[j]);
  }
  rem.resize(db);
  return {Poly(std::move(quot)), Poly(std::move(rem))};
}

Poly divide_exact(const Poly& a, const Poly& b) {
  auto [q, r] = divrem(a, b);
  if (!r.is_zero()) {
    throw MathError(ErrorKind::InconsistentFactorization,
                    "(" + b.pretty() + ") does not divide (" + a.pretty() + ")");
  }
  return q;
}

bool divides(const Poly& b, const Poly& a) { return divrem(a, b).remainder.is_zero(); }

Poly monic(const Poly& p) {
  if (p.is_zero()) return p;
  return p / p.leading();
}

Poly gcd(const Poly& a, const Poly& b) {
  Poly u = monic(a);
  Poly v = monic(b);
  while (!v.is_zero()) {
    Poly r = monic(divrem(u, v).remainder);
    u = std::move(v);
    v = std::move(r);
  }
  return u;
}

Poly pow(const Poly& p, unsigned exponent) {
  Poly result = Poly::constant(Rational(1));
  for (unsigned i = 0; i < exponent; ++i) result *= p;
  return result;
}

Poly compose_affine(const Poly& p, const Rational& shift, const Rational& scale) {
  const Poly inner({shift, scale});
  Poly acc;
  const auto coeffs = p.coeffs();
  for (std::size_t i = coeffs.size(); i-- > 0;) {
    acc = acc * inner;
    acc += Poly::constant(coeffs[i]);
  }
  return acc;
}

std::optional<std::size_t> vanishing_order(const Poly& p, const Rational& at) {
  if (p.is_zero()) return std::nullopt;
  const Poly factor = Poly::linear_factor(at);
  std::size_t order = 0;
  Poly q = p;
  while (true) {
    auto [quot, rem] = divrem(q, factor);
    if (!rem.is_zero()) break;
    q = std::move(quot);
    ++order;
  }
  return order;
}

namespace {

// Positive divisors of n > 0 via trial-division factorization.
std::vector<mpz_class> divisors(mpz_class n) {
  // 2^62 keeps trial division below ~2^31 steps in the worst case; desk-scale
  // coefficients are far smaller.
  static const mpz_class limit = mpz_class(1) << 62;
  if (n > limit) {
    throw MathError(ErrorKind::UnresolvedFactor, "coefficient too large for rational root search");
  }
  std::map<mpz_class, unsigned> primes;
  for (mpz_class d = 2; d * d <= n; ++d) {
    while (n % d == 0) {
      ++primes[d];
      n /= d;
    }
  }
  if (n > 1) ++primes[n];
  std::vector<mpz_class> out{1};
  for (const auto& [prime, count] : primes) {
    const std::size_t existing = out.size();
    mpz_class power = 1;
    for (unsigned e = 1; e <= count; ++e) {
      power *= prime;
      for (std::size_t i = 0; i < existing; ++i) out.push_back(out[i] * power);
    }
  }
  return out;
}

}  // namespace

RootFactorization rational_roots(const Poly& p) {
  RootFactorization result;
  if (p.is_zero() || p.is_constant()) {
    result.cofactor = p;
    return result;
  }

  mpz_class lcm_den = 1;
  for (const auto& c : p.coeffs()) mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), c.denominator().get_mpz_t());
  const Poly scaled = p * Rational(lcm_den, mpz_class(1));

  std::size_t zero_mult = 0;
  while (scaled.coeff(zero_mult).is_zero()) ++zero_mult;

  const mpz_class low = abs(scaled.coeff(zero_mult).numerator());
  const mpz_class high = abs(scaled.leading().numerator());

  std::set<Rational> candidates;
  if (zero_mult > 0) candidates.insert(Rational(0));
  if (*scaled.degree() > zero_mult) {
    const auto num_divs = divisors(low);
    const auto den_divs = divisors(high);
    for (const auto& n : num_divs) {
      for (const auto& d : den_divs) {
        candidates.insert(Rational(n, d));
        candidates.insert(Rational(mpz_class(-n), d));
      }
    }
  }

  Poly remaining = p;
  for (const auto& candidate : candidates) {
    const Poly factor = Poly::linear_factor(candidate);
    std::size_t mult = 0;
    while (!remaining.is_constant()) {
      auto [q, r] = divrem(remaining, factor);
      if (!r.is_zero()) break;
      remaining = std::move(q);
      ++mult;
    }
    if (mult > 0) result.roots.push_back({candidate, mult});
  }
  result.cofactor = std::move(remaining);
  return result;
}

std::ostream& operator<<(std::ostream& os, const Poly& p) { return os << p.pretty(); }

}  // namespace hgt
