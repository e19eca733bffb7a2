#include "graphdesign/polynomial.hpp"

#include <algorithm>
#include <limits>
#include <set>
#include <sstream>

#include "graphdesign/error.hpp"

namespace graphdesign {

namespace {

using boost::multiprecision::denominator;
using boost::multiprecision::numerator;

std::string rational_to_string(const Rational& r) {
  std::ostringstream out;
  out << numerator(r);
  if (denominator(r) != 1) out << '/' << denominator(r);
  return out.str();
}

BigInt lcm_big(const BigInt& a, const BigInt& b) { return a / boost::multiprecision::gcd(a, b) * b; }

// Integer polynomial D*p where D clears every denominator; D > 0.
std::vector<BigInt> cleared_coefficients(const RationalPoly& p) {
  BigInt d = 1;
  for (const auto& c : p.coefficients()) d = lcm_big(d, denominator(c));
  std::vector<BigInt> out;
  out.reserve(p.coefficients().size());
  for (const auto& c : p.coefficients()) out.push_back(numerator(c) * (d / denominator(c)));
  return out;
}

BigInt horner(const std::vector<BigInt>& coeffs, const BigInt& x) {
  BigInt acc = 0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * x + *it;
  return acc;
}

}  // namespace

RationalPoly::RationalPoly(Rational constant) {
  if (constant != 0) coeffs_.push_back(std::move(constant));
}

RationalPoly::RationalPoly(std::vector<Rational> coefficients) : coeffs_(std::move(coefficients)) {
  trim();
}

RationalPoly RationalPoly::variable() { return monomial(Rational(1), 1); }

RationalPoly RationalPoly::monomial(const Rational& c, int power) {
  std::vector<Rational> coeffs(static_cast<std::size_t>(power) + 1);
  coeffs.back() = c;
  return RationalPoly(std::move(coeffs));
}

Rational RationalPoly::coefficient(int power) const {
  if (power < 0 || power > degree()) return Rational(0);
  return coeffs_[static_cast<std::size_t>(power)];
}

Rational RationalPoly::leading_coefficient() const {
  return is_zero() ? Rational(0) : coeffs_.back();
}

Rational RationalPoly::operator()(const Rational& x) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

RationalPoly& RationalPoly::operator+=(const RationalPoly& q) {
  if (q.coeffs_.size() > coeffs_.size()) coeffs_.resize(q.coeffs_.size());
  for (std::size_t i = 0; i < q.coeffs_.size(); ++i) coeffs_[i] += q.coeffs_[i];
  trim();
  return *this;
}

RationalPoly& RationalPoly::operator-=(const RationalPoly& q) {
  if (q.coeffs_.size() > coeffs_.size()) coeffs_.resize(q.coeffs_.size());
  for (std::size_t i = 0; i < q.coeffs_.size(); ++i) coeffs_[i] -= q.coeffs_[i];
  trim();
  return *this;
}

RationalPoly& RationalPoly::operator*=(const RationalPoly& q) {
  if (is_zero() || q.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<Rational> out(coeffs_.size() + q.coeffs_.size() - 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < q.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * q.coeffs_[j];
  }
  coeffs_ = std::move(out);
  trim();
  return *this;
}

RationalPoly& RationalPoly::operator*=(const Rational& c) {
  for (auto& x : coeffs_) x *= c;
  trim();
  return *this;
}

void RationalPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

std::string RationalPoly::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  for (int power = degree(); power >= 0; --power) {
    const Rational& c = coeffs_[static_cast<std::size_t>(power)];
    if (c == 0) continue;
    const bool negative = c < 0;
    const Rational magnitude = negative ? Rational(-c) : c;
    if (negative) {
      out += '-';
    } else if (!out.empty()) {
      out += '+';
    }
    if (power == 0) {
      out += rational_to_string(magnitude);
      continue;
    }
    if (magnitude != 1) out += rational_to_string(magnitude) + "*";
    out += "n";
    if (power > 1) out += "^" + std::to_string(power);
  }
  return out;
}

RationalPoly falling_factorial(std::int64_t shift, int length) {
  RationalPoly result(Rational(1));
  const RationalPoly n = RationalPoly::variable();
  for (int i = 0; i < length; ++i) result *= n - RationalPoly(Rational(shift + i));
  return result;
}

RationalPoly binom_of_poly(const RationalPoly& p, int r) {
  if (r < 0) throw InvalidInputError("binom_of_poly: negative r");
  RationalPoly result(Rational(1));
  BigInt factorial = 1;
  for (int i = 0; i < r; ++i) {
    result *= p - RationalPoly(Rational(i));
    factorial *= i + 1;
  }
  return result * Rational(1, factorial);
}

std::int64_t eval_int(const RationalPoly& p, std::int64_t n) {
  const Rational value = p(Rational(n));
  if (denominator(value) != 1) {
    throw IntegralityError("polynomial " + p.to_string() + " is not integral at n=" +
                           std::to_string(n));
  }
  const BigInt& num = numerator(value);
  if (num > std::numeric_limits<std::int64_t>::max() ||
      num < std::numeric_limits<std::int64_t>::min()) {
    throw IntegralityError("polynomial value at n=" + std::to_string(n) + " overflows 64 bits");
  }
  return num.convert_to<std::int64_t>();
}

RationalPoly interpolate(std::span<const std::pair<std::int64_t, std::int64_t>> points) {
  if (points.empty()) throw InvalidInputError("interpolate: no points");
  std::set<std::int64_t> seen;
  for (const auto& [x, y] : points) {
    if (!seen.insert(x).second) {
      throw InvalidInputError("interpolate: duplicate abscissa " + std::to_string(x));
    }
  }
  const RationalPoly n = RationalPoly::variable();
  RationalPoly result;
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (points[i].second == 0) continue;
    RationalPoly basis(Rational(1));
    BigInt denom = 1;
    for (std::size_t j = 0; j < points.size(); ++j) {
      if (j == i) continue;
      basis *= n - RationalPoly(Rational(points[j].first));
      denom *= points[i].first - points[j].first;
    }
    BigInt num = points[i].second;
    if (denom < 0) {
      num = -num;
      denom = -denom;
    }
    result += basis * Rational(num, denom);
  }
  return result;
}

RationalPoly primitive_part(const RationalPoly& p) {
  if (p.is_zero()) return p;
  std::vector<BigInt> ints = cleared_coefficients(p);
  BigInt g = 0;
  for (const auto& c : ints) g = boost::multiprecision::gcd(g, c);
  if (ints.back() < 0) g = -g;
  std::vector<Rational> coeffs;
  coeffs.reserve(ints.size());
  for (const auto& c : ints) coeffs.emplace_back(c / g);
  return RationalPoly(std::move(coeffs));
}

int eventual_sign(const RationalPoly& p) {
  if (p.is_zero()) return 0;
  return p.leading_coefficient() > 0 ? 1 : -1;
}

std::int64_t positivity_threshold(const RationalPoly& p) {
  if (p.is_zero() || p.leading_coefficient() <= 0) {
    throw NoThresholdError("positivity_threshold: leading coefficient must be positive");
  }
  if (p.degree() == 0) {
    throw NoThresholdError("positivity_threshold: positive constant has no finite threshold");
  }
  // Fujiwara: every root r satisfies |r| <= 2 * max_i |a_{d-i} / a_d|^(1/i).
  const Rational lead = p.leading_coefficient();
  const int d = p.degree();
  BigInt widest = 0;
  for (int i = 1; i <= d; ++i) {
    Rational r = p.coefficient(d - i) / lead;
    if (r < 0) r = -r;
    if (r == 0) continue;
    const BigInt target = numerator(r) / denominator(r) + 1;
    BigInt lo = 0, hi = 1;
    while (boost::multiprecision::pow(hi, static_cast<unsigned>(i)) < target) hi *= 2;
    while (lo < hi) {
      const BigInt mid = (lo + hi) / 2;
      if (boost::multiprecision::pow(mid, static_cast<unsigned>(i)) >= target) hi = mid; else lo = mid + 1;
    }
    widest = std::max(widest, hi);
  }
  const BigInt bound_big = 2 * widest + 2;
  if (bound_big > BigInt(std::numeric_limits<std::int64_t>::max() / 4)) {
    throw UnsupportedError("positivity_threshold: root bound too large to scan");
  }
  const auto bound = bound_big.convert_to<std::int64_t>();

  const std::vector<BigInt> ints = cleared_coefficients(p);
  for (std::int64_t x = bound - 1; x >= -bound; --x) {
    if (horner(ints, BigInt(x)) <= 0) return x + 1;
  }
  throw NoThresholdError("positivity_threshold: polynomial is positive at every integer");
}

BigInt binomial(std::int64_t n, std::int64_t r) {
  if (r < 0 || n < 0 || r > n) return 0;
  r = std::min(r, n - r);
  BigInt result = 1;
  for (std::int64_t i = 1; i <= r; ++i) result = result * (n - r + i) / i;
  return result;
}

}  // namespace graphdesign
