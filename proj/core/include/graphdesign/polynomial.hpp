#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace graphdesign {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Exact univariate polynomial in n with rational coefficients.
// coefficients()[i] multiplies n^i; trailing zeros are never stored.
class RationalPoly {
 public:
  static constexpr int kZeroDegree = -1;

  RationalPoly() = default;
  RationalPoly(Rational constant);  // NOLINT(google-explicit-constructor)
  RationalPoly(std::int64_t constant) : RationalPoly(Rational(constant)) {}  // NOLINT
  explicit RationalPoly(std::vector<Rational> coefficients);

  static RationalPoly variable();
  static RationalPoly monomial(const Rational& c, int power);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<Rational>& coefficients() const { return coeffs_; }
  Rational coefficient(int power) const;
  Rational leading_coefficient() const;

  Rational operator()(const Rational& x) const;

  RationalPoly& operator+=(const RationalPoly& q);
  RationalPoly& operator-=(const RationalPoly& q);
  RationalPoly& operator*=(const RationalPoly& q);
  RationalPoly& operator*=(const Rational& c);

  friend RationalPoly operator+(RationalPoly p, const RationalPoly& q) { return p += q; }
  friend RationalPoly operator-(RationalPoly p, const RationalPoly& q) { return p -= q; }
  friend RationalPoly operator*(RationalPoly p, const RationalPoly& q) { return p *= q; }
  friend RationalPoly operator*(RationalPoly p, const Rational& c) { return p *= c; }
  friend RationalPoly operator*(const Rational& c, RationalPoly p) { return p *= c; }
  friend RationalPoly operator-(RationalPoly p) { return p *= Rational(-1); }
  friend bool operator==(const RationalPoly&, const RationalPoly&) = default;

  // Expanded form without spaces, highest power first: "1/48*n^6-23/16*n^5+...".
  std::string to_string() const;

 private:
  void trim();

  std::vector<Rational> coeffs_;
};

// (n - shift)(n - shift - 1)...(n - shift - length + 1); the empty product is 1.
RationalPoly falling_factorial(std::int64_t shift, int length);

// p(p-1)...(p-r+1)/r!
RationalPoly binom_of_poly(const RationalPoly& p, int r);

// Exact p(n). Throws IntegralityError when the value is not an integer or
// does not fit in 64 bits.
std::int64_t eval_int(const RationalPoly& p, std::int64_t n);

// Unique polynomial of degree < points.size() through the given points.
// Throws InvalidInputError on repeated abscissae or an empty list.
RationalPoly interpolate(std::span<const std::pair<std::int64_t, std::int64_t>> points);

// The positive rational multiple of p with coprime integer coefficients.
// The zero polynomial maps to itself.
RationalPoly primitive_part(const RationalPoly& p);

// Sign of p(n) for all sufficiently large n.
int eventual_sign(const RationalPoly& p);

// Smallest integer N with p(n) > 0 for every integer n >= N.
//
// Scans downward from the Cauchy root bound. Throws NoThresholdError when
// the leading coefficient is not positive, or when p is positive at every
// integer (no finite smallest N).
std::int64_t positivity_threshold(const RationalPoly& p);

// C(n, r) for nonnegative n.
BigInt binomial(std::int64_t n, std::int64_t r);

}  // namespace graphdesign
