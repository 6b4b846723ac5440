#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/mpfr.hpp>

#include <optional>
#include <string>

namespace qmckay {

using Integer = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;
using Real = boost::multiprecision::mpfr_float;

/// Working precision (decimal digits) used for every high-precision real
/// created after the call. Defaults to 64, or $QMCKAY_PRECISION if set.
void set_working_precision(unsigned digits);
unsigned working_precision();

/// Restores the previous working precision on scope exit.
class PrecisionScope {
 public:
  explicit PrecisionScope(unsigned digits);
  ~PrecisionScope();
  PrecisionScope(const PrecisionScope&) = delete;
  PrecisionScope& operator=(const PrecisionScope&) = delete;

 private:
  unsigned saved_;
};

Real pi();
Real to_real(const Rational& r);
/// 10^-exponent at working precision.
Real tolerance(int exponent);

/// "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& r);
Rational parse_rational(const std::string& text);
/// Fixed-point decimal rendering with the given number of significant digits.
std::string to_decimal(const Real& x, int digits);

/// Nearest rational with denominator <= max_den (continued fractions), if it
/// lies within tol of x.
std::optional<Rational> rational_guess(const Real& x, const Real& tol, long max_den = 1000000);

/// Rounds x to the nearest integer; nullopt when |x - round(x)| >= tol.
std::optional<long> round_to_integer(const Real& x, const Real& tol);

struct Complex {
  Real re;
  Real im;

  Complex() : re(0), im(0) {}
  Complex(Real r) : re(std::move(r)), im(0) {}  // NOLINT(google-explicit-constructor)
  Complex(Real r, Real i) : re(std::move(r)), im(std::move(i)) {}

  static Complex polar_turn(const Rational& turn);  // exp(2*pi*i*turn)
  static Complex i_unit() { return {Real(0), Real(1)}; }

  Complex conj() const { return {re, -im}; }
  Real norm() const { return re * re + im * im; }
  Real abs() const { return boost::multiprecision::sqrt(norm()); }

  Complex& operator+=(const Complex& o);
  Complex& operator-=(const Complex& o);
  Complex& operator*=(const Complex& o);
  Complex& operator/=(const Complex& o);
};

Complex operator+(Complex a, const Complex& b);
Complex operator-(Complex a, const Complex& b);
Complex operator-(const Complex& a);
Complex operator*(Complex a, const Complex& b);
Complex operator/(Complex a, const Complex& b);
Complex exp(const Complex& z);
Complex tan(const Complex& z);
Complex pow(const Complex& z, int n);

}  // namespace qmckay
