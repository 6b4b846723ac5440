#include "qmckay/numeric.hpp"

#include "qmckay/errors.hpp"

#include <cstdlib>
#include <iomanip>
#include <sstream>

namespace qmckay {

namespace {

unsigned initial_precision() {
  if (const char* env = std::getenv("QMCKAY_PRECISION")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v >= 20 && v <= 10000) return static_cast<unsigned>(v);
  }
  return 64;
}

struct PrecisionInit {
  PrecisionInit() { Real::default_precision(initial_precision()); }
};

void ensure_init() {
  static PrecisionInit once;
  (void)once;
}

const bool kPrecisionInitialized = (ensure_init(), true);

}  // namespace

void set_working_precision(unsigned digits) {
  ensure_init();
  if (digits < 20) throw ConfigurationError("precision must be at least 20 digits");
  Real::default_precision(digits);
}

unsigned working_precision() {
  ensure_init();
  return Real::default_precision();
}

PrecisionScope::PrecisionScope(unsigned digits) : saved_(working_precision()) {
  set_working_precision(digits);
}

PrecisionScope::~PrecisionScope() { Real::default_precision(saved_); }

Real pi() {
  ensure_init();
  Real p;
  mpfr_const_pi(p.backend().data(), MPFR_RNDN);
  return p;
}

Real to_real(const Rational& r) {
  ensure_init();
  Real num(boost::multiprecision::numerator(r));
  Real den(boost::multiprecision::denominator(r));
  return num / den;
}

Real tolerance(int exponent) {
  ensure_init();
  return boost::multiprecision::pow(Real(10), -exponent);
}

std::string to_string(const Rational& r) {
  if (boost::multiprecision::denominator(r) == 1) return boost::multiprecision::numerator(r).str();
  return boost::multiprecision::numerator(r).str() + "/" + boost::multiprecision::denominator(r).str();
}

Rational parse_rational(const std::string& text) {
  auto slash = text.find('/');
  try {
    if (slash == std::string::npos) return Rational(Integer(text));
    return Rational(Integer(text.substr(0, slash)), Integer(text.substr(slash + 1)));
  } catch (const std::exception&) {
    throw PreconditionError("not a rational: '" + text + "'");
  }
}

std::string to_decimal(const Real& x, int digits) {
  std::ostringstream os;
  os << std::scientific << std::setprecision(digits - 1) << x;
  return os.str();
}

std::optional<Rational> rational_guess(const Real& x, const Real& tol, long max_den) {
  // Convergents of the continued fraction of x.
  Integer h_prev = 1, h = 0;
  Integer k_prev = 0, k = 1;
  Real rest = x;
  std::optional<Rational> best;
  for (int iter = 0; iter < 64; ++iter) {
    Real fl = boost::multiprecision::floor(rest);
    Integer a = fl.convert_to<Integer>();
    Integer h_next = a * h_prev + h;
    Integer k_next = a * k_prev + k;
    if (k_next > max_den) break;
    h = h_prev;
    k = k_prev;
    h_prev = h_next;
    k_prev = k_next;
    Rational cand(h_prev, k_prev);
    if (boost::multiprecision::abs(to_real(cand) - x) < tol) {
      best = cand;
      break;
    }
    Real frac = rest - fl;
    if (frac == 0) break;
    rest = 1 / frac;
  }
  return best;
}

std::optional<long> round_to_integer(const Real& x, const Real& tol) {
  Real r = boost::multiprecision::round(x);
  if (boost::multiprecision::abs(x - r) >= tol) return std::nullopt;
  return r.convert_to<long>();
}

Complex Complex::polar_turn(const Rational& turn) {
  // Exact values on the quarter turns keep rational characters rational.
  Rational t = turn - Rational(boost::multiprecision::numerator(turn) / boost::multiprecision::denominator(turn));
  if (t < 0) t += 1;
  if (t == 0) return {Real(1), Real(0)};
  if (t == Rational(1, 2)) return {Real(-1), Real(0)};
  if (t == Rational(1, 4)) return {Real(0), Real(1)};
  if (t == Rational(3, 4)) return {Real(0), Real(-1)};
  if (denominator(t) == 3 || denominator(t) == 6) {
    Real half_root3 = boost::multiprecision::sqrt(Real(3)) / 2;
    Real c = denominator(t) == 6 ? Real(1) / 2 : Real(-1) / 2;
    if (t == Rational(5, 6) || t == Rational(2, 3)) half_root3 = -half_root3;
    return {c, half_root3};
  }
  Real angle = 2 * pi() * to_real(t);
  return {boost::multiprecision::cos(angle), boost::multiprecision::sin(angle)};
}

Complex& Complex::operator+=(const Complex& o) {
  re += o.re;
  im += o.im;
  return *this;
}

Complex& Complex::operator-=(const Complex& o) {
  re -= o.re;
  im -= o.im;
  return *this;
}

Complex& Complex::operator*=(const Complex& o) {
  Real r = re * o.re - im * o.im;
  Real i = re * o.im + im * o.re;
  re = std::move(r);
  im = std::move(i);
  return *this;
}

Complex& Complex::operator/=(const Complex& o) {
  Real d = o.norm();
  Real r = (re * o.re + im * o.im) / d;
  Real i = (im * o.re - re * o.im) / d;
  re = std::move(r);
  im = std::move(i);
  return *this;
}

Complex operator+(Complex a, const Complex& b) { return a += b; }
Complex operator-(Complex a, const Complex& b) { return a -= b; }
Complex operator-(const Complex& a) { return {-a.re, -a.im}; }
Complex operator*(Complex a, const Complex& b) { return a *= b; }
Complex operator/(Complex a, const Complex& b) { return a /= b; }

Complex exp(const Complex& z) {
  Real m = boost::multiprecision::exp(z.re);
  return {m * boost::multiprecision::cos(z.im), m * boost::multiprecision::sin(z.im)};
}

Complex tan(const Complex& z) {
  // tan(a+bi) = (sin 2a + i sinh 2b) / (cos 2a + cosh 2b)
  Real a2 = 2 * z.re;
  Real b2 = 2 * z.im;
  Real den = boost::multiprecision::cos(a2) + boost::multiprecision::cosh(b2);
  return {boost::multiprecision::sin(a2) / den, boost::multiprecision::sinh(b2) / den};
}

Complex pow(const Complex& z, int n) {
  if (n < 0) return Complex(Real(1)) / pow(z, -n);
  Complex result(Real(1));
  Complex base = z;
  while (n > 0) {
    if (n & 1) result *= base;
    base *= base;
    n >>= 1;
  }
  return result;
}

}  // namespace qmckay
