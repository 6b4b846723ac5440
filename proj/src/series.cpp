#include "qmckay/series.hpp"

#include "qmckay/errors.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace qmckay {

Truncation Truncation::checked(int D, int M, int L) {
  if (D < 0 || M < 0 || L < 0) throw PreconditionError("truncation bounds must be nonnegative");
  if (L % 2 != 0) throw PreconditionError("lambda order must be even");
  return {D, M, L};
}

Truncation Truncation::meet(const Truncation& o) const {
  return {std::min(q_total_degree, o.q_total_degree), std::min(Q_degree, o.Q_degree), std::min(lambda_order, o.lambda_order)};
}

int Monomial::degree() const { return std::accumulate(exponents.begin(), exponents.end(), 0); }

bool MonomialOrder::operator()(const Monomial& a, const Monomial& b) const {
  int da = a.degree(), db = b.degree();
  if (da != db) return da < db;
  if (a.exponents != b.exponents) return a.exponents < b.exponents;
  return a.t_power < b.t_power;
}

MultiSeries::MultiSeries(std::vector<Variable> vars, Truncation tr) : vars_(std::move(vars)), tr_(tr) {}

MultiSeries MultiSeries::constant(std::vector<Variable> vars, Truncation tr, const Rational& c) {
  MultiSeries s(std::move(vars), tr);
  s.add_term(s.unit(), c);
  return s;
}

bool MultiSeries::within(const Monomial& m) const {
  if (m.exponents.size() != vars_.size()) throw PreconditionError("monomial has the wrong number of exponents");
  int q = 0, formal = 0;
  for (size_t i = 0; i < vars_.size(); ++i) {
    int e = m.exponents[i];
    switch (vars_[i].kind) {
      case VarKind::Curve:
        if (e < 0) return false;
        q += e;
        break;
      case VarKind::Formal:
        if (e < 0) return false;
        formal += e;
        break;
      case VarKind::Genus:
        if (e > tr_.lambda_order) return false;
        break;
    }
  }
  return q <= tr_.q_total_degree && formal <= tr_.Q_degree;
}

int MultiSeries::max_weight() const {
  int w = 0;
  bool formal = false;
  for (const auto& v : vars_) {
    if (v.kind == VarKind::Genus) w += tr_.lambda_order;
    if (v.kind == VarKind::Formal) formal = true;
  }
  return w + tr_.q_total_degree + (formal ? tr_.Q_degree : 0);
}

void MultiSeries::add_term(const Monomial& m, const Rational& c) {
  if (c == 0 || !within(m)) return;
  auto it = terms_.find(m);
  if (it == terms_.end()) {
    terms_.emplace(m, c);
    return;
  }
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

Rational MultiSeries::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

MultiSeries MultiSeries::homogeneous_part(int w) const {
  MultiSeries out(vars_, tr_);
  for (const auto& [m, c] : terms_)
    if (m.degree() == w) out.terms_.emplace(m, c);
  return out;
}

MultiSeries MultiSeries::truncated(const Truncation& tr) const {
  MultiSeries out(vars_, tr);
  for (const auto& [m, c] : terms_)
    if (out.within(m)) out.terms_.emplace(m, c);
  return out;
}

MultiSeries MultiSeries::scaled(const Rational& c) const {
  MultiSeries out(vars_, tr_);
  if (c == 0) return out;
  for (const auto& [m, v] : terms_) out.terms_.emplace(m, v * c);
  return out;
}

void MultiSeries::require_compatible(const MultiSeries& o) const {
  if (vars_ != o.vars_) throw PreconditionError("series over different variables");
}

MultiSeries MultiSeries::operator+(const MultiSeries& o) const {
  require_compatible(o);
  MultiSeries out = truncated(tr_.meet(o.tr_));
  for (const auto& [m, c] : o.terms_) out.add_term(m, c);
  return out;
}

MultiSeries MultiSeries::operator-() const { return scaled(Rational(-1)); }

MultiSeries MultiSeries::operator-(const MultiSeries& o) const { return *this + (-o); }

MultiSeries MultiSeries::operator*(const MultiSeries& o) const {
  require_compatible(o);
  MultiSeries out(vars_, tr_.meet(o.tr_));
  Monomial m{std::vector<int>(vars_.size(), 0), 0};
  for (const auto& [ma, ca] : terms_) {
    for (const auto& [mb, cb] : o.terms_) {
      for (size_t i = 0; i < vars_.size(); ++i) m.exponents[i] = ma.exponents[i] + mb.exponents[i];
      m.t_power = ma.t_power + mb.t_power;
      out.add_term(m, ca * cb);
    }
  }
  return out;
}

std::string MultiSeries::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    std::string coef = qmckay::to_string(c);
    bool negative = c < 0;
    if (!first) os << (negative ? " - " : " + ");
    else if (negative) os << "-";
    if (negative) coef = coef.substr(1);
    std::string mono;
    for (size_t i = 0; i < vars_.size(); ++i) {
      if (m.exponents[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += vars_[i].name;
      if (m.exponents[i] != 1) mono += "^" + std::to_string(m.exponents[i]);
    }
    if (m.t_power != 0) mono += (mono.empty() ? "" : "*") + std::string("t^") + std::to_string(m.t_power);
    if (mono.empty()) os << coef;
    else if (coef == "1") os << mono;
    else os << coef << "*" << mono;
    first = false;
  }
  return os.str();
}

namespace {

void require_plain(const MultiSeries& a, const char* what) {
  for (const auto& [m, c] : a.terms()) {
    if (m.t_power != 0) throw PreconditionError(std::string(what) + ": series carries powers of t");
    for (int e : m.exponents)
      if (e < 0) throw PreconditionError(std::string(what) + ": negative exponent");
  }
}

std::vector<MultiSeries> graded_parts(const MultiSeries& a, int n) {
  std::vector<MultiSeries> parts;
  for (int k = 0; k <= n; ++k) parts.push_back(a.homogeneous_part(k));
  return parts;
}

MultiSeries sum_parts(const MultiSeries& like, const std::vector<MultiSeries>& parts) {
  MultiSeries out(like.variables(), like.truncation());
  for (const auto& p : parts) out = out + p;
  return out;
}

}  // namespace

// The three recursions below come from applying the Euler operator (which
// multiplies a weight-n part by n) to E = exp(a), a = log(E) and P = b^r.

MultiSeries exp(const MultiSeries& a) {
  require_plain(a, "exp");
  if (a.constant_term() != 0) throw PreconditionError("exp: constant term must vanish");
  const int n_max = a.max_weight();
  auto A = graded_parts(a, n_max);
  std::vector<MultiSeries> E;
  E.push_back(MultiSeries::constant(a.variables(), a.truncation(), Rational(1)));
  for (int n = 1; n <= n_max; ++n) {
    MultiSeries acc(a.variables(), a.truncation());
    for (int k = 1; k <= n; ++k)
      if (!A[k].is_zero() && !E[n - k].is_zero()) acc = acc + (A[k] * E[n - k]).scaled(Rational(k));
    E.push_back(acc.scaled(Rational(1, n)));
  }
  return sum_parts(a, E);
}

MultiSeries log(const MultiSeries& b) {
  require_plain(b, "log");
  if (b.constant_term() != 1) throw PreconditionError("log: constant term must be 1");
  const int n_max = b.max_weight();
  auto B = graded_parts(b, n_max);
  std::vector<MultiSeries> L;
  L.emplace_back(b.variables(), b.truncation());
  for (int n = 1; n <= n_max; ++n) {
    MultiSeries acc = B[n].scaled(Rational(n));
    for (int k = 1; k < n; ++k)
      if (!L[k].is_zero() && !B[n - k].is_zero()) acc = acc - (L[k] * B[n - k]).scaled(Rational(k));
    L.push_back(acc.scaled(Rational(1, n)));
  }
  return sum_parts(b, L);
}

MultiSeries pow_rational(const MultiSeries& b, const Rational& r) {
  require_plain(b, "pow");
  if (b.constant_term() != 1) throw PreconditionError("pow: constant term must be 1");
  const int n_max = b.max_weight();
  auto B = graded_parts(b, n_max);
  std::vector<MultiSeries> P;
  P.push_back(MultiSeries::constant(b.variables(), b.truncation(), Rational(1)));
  for (int n = 1; n <= n_max; ++n) {
    MultiSeries acc(b.variables(), b.truncation());
    for (int k = 1; k <= n; ++k)
      if (!B[k].is_zero() && !P[n - k].is_zero()) acc = acc + (B[k] * P[n - k]).scaled(r * k - (n - k));
    P.push_back(acc.scaled(Rational(1, n)));
  }
  return sum_parts(b, P);
}

std::vector<Variable> curve_and_formal_variables(int curve_count) {
  std::vector<Variable> vars;
  for (int i = 1; i <= curve_count; ++i) vars.push_back({"q" + std::to_string(i), VarKind::Curve});
  vars.push_back({"Q", VarKind::Formal});
  return vars;
}

MultiSeries macmahon_factor(const std::vector<int>& beta, const Rational& w, const Truncation& tr) {
  const int n = static_cast<int>(beta.size());
  int deg = 0;
  for (int b : beta) {
    if (b < 0) throw PreconditionError("macmahon_factor: negative curve class");
    deg += b;
  }
  if (deg == 0) throw PreconditionError("macmahon_factor: beta must be nonzero");
  // w sum_m m log(1 - q^beta Q^m) = -w sum_{m,k} (m/k) q^{k beta} Q^{k m}
  MultiSeries lg(curve_and_formal_variables(n), tr);
  Monomial mono{std::vector<int>(static_cast<size_t>(n + 1), 0), 0};
  for (int k = 1; k * deg <= tr.q_total_degree; ++k) {
    for (int m = 1; k * m <= tr.Q_degree; ++m) {
      for (int i = 0; i < n; ++i) mono.exponents[i] = k * beta[i];
      mono.exponents[n] = k * m;
      lg.add_term(mono, -w * Rational(m, k));
    }
  }
  return exp(lg);
}

MultiSeries sin_power_expansion(int d, int g, int L) {
  if (d < 1 || g < 0) throw PreconditionError("sin_power_expansion: need d >= 1 and g >= 0");
  if (L < 0 || L % 2 != 0) throw PreconditionError("sin_power_expansion: lambda order must be even and nonnegative");
  // 2 sin(x/2) = x S(x), S(x) = sum_k (-1)^k x^{2k} / (4^k (2k+1)!), x = d lambda.
  const std::vector<Variable> vars{{"lambda", VarKind::Genus}};
  const int shift = 2 * g - 2;
  MultiSeries out(vars, Truncation{0, 0, L});
  const int inner = L - shift;
  if (inner < 0) return out;
  MultiSeries s(vars, Truncation{0, 0, inner});
  Rational term(1);
  Integer dd = d;
  Integer d_pow = 1;
  for (int k = 0; 2 * k <= inner; ++k) {
    s.add_term({{2 * k}, 0}, term * Rational(d_pow));
    term /= Rational(-4 * (2 * k + 2) * (2 * k + 3));
    d_pow *= dd * dd;
  }
  MultiSeries sp = pow_rational(s, Rational(shift));
  Rational prefactor = shift >= 0 ? Rational(boost::multiprecision::pow(dd, static_cast<unsigned>(shift)))
                                   : Rational(Integer(1), boost::multiprecision::pow(dd, static_cast<unsigned>(-shift)));
  prefactor /= d;
  for (const auto& [m, c] : sp.terms()) out.add_term({{m.exponents[0] + shift}, 0}, c * prefactor);
  return out;
}

}  // namespace qmckay
