#pragma once

#include "qmckay/numeric.hpp"

#include <map>
#include <string>
#include <vector>

namespace qmckay {

enum class VarKind { Curve, Formal, Genus };

struct Variable {
  std::string name;
  VarKind kind;
  bool operator==(const Variable&) const = default;
};

/// D bounds the total degree in the curve variables, M the total degree in
/// the formal variables, L the degree in each genus variable. L must be even.
struct Truncation {
  int q_total_degree = 4;
  int Q_degree = 4;
  int lambda_order = 4;

  static Truncation checked(int D, int M, int L);
  Truncation meet(const Truncation& o) const;
  bool operator==(const Truncation&) const = default;
};

struct Monomial {
  std::vector<int> exponents;  // one per variable; genus exponents may be negative
  int t_power = 0;

  int degree() const;
  bool operator==(const Monomial&) const = default;
};

/// Graded lex: total degree, then exponent vector, then t power.
struct MonomialOrder {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

class MultiSeries {
 public:
  using Terms = std::map<Monomial, Rational, MonomialOrder>;

  MultiSeries(std::vector<Variable> vars, Truncation tr);
  static MultiSeries constant(std::vector<Variable> vars, Truncation tr, const Rational& c);

  const std::vector<Variable>& variables() const { return vars_; }
  const Truncation& truncation() const { return tr_; }
  const Terms& terms() const { return terms_; }
  size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  /// False when the monomial is beyond the truncation.
  bool within(const Monomial& m) const;
  /// Sum of all variable exponents (t excluded).
  static int weight(const Monomial& m) { return m.degree(); }
  int max_weight() const;

  /// Adds c to the coefficient of m; silently ignored beyond the truncation.
  void add_term(const Monomial& m, const Rational& c);
  Rational coefficient(const Monomial& m) const;
  Rational coefficient(const std::vector<int>& exponents, int t_power = 0) const { return coefficient({exponents, t_power}); }
  Rational constant_term() const { return coefficient(Monomial{std::vector<int>(vars_.size(), 0), 0}); }
  Monomial unit() const { return {std::vector<int>(vars_.size(), 0), 0}; }

  MultiSeries homogeneous_part(int weight) const;
  MultiSeries truncated(const Truncation& tr) const;
  MultiSeries scaled(const Rational& c) const;

  MultiSeries operator+(const MultiSeries& o) const;
  MultiSeries operator-(const MultiSeries& o) const;
  MultiSeries operator-() const;
  MultiSeries operator*(const MultiSeries& o) const;
  bool operator==(const MultiSeries& o) const { return vars_ == o.vars_ && terms_ == o.terms_; }

  std::string to_string() const;

 private:
  void require_compatible(const MultiSeries& o) const;
  std::vector<Variable> vars_;
  Truncation tr_;
  Terms terms_;
};

/// a must have zero constant term.
MultiSeries exp(const MultiSeries& a);
/// a must have constant term 1.
MultiSeries log(const MultiSeries& a);
/// a^r for a with constant term 1.
MultiSeries pow_rational(const MultiSeries& a, const Rational& r);

/// q1..qn and Q.
std::vector<Variable> curve_and_formal_variables(int curve_count);

/// prod_{m=1..M} (1 - q^beta Q^m)^{m w} over curve_and_formal_variables(|beta|).
MultiSeries macmahon_factor(const std::vector<int>& beta, const Rational& w, const Truncation& tr);

/// (1/d) (2 sin(d lambda / 2))^{2g-2} as a Laurent series in lambda, up to
/// lambda^L.
MultiSeries sin_power_expansion(int d, int g, int L);

}  // namespace qmckay
