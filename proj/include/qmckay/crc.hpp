#pragma once

#include "qmckay/grouprep.hpp"

#include <optional>
#include <string>
#include <vector>

namespace qmckay {

/// X_rho = constant + sum_g coefficients[g] x_(g), over the nontrivial
/// classes of G in class order.
struct LinearForm {
  std::string irrep;
  Real constant;                      // 2 pi dim(rho) / |G|
  std::vector<Complex> coefficients;  // L_rho^(g)
};

/// One form per element of Irr*(G), in McKayData::curve_irreps order.
/// L_rho^(g) = (|class|/|G|) sqrt(3 - chi_V(g)) chi_rho(g).
std::vector<LinearForm> linear_forms(const McKayData& data);

/// Coefficients of P_k in T, with P_0 = T and P_{k+1} = (1/2)(1 + T^2) P_k'.
/// h^{(3+k)}(s) = -(1/2) P_k(tan(s/2)).
std::vector<Rational> h_tan_polynomial(int k);
/// Q_0 = T, Q_{j+1} = (1 + T^2) Q_j': d^j/du^j tan(u) = Q_j(tan u).
std::vector<Rational> tan_derivative_polynomial(int j);

/// n-th derivative of h, n >= 3. Throws PoleError near s = pi mod 2 pi.
Real h_derivative(int n, const Real& s);

struct PotentialTerm {
  std::vector<int> exponents;  // one per nontrivial class
  Real value;
  Real imaginary_residual;
  std::optional<Rational> rational;  // within 1e-20 of a small rational
};

struct PotentialSeries {
  std::vector<std::string> class_labels;
  int max_degree = 3;
  std::vector<PotentialTerm> terms;  // graded lex, every monomial of degree 3..N

  /// Zero for monomials outside the listed degrees.
  Real coefficient(const std::vector<int>& exponents) const;
};

/// Taylor coefficients of F^X = (1/2) sum_alpha h(pi + sum_rho alpha^rho X_rho)
/// in degrees 3..N. Roots whose restriction to Irr*(G) vanishes contribute a
/// constant and so nothing in these degrees.
PotentialSeries orbifold_potential(const McKayData& data, int max_degree);

/// F_{x(k1) x(k2) x(k3)} at x from the closed tan formula. Indices are
/// positions among the nontrivial classes.
Complex third_partial(const McKayData& data, int k1, int k2, int k3, const std::vector<Complex>& x);

/// Taylor coefficients b_0..b_{order-1} of F_112(0, -u); Dihedral(3) only.
std::vector<Real> b_series(const McKayData& data, int order);
/// Taylor coefficients of (1/sqrt3) tan(u/sqrt12 + pi/3).
std::vector<Real> b_closed_form(int order);

struct ChangeOfVariables {
  std::vector<std::string> irreps;
  /// y_rho = sum_g y_coefficients[rho][g] x_(g), equal to i L_rho^(g).
  std::vector<std::vector<Complex>> y_coefficients;
  /// q_rho = exp(2 pi i dim(rho) / |G|).
  std::vector<Complex> q_values;
};
ChangeOfVariables change_of_variables(const McKayData& data);

/// The resolution-side potential F^Y_cl + F^Y_qu, genus zero, expanded in x
/// after the change of variables. The quantum part is summed in closed form
/// through polylogarithms of negative order.
struct ResolutionExpansion {
  std::vector<std::vector<int>> exponents;
  std::vector<Complex> values;
};
ResolutionExpansion resolution_potential(const McKayData& data, int max_degree);

/// Li_{-k}(w) for k >= 0.
Complex polylog_negative(int k, const Complex& w);

}  // namespace qmckay
