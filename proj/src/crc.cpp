#include "qmckay/crc.hpp"

#include "qmckay/errors.hpp"
#include "qmckay/intersect.hpp"

#include <algorithm>
#include <numeric>

namespace qmckay {

std::vector<LinearForm> linear_forms(const McKayData& data) {
  const GroupModel& g = data.group;
  std::vector<LinearForm> forms;
  for (int irrep : data.curve_irreps) {
    LinearForm f;
    f.irrep = g.table.irreps[irrep].label;
    f.constant = 2 * pi() * g.table.irreps[irrep].dim / g.order;
    for (int c = 1; c < g.class_count(); ++c) {
      Real arg = 3 - g.defining_character[c].re;
      if (arg < -tolerance(30)) throw ConsistencyError("3 - chi_V is negative on class " + g.classes[c].label);
      if (arg < 0) arg = 0;
      Real scale = boost::multiprecision::sqrt(arg) * g.classes[c].size / g.order;
      f.coefficients.push_back(Complex(scale) * g.table(irrep, c));
    }
    forms.push_back(std::move(f));
  }
  return forms;
}

namespace {

std::vector<Rational> derivative(const std::vector<Rational>& p) {
  std::vector<Rational> d;
  for (size_t i = 1; i < p.size(); ++i) d.push_back(p[i] * static_cast<long>(i));
  return d;
}

/// (1 + T^2) p * scale
std::vector<Rational> times_sec2(const std::vector<Rational>& p, const Rational& scale) {
  std::vector<Rational> out(p.size() + 2, Rational(0));
  for (size_t i = 0; i < p.size(); ++i) {
    out[i] += p[i] * scale;
    out[i + 2] += p[i] * scale;
  }
  while (!out.empty() && out.back() == 0) out.pop_back();
  return out;
}

Real horner(const std::vector<Rational>& p, const Real& t) {
  Real acc(0);
  for (size_t i = p.size(); i-- > 0;) acc = acc * t + to_real(p[i]);
  return acc;
}

Real factorial(int n) {
  Real f(1);
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

/// All exponent vectors of length m and total degree d, graded lex.
std::vector<std::vector<int>> monomials_of_degree(int m, int d) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur(static_cast<size_t>(m), 0);
  std::function<void(int, int)> rec = [&](int pos, int left) {
    if (pos == m - 1) {
      cur[pos] = left;
      out.push_back(cur);
      return;
    }
    for (int e = 0; e <= left; ++e) {
      cur[pos] = e;
      rec(pos + 1, left - e);
    }
  };
  if (m > 0) rec(0, d);
  return out;
}

struct RootForm {
  RootVector root;
  Real base;                // pi + sum alpha^rho X_rho(0)
  std::vector<Complex> ell; // sum_rho alpha^rho L_rho^(g)
  bool constant;
};

std::vector<RootForm> root_forms(const McKayData& data) {
  auto forms = linear_forms(data);
  const int m = data.group.class_count() - 1;
  std::vector<RootForm> out;
  for (const auto& alpha : data.roots.positive_roots) {
    RootForm r{alpha, pi(), std::vector<Complex>(static_cast<size_t>(m)), true};
    for (int i = 0; i < data.curve_count(); ++i) {
      int a = alpha[data.curve_nodes[i]];
      if (a == 0) continue;
      r.constant = false;
      r.base += a * forms[i].constant;
      for (int g = 0; g < m; ++g) r.ell[g] += Complex(Real(a)) * forms[i].coefficients[g];
    }
    out.push_back(std::move(r));
  }
  return out;
}

std::string root_name(const RootVector& r) {
  std::string s = "(";
  for (size_t i = 0; i < r.size(); ++i) s += (i ? "," : "") + std::to_string(r[i]);
  return s + ")";
}

void check_pole(const RootForm& r) {
  if (boost::multiprecision::abs(boost::multiprecision::cos(r.base / 2)) < tolerance(20))
    throw PoleError("base point of root " + root_name(r.root) + " is a pole of tan");
}

Complex monomial_weight(const std::vector<Complex>& ell, const std::vector<int>& n) {
  // prod_g ell_g^{n_g} / n_g!
  Complex w(Real(1));
  for (size_t g = 0; g < n.size(); ++g)
    if (n[g] > 0) w = w * pow(ell[g], n[g]) / Complex(factorial(n[g]));
  return w;
}

std::vector<std::string> nontrivial_labels(const McKayData& data) {
  std::vector<std::string> labels;
  for (int c = 1; c < data.group.class_count(); ++c) labels.push_back(data.group.classes[c].label);
  return labels;
}

}  // namespace

std::vector<Rational> h_tan_polynomial(int k) {
  std::vector<Rational> p{Rational(0), Rational(1)};
  for (int i = 0; i < k; ++i) p = times_sec2(derivative(p), Rational(1, 2));
  return p;
}

std::vector<Rational> tan_derivative_polynomial(int j) {
  std::vector<Rational> p{Rational(0), Rational(1)};
  for (int i = 0; i < j; ++i) p = times_sec2(derivative(p), Rational(1));
  return p;
}

Real h_derivative(int n, const Real& s) {
  if (n < 3) throw PreconditionError("h is only defined up to terms of order less than three");
  if (boost::multiprecision::abs(boost::multiprecision::cos(s / 2)) < tolerance(20))
    throw PoleError("h derivative evaluated at a pole of tan(s/2)");
  return -horner(h_tan_polynomial(n - 3), boost::multiprecision::tan(s / 2)) / 2;
}

Real PotentialSeries::coefficient(const std::vector<int>& exponents) const {
  for (const auto& t : terms)
    if (t.exponents == exponents) return t.value;
  return Real(0);
}

PotentialSeries orbifold_potential(const McKayData& data, int max_degree) {
  if (max_degree < 3) throw PreconditionError("the potential starts in degree three");
  const int m = data.group.class_count() - 1;
  auto roots = root_forms(data);
  PotentialSeries out;
  out.class_labels = nontrivial_labels(data);
  out.max_degree = max_degree;
  const Real real_tol = tolerance(static_cast<int>(working_precision() / 2));
  for (int d = 3; d <= max_degree; ++d) {
    std::vector<Real> hd;
    for (const auto& r : roots) {
      if (r.constant) {
        hd.emplace_back(0);
        continue;
      }
      check_pole(r);
      hd.push_back(h_derivative(d, r.base));
    }
    for (const auto& n : monomials_of_degree(m, d)) {
      Complex acc;
      for (size_t a = 0; a < roots.size(); ++a)
        if (!roots[a].constant) acc += Complex(hd[a]) * monomial_weight(roots[a].ell, n);
      acc = acc / Complex(Real(2));
      Real resid = boost::multiprecision::abs(acc.im);
      Real scale = std::max(Real(1), acc.abs());
      if (resid > real_tol * scale) throw ConsistencyError("potential coefficient is not real");
      PotentialTerm t{n, acc.re, resid, rational_guess(acc.re, tolerance(20), 100000000)};
      out.terms.push_back(std::move(t));
    }
  }
  return out;
}

Complex third_partial(const McKayData& data, int k1, int k2, int k3, const std::vector<Complex>& x) {
  const int m = data.group.class_count() - 1;
  for (int k : {k1, k2, k3})
    if (k < 0 || k >= m) throw PreconditionError("class index out of range");
  if (static_cast<int>(x.size()) != m) throw PreconditionError("point has the wrong number of coordinates");
  Complex acc;
  const Complex half_pi(pi() / 2);
  for (const auto& r : root_forms(data)) {
    if (r.constant) continue;
    // (1/2) sum alpha^rho X_rho(x) + pi/2
    Complex theta((r.base - pi()) / 2);
    for (int g = 0; g < m; ++g) theta += r.ell[g] * x[g] / Complex(Real(2));
    theta += half_pi;
    if (theta.im == 0 && boost::multiprecision::abs(boost::multiprecision::cos(theta.re)) < tolerance(20))
      throw PoleError("tan pole at root " + root_name(r.root));
    acc += r.ell[k1] * r.ell[k2] * r.ell[k3] * tan(theta);
  }
  return acc * Complex(Real(-1) / 4);
}

std::vector<Real> b_series(const McKayData& data, int order) {
  if (!(data.spec == GroupSpec::dihedral(3))) throw PreconditionError("B(u) is defined for Dihedral(3) only");
  // F_112(0, -u) = -1/4 sum_alpha ell1^2 ell2 tan(theta_alpha - ell2 u / 2)
  std::vector<Complex> acc(static_cast<size_t>(std::max(order, 0)));
  for (const auto& r : root_forms(data)) {
    if (r.constant) continue;
    Real theta = r.base / 2;
    Real t = boost::multiprecision::tan(theta);
    Complex eps = r.ell[1] * Complex(Real(-1) / 2);
    Complex pref = r.ell[0] * r.ell[0] * r.ell[1] * Complex(Real(-1) / 4);
    Complex eps_pow(Real(1));
    for (int j = 0; j < order; ++j) {
      acc[j] += pref * eps_pow * Complex(horner(tan_derivative_polynomial(j), t) / factorial(j));
      eps_pow = eps_pow * eps;
    }
  }
  std::vector<Real> out;
  for (const auto& c : acc) {
    if (boost::multiprecision::abs(c.im) > tolerance(30)) throw ConsistencyError("B(u) coefficient is not real");
    out.push_back(c.re);
  }
  return out;
}

std::vector<Real> b_closed_form(int order) {
  const Real root3 = boost::multiprecision::sqrt(Real(3));
  const Real t0 = root3;  // tan(pi/3)
  const Real e = 1 / boost::multiprecision::sqrt(Real(12));
  std::vector<Real> out;
  Real e_pow(1);
  for (int j = 0; j < order; ++j) {
    out.push_back(horner(tan_derivative_polynomial(j), t0) * e_pow / factorial(j) / root3);
    e_pow *= e;
  }
  return out;
}

ChangeOfVariables change_of_variables(const McKayData& data) {
  ChangeOfVariables cv;
  for (size_t i = 0; i < data.curve_irreps.size(); ++i) {
    const auto& irrep = data.group.table.irreps[data.curve_irreps[i]];
    cv.irreps.push_back(irrep.label);
    cv.q_values.push_back(Complex::polar_turn(Rational(irrep.dim, data.group.order)));
  }
  for (const auto& f : linear_forms(data)) {
    std::vector<Complex> row;
    for (const auto& l : f.coefficients) row.push_back(Complex::i_unit() * l);
    cv.y_coefficients.push_back(std::move(row));
  }
  return cv;
}

Complex polylog_negative(int k, const Complex& w) {
  if (k < 0) throw PreconditionError("polylog_negative needs k >= 0");
  // Li_{-k}(w) = A_k(w) / (1 - w)^{k+1}, A_0 = w,
  // A_{k+1} = w ((1 - w) A_k' + (k + 1) A_k).
  std::vector<Integer> a{0, 1};
  for (int j = 0; j < k; ++j) {
    std::vector<Integer> next(a.size() + 1, Integer(0));
    // (1 - w) A' + (j + 1) A, then times w
    std::vector<Integer> inner(a.size() + 1, Integer(0));
    for (size_t i = 1; i < a.size(); ++i) {
      inner[i - 1] += a[i] * static_cast<long>(i);
      inner[i] -= a[i] * static_cast<long>(i);
    }
    for (size_t i = 0; i < a.size(); ++i) inner[i] += a[i] * (j + 1);
    for (size_t i = 0; i + 1 < next.size(); ++i) next[i + 1] = inner[i];
    while (next.size() > 1 && next.back() == 0) next.pop_back();
    a = std::move(next);
  }
  Complex num;
  for (size_t i = a.size(); i-- > 0;) num = num * w + Complex(Real(a[i]));
  Complex one_minus = Complex(Real(1)) - w;
  return num / pow(one_minus, k + 1);
}

ResolutionExpansion resolution_potential(const McKayData& data, int max_degree) {
  if (max_degree < 3) throw PreconditionError("the potential starts in degree three");
  const int m = data.group.class_count() - 1;
  auto cv = change_of_variables(data);
  ResolutionExpansion out;

  // Classical part: sum T_{abc} y_a y_b y_c / 6 with y_a = sum_g Y_ag x_g.
  IntersectionData y3 = threefold_integrals(data);
  const int n = data.curve_count();

  for (int d = 3; d <= max_degree; ++d) {
    for (const auto& mono : monomials_of_degree(m, d)) {
      Complex acc;
      // Quantum part: (1/2) sum_alpha sum_k q^{k c} e^{k alpha.y} / k^3
      //   = (1/2) sum_alpha Li_3(e^{z_alpha}), z_alpha = i theta + i sum_g ell_g x_g.
      for (const auto& alpha : data.roots.positive_roots) {
        Rational turn(0);
        std::vector<Complex> ell(static_cast<size_t>(m));
        bool zero = true;
        for (int r = 0; r < n; ++r) {
          int a = alpha[data.curve_nodes[r]];
          if (a == 0) continue;
          zero = false;
          turn += Rational(a * data.group.table.irreps[data.curve_irreps[r]].dim, data.group.order);
          for (int g = 0; g < m; ++g) ell[g] += Complex(Real(a)) * cv.y_coefficients[r][g];
        }
        if (zero) continue;
        Complex w = Complex::polar_turn(turn);
        // d^d/dz^d Li_3(e^z) = Li_{3-d}(e^z)
        acc += polylog_negative(d - 3, w) * monomial_weight(ell, mono) / Complex(Real(2));
      }
      if (d == 3) {
        // third derivative of the cubic form along x
        Complex cl;
        for (int a = 0; a < n; ++a)
          for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c) {
              const Rational& t = y3.three(a, b, c);
              if (t == 0) continue;
              // coefficient of x^mono in y_a y_b y_c
              Complex sum;
              const std::vector<int> idx{a, b, c};
              for (int g1 = 0; g1 < m; ++g1)
                for (int g2 = 0; g2 < m; ++g2)
                  for (int g3 = 0; g3 < m; ++g3) {
                    std::vector<int> e(static_cast<size_t>(m), 0);
                    ++e[g1];
                    ++e[g2];
                    ++e[g3];
                    if (e != mono) continue;
                    sum += cv.y_coefficients[a][g1] * cv.y_coefficients[b][g2] * cv.y_coefficients[c][g3];
                  }
              cl += Complex(to_real(t)) * sum;
            }
        acc += cl / Complex(Real(6));
      }
      out.exponents.push_back(mono);
      out.values.push_back(acc);
    }
  }
  return out;
}

}  // namespace qmckay
