#include "qmckay/grouprep.hpp"

#include "qmckay/errors.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>

namespace qmckay {

// ---------------------------------------------------------------------------
// GroupSpec

namespace {
constexpr int kMaxParameter = 1000;
}

GroupSpec GroupSpec::cyclic(int k) {
  if (k < 2 || k > kMaxParameter) throw ConfigurationError("Cyclic(k) needs 2 <= k <= 1000, got " + std::to_string(k));
  return {GroupKind::Cyclic, k};
}

GroupSpec GroupSpec::dihedral(int m) {
  if (m < 2 || m > kMaxParameter) throw ConfigurationError("Dihedral(m) needs 2 <= m <= 1000, got " + std::to_string(m));
  return {GroupKind::Dihedral, m};
}

GroupSpec GroupSpec::tetrahedral() { return {GroupKind::Tetrahedral, 0}; }
GroupSpec GroupSpec::octahedral() { return {GroupKind::Octahedral, 0}; }
GroupSpec GroupSpec::icosahedral() { return {GroupKind::Icosahedral, 0}; }

int GroupSpec::order() const {
  switch (kind_) {
    case GroupKind::Cyclic: return param_;
    case GroupKind::Dihedral: return 2 * param_;
    case GroupKind::Tetrahedral: return 12;
    case GroupKind::Octahedral: return 24;
    case GroupKind::Icosahedral: return 60;
  }
  return 0;
}

std::string GroupSpec::name() const {
  switch (kind_) {
    case GroupKind::Cyclic: return "C:" + std::to_string(param_);
    case GroupKind::Dihedral: return "D:" + std::to_string(param_);
    case GroupKind::Tetrahedral: return "T";
    case GroupKind::Octahedral: return "O";
    case GroupKind::Icosahedral: return "I";
  }
  return "?";
}

Complex GroupModel::inner_product(const std::vector<Complex>& a, const std::vector<Complex>& b) const {
  Complex acc;
  for (int c = 0; c < class_count(); ++c) acc += Complex(Real(classes[c].size)) * a[c] * b[c].conj();
  return acc / Complex(Real(order));
}

// ---------------------------------------------------------------------------
// Closed-form tables of the binary groups.
//
// Every class is described by its half-angle phi = pi * f, f in [0, 1]: the
// SU(2) element is conjugate to diag(e^{i phi}, e^{-i phi}). Sym^n U has
// character U_n(cos phi) (Chebyshev of the second kind).

namespace {

struct ClassDef {
  std::string label;
  std::string g_label;  // label of the image class in G
  int size;
  Rational half_turn;  // f
  Quaternion rep;
  int negation;
  int inverse;
};

Rational fold_half_turn(Rational f) {
  // Reduce to [0, 2), then fold phi -> 2 pi - phi.
  Integer whole = numerator(f) / denominator(f);
  f -= Rational(whole);
  f += Rational(whole % 2);
  if (f < 0) f += 2;
  if (f >= 2) f -= 2;
  if (f > 1) f = 2 - f;
  return f;
}

Real cos_half_turn(const Rational& f) { return Complex::polar_turn(f / 2).re; }

Real chebyshev_u(int n, const Real& x) {
  Real prev(1), cur = 2 * x;
  if (n == 0) return prev;
  for (int i = 1; i < n; ++i) {
    Real next = 2 * x * cur - prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

int element_order_of_turn(const Rational& turn) { return static_cast<int>(denominator(turn).convert_to<long>()); }

Quaternion quat(double w, double x, double y, double z) { return {w, x, y, z}; }

Quaternion qmul(const Quaternion& a, const Quaternion& b) {
  return {a.w * b.w - a.x * b.x - a.y * b.y - a.z * b.z, a.w * b.x + a.x * b.w + a.y * b.z - a.z * b.y,
          a.w * b.y - a.x * b.z + a.y * b.w + a.z * b.x, a.w * b.z + a.x * b.y - a.y * b.x + a.z * b.w};
}

struct BinaryTable {
  std::vector<ClassDef> classes;
  std::vector<Irrep> irreps;
  std::vector<std::vector<Complex>> values;
};

using ClassFn = std::function<Complex(int)>;

void add_irrep(BinaryTable& t, std::string label, int dim, const ClassFn& fn) {
  std::vector<Complex> row;
  row.reserve(t.classes.size());
  for (int c = 0; c < static_cast<int>(t.classes.size()); ++c) row.push_back(fn(c));
  t.irreps.push_back({std::move(label), dim});
  t.values.push_back(std::move(row));
}

ClassFn sym_power(const BinaryTable& t, int n) {
  return [&t, n](int c) { return Complex(chebyshev_u(n, cos_half_turn(t.classes[c].half_turn))); };
}

BinaryTable binary_cyclic(int k) {
  // Z_2k generated by a = e^{i pi / k}; classes ordered a^0, a^k, a^1..a^{k-1},
  // a^{k+1}..a^{2k-1} so that G's classes come out as g^0..g^{k-1}.
  const int n = 2 * k;
  std::vector<int> order_b;
  order_b.push_back(0);
  order_b.push_back(k);
  for (int b = 1; b < k; ++b) order_b.push_back(b);
  for (int b = k + 1; b < n; ++b) order_b.push_back(b);
  std::vector<int> index_of(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) index_of[order_b[i]] = i;

  BinaryTable t;
  for (int b : order_b) {
    double ang = M_PI * b / k;
    ClassDef c;
    c.label = "a^" + std::to_string(b);
    c.g_label = b < k ? "g^" + std::to_string(b) : "";
    c.size = 1;
    c.half_turn = fold_half_turn(Rational(b, k));
    c.rep = quat(std::cos(ang), 0, 0, std::sin(ang));
    c.negation = index_of[(b + k) % n];
    c.inverse = index_of[(n - b) % n];
    t.classes.push_back(std::move(c));
  }
  for (int j = 0; j < n; ++j)
    add_irrep(t, "chi_" + std::to_string(j), 1,
              [&, j](int c) { return Complex::polar_turn(Rational(j * order_b[c], n)); });
  return t;
}

BinaryTable binary_dihedral(int m) {
  // Order 4m: a = e^{k pi / m}, b = j, b^2 = a^m = -1, b a b^-1 = a^-1.
  // Classes: 1, -1, [b], [ba], a^l (l = 1..m-1).
  BinaryTable t;
  const bool even = m % 2 == 0;
  const double s = std::sin(M_PI / m), co = std::cos(M_PI / m);
  t.classes.push_back({"1", "e", 1, Rational(0), quat(1, 0, 0, 0), 1, 0});
  t.classes.push_back({"-1", "", 1, Rational(1), quat(-1, 0, 0, 0), 0, 1});
  t.classes.push_back({"b", "s", m, Rational(1, 2), quat(0, 0, 1, 0), even ? 2 : 3, even ? 2 : 3});
  t.classes.push_back({"ba", even ? "sr" : "", m, Rational(1, 2), quat(0, s, co, 0), even ? 3 : 2, even ? 3 : 2});
  for (int l = 1; l < m; ++l) {
    double ang = M_PI * l / m;
    int idx = 4 + (l - 1);
    int neg = 4 + (m - l - 1);
    bool first_of_pair = l <= m - l;
    t.classes.push_back({"a^" + std::to_string(l), first_of_pair ? "r^" + std::to_string(l) : "", 2, Rational(l, m),
                         quat(std::cos(ang), 0, 0, std::sin(ang)), neg, idx});
  }

  // One-dimensional characters, given by their values on a and b.
  struct OneDim {
    std::string label;
    Complex on_a, on_b;
  };
  std::vector<OneDim> ones;
  const Complex one(Real(1)), minus(Real(-1)), i_unit = Complex::i_unit();
  ones.push_back({"1", one, one});
  ones.push_back({"1_b-", one, minus});
  if (even) {
    ones.push_back({"1_a-", minus, one});
    ones.push_back({"1_a-b-", minus, minus});
  } else {
    ones.push_back({"1_a-b+i", minus, i_unit});
    ones.push_back({"1_a-b-i", minus, -i_unit});
  }
  for (const auto& o : ones) {
    add_irrep(t, o.label, 1, [&, o](int c) {
      if (c == 0) return one;
      if (c == 1) return pow(o.on_a, m);
      if (c == 2) return o.on_b;
      if (c == 3) return o.on_b * o.on_a;
      return pow(o.on_a, c - 3);
    });
  }
  for (int l = 1; l < m; ++l) {
    add_irrep(t, "2_" + std::to_string(l), 2, [&, l](int c) {
      if (c == 2 || c == 3) return Complex();
      int power = c == 0 ? 0 : c == 1 ? m : c - 3;
      return Complex(2 * Complex::polar_turn(Rational(l * power, 2 * m)).re);
    });
  }
  return t;
}

BinaryTable binary_tetrahedral() {
  // w = (-1 + i + j + k) / 2 has order 3; psi is the character of
  // 2T -> 2T/Q8 = Z_3 with psi(w) = e^{2 pi i / 3}.
  BinaryTable t;
  t.classes = {
      {"1", "e", 1, Rational(0), quat(1, 0, 0, 0), 1, 0},
      {"-1", "", 1, Rational(1), quat(-1, 0, 0, 0), 0, 1},
      {"4A", "2A", 6, Rational(1, 2), quat(0, 1, 0, 0), 2, 2},
      {"3A", "3A", 4, Rational(2, 3), quat(-0.5, 0.5, 0.5, 0.5), 5, 4},
      {"3B", "3B", 4, Rational(2, 3), quat(-0.5, -0.5, -0.5, -0.5), 6, 3},
      {"6A", "", 4, Rational(1, 3), quat(0.5, -0.5, -0.5, -0.5), 3, 6},
      {"6B", "", 4, Rational(1, 3), quat(0.5, 0.5, 0.5, 0.5), 4, 5},
  };
  static const int psi_power[] = {0, 0, 0, 1, 2, 1, 2};
  ClassFn psi = [](int c) { return Complex::polar_turn(Rational(psi_power[c], 3)); };
  ClassFn psi_bar = [psi](int c) { return psi(c).conj(); };
  ClassFn s1 = sym_power(t, 1);
  add_irrep(t, "1", 1, sym_power(t, 0));
  add_irrep(t, "1'", 1, psi);
  add_irrep(t, "1''", 1, psi_bar);
  add_irrep(t, "3", 3, sym_power(t, 2));
  add_irrep(t, "2", 2, s1);
  add_irrep(t, "2'", 2, [&](int c) { return s1(c) * psi(c); });
  add_irrep(t, "2''", 2, [&](int c) { return s1(c) * psi_bar(c); });
  return t;
}

BinaryTable binary_octahedral() {
  // 2O = 2T u (1 + k)/sqrt2 * 2T. eps is the sign of 2O -> 2O/2T, nu the
  // 2-dim representation pulled back from 2O/Q8 = S_3.
  BinaryTable t;
  const double r = std::sqrt(0.5);
  t.classes = {
      {"1", "e", 1, Rational(0), quat(1, 0, 0, 0), 1, 0},
      {"-1", "", 1, Rational(1), quat(-1, 0, 0, 0), 0, 1},
      {"4A", "2A", 6, Rational(1, 2), quat(0, 1, 0, 0), 2, 2},
      {"3A", "3A", 8, Rational(2, 3), quat(-0.5, 0.5, 0.5, 0.5), 4, 3},
      {"6A", "", 8, Rational(1, 3), quat(0.5, -0.5, -0.5, -0.5), 3, 4},
      {"8A", "4A", 6, Rational(1, 4), quat(r, 0, 0, r), 6, 5},
      {"8B", "", 6, Rational(3, 4), quat(-r, 0, 0, r), 5, 6},
      {"4B", "2B", 12, Rational(1, 2), quat(0, r, r, 0), 7, 7},
  };
  static const int eps[] = {1, 1, 1, 1, 1, -1, -1, -1};
  static const int nu[] = {2, 2, 2, -1, -1, 0, 0, 0};
  ClassFn sign = [](int c) { return Complex(Real(eps[c])); };
  ClassFn s1 = sym_power(t, 1), s2 = sym_power(t, 2);
  add_irrep(t, "1", 1, sym_power(t, 0));
  add_irrep(t, "1'", 1, sign);
  add_irrep(t, "2'", 2, [](int c) { return Complex(Real(nu[c])); });
  add_irrep(t, "3", 3, s2);
  add_irrep(t, "3'", 3, [&](int c) { return s2(c) * sign(c); });
  add_irrep(t, "2", 2, s1);
  add_irrep(t, "2''", 2, [&](int c) { return s1(c) * sign(c); });
  add_irrep(t, "4", 4, sym_power(t, 3));
  return t;
}

BinaryTable binary_icosahedral() {
  // Classes of 2I are determined by the half-angle. The primed irreps are
  // Galois conjugates (sqrt5 -> -sqrt5), realised as chi(g^37).
  BinaryTable t;
  const double phi = (1 + std::sqrt(5.0)) / 2;
  const Quaternion q10 = quat(phi / 2, 1 / (2 * phi), 0.5, 0);
  const Quaternion q5 = qmul(q10, q10), q10b = qmul(q5, q10), q5b = qmul(q10b, q10);
  t.classes = {
      {"1", "e", 1, Rational(0), quat(1, 0, 0, 0), 1, 0},
      {"-1", "", 1, Rational(1), quat(-1, 0, 0, 0), 0, 1},
      {"4A", "2A", 30, Rational(1, 2), quat(0, 1, 0, 0), 2, 2},
      {"3A", "3A", 20, Rational(2, 3), quat(-0.5, 0.5, 0.5, 0.5), 4, 3},
      {"6A", "", 20, Rational(1, 3), quat(0.5, -0.5, -0.5, -0.5), 3, 4},
      {"10A", "5A", 12, Rational(1, 5), q10, 8, 5},
      {"5A", "5B", 12, Rational(2, 5), q5, 7, 6},
      {"10B", "", 12, Rational(3, 5), q10b, 6, 7},
      {"5B", "", 12, Rational(4, 5), q5b, 5, 8},
  };
  auto galois = [&t](int n) {
    return ClassFn([&t, n](int c) {
      Rational f = fold_half_turn(t.classes[c].half_turn * 37);
      return Complex(chebyshev_u(n, cos_half_turn(f)));
    });
  };
  ClassFn s1 = sym_power(t, 1), s1g = galois(1);
  add_irrep(t, "1", 1, sym_power(t, 0));
  add_irrep(t, "3", 3, sym_power(t, 2));
  add_irrep(t, "3'", 3, galois(2));
  add_irrep(t, "4'", 4, [&](int c) { return s1(c) * s1g(c); });
  add_irrep(t, "5", 5, sym_power(t, 4));
  add_irrep(t, "2", 2, s1);
  add_irrep(t, "2'", 2, s1g);
  add_irrep(t, "4", 4, sym_power(t, 3));
  add_irrep(t, "6", 6, sym_power(t, 5));
  return t;
}

BinaryTable binary_table(const GroupSpec& spec) {
  switch (spec.kind()) {
    case GroupKind::Cyclic: return binary_cyclic(spec.parameter());
    case GroupKind::Dihedral: return binary_dihedral(spec.parameter());
    case GroupKind::Tetrahedral: return binary_tetrahedral();
    case GroupKind::Octahedral: return binary_octahedral();
    case GroupKind::Icosahedral: return binary_icosahedral();
  }
  throw ConfigurationError("unknown group kind");
}

int locate_central_involution(const GroupModel& g) {
  std::optional<int> found;
  for (int c = 0; c < g.class_count(); ++c) {
    if (g.classes[c].size == 1 && g.classes[c].element_order == 2) {
      if (found) throw ConsistencyError("central involution is not unique in " + g.spec.name());
      found = c;
    }
  }
  if (!found) throw ConsistencyError("no central involution in binary " + g.spec.name());
  return *found;
}

}  // namespace

GroupModel build_binary_group(const GroupSpec& spec) {
  BinaryTable t = binary_table(spec);
  GroupModel g{spec};
  g.binary = true;
  g.order = 2 * spec.order();
  g.precision_digits = working_precision();
  for (const auto& c : t.classes) {
    ConjClassInfo info;
    info.label = c.label;
    info.size = c.size;
    info.angle = c.half_turn / 2;
    info.element_order = element_order_of_turn(info.angle);
    info.inverse_class = c.inverse;
    info.representative = c.rep;
    g.classes.push_back(std::move(info));
    g.negation_class.push_back(c.negation);
  }
  g.table.irreps = std::move(t.irreps);
  g.table.values = std::move(t.values);
  for (const auto& c : g.classes) g.defining_character.push_back(Complex(2 * Complex::polar_turn(c.angle).re));
  g.central_class = locate_central_involution(g);
  int total = std::accumulate(g.classes.begin(), g.classes.end(), 0, [](int s, const ConjClassInfo& c) { return s + c.size; });
  if (total != g.order) throw ConsistencyError("class sizes of binary " + spec.name() + " do not sum to the order");
  return g;
}

namespace {

GroupModel quotient_by_center(const GroupModel& binary, const std::vector<std::string>& g_labels) {
  GroupModel g{binary.spec};
  g.binary = false;
  g.order = binary.order / 2;
  g.precision_digits = binary.precision_digits;
  std::vector<int> image(static_cast<size_t>(binary.class_count()), -1);
  for (int c = 0; c < binary.class_count(); ++c) {
    if (image[c] >= 0) continue;
    const int partner = binary.negation_class[c];
    const int idx = g.class_count();
    image[c] = idx;
    image[partner] = idx;
    ConjClassInfo info;
    info.label = g_labels[c].empty() ? binary.classes[c].label : g_labels[c];
    info.size = partner == c ? binary.classes[c].size / 2 : binary.classes[c].size;
    Rational turn = binary.classes[c].angle * 2;
    if (turn >= 1) turn -= 1;
    info.angle = turn;
    info.element_order = element_order_of_turn(turn);
    info.representative = binary.classes[c].representative;
    g.classes.push_back(std::move(info));
    g.lifted_class.push_back(c);
  }
  for (int c = 0; c < g.class_count(); ++c) g.classes[c].inverse_class = image[binary.classes[g.lifted_class[c]].inverse_class];

  for (int r = 0; r < binary.table.irrep_count(); ++r) {
    if (!pulls_back(binary, r)) continue;
    g.pullback_irrep.push_back(r);
    g.table.irreps.push_back(binary.table.irreps[r]);
    std::vector<Complex> row;
    for (int c = 0; c < g.class_count(); ++c) row.push_back(binary.table(r, g.lifted_class[c]));
    g.table.values.push_back(std::move(row));
  }
  for (const auto& c : g.classes) g.defining_character.push_back(Complex(1 + 2 * Complex::polar_turn(c.angle).re));
  int total = std::accumulate(g.classes.begin(), g.classes.end(), 0, [](int s, const ConjClassInfo& c) { return s + c.size; });
  if (total != g.order) throw ConsistencyError("class sizes of " + g.spec.name() + " do not sum to the order");
  return g;
}

}  // namespace

GroupModel build_group(const GroupSpec& spec) {
  BinaryTable t = binary_table(spec);
  std::vector<std::string> g_labels;
  for (const auto& c : t.classes) g_labels.push_back(c.g_label);
  return quotient_by_center(build_binary_group(spec), g_labels);
}

bool pulls_back(const GroupModel& binary, int irrep) {
  if (!binary.central_class) throw PreconditionError("pulls_back needs the binary group");
  const Complex& v = binary.table(irrep, *binary.central_class);
  return boost::multiprecision::abs(v.re - binary.table.irreps[irrep].dim) < tolerance(10);
}

// ---------------------------------------------------------------------------

McKayGraph mckay_graph(const GroupModel& binary) {
  const int n = binary.table.irrep_count();
  const Real tol = tolerance(30);
  McKayGraph graph;
  graph.adjacency.assign(static_cast<size_t>(n), std::vector<int>(static_cast<size_t>(n), 0));
  for (int r = 0; r < n; ++r) {
    std::vector<Complex> product;
    for (int c = 0; c < binary.class_count(); ++c) product.push_back(binary.defining_character[c] * binary.table(r, c));
    for (int s = 0; s < n; ++s) {
      Complex m = binary.inner_product(product, binary.table.values[s]);
      auto rounded = round_to_integer(m.re, tol);
      if (!rounded || boost::multiprecision::abs(m.im) >= tol || *rounded < 0)
        throw ConsistencyError("McKay multiplicity is not a non-negative integer for " + binary.spec.name());
      graph.adjacency[r][s] = static_cast<int>(*rounded);
    }
  }
  for (int r = 0; r < n; ++r)
    for (int s = 0; s < n; ++s)
      if (graph.adjacency[r][s] != graph.adjacency[s][r]) throw ConsistencyError("McKay graph is not symmetric");
  return graph;
}

ADEType root_system_of(const GroupSpec& spec) {
  switch (spec.kind()) {
    case GroupKind::Cyclic: return {Family::A, 2 * spec.parameter() - 1};
    case GroupKind::Dihedral: return {Family::D, spec.parameter() + 2};
    case GroupKind::Tetrahedral: return {Family::E, 6};
    case GroupKind::Octahedral: return {Family::E, 7};
    case GroupKind::Icosahedral: return {Family::E, 8};
  }
  throw ConfigurationError("unknown group kind");
}

std::vector<int> binary_simple_roots(const GroupSpec& spec) {
  McKayData data = McKayData::build(spec);
  std::vector<int> nodes;
  for (int i = 0; i < static_cast<int>(data.binary_node.size()); ++i)
    if (data.binary_node[i]) nodes.push_back(i);
  return nodes;
}

// ---------------------------------------------------------------------------

Rational age(const std::array<int, 3>& k, int n) {
  if (n < 1) throw PreconditionError("age: modulus must be positive");
  for (int ki : k)
    if (ki < 0 || ki >= n) throw PreconditionError("age: exponent out of range [0, n)");
  if ((k[0] + k[1] + k[2]) % n != 0) throw PreconditionError("age: exponents must sum to 0 mod n");
  return Rational(k[0] + k[1] + k[2], n);
}

HardLefschetzReport hard_lefschetz_check(const std::vector<EigenExponents>& elements) {
  HardLefschetzReport report;
  for (const auto& e : elements) {
    std::array<int, 3> inv{};
    for (int i = 0; i < 3; ++i) inv[i] = (e.n - e.k[i]) % e.n;
    Rational a = age(e.k, e.n), b = age(inv, e.n);
    if (a != b) report.holds = false;
    report.ages.push_back(a);
    report.inverse_ages.push_back(b);
  }
  return report;
}

HardLefschetzReport hard_lefschetz_check(const GroupModel& group) {
  // theta = 2 pi p / n gives eigenvalues 1, w^p, w^{n-p} on C^3, for the
  // rotation (G) and for SU(2) embedded in SU(3) (binary) alike.
  std::vector<EigenExponents> elements;
  for (const auto& c : group.classes) {
    const Rational& turn = c.angle;
    int n = static_cast<int>(denominator(turn).convert_to<long>());
    int p = static_cast<int>(numerator(turn).convert_to<long>());
    elements.push_back({{0, p % n, (n - p) % n}, n});
  }
  return hard_lefschetz_check(elements);
}

// ---------------------------------------------------------------------------

namespace {

/// Backtracking search for a Dynkin-node -> irrep bijection that carries the
/// Dynkin diagram onto the McKay graph with the trivial irrep removed.
std::vector<int> match_dynkin(const ADEType& type, const McKayGraph& graph) {
  const int n = type.rank();
  const int irreps = static_cast<int>(graph.adjacency.size());
  if (irreps != n + 1) throw ConsistencyError("McKay graph has " + std::to_string(irreps) + " nodes, expected " + std::to_string(n + 1));
  auto dyn = dynkin_neighbors(type);
  std::vector<int> mckay_degree(static_cast<size_t>(irreps), 0);
  for (int r = 1; r < irreps; ++r)
    for (int s = 1; s < irreps; ++s) mckay_degree[r] += graph.adjacency[r][s];

  // Visit Dynkin nodes in BFS order so every node after the first has an
  // already-placed neighbour.
  std::vector<int> visit{0};
  std::vector<bool> seen(static_cast<size_t>(n), false);
  seen[0] = true;
  for (size_t i = 0; i < visit.size(); ++i)
    for (int nb : dyn[visit[i]])
      if (!seen[nb]) {
        seen[nb] = true;
        visit.push_back(nb);
      }

  std::vector<int> assign(static_cast<size_t>(n), -1);
  std::vector<bool> used(static_cast<size_t>(irreps), false);
  std::function<bool(size_t)> place = [&](size_t depth) -> bool {
    if (depth == visit.size()) return true;
    const int node = visit[depth];
    for (int r = 1; r < irreps; ++r) {
      if (used[r] || mckay_degree[r] != static_cast<int>(dyn[node].size())) continue;
      bool ok = true;
      for (int other = 0; other < n && ok; ++other) {
        if (assign[other] < 0) continue;
        bool dyn_edge = std::binary_search(dyn[node].begin(), dyn[node].end(), other);
        ok = graph.adjacency[r][assign[other]] == (dyn_edge ? 1 : 0);
      }
      if (!ok) continue;
      assign[node] = r;
      used[r] = true;
      if (place(depth + 1)) return true;
      assign[node] = -1;
      used[r] = false;
    }
    return false;
  };
  if (!place(0)) throw ConsistencyError("McKay graph is not the affine diagram of " + type.name());
  return assign;
}

}  // namespace

McKayData McKayData::build(const GroupSpec& spec) {
  GroupModel binary = build_binary_group(spec);
  std::vector<std::string> g_labels;
  for (const auto& c : binary_table(spec).classes) g_labels.push_back(c.g_label);
  GroupModel group = quotient_by_center(binary, g_labels);
  McKayGraph graph = mckay_graph(binary);
  ADEType type = root_system_of(spec);
  RootSystemData roots = RootSystemData::build(type);
  std::vector<int> node_irrep = match_dynkin(type, graph);

  std::vector<bool> binary_node;
  for (int r : node_irrep) binary_node.push_back(!pulls_back(binary, r));

  std::vector<int> order;
  for (int r = 1; r < group.table.irrep_count(); ++r) order.push_back(r);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return group.table.irreps[a].dim < group.table.irreps[b].dim; });
  std::vector<int> curve_nodes;
  for (int r : order) {
    auto it = std::find(node_irrep.begin(), node_irrep.end(), group.pullback_irrep[r]);
    if (it == node_irrep.end()) throw ConsistencyError("irrep of G missing from the Dynkin dictionary");
    curve_nodes.push_back(static_cast<int>(it - node_irrep.begin()));
  }
  return McKayData{spec,
                   std::move(group),
                   std::move(binary),
                   std::move(roots),
                   std::move(graph),
                   std::move(node_irrep),
                   std::move(binary_node),
                   std::move(order),
                   std::move(curve_nodes)};
}

}  // namespace qmckay
