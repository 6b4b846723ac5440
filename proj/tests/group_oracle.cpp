#include "group_oracle.hpp"

#include <cmath>
#include <stdexcept>

namespace oracle {

namespace {

constexpr double kEps = 1e-9;

bool close(const Quat& a, const Quat& b) {
  for (int i = 0; i < 4; ++i)
    if (std::abs(a[i] - b[i]) > kEps) return false;
  return true;
}

bool close(const Rot& a, const Rot& b) {
  for (int i = 0; i < 9; ++i)
    if (std::abs(a[i] - b[i]) > kEps) return false;
  return true;
}

Quat inverse_of(const Quat& a) { return inv(a); }
Rot inverse_of(const Rot& a) { return transpose(a); }

template <class T>
FiniteGroup<T> close_under(std::vector<T> gens, const T& identity) {
  FiniteGroup<T> g;
  g.elements.push_back(identity);
  for (size_t i = 0; i < g.elements.size(); ++i) {
    for (const auto& s : gens) {
      T x = mul(g.elements[i], s);
      bool seen = false;
      for (const auto& e : g.elements)
        if (close(e, x)) {
          seen = true;
          break;
        }
      if (!seen) g.elements.push_back(x);
    }
    if (g.elements.size() > 2000) throw std::runtime_error("closure did not terminate");
  }
  const int n = static_cast<int>(g.elements.size());
  g.class_of.assign(static_cast<size_t>(n), -1);
  for (int i = 0; i < n; ++i) {
    if (g.class_of[i] >= 0) continue;
    const int c = static_cast<int>(g.classes.size());
    g.classes.emplace_back();
    for (const auto& h : g.elements) {
      T y = mul(mul(h, g.elements[i]), inverse_of(h));
      int j = g.find(y);
      if (g.class_of[j] < 0) {
        g.class_of[j] = c;
        g.classes[c].push_back(j);
      }
    }
  }
  return g;
}

}  // namespace

Quat mul(const Quat& a, const Quat& b) {
  return {a[0] * b[0] - a[1] * b[1] - a[2] * b[2] - a[3] * b[3], a[0] * b[1] + a[1] * b[0] + a[2] * b[3] - a[3] * b[2],
          a[0] * b[2] - a[1] * b[3] + a[2] * b[0] + a[3] * b[1], a[0] * b[3] + a[1] * b[2] - a[2] * b[1] + a[3] * b[0]};
}

Quat inv(const Quat& a) { return {a[0], -a[1], -a[2], -a[3]}; }

Rot rotation(const Quat& q) {
  const double w = q[0], x = q[1], y = q[2], z = q[3];
  return {1 - 2 * (y * y + z * z), 2 * (x * y - w * z),     2 * (x * z + w * y),
          2 * (x * y + w * z),     1 - 2 * (x * x + z * z), 2 * (y * z - w * x),
          2 * (x * z - w * y),     2 * (y * z + w * x),     1 - 2 * (x * x + y * y)};
}

Rot mul(const Rot& a, const Rot& b) {
  Rot c{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k) c[3 * i + j] += a[3 * i + k] * b[3 * k + j];
  return c;
}

Rot transpose(const Rot& a) {
  Rot c{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) c[3 * i + j] = a[3 * j + i];
  return c;
}

template <class T>
int FiniteGroup<T>::find(const T& x) const {
  for (size_t i = 0; i < elements.size(); ++i)
    if (close(elements[i], x)) return static_cast<int>(i);
  return -1;
}

template <class T>
std::vector<std::vector<std::vector<long>>> FiniteGroup<T>::structure_constants() const {
  const size_t nc = classes.size();
  std::vector<std::vector<std::vector<long>>> a(nc, std::vector<std::vector<long>>(nc, std::vector<long>(nc, 0)));
  for (size_t i = 0; i < nc; ++i)
    for (size_t j = 0; j < nc; ++j) {
      for (int x : classes[i])
        for (int y : classes[j]) ++a[i][j][static_cast<size_t>(class_index(mul(elements[x], elements[y])))];
      for (size_t k = 0; k < nc; ++k) a[i][j][k] /= static_cast<long>(classes[k].size());
    }
  return a;
}

template struct FiniteGroup<Quat>;
template struct FiniteGroup<Rot>;

namespace {

std::vector<Quat> generators(const qmckay::GroupSpec& spec) {
  const double pi = std::acos(-1.0);
  const double r = std::sqrt(0.5);
  const double phi = (1 + std::sqrt(5.0)) / 2;
  const Quat w{-0.5, 0.5, 0.5, 0.5};
  switch (spec.kind()) {
    case qmckay::GroupKind::Cyclic: {
      double a = pi / spec.parameter();
      return {{std::cos(a), 0, 0, std::sin(a)}};
    }
    case qmckay::GroupKind::Dihedral: {
      double a = pi / spec.parameter();
      return {{std::cos(a), 0, 0, std::sin(a)}, {0, 0, 1, 0}};
    }
    case qmckay::GroupKind::Tetrahedral: return {{0, 1, 0, 0}, w};
    case qmckay::GroupKind::Octahedral: return {w, {r, 0, 0, r}};
    case qmckay::GroupKind::Icosahedral: return {{0, 1, 0, 0}, w, {phi / 2, 1 / (2 * phi), 0.5, 0}};
  }
  return {};
}

}  // namespace

FiniteGroup<Quat> binary_closure(const qmckay::GroupSpec& spec) { return close_under(generators(spec), Quat{1, 0, 0, 0}); }

FiniteGroup<Rot> rotation_closure(const qmckay::GroupSpec& spec) {
  std::vector<Rot> gens;
  for (const auto& q : generators(spec)) gens.push_back(rotation(q));
  return close_under(gens, rotation(Quat{1, 0, 0, 0}));
}

Quat to_quat(const qmckay::Quaternion& q) { return {q.w, q.x, q.y, q.z}; }

}  // namespace oracle
