#pragma once

#include "qmckay/numeric.hpp"
#include "qmckay/rootsys.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace qmckay {

enum class GroupKind { Cyclic, Dihedral, Tetrahedral, Octahedral, Icosahedral };

/// A finite subgroup of SO(3) up to conjugacy.
class GroupSpec {
 public:
  static GroupSpec cyclic(int k);    // Z_k, k >= 2
  static GroupSpec dihedral(int m);  // dihedral of order 2m, m >= 2
  static GroupSpec tetrahedral();    // A_4
  static GroupSpec octahedral();     // S_4
  static GroupSpec icosahedral();    // A_5

  GroupKind kind() const { return kind_; }
  int parameter() const { return param_; }
  int order() const;
  std::string name() const;

  bool operator==(const GroupSpec&) const = default;

 private:
  GroupSpec(GroupKind kind, int param) : kind_(kind), param_(param) {}
  GroupKind kind_;
  int param_;
};

/// Unit quaternion w + xi + yj + zk. Used for class representatives so that
/// tables can be checked against an explicit model of the group.
struct Quaternion {
  double w = 1, x = 0, y = 0, z = 0;
};

struct ConjClassInfo {
  std::string label;
  int size = 1;
  int element_order = 1;
  /// theta / 2pi, where e^{+-i theta} are the non-trivial eigenvalues of the
  /// defining representation (the rotation angle on R^3 for G, the
  /// half-angle on C^2 for the binary group). In [0, 1).
  Rational angle;
  int inverse_class = 0;
  Quaternion representative;  // a lift to SU(2)
};

struct Irrep {
  std::string label;
  int dim = 1;
};

struct CharacterTable {
  std::vector<Irrep> irreps;
  /// values[irrep][class]
  std::vector<std::vector<Complex>> values;

  const Complex& operator()(int irrep, int cls) const { return values[irrep][cls]; }
  int irrep_count() const { return static_cast<int>(irreps.size()); }
};

/// A polyhedral group G or its binary cover, with conjugacy classes and the
/// character table. The first class is the identity and the first irrep is
/// the trivial one.
struct GroupModel {
  explicit GroupModel(const GroupSpec& s) : spec(s) {}

  GroupSpec spec;
  bool binary = false;
  int order = 1;
  std::vector<ConjClassInfo> classes;
  CharacterTable table;
  /// chi_V (the 3-dim rotation representation) for G, chi_U (the 2-dim
  /// defining representation) for the binary group.
  std::vector<Complex> defining_character;
  /// Binary group only: the central involution z = -1.
  std::optional<int> central_class;
  /// Binary group only: index of the class of -g for each class g.
  std::vector<int> negation_class;
  /// G only: the binary-group irrep that each irrep of G pulls back to.
  std::vector<int> pullback_irrep;
  /// G only: the binary-group class lifting each class of G (either lift
  /// works for pulled-back characters).
  std::vector<int> lifted_class;
  unsigned precision_digits = 0;

  int class_count() const { return static_cast<int>(classes.size()); }
  /// |C(g)| = |G| / |class|.
  int centralizer_order(int cls) const { return order / classes[cls].size; }
  /// <chi_a, chi_b> = (1/|G|) sum_c |c| chi_a(c) conj(chi_b(c)).
  Complex inner_product(const std::vector<Complex>& a, const std::vector<Complex>& b) const;
};

/// G with its classes, characters and chi_V = 1 + 2 cos(theta).
GroupModel build_group(const GroupSpec& spec);
/// The binary cover in SU(2), with chi_U and the central class.
GroupModel build_binary_group(const GroupSpec& spec);

struct McKayGraph {
  /// a[r][s] = multiplicity of irrep s in U (x) r, over all binary irreps.
  std::vector<std::vector<int>> adjacency;
};

/// Throws ConsistencyError when a multiplicity is not an integer to 1e-30.
McKayGraph mckay_graph(const GroupModel& binary);

/// Cyclic(k) -> A_{2k-1}, Dihedral(m) -> D_{m+2}, T/O/I -> E_6/E_7/E_8.
/// The type is that of the binary group (the A-label of the cyclic family
/// refers to Z_2k, not to Z_k).
ADEType root_system_of(const GroupSpec& spec);

/// True iff chi(z) = dim, i.e. the representation factors through G.
bool pulls_back(const GroupModel& binary, int irrep);

/// Indices (0-based Dynkin nodes) of the simple roots whose binary irrep does
/// not pull back to G.
std::vector<int> binary_simple_roots(const GroupSpec& spec);

/// (k1 + k2 + k3) / n for eigenvalues w^k1, w^k2, w^k3, w = e^{2 pi i / n}.
/// Requires 0 <= k_i < n and k1 + k2 + k3 = 0 mod n.
Rational age(const std::array<int, 3>& exponents, int n);

struct EigenExponents {
  std::array<int, 3> k;
  int n;
};

struct HardLefschetzReport {
  bool holds = true;
  std::vector<Rational> ages;          // per class (or per element given)
  std::vector<Rational> inverse_ages;  // age of g^{-1}
};

/// Ages of every class of G from its eigenvalues (1, e^{i theta}, e^{-i theta}).
HardLefschetzReport hard_lefschetz_check(const GroupModel& group);
/// Same check for explicitly given eigenvalue exponents (elements of some
/// subgroup of SU(3)).
HardLefschetzReport hard_lefschetz_check(const std::vector<EigenExponents>& elements);

/// Everything that ties G, its binary cover, and the root system together.
struct McKayData {
  GroupSpec spec;
  GroupModel group;
  GroupModel binary;
  RootSystemData roots;
  McKayGraph graph;
  /// Dynkin node -> binary irrep.
  std::vector<int> node_irrep;
  /// Dynkin node -> is a binary root.
  std::vector<bool> binary_node;
  /// Irr*(G) in the fixed order (by dimension, then irrep index): G irrep
  /// indices and the Dynkin node of each.
  std::vector<int> curve_irreps;
  std::vector<int> curve_nodes;

  static McKayData build(const GroupSpec& spec);
  int curve_count() const { return static_cast<int>(curve_nodes.size()); }
};

}  // namespace qmckay
