#pragma once

#include "qmckay/exact_matrix.hpp"
#include "qmckay/grouprep.hpp"

#include <string>
#include <vector>

namespace qmckay {

/// value * t^t_power.
struct EquivariantScalar {
  Rational value;
  int t_power = 0;
  bool operator==(const EquivariantScalar&) const = default;
};

/// Integrals of 0, 1, 2 and 3 basis classes. Every tensor carries a single
/// power of t.
struct IntersectionData {
  int dimension = 0;
  EquivariantScalar zero_point;
  std::vector<Rational> one_point;
  int one_point_t_power = 0;
  RationalMatrix two_point;
  int two_point_t_power = 0;
  std::vector<Rational> three_point;  // dimension^3, row-major
  int three_point_t_power = 0;

  const Rational& three(int i, int j, int k) const {
    return three_point[static_cast<size_t>((i * dimension + j) * dimension + k)];
  }
};

/// Y over Irr*(G), from positive roots restricted to non-binary nodes.
IntersectionData threefold_integrals(const McKayData& data);
/// The surface over Irr*(G-hat), using every simple-root coordinate.
IntersectionData surface_integrals(const McKayData& data);

/// t * <(V - 3) (x) rho, rho'> over Irr*(G); the matrix holds the integers.
struct PairingMatrix {
  RationalMatrix matrix;
  int t_power = 1;
};
PairingMatrix mckay_pairing(const McKayData& data);

struct CubicTerm {
  std::vector<int> indices;  // i <= j <= k
  Rational integral;         // the three-point integral
  Rational coefficient;      // of the monomial y_i y_j y_k
};

struct ClassicalPotential {
  std::vector<CubicTerm> cubic;  // t^0
  EquivariantScalar x_e_cubed;   // <delta_e^3>
  /// <delta_e delta_g delta_{g^-1}> = 1/(t |C(g)|) per nontrivial class.
  std::vector<std::string> class_labels;
  std::vector<EquivariantScalar> x_e_pairs;
};
ClassicalPotential classical_potential(const McKayData& data);

}  // namespace qmckay
