#pragma once

#include "qmckay/exact_matrix.hpp"

#include <string>
#include <vector>

namespace qmckay {

enum class Family { A, D, E };

/// A simply-laced Dynkin type: A_n (n >= 1), D_n (n >= 4), E_6, E_7, E_8.
class ADEType {
 public:
  /// Throws ConfigurationError when the rank is outside the family's range.
  ADEType(Family family, int rank);

  /// Parses "A3", "D5", "E8" (case-insensitive family letter).
  static ADEType parse(const std::string& name);

  Family family() const { return family_; }
  int rank() const { return rank_; }
  std::string name() const;

  bool operator==(const ADEType&) const = default;

 private:
  Family family_;
  int rank_;
};

/// Coefficients of a root in the basis of simple roots.
using RootVector = std::vector<int>;

int height(const RootVector& root);

// Node ordering:
//   A_n: the chain 1 - 2 - ... - n.
//   D_n: the chain 1 - ... - (n-2), with the fork nodes n-1 and n both
//        attached to n-2.
//   E_n: Bourbaki; chain 1 - 3 - 4 - ... - n with node 2 attached to node 4.
// For D_5 seen as the McKay graph of the binary dihedral group of order 12
// (G = S_3), the nodes read V1, U1, V2 along the chain and U2, U3 on the
// fork; V1 and V2 are the non-binary nodes.

IntMatrix cartan_matrix(const ADEType& type);

/// All positive roots, ordered by height and then by coefficient vector in
/// decreasing lexicographic order (so the simple roots come out as e_1..e_n).
std::vector<RootVector> positive_roots(const ADEType& type);

/// h with rank * h = |R|.
int coxeter_number(const ADEType& type);

/// The unique maximal positive root.
RootVector highest_root(const ADEType& type);

/// Adjacency lists of the Dynkin diagram (nodes 0-based).
std::vector<std::vector<int>> dynkin_neighbors(const ADEType& type);

struct RootSystemData {
  ADEType ade;
  IntMatrix cartan;
  std::vector<RootVector> positive_roots;
  int coxeter_number;
  RootVector highest_root;

  static RootSystemData build(const ADEType& type);
  int rank() const { return ade.rank(); }
};

/// Sum over positive roots of alpha * alpha^T, as an exact matrix.
RationalMatrix root_outer_product_sum(const std::vector<RootVector>& roots, int rank);

}  // namespace qmckay
