#pragma once

#include <cstdint>
#include <vector>

#include "bmres/monomial.hpp"

namespace bmres {

/// One nonzero differential entry: coeff * mono on the given row.
struct Entry {
  int row;
  long long coeff;
  Monomial mono;
  friend bool operator==(const Entry&, const Entry&) = default;
};

/// A complex of free modules with multigraded basis labels.
///
/// basis[i] lists the degree-i basis labels (ascending bitmask).  diff[i]
/// for i >= 1 is stored column-sparse: diff[i][col] are the entries of the
/// column of basis[i][col], with rows indexing basis[i-1].
struct FreeComplex {
  int num_vars = 0;
  std::vector<std::vector<GenSet>> basis;
  std::vector<std::vector<std::vector<Entry>>> diff;  // diff[0] unused

  int top_degree() const { return static_cast<int>(basis.size()) - 1; }
  std::vector<int> ranks() const;
};

/// (-1)^{j+1} where the generator removed from sigma is its j-th smallest.
/// Throws std::invalid_argument unless tau ⊂ sigma with |tau| = |sigma|-1.
int face_sign(GenSet sigma, GenSet tau);

/// The Taylor resolution of S/I with the standard sign convention.
FreeComplex build_taylor(const MonomialIdeal& ideal);

/// Checks d∘d = 0 exactly, accumulating composite entries per
/// (target row, monomial product).
bool d_squared_is_zero(const FreeComplex& c);

/// The Hasse diagram of the Boolean lattice on q generators, directed
/// downward (the graph G_I before any matching is applied).
struct DirectedSubsetGraph {
  int q = 0;
  std::size_t vertex_count() const { return std::size_t{1} << q; }
  std::size_t edge_count() const {
    return q == 0 ? 0 : static_cast<std::size_t>(q) << (q - 1);
  }
};

DirectedSubsetGraph build_graph(const MonomialIdeal& ideal);

}  // namespace bmres
