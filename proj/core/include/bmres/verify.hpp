#pragma once

#include <map>
#include <string>
#include <vector>

#include "bmres/lcm_lattice.hpp"
#include "bmres/morse.hpp"
#include "bmres/taylor.hpp"

namespace bmres {

/// Multigraded Betti numbers b_{i,p}.
struct BettiTable {
  std::map<std::pair<int, Monomial>, int> entries;

  int at(int degree, const Monomial& p) const {
    auto it = entries.find({degree, p});
    return it == entries.end() ? 0 : it->second;
  }
  std::vector<int> totals() const;
  friend bool operator==(const BettiTable&, const BettiTable&) = default;
};

/// Coefficient field for the homology ranks.
enum class Field { Rationals, F2, F3 };

/// Ground truth: Tor ranks from the lcm fibers of the Taylor complex.
/// For each lattice point p, the vector-space complex on {σ : lcm σ = p}
/// graded by |σ| with lcm-preserving face maps has homology b_{i,p}.
BettiTable betti_oracle(const MonomialIdeal& ideal, const LcmLattice& lattice,
                        Field field = Field::Rationals);

/// Same fiber computation applied to an arbitrary labeled complex: counts
/// homology of the strands spanned by entries whose monomial part is 1.
BettiTable betti_of_complex(const MonomialIdeal& ideal, const FreeComplex& c,
                            Field field = Field::Rationals);

struct ResolutionReport {
  bool ok = true;
  std::vector<std::string> failures;
};

/// Checks that the complex is a free resolution of S/I: d² = 0, every
/// multidegree strand at a lattice point is exact in positive degrees, and
/// H_0 matches S/I degreewise.
ResolutionReport check_resolution(const MonomialIdeal& ideal,
                                  const LcmLattice& lattice,
                                  const FreeComplex& c);

/// True iff no nonzero entry has unit monomial part.
bool is_minimal(const FreeComplex& c);

struct BadPathReport {
  Monomial type_p;
  std::vector<GradientPath> paths;
  bool empty() const { return paths.empty(); }
};

/// Alternating gradient paths between critical cells of adjacent
/// cardinality whose cells all have lcm exactly p.
BadPathReport find_bad_paths(const MonomialIdeal& ideal,
                             const AcyclicMatching& a, const Monomial& p,
                             std::size_t limit = 1u << 16);

struct Certificate {
  bool minimal = false;
  bool bad_paths_empty = false;
  bool unit_free = false;
  bool ranks_match_oracle = false;
  BettiTable oracle;
  std::vector<BadPathReport> bad;  // nonempty reports only
};

/// Cross-checks the three minimality signals (bad paths, unit entries,
/// Betti ranks) and certifies minimality.  Throws std::logic_error if the
/// signals contradict the structure theory (a bug trap).
Certificate minimality_certificate(const MonomialIdeal& ideal,
                                   const LcmLattice& lattice,
                                   const MorseComplex& morse);

}  // namespace bmres
