#pragma once

#include <cstddef>
#include <vector>

#include "bmres/matching.hpp"
#include "bmres/taylor.hpp"

namespace bmres {

/// A directed path in the modified subset graph, with the product of its
/// edge weights (always ±1).
struct GradientPath {
  std::vector<GenSet> cells;
  int sign = 1;
};

/// The Morse complex on the critical cells of a matching, together with
/// the matching it came from.
struct MorseComplex {
  FreeComplex complex;
  AcyclicMatching matching;
  /// Entries whose accumulated coefficient cancelled to zero.
  std::size_t cancelled_entries = 0;
};

/// Critical cells bucketed by cardinality (degree 0 .. q).
std::vector<std::vector<GenSet>> critical_cells(const MonomialIdeal& ideal,
                                                const AcyclicMatching& a);

/// Weight of the edge sigma -> tau of the modified graph: -[tau:sigma] if
/// (tau -> sigma) is matched, [sigma:tau] otherwise.  Throws on non-edges.
int edge_weight(GenSet sigma, GenSet tau, const AcyclicMatching& a);

/// All directed paths from `from` to `to` in the modified graph, each with
/// its sign.  The length-0 path (from == to) has sign +1.
std::vector<GradientPath> gradient_paths(const MonomialIdeal& ideal,
                                         GenSet from, GenSet to,
                                         const AcyclicMatching& a,
                                         std::size_t limit = 1u << 20);

/// Assembles the Morse differential: for critical σ of degree r, sum over
/// faces σ', critical σ'' of degree r-1 and gradient paths σ' -> σ'' of
/// sign * path sign * lcm(σ)/lcm(σ'').
MorseComplex build_morse(const MonomialIdeal& ideal, const AcyclicMatching& a);

}  // namespace bmres
