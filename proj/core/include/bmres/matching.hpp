#pragma once

#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "bmres/lcm_lattice.hpp"
#include "bmres/monomial.hpp"

namespace bmres {

/// A total ordering of the generators.  rank[m] < rank[m'] means m' ≻ m,
/// so the smallest generator has rank 0.
struct TotalOrdering {
  std::vector<int> rank;

  /// Ordering listing the generators from greatest to smallest.
  static TotalOrdering from_descending(const std::vector<int>& desc);
  /// The ordering m_q ≻ ... ≻ m_1 induced by generator indices.
  static TotalOrdering by_index(int q);

  int q() const { return static_cast<int>(rank.size()); }
  bool dominates(int m, int m_prime) const {  // m ≻ m'
    return rank[static_cast<std::size_t>(m)] >
           rank[static_cast<std::size_t>(m_prime)];
  }
  bool is_permutation() const;
  std::vector<int> descending() const;
};

/// One total ordering per lcm-lattice point.
struct OrderingFamily {
  std::vector<TotalOrdering> per_point;  // indexed by LcmLattice::PointId
  const TotalOrdering& at(LcmLattice::PointId p) const {
    return per_point[static_cast<std::size_t>(p)];
  }
};

struct MatchEdge {
  GenSet source;
  GenSet target;  // source minus its smallest bridge
  friend bool operator==(const MatchEdge&, const MatchEdge&) = default;
};

/// A homogeneous acyclic matching on the subset graph.
struct AcyclicMatching {
  std::vector<MatchEdge> edges;
  std::unordered_map<GenSet, GenSet> source_to_target;
  std::unordered_map<GenSet, GenSet> target_to_source;

  static AcyclicMatching from_edges(std::vector<MatchEdge> edges);
  bool is_matched(GenSet s) const {
    return source_to_target.count(s) || target_to_source.count(s);
  }
  bool is_critical(GenSet s) const { return !is_matched(s); }
};

/// Generators m ∈ sigma with lcm(sigma \ {m}) = lcm(sigma).
std::vector<int> bridges(const MonomialIdeal& ideal, GenSet sigma);
GenSet bridge_mask(const MonomialIdeal& ideal, GenSet sigma);

/// Generators outside sigma.
std::vector<int> gaps(const MonomialIdeal& ideal, GenSet sigma);

struct TrueGapResult {
  bool is_true_gap;
  std::optional<int> witness;  // a bridge of sigma ∪ {m} dominated by m
};

/// A true gap is an lcm-preserving gap m of sigma such that sigma ∪ {m}
/// has no new bridge dominated by m.  Gaps that change the lcm are never
/// true gaps (only lcm-preserving additions matter to the matching).
TrueGapResult is_true_gap(const MonomialIdeal& ideal, GenSet sigma, int m,
                          const TotalOrdering& ord);

/// The smallest bridge of sigma under ord, if any.
std::optional<int> sbridge(const MonomialIdeal& ideal, GenSet sigma,
                           const TotalOrdering& ord);

/// Algorithm of Barile-Macchia type on the set omega: repeatedly take a
/// maximal-cardinality subset (ties: lowest bitmask), match it downward
/// along its smallest bridge, then resolve target collisions keeping the
/// edge with the smaller bridge.
std::vector<MatchEdge> barile_macchia(const MonomialIdeal& ideal,
                                      std::span<const GenSet> omega,
                                      const TotalOrdering& ord);

/// Union of per-fiber Barile-Macchia runs; validates the result.
AcyclicMatching generalized_bm(const MonomialIdeal& ideal,
                               const LcmLattice& lattice,
                               const OrderingFamily& family);

struct Classification {
  bool type1 = false;
  bool potentially_type2 = false;
  bool type2 = false;
};

/// Type classification of sigma within its fiber.
Classification classify(const MonomialIdeal& ideal, GenSet sigma,
                        const TotalOrdering& ord,
                        std::span<const GenSet> fiber);

struct MatchingReport {
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
};

/// Checks vertex-disjointness, lcm homogeneity, and acyclicity of the
/// modified graph (per fiber; any cycle preserves the lcm).
MatchingReport validate_matching(const MonomialIdeal& ideal,
                                 const AcyclicMatching& matching);

}  // namespace bmres
