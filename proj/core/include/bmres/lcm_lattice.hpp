#pragma once

#include <unordered_map>
#include <vector>

#include "bmres/monomial.hpp"

namespace bmres {

/// The lcm lattice of an ideal: all distinct lcm(σ) for σ ⊆ mingens(I),
/// with the fiber lcm^{-1}(p) attached to each point.
///
/// Fibers are sorted by (cardinality descending, bitmask ascending), the
/// order the Barile-Macchia algorithm consumes.
class LcmLattice {
public:
  using PointId = int;

  explicit LcmLattice(const MonomialIdeal& ideal);

  int num_points() const { return static_cast<int>(points_.size()); }
  const Monomial& point(PointId p) const {
    return points_[static_cast<std::size_t>(p)];
  }
  const std::vector<GenSet>& fiber(PointId p) const {
    return fibers_[static_cast<std::size_t>(p)];
  }
  /// Point id of the lcm of subset s.
  PointId point_of(GenSet s) const {
    return subset_point_[static_cast<std::size_t>(s)];
  }
  PointId find(const Monomial& m) const;  // -1 if m is not a lattice point

  /// J-part generators dividing point p (the set M_p).
  GenSet j_divisors(PointId p) const {
    return j_div_[static_cast<std::size_t>(p)];
  }
  /// Pure-power generators dividing point p (the set M).
  GenSet pure_divisors(PointId p) const {
    return pure_div_[static_cast<std::size_t>(p)];
  }

  PointId unit_point() const { return unit_; }
  PointId top_point() const { return top_; }

private:
  std::vector<Monomial> points_;  // sorted (degree, lex): order-compatible
  std::vector<std::vector<GenSet>> fibers_;
  std::vector<PointId> subset_point_;
  std::vector<GenSet> j_div_, pure_div_;
  std::unordered_map<Monomial, PointId, MonomialHash> index_;
  PointId unit_ = 0, top_ = 0;
};

}  // namespace bmres
