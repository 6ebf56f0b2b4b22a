#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "bmres/matching.hpp"
#include "bmres/verify.hpp"

namespace bmres {

enum class Strategy { ProofGuided, Exhaustive, Hybrid };

struct SearchConfig {
  Strategy strategy = Strategy::Hybrid;
  int max_orderings_per_point = 200;
  std::uint64_t seed = 0;
  /// Allow J-parts larger than five; certification may then fail softly
  /// instead of throwing.
  bool best_effort = false;
};

struct PointLog {
  LcmLattice::PointId point;
  int orderings_tried = 0;
  std::size_t bad_paths_last = 0;
  bool certified = false;
};

struct SearchOutcome {
  OrderingFamily family;
  std::vector<PointLog> per_point_log;
  bool certified = false;
};

/// Smallest number of J-part generators needed, together with the pure
/// powers below p, to reach lcm exactly p.
int sp_statistic(const MonomialIdeal& ideal, const LcmLattice& lattice,
                 LcmLattice::PointId p);

/// Candidate orderings suggested by the case analysis on |M_p| and s_p.
/// Pure powers and generators not dividing p are appended at the bottom.
std::vector<TotalOrdering> proof_guided_orderings(const MonomialIdeal& ideal,
                                                  const LcmLattice& lattice,
                                                  LcmLattice::PointId p);

/// Per-point ordering selection: proof-guided candidates first, then an
/// exhaustive sweep over permutations of M_p, keeping the first ordering
/// whose fiber matching admits no bad gradient path of type p.  Throws
/// std::logic_error if a J-part of at most five generators cannot be
/// certified (the structure theory guarantees it can).
SearchOutcome search_family(const MonomialIdeal& ideal,
                            const LcmLattice& lattice,
                            const SearchConfig& cfg = {});

struct PipelineReport {
  MonomialIdeal ideal;           // the ideal that was resolved (I)
  SearchOutcome search;
  MorseComplex morse;
  Certificate certificate;
  ResolutionReport resolution;
  /// Restriction of the matching to subsets of mingens(J), when an
  /// Artinian reduction was applied and the J-part survived intact.
  std::optional<bool> j_restriction_minimal;
};

/// Full constructive pipeline: optional Artinian reduction, ordering
/// search, matching, Morse complex, certification.
PipelineReport main_theorem_pipeline(const MonomialIdeal& j,
                                     const std::optional<std::vector<int>>& n,
                                     const SearchConfig& cfg = {});

}  // namespace bmres
