#include "bmres/search.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

#include "bmres/morse.hpp"

namespace bmres {

namespace {

std::vector<int> mask_indices(GenSet mask) {
  std::vector<int> out;
  for (GenSet t = mask; t; t &= t - 1) out.push_back(__builtin_ctz(t));
  return out;
}

/// Full ordering from a descending arrangement of some generators; the
/// rest are appended at the bottom in index order (their positions do not
/// affect the fiber matching).
TotalOrdering extend_ordering(int q, const std::vector<int>& desc_head) {
  std::vector<int> desc = desc_head;
  std::vector<bool> used(static_cast<std::size_t>(q), false);
  for (int m : desc) used[static_cast<std::size_t>(m)] = true;
  for (int m = 0; m < q; ++m)
    if (!used[static_cast<std::size_t>(m)]) desc.push_back(m);
  return TotalOrdering::from_descending(desc);
}

void push_unique(std::vector<std::vector<int>>& heads,
                 std::vector<int> head) {
  if (std::find(heads.begin(), heads.end(), head) == heads.end())
    heads.push_back(std::move(head));
}

}  // namespace

int sp_statistic(const MonomialIdeal& ideal, const LcmLattice& lattice,
                 LcmLattice::PointId p) {
  if (p < 0 || p >= lattice.num_points())
    throw std::invalid_argument("sp_statistic: not a lattice point");
  const Monomial& target = lattice.point(p);
  GenSet m_mask = lattice.pure_divisors(p);
  GenSet jd = lattice.j_divisors(p);
  if (popcount(jd) > 20)
    throw std::length_error("sp_statistic: J-part too large to enumerate");
  int best = popcount(jd) + 1;
  GenSet s = jd;
  while (true) {
    if (ideal.lcm_of(m_mask | s) == target)
      best = std::min(best, popcount(s));
    if (s == 0) break;
    s = (s - 1) & jd;
  }
  if (best > popcount(jd))
    throw std::logic_error("sp_statistic: point not reachable");
  return best;
}

std::vector<TotalOrdering> proof_guided_orderings(const MonomialIdeal& ideal,
                                                  const LcmLattice& lattice,
                                                  LcmLattice::PointId p) {
  const int q = ideal.num_gens();
  GenSet jd = lattice.j_divisors(p);
  GenSet m_mask = lattice.pure_divisors(p);
  std::vector<int> jlist = mask_indices(jd);
  const int k = static_cast<int>(jlist.size());
  std::vector<std::vector<int>> heads;

  if (k <= 3) {
    // no bad path can exist, any ordering certifies
    heads.push_back(jlist);
  } else {
    int s = sp_statistic(ideal, lattice, p);
    if (s == 0) {
      heads.push_back(jlist);
    } else if (k == 4) {
      // orderings b > d > a > c with c dividing lcm(M ∪ {b,d})
      for (int b : jlist)
        for (int d : jlist) {
          if (d == b) continue;
          Monomial bd = ideal.lcm_of(m_mask | (GenSet{1} << b) |
                                     (GenSet{1} << d));
          for (int c : jlist) {
            if (c == b || c == d || !ideal.gen(c).divides(bd)) continue;
            for (int a : jlist)
              if (a != b && a != c && a != d)
                push_unique(heads, {b, d, a, c});
          }
        }
    } else {
      // k == 5: put a smallest covering set on top
      const Monomial& target = lattice.point(p);
      GenSet cov = jd;
      while (true) {
        if (popcount(cov) == s && ideal.lcm_of(m_mask | cov) == target) {
          std::vector<int> head = mask_indices(cov);
          std::vector<int> rest;
          for (int m : jlist)
            if (!(cov & (GenSet{1} << m))) rest.push_back(m);
          std::vector<int> direct = head;
          direct.insert(direct.end(), rest.begin(), rest.end());
          push_unique(heads, direct);
          // the proofs' second pattern: the complement first
          std::vector<int> flipped = rest;
          flipped.insert(flipped.end(), head.begin(), head.end());
          push_unique(heads, flipped);
        }
        if (cov == 0) break;
        cov = (cov - 1) & jd;
      }
    }
  }

  std::vector<TotalOrdering> out;
  out.reserve(heads.size());
  for (const auto& head : heads) out.push_back(extend_ordering(q, head));
  return out;
}

SearchOutcome search_family(const MonomialIdeal& ideal,
                            const LcmLattice& lattice,
                            const SearchConfig& cfg) {
  const int j_size = popcount(ideal.j_part_mask());
  if (j_size > 5 && !cfg.best_effort)
    throw std::invalid_argument(
        "J-part has more than five generators; enable best-effort mode");

  SearchOutcome outcome;
  outcome.family.per_point.resize(static_cast<std::size_t>(
      lattice.num_points()), TotalOrdering::by_index(ideal.num_gens()));
  outcome.certified = true;
  std::mt19937_64 rng(cfg.seed);

  for (int p = 0; p < lattice.num_points(); ++p) {
    PointLog log;
    log.point = p;
    const auto& fiber = lattice.fiber(p);

    std::vector<TotalOrdering> candidates;
    if (cfg.strategy != Strategy::Exhaustive)
      candidates = proof_guided_orderings(ideal, lattice, p);
    if (cfg.strategy != Strategy::ProofGuided) {
      std::vector<int> jlist = mask_indices(lattice.j_divisors(p));
      std::sort(jlist.begin(), jlist.end());
      std::vector<std::vector<int>> perms;
      do {
        perms.push_back(jlist);
      } while (std::next_permutation(jlist.begin(), jlist.end()) &&
               static_cast<int>(perms.size()) < cfg.max_orderings_per_point);
      if (static_cast<int>(perms.size()) >= cfg.max_orderings_per_point)
        std::shuffle(perms.begin(), perms.end(), rng);
      for (const auto& perm : perms)
        candidates.push_back(extend_ordering(ideal.num_gens(), perm));
    }

    bool found = false;
    for (const TotalOrdering& ord : candidates) {
      if (log.orderings_tried >= cfg.max_orderings_per_point) break;
      ++log.orderings_tried;
      auto edges = barile_macchia(ideal, fiber, ord);
      AcyclicMatching a = AcyclicMatching::from_edges(std::move(edges));
      BadPathReport bad = find_bad_paths(ideal, a, lattice.point(p));
      log.bad_paths_last = bad.paths.size();
      if (bad.empty()) {
        outcome.family.per_point[static_cast<std::size_t>(p)] = ord;
        log.certified = true;
        found = true;
        break;
      }
    }
    if (!found) {
      if (popcount(lattice.j_divisors(p)) <= 5)
        throw std::logic_error(
            "no ordering certifies point " + lattice.point(p).csv() +
            " although its J-part has at most five generators");
      outcome.certified = false;
    }
    outcome.per_point_log.push_back(log);
  }
  return outcome;
}

PipelineReport main_theorem_pipeline(const MonomialIdeal& j,
                                     const std::optional<std::vector<int>>& n,
                                     const SearchConfig& cfg) {
  MonomialIdeal ideal = n ? artinian_reduction(j, *n) : j;
  LcmLattice lattice(ideal);
  SearchOutcome outcome = search_family(ideal, lattice, cfg);
  AcyclicMatching matching = generalized_bm(ideal, lattice, outcome.family);
  MorseComplex morse = build_morse(ideal, matching);
  ResolutionReport resolution = check_resolution(ideal, lattice, morse.complex);
  Certificate cert = minimality_certificate(ideal, lattice, morse);

  std::optional<bool> restriction;
  if (n) {
    // restriction claim: the matching restricted to subsets of mingens(J)
    // is a matching for J with a minimal Morse complex (only checkable
    // when minimalization kept the J-part intact)
    GenSet jmask = ideal.j_part_mask();
    std::vector<int> jidx = mask_indices(jmask);
    bool intact = static_cast<int>(jidx.size()) == j.num_gens();
    if (intact) {
      for (std::size_t i = 0; i < jidx.size(); ++i)
        if (!(ideal.gen(jidx[i]) == j.gen(static_cast<int>(i))))
          intact = false;
    }
    if (intact && !jidx.empty()) {
      std::vector<int> to_j(static_cast<std::size_t>(ideal.num_gens()), -1);
      for (std::size_t i = 0; i < jidx.size(); ++i)
        to_j[static_cast<std::size_t>(jidx[i])] = static_cast<int>(i);
      auto remap = [&](GenSet s) {
        GenSet out = 0;
        for (GenSet t = s; t; t &= t - 1)
          out |= GenSet{1} << to_j[static_cast<std::size_t>(__builtin_ctz(t))];
        return out;
      };
      std::vector<MatchEdge> jedges;
      for (const MatchEdge& e : matching.edges)
        if ((e.source & ~jmask) == 0)
          jedges.push_back({remap(e.source), remap(e.target)});
      AcyclicMatching ja = AcyclicMatching::from_edges(std::move(jedges));
      bool ok = validate_matching(j, ja).ok();
      if (ok) {
        MorseComplex jm = build_morse(j, ja);
        LcmLattice jlat(j);
        ok = is_minimal(jm.complex) &&
             check_resolution(j, jlat, jm.complex).ok;
      }
      restriction = ok;
    }
  }

  return PipelineReport{std::move(ideal), std::move(outcome),
                        std::move(morse), std::move(cert),
                        std::move(resolution), restriction};
}

}  // namespace bmres
