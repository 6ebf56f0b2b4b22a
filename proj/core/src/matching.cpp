#include "bmres/matching.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace bmres {

TotalOrdering TotalOrdering::from_descending(const std::vector<int>& desc) {
  TotalOrdering ord;
  ord.rank.assign(desc.size(), -1);
  int r = static_cast<int>(desc.size());
  for (int m : desc) ord.rank[static_cast<std::size_t>(m)] = --r;
  if (!ord.is_permutation())
    throw std::invalid_argument("ordering is not a permutation");
  return ord;
}

TotalOrdering TotalOrdering::by_index(int q) {
  TotalOrdering ord;
  ord.rank.resize(static_cast<std::size_t>(q));
  std::iota(ord.rank.begin(), ord.rank.end(), 0);
  return ord;
}

bool TotalOrdering::is_permutation() const {
  std::vector<bool> seen(rank.size(), false);
  for (int r : rank) {
    if (r < 0 || r >= static_cast<int>(rank.size()) ||
        seen[static_cast<std::size_t>(r)])
      return false;
    seen[static_cast<std::size_t>(r)] = true;
  }
  return true;
}

std::vector<int> TotalOrdering::descending() const {
  std::vector<int> desc(rank.size());
  for (std::size_t m = 0; m < rank.size(); ++m)
    desc[rank.size() - 1 - static_cast<std::size_t>(rank[m])] =
        static_cast<int>(m);
  return desc;
}

AcyclicMatching AcyclicMatching::from_edges(std::vector<MatchEdge> edges) {
  AcyclicMatching a;
  a.edges = std::move(edges);
  for (const MatchEdge& e : a.edges) {
    a.source_to_target.emplace(e.source, e.target);
    a.target_to_source.emplace(e.target, e.source);
  }
  return a;
}

GenSet bridge_mask(const MonomialIdeal& ideal, GenSet sigma) {
  GenSet out = 0;
  Monomial full = ideal.lcm_of(sigma);
  for (GenSet t = sigma; t; t &= t - 1) {
    GenSet bit = t & (~t + 1);
    if (ideal.lcm_of(sigma ^ bit) == full) out |= bit;
  }
  return out;
}

std::vector<int> bridges(const MonomialIdeal& ideal, GenSet sigma) {
  std::vector<int> out;
  for (GenSet t = bridge_mask(ideal, sigma); t; t &= t - 1)
    out.push_back(__builtin_ctz(t));
  return out;
}

std::vector<int> gaps(const MonomialIdeal& ideal, GenSet sigma) {
  std::vector<int> out;
  for (int m = 0; m < ideal.num_gens(); ++m)
    if (!(sigma & (GenSet{1} << m))) out.push_back(m);
  return out;
}

TrueGapResult is_true_gap(const MonomialIdeal& ideal, GenSet sigma, int m,
                          const TotalOrdering& ord) {
  GenSet bit = GenSet{1} << m;
  if (sigma & bit) return {false, std::nullopt};
  // adding m must stay in the fiber, otherwise m is irrelevant to the
  // matching and not a true gap
  if (!ideal.gen(m).divides(ideal.lcm_of(sigma))) return {false, std::nullopt};
  GenSet before = bridge_mask(ideal, sigma);
  GenSet after = bridge_mask(ideal, sigma | bit);
  for (GenSet t = after & ~before; t; t &= t - 1) {
    int mp = __builtin_ctz(t);
    if (ord.dominates(m, mp)) return {false, mp};
  }
  return {true, std::nullopt};
}

std::optional<int> sbridge(const MonomialIdeal& ideal, GenSet sigma,
                           const TotalOrdering& ord) {
  std::optional<int> best;
  for (GenSet t = bridge_mask(ideal, sigma); t; t &= t - 1) {
    int m = __builtin_ctz(t);
    if (!best || ord.dominates(*best, m)) best = m;
  }
  return best;
}

std::vector<MatchEdge> barile_macchia(const MonomialIdeal& ideal,
                                      std::span<const GenSet> omega,
                                      const TotalOrdering& ord) {
  std::vector<GenSet> work(omega.begin(), omega.end());
  std::sort(work.begin(), work.end(), [](GenSet a, GenSet b) {
    int ca = popcount(a), cb = popcount(b);
    return ca != cb ? ca > cb : a < b;
  });
  std::unordered_map<GenSet, bool> removed;
  for (GenSet s : work) removed.emplace(s, false);

  std::vector<MatchEdge> edges;
  for (GenSet sigma : work) {
    if (removed.at(sigma)) continue;
    removed.at(sigma) = true;
    auto sb = sbridge(ideal, sigma, ord);
    if (!sb) continue;
    GenSet target = sigma ^ (GenSet{1} << *sb);
    auto it = removed.find(target);
    if (it != removed.end()) it->second = true;
    edges.push_back({sigma, target});
  }

  // collision resolution: one edge per target, smallest bridge wins
  std::map<GenSet, MatchEdge> best;
  for (const MatchEdge& e : edges) {
    int b = __builtin_ctz(e.source ^ e.target);
    auto [it, inserted] = best.emplace(e.target, e);
    if (!inserted) {
      int prev = __builtin_ctz(it->second.source ^ it->second.target);
      if (it->second.source != e.source && ord.dominates(prev, b))
        it->second = e;
    }
  }
  std::vector<MatchEdge> out;
  for (const MatchEdge& e : edges)
    if (best.at(e.target).source == e.source) out.push_back(e);
  return out;
}

AcyclicMatching generalized_bm(const MonomialIdeal& ideal,
                               const LcmLattice& lattice,
                               const OrderingFamily& family) {
  if (static_cast<int>(family.per_point.size()) != lattice.num_points())
    throw std::invalid_argument("ordering family does not cover the lattice");
  std::vector<MatchEdge> edges;
  for (int p = 0; p < lattice.num_points(); ++p) {
    auto fiber_edges =
        barile_macchia(ideal, lattice.fiber(p), family.at(p));
    edges.insert(edges.end(), fiber_edges.begin(), fiber_edges.end());
  }
  AcyclicMatching a = AcyclicMatching::from_edges(std::move(edges));
  MatchingReport report = validate_matching(ideal, a);
  if (!report.ok())
    throw std::logic_error("generalized_bm produced an invalid matching: " +
                           report.violations.front());
  return a;
}

namespace {

std::vector<int> true_gaps_of(const MonomialIdeal& ideal, GenSet sigma,
                              const TotalOrdering& ord) {
  std::vector<int> out;
  for (int m : gaps(ideal, sigma))
    if (is_true_gap(ideal, sigma, m, ord).is_true_gap) out.push_back(m);
  return out;
}

bool is_potentially_type2(const MonomialIdeal& ideal, GenSet sigma,
                          const TotalOrdering& ord) {
  auto tg = true_gaps_of(ideal, sigma, ord);
  for (GenSet t = bridge_mask(ideal, sigma); t; t &= t - 1) {
    int b = __builtin_ctz(t);
    bool dominates_a_gap = false;
    for (int g : tg)
      if (ord.dominates(b, g)) dominates_a_gap = true;
    if (!dominates_a_gap) return true;
  }
  return false;
}

}  // namespace

Classification classify(const MonomialIdeal& ideal, GenSet sigma,
                        const TotalOrdering& ord,
                        std::span<const GenSet> fiber) {
  Classification c;
  GenSet bmask = bridge_mask(ideal, sigma);
  auto true_gaps = true_gaps_of(ideal, sigma, ord);

  for (int g : true_gaps) {
    bool dominates_a_bridge = false;
    for (GenSet t = bmask; t; t &= t - 1)
      if (ord.dominates(g, __builtin_ctz(t))) dominates_a_bridge = true;
    if (!dominates_a_bridge) c.type1 = true;
  }
  c.potentially_type2 = is_potentially_type2(ideal, sigma, ord);
  if (c.potentially_type2) {
    int sb = *sbridge(ideal, sigma, ord);
    GenSet reduced = sigma ^ (GenSet{1} << sb);
    c.type2 = true;
    for (GenSet other : fiber) {
      if (other == sigma) continue;
      auto osb = sbridge(ideal, other, ord);
      if (!osb || (other ^ (GenSet{1} << *osb)) != reduced) continue;
      if (!is_potentially_type2(ideal, other, ord)) continue;
      if (!ord.dominates(*osb, sb)) c.type2 = false;
    }
  }
  return c;
}

MatchingReport validate_matching(const MonomialIdeal& ideal,
                                 const AcyclicMatching& matching) {
  MatchingReport report;
  std::unordered_map<GenSet, int> uses;
  for (const MatchEdge& e : matching.edges) {
    ++uses[e.source];
    ++uses[e.target];
    GenSet diff = e.source ^ e.target;
    if ((e.target & e.source) != e.target || popcount(diff) != 1 ||
        !(e.source & diff))
      report.violations.push_back("edge is not a covering pair");
    else if (!(ideal.lcm_of(e.source) == ideal.lcm_of(e.target)))
      report.violations.push_back("edge is not lcm-homogeneous");
  }
  for (const auto& [cell, count] : uses)
    if (count > 1)
      report.violations.push_back("cell appears in more than one edge");
  if (!report.violations.empty()) return report;

  // acyclicity: any directed cycle preserves the lcm, so it is enough to
  // check each fiber that carries a matched edge
  std::map<Monomial, std::vector<MatchEdge>> by_lcm;
  for (const MatchEdge& e : matching.edges)
    by_lcm[ideal.lcm_of(e.source)].push_back(e);
  GenSet full = ideal.full_set();
  for (const auto& [p, fiber_edges] : by_lcm) {
    std::vector<GenSet> cells;
    for (GenSet s = 0; s <= full; ++s)
      if (ideal.lcm_of(s) == p) cells.push_back(s);
    std::unordered_map<GenSet, int> id;
    for (std::size_t i = 0; i < cells.size(); ++i)
      id[cells[i]] = static_cast<int>(i);
    std::vector<std::vector<int>> adj(cells.size());
    std::vector<int> indeg(cells.size(), 0);
    auto add_edge = [&](GenSet a, GenSet b) {
      adj[static_cast<std::size_t>(id.at(a))].push_back(id.at(b));
      ++indeg[static_cast<std::size_t>(id.at(b))];
    };
    for (GenSet sigma : cells) {
      for (GenSet t = sigma; t; t &= t - 1) {
        GenSet tau = sigma ^ (t & (~t + 1));
        if (!id.count(tau)) continue;  // leaves the fiber
        auto it = matching.source_to_target.find(sigma);
        if (it != matching.source_to_target.end() && it->second == tau)
          add_edge(tau, sigma);  // reversed matched edge
        else
          add_edge(sigma, tau);
      }
    }
    // Kahn
    std::vector<int> queue;
    for (std::size_t i = 0; i < cells.size(); ++i)
      if (indeg[i] == 0) queue.push_back(static_cast<int>(i));
    std::size_t seen = 0;
    while (!queue.empty()) {
      int v = queue.back();
      queue.pop_back();
      ++seen;
      for (int w : adj[static_cast<std::size_t>(v)])
        if (--indeg[static_cast<std::size_t>(w)] == 0) queue.push_back(w);
    }
    if (seen != cells.size()) {
      report.violations.push_back("modified graph has a directed cycle at " +
                                  p.csv());
      return report;
    }
  }
  return report;
}

}  // namespace bmres
