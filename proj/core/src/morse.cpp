#include "bmres/morse.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>

namespace bmres {

namespace {

/// Out-neighbors of v in the modified graph, with edge weights.
void for_each_neighbor(GenSet v, const AcyclicMatching& a,
                       const auto& visit) {
  auto matched = a.source_to_target.find(v);
  for (GenSet t = v; t; t &= t - 1) {
    GenSet tau = v ^ (t & (~t + 1));
    if (matched != a.source_to_target.end() && matched->second == tau)
      continue;  // this edge is reversed
    visit(tau, face_sign(v, tau));
  }
  auto up = a.target_to_source.find(v);
  if (up != a.target_to_source.end())
    visit(up->second, -face_sign(up->second, v));
}

}  // namespace

std::vector<std::vector<GenSet>> critical_cells(const MonomialIdeal& ideal,
                                                const AcyclicMatching& a) {
  std::vector<std::vector<GenSet>> out(
      static_cast<std::size_t>(ideal.num_gens()) + 1);
  for (GenSet s = 0; s <= ideal.full_set(); ++s) {
    if (a.is_critical(s))
      out[static_cast<std::size_t>(popcount(s))].push_back(s);
    if (s == ideal.full_set()) break;
  }
  return out;
}

int edge_weight(GenSet sigma, GenSet tau, const AcyclicMatching& a) {
  if (popcount(sigma ^ tau) == 1 && (tau & sigma) == tau && sigma != tau) {
    // downward covering edge; must not itself be matched
    auto it = a.source_to_target.find(sigma);
    if (it != a.source_to_target.end() && it->second == tau)
      throw std::invalid_argument("edge_weight: edge is reversed in G^A");
    return face_sign(sigma, tau);
  }
  if (popcount(sigma ^ tau) == 1 && (sigma & tau) == sigma && sigma != tau) {
    auto it = a.source_to_target.find(tau);
    if (it != a.source_to_target.end() && it->second == sigma)
      return -face_sign(tau, sigma);
  }
  throw std::invalid_argument("edge_weight: not an edge of G^A");
}

std::vector<GradientPath> gradient_paths(const MonomialIdeal& ideal,
                                         GenSet from, GenSet to,
                                         const AcyclicMatching& a,
                                         std::size_t limit) {
  (void)ideal;
  std::vector<GradientPath> out;
  GradientPath cur;
  cur.cells.push_back(from);
  auto dfs = [&](auto&& self, GenSet v) -> void {
    if (out.size() >= limit) return;
    if (v == to) out.push_back(cur);
    for_each_neighbor(v, a, [&](GenSet w, int weight) {
      cur.cells.push_back(w);
      cur.sign *= weight;
      self(self, w);
      cur.sign *= weight;
      cur.cells.pop_back();
    });
  };
  dfs(dfs, from);
  return out;
}

MorseComplex build_morse(const MonomialIdeal& ideal,
                         const AcyclicMatching& a) {
  MorseComplex mc;
  mc.matching = a;
  FreeComplex& c = mc.complex;
  c.num_vars = ideal.num_vars();
  c.basis = critical_cells(ideal, a);
  while (!c.basis.empty() && c.basis.back().empty()) c.basis.pop_back();
  c.diff.resize(c.basis.size());

  for (int r = 1; r <= c.top_degree(); ++r) {
    const auto& rows = c.basis[static_cast<std::size_t>(r - 1)];
    const auto& cols = c.basis[static_cast<std::size_t>(r)];
    c.diff[static_cast<std::size_t>(r)].resize(cols.size());

    for (std::size_t ti = 0; ti < rows.size(); ++ti) {
      GenSet target = rows[ti];
      // signed count of directed paths from each cell to `target`
      std::unordered_map<GenSet, long long> weight;
      auto solve = [&](auto&& self, GenSet v) -> long long {
        auto it = weight.find(v);
        if (it != weight.end()) return it->second;
        long long total = (v == target) ? 1 : 0;
        for_each_neighbor(v, a, [&](GenSet w, int ew) {
          total += ew * self(self, w);
        });
        weight.emplace(v, total);
        return total;
      };
      const Monomial lcm_target = ideal.lcm_of(target);
      for (std::size_t ci = 0; ci < cols.size(); ++ci) {
        GenSet sigma = cols[ci];
        long long coeff = 0;
        bool any_term = false;
        for (GenSet t = sigma; t; t &= t - 1) {
          GenSet face = sigma ^ (t & (~t + 1));
          long long w = solve(solve, face);
          if (w != 0) any_term = true;
          coeff += face_sign(sigma, face) * w;
        }
        if (coeff == 0) {
          if (any_term) ++mc.cancelled_entries;
          continue;
        }
        Monomial ls = ideal.lcm_of(sigma);
        if (!lcm_target.divides(ls))
          throw std::logic_error("morse entry without divisibility");
        c.diff[static_cast<std::size_t>(r)][ci].push_back(
            Entry{static_cast<int>(ti), coeff, quotient(ls, lcm_target)});
      }
    }
  }
  // rows were filled target-major; restore ascending row order per column
  for (auto& degree : c.diff)
    for (auto& col : degree)
      std::sort(col.begin(), col.end(),
                [](const Entry& a_, const Entry& b_) { return a_.row < b_.row; });
  return mc;
}

}  // namespace bmres
