#include "bmres/verify.hpp"

#include <algorithm>
#include <unordered_map>
#include <unordered_set>

#include "bmres/exact_rank.hpp"

namespace bmres {

namespace {

int rank_in(const IntMatrix& m, Field field) {
  switch (field) {
    case Field::Rationals: return rank_over_q(m);
    case Field::F2: return rank_mod_p(m, 2);
    case Field::F3: return rank_mod_p(m, 3);
  }
  return 0;
}

/// Homology dims of a complex given per-degree dims and boundary matrices
/// d[i] : degree i -> degree i-1.
std::vector<int> homology_dims(const std::vector<int>& dims,
                               const std::vector<IntMatrix>& d, Field field) {
  std::vector<int> ranks(dims.size() + 1, 0);
  for (std::size_t i = 1; i < dims.size(); ++i)
    ranks[i] = rank_in(d[i], field);
  std::vector<int> h(dims.size());
  for (std::size_t i = 0; i < dims.size(); ++i)
    h[i] = dims[i] - ranks[i] - ranks[i + 1];
  return h;
}

}  // namespace

std::vector<int> BettiTable::totals() const {
  std::vector<int> out;
  for (const auto& [key, count] : entries) {
    if (key.first >= static_cast<int>(out.size()))
      out.resize(static_cast<std::size_t>(key.first) + 1, 0);
    out[static_cast<std::size_t>(key.first)] += count;
  }
  return out;
}

BettiTable betti_oracle(const MonomialIdeal& ideal, const LcmLattice& lattice,
                        Field field) {
  BettiTable table;
  const int q = ideal.num_gens();
  for (int p = 0; p < lattice.num_points(); ++p) {
    const auto& fiber = lattice.fiber(p);
    std::unordered_map<GenSet, int> pos;  // index within its cardinality
    std::vector<int> dims(static_cast<std::size_t>(q) + 1, 0);
    for (GenSet s : fiber)
      pos[s] = dims[static_cast<std::size_t>(popcount(s))]++;
    std::vector<IntMatrix> d(static_cast<std::size_t>(q) + 2);
    for (int i = 1; i <= q; ++i)
      d[static_cast<std::size_t>(i)] =
          IntMatrix(dims[static_cast<std::size_t>(i - 1)],
                    dims[static_cast<std::size_t>(i)]);
    for (GenSet s : fiber) {
      int card = popcount(s);
      for (GenSet t = s; t; t &= t - 1) {
        GenSet tau = s ^ (t & (~t + 1));
        auto it = pos.find(tau);
        if (it == pos.end()) continue;  // face leaves the fiber
        d[static_cast<std::size_t>(card)].at(it->second, pos.at(s)) =
            face_sign(s, tau);
      }
    }
    std::vector<int> h = homology_dims(dims, d, field);
    for (std::size_t i = 0; i < h.size(); ++i)
      if (h[i] != 0)
        table.entries[{static_cast<int>(i), lattice.point(p)}] = h[i];
  }
  return table;
}

BettiTable betti_of_complex(const MonomialIdeal& ideal, const FreeComplex& c,
                            Field field) {
  BettiTable table;
  // group basis cells by multidegree
  std::map<Monomial, bool> degrees;
  for (const auto& level : c.basis)
    for (GenSet s : level) degrees[ideal.lcm_of(s)] = true;

  const int top = c.top_degree();
  for (const auto& [p, unused] : degrees) {
    std::vector<int> dims(static_cast<std::size_t>(top) + 1, 0);
    std::vector<std::vector<int>> col_map(static_cast<std::size_t>(top) + 1);
    for (int i = 0; i <= top; ++i) {
      const auto& level = c.basis[static_cast<std::size_t>(i)];
      col_map[static_cast<std::size_t>(i)].assign(level.size(), -1);
      for (std::size_t j = 0; j < level.size(); ++j)
        if (ideal.lcm_of(level[j]) == p)
          col_map[static_cast<std::size_t>(i)][j] =
              dims[static_cast<std::size_t>(i)]++;
    }
    std::vector<IntMatrix> d(static_cast<std::size_t>(top) + 2);
    for (int i = 1; i <= top; ++i) {
      d[static_cast<std::size_t>(i)] =
          IntMatrix(dims[static_cast<std::size_t>(i - 1)],
                    dims[static_cast<std::size_t>(i)]);
      const auto& cols = c.diff[static_cast<std::size_t>(i)];
      for (std::size_t j = 0; j < cols.size(); ++j) {
        int cj = col_map[static_cast<std::size_t>(i)][j];
        if (cj < 0) continue;
        for (const Entry& e : cols[j]) {
          int ri = col_map[static_cast<std::size_t>(i - 1)]
                          [static_cast<std::size_t>(e.row)];
          if (ri < 0 || !e.mono.is_unit()) continue;
          d[static_cast<std::size_t>(i)].at(ri, cj) = e.coeff;
        }
      }
    }
    std::vector<int> h = homology_dims(dims, d, field);
    for (std::size_t i = 0; i < h.size(); ++i)
      if (h[i] != 0) table.entries[{static_cast<int>(i), p}] = h[i];
  }
  return table;
}

ResolutionReport check_resolution(const MonomialIdeal& ideal,
                                  const LcmLattice& lattice,
                                  const FreeComplex& c) {
  ResolutionReport report;
  if (!d_squared_is_zero(c)) {
    report.ok = false;
    report.failures.push_back("d^2 != 0");
    return report;
  }
  const int top = c.top_degree();
  for (int p = 0; p < lattice.num_points(); ++p) {
    const Monomial& mp = lattice.point(p);
    std::vector<int> dims(static_cast<std::size_t>(top) + 1, 0);
    std::vector<std::vector<int>> col_map(static_cast<std::size_t>(top) + 1);
    for (int i = 0; i <= top; ++i) {
      const auto& level = c.basis[static_cast<std::size_t>(i)];
      col_map[static_cast<std::size_t>(i)].assign(level.size(), -1);
      for (std::size_t j = 0; j < level.size(); ++j)
        if (ideal.lcm_of(level[j]).divides(mp))
          col_map[static_cast<std::size_t>(i)][j] =
              dims[static_cast<std::size_t>(i)]++;
    }
    std::vector<IntMatrix> d(static_cast<std::size_t>(top) + 2);
    for (int i = 1; i <= top; ++i) {
      d[static_cast<std::size_t>(i)] =
          IntMatrix(dims[static_cast<std::size_t>(i - 1)],
                    dims[static_cast<std::size_t>(i)]);
      const auto& cols = c.diff[static_cast<std::size_t>(i)];
      for (std::size_t j = 0; j < cols.size(); ++j) {
        int cj = col_map[static_cast<std::size_t>(i)][j];
        if (cj < 0) continue;
        for (const Entry& e : cols[j]) {
          int ri = col_map[static_cast<std::size_t>(i - 1)]
                          [static_cast<std::size_t>(e.row)];
          if (ri >= 0)
            d[static_cast<std::size_t>(i)].at(ri, cj) = e.coeff;
        }
      }
    }
    std::vector<int> h = homology_dims(dims, d, Field::Rationals);
    bool gen_divides = false;
    for (const Monomial& g : ideal.gens())
      if (g.divides(mp)) gen_divides = true;
    int expected_h0 = gen_divides ? 0 : 1;
    if (h[0] != expected_h0) {
      report.ok = false;
      report.failures.push_back("H_0 wrong at " + mp.csv());
    }
    for (std::size_t i = 1; i < h.size(); ++i)
      if (h[i] != 0) {
        report.ok = false;
        report.failures.push_back("H_" + std::to_string(i) +
                                  " nonzero at " + mp.csv());
      }
  }
  return report;
}

bool is_minimal(const FreeComplex& c) {
  for (const auto& degree : c.diff)
    for (const auto& col : degree)
      for (const Entry& e : col)
        if (e.coeff != 0 && e.mono.is_unit()) return false;
  return true;
}

BadPathReport find_bad_paths(const MonomialIdeal& ideal,
                             const AcyclicMatching& a, const Monomial& p,
                             std::size_t limit) {
  BadPathReport report;
  report.type_p = p;

  GenSet divisors = 0;
  for (int g = 0; g < ideal.num_gens(); ++g)
    if (ideal.gen(g).divides(p)) divisors |= GenSet{1} << g;
  std::unordered_set<GenSet> fiber;
  // subsets of the divisor mask, enumerated via the standard trick
  GenSet s = divisors;
  while (true) {
    if (ideal.lcm_of(s) == p) fiber.insert(s);
    if (s == 0) break;
    s = (s - 1) & divisors;
  }

  for (GenSet start : fiber) {
    if (!a.is_critical(start) || popcount(start) == 0) continue;
    GradientPath cur;
    cur.cells.push_back(start);
    auto dfs = [&](auto&& self, GenSet sigma) -> void {
      if (report.paths.size() >= limit) return;
      for (GenSet t = sigma; t; t &= t - 1) {
        GenSet tau = sigma ^ (t & (~t + 1));
        if (!fiber.count(tau)) continue;
        auto matched = a.source_to_target.find(sigma);
        if (matched != a.source_to_target.end() && matched->second == tau)
          continue;  // reversed edge, not available downward
        int w_down = face_sign(sigma, tau);
        cur.cells.push_back(tau);
        cur.sign *= w_down;
        if (a.is_critical(tau)) {
          report.paths.push_back(cur);  // card is |start| - 1 by shape
        } else {
          auto up = a.target_to_source.find(tau);
          if (up != a.target_to_source.end() && fiber.count(up->second)) {
            int w_up = -face_sign(up->second, tau);
            cur.cells.push_back(up->second);
            cur.sign *= w_up;
            self(self, up->second);
            cur.sign *= w_up;
            cur.cells.pop_back();
          }
        }
        cur.sign *= w_down;
        cur.cells.pop_back();
      }
    };
    dfs(dfs, start);
  }
  return report;
}

Certificate minimality_certificate(const MonomialIdeal& ideal,
                                   const LcmLattice& lattice,
                                   const MorseComplex& morse) {
  Certificate cert;
  cert.bad_paths_empty = true;
  for (int p = 0; p < lattice.num_points(); ++p) {
    BadPathReport r = find_bad_paths(ideal, morse.matching, lattice.point(p));
    if (!r.empty()) {
      cert.bad_paths_empty = false;
      cert.bad.push_back(std::move(r));
    }
  }
  cert.unit_free = is_minimal(morse.complex);
  cert.oracle = betti_oracle(ideal, lattice);

  BettiTable counts;
  for (std::size_t i = 0; i < morse.complex.basis.size(); ++i)
    for (GenSet s : morse.complex.basis[i])
      counts.entries[{static_cast<int>(i), ideal.lcm_of(s)}] += 1;
  cert.ranks_match_oracle = (counts == cert.oracle);

  // structure-theory consistency (bug traps)
  if (cert.bad_paths_empty && !cert.unit_free)
    throw std::logic_error(
        "no bad gradient paths but the differential has unit entries");
  if (cert.unit_free != cert.ranks_match_oracle)
    throw std::logic_error(
        "unit-entry minimality disagrees with the Betti oracle");

  cert.minimal = cert.unit_free;
  return cert;
}

}  // namespace bmres
